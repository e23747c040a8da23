#include "pseudoham/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "pseudoham/algebra.hpp"
#include "pseudoham/eigensolver.hpp"
#include "pseudoham/error.hpp"

namespace pseudoham {

namespace {

using Coords = std::vector<GaloisField::value_type>;

std::uint64_t encode_coords(const Coords& x, std::uint64_t q) {
  std::uint64_t code = 0;
  for (auto c : x) code = code * q + c;
  return code;
}

// Scales x so its first nonzero coordinate is 1. x must be nonzero.
Coords normalize(const GaloisField& f, Coords x) {
  const auto it = std::find_if(x.begin(), x.end(), [](auto c) { return c != 0; });
  const auto scale = f.inv(*it);
  for (auto& c : x) c = f.mul(c, scale);
  return x;
}

// Points of PG(dim-1, q) as normalised coordinate vectors, lexicographic order.
std::vector<Coords> projective_points(const GaloisField& f, std::size_t dim) {
  const std::uint32_t q = f.order();
  std::vector<Coords> out;
  for (std::size_t lead = 0; lead < dim; ++lead) {
    const std::size_t free = dim - lead - 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coords x(dim, 0);
      x[lead] = 1;
      std::uint64_t rest = idx;
      for (std::size_t i = dim; i-- > lead + 1;) {
        x[i] = static_cast<GaloisField::value_type>(rest % q);
        rest /= q;
      }
      out.push_back(std::move(x));
    }
  }
  return out;
}

std::string coords_label(const GaloisField& f, const Coords& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << f.to_string(x[i]);
  os << ')';
  return os.str();
}

// Incidence graph of a point/line geometry given by lines as point-index sets.
Construction incidence_construction(const GaloisField& f, const std::vector<Coords>& points,
                                    const std::set<std::vector<Vertex>>& lines, Family family,
                                    ConstructionDescriptor descriptor) {
  const std::size_t np = points.size();
  const std::size_t n = np + lines.size();
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& x : points) labels.push_back("P" + coords_label(f, x));
  Vertex line_vertex = static_cast<Vertex>(np);
  for (const auto& line : lines) {
    std::ostringstream os;
    os << "L{";
    for (std::size_t i = 0; i < line.size(); ++i) os << (i ? "," : "") << line[i];
    os << '}';
    labels.push_back(os.str());
    for (Vertex pt : line) edges.push_back({pt, line_vertex});
    ++line_vertex;
  }
  std::sort(edges.begin(), edges.end());
  std::vector<std::uint8_t> sides(n, 1);
  std::fill(sides.begin(), sides.begin() + static_cast<std::ptrdiff_t>(np), 0);
  descriptor.family = family;
  return {Graph(n, edges, std::move(sides), std::move(labels)), std::move(descriptor)};
}

// Points of the line through points i and j: x_i and normalize(x_j + c x_i).
std::vector<Vertex> line_through(const GaloisField& f, const std::vector<Coords>& points,
                                 const std::map<std::uint64_t, Vertex>& index, Vertex i, Vertex j) {
  const auto& x = points[i];
  const auto& y = points[j];
  std::vector<Vertex> line{i};
  for (std::uint32_t c = 0; c < f.order(); ++c) {
    Coords z(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) z[k] = f.add(y[k], f.mul(c, x[k]));
    line.push_back(index.at(encode_coords(normalize(f, z), f.order())));
  }
  std::sort(line.begin(), line.end());
  return line;
}

std::uint64_t geometric_sum(std::uint64_t q, unsigned top) {
  std::uint64_t s = 0, term = 1;
  for (unsigned i = 0; i <= top; ++i) {
    s += term;
    term *= q;
  }
  return s;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::GeneralizedQuadrangle: return "gq";
    case Family::GeneralizedHexagon: return "gh";
    case Family::Lps: return "lps";
    case Family::Furedi: return "furedi";
  }
  return "unknown";
}

bool matches_descriptor(const Construction& c) {
  if (c.graph.order() != c.descriptor.expected_n) return false;
  const auto& allowed = c.descriptor.expected_degrees;
  for (Vertex v = 0; v < c.graph.order(); ++v)
    if (!std::binary_search(allowed.begin(), allowed.end(), c.graph.degree(v))) return false;
  return true;
}

Construction build_generalized_quadrangle(std::uint64_t q) {
  const GaloisField f(q);
  const auto points = projective_points(f, 4);
  std::map<std::uint64_t, Vertex> index;
  for (std::size_t i = 0; i < points.size(); ++i) index[encode_coords(points[i], q)] = static_cast<Vertex>(i);

  auto form = [&f](const Coords& x, const Coords& y) {
    auto v = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
    return f.add(v, f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2])));
  };
  std::set<std::vector<Vertex>> lines;
  for (Vertex i = 0; i < points.size(); ++i)
    for (Vertex j = i + 1; j < points.size(); ++j)
      if (form(points[i], points[j]) == 0) lines.insert(line_through(f, points, index, i, j));

  ConstructionDescriptor d;
  d.parameters = {q};
  d.expected_n = 2 * geometric_sum(q, 3);
  d.expected_degrees = {static_cast<std::size_t>(q + 1)};
  return incidence_construction(f, points, lines, Family::GeneralizedQuadrangle, d);
}

Construction build_generalized_hexagon(std::uint64_t q) {
  if (q < 2 || q > 4) throw PreconditionError("generalized hexagon supports q in {2, 3, 4}");
  const GaloisField f(q);
  auto quadric = [&f](const Coords& x) {
    auto v = f.add(f.mul(x[0], x[4]), f.mul(x[1], x[5]));
    v = f.add(v, f.mul(x[2], x[6]));
    return f.sub(v, f.mul(x[3], x[3]));
  };
  std::vector<Coords> points;
  for (auto& x : projective_points(f, 7))
    if (quadric(x) == 0) points.push_back(std::move(x));
  std::map<std::uint64_t, Vertex> index;
  for (std::size_t i = 0; i < points.size(); ++i) index[encode_coords(points[i], q)] = static_cast<Vertex>(i);

  auto polar = [&](const Coords& x, const Coords& y) {
    Coords s(7);
    for (int k = 0; k < 7; ++k) s[k] = f.add(x[k], y[k]);
    return f.sub(f.sub(quadric(s), quadric(x)), quadric(y));
  };
  auto plucker = [&f](const Coords& x, const Coords& y, int i, int j) {
    return f.sub(f.mul(x[i], y[j]), f.mul(x[j], y[i]));
  };
  // Grassmann-coordinate relations selecting the hexagon lines among the
  // lines of the quadric.
  static constexpr std::array<std::array<int, 4>, 6> kRelations{{
      {1, 2, 3, 4}, {5, 4, 3, 2}, {2, 0, 3, 5}, {6, 5, 3, 0}, {0, 1, 3, 6}, {4, 6, 3, 1}}};
  std::set<std::vector<Vertex>> lines;
  for (Vertex i = 0; i < points.size(); ++i)
    for (Vertex j = i + 1; j < points.size(); ++j) {
      const auto& x = points[i];
      const auto& y = points[j];
      if (polar(x, y) != 0) continue;
      const bool hexagon_line = std::all_of(kRelations.begin(), kRelations.end(), [&](const auto& r) {
        return plucker(x, y, r[0], r[1]) == plucker(x, y, r[2], r[3]);
      });
      if (hexagon_line) lines.insert(line_through(f, points, index, i, j));
    }

  ConstructionDescriptor d;
  d.parameters = {q};
  d.expected_n = 2 * geometric_sum(q, 5);
  d.expected_degrees = {static_cast<std::size_t>(q + 1)};
  return incidence_construction(f, points, lines, Family::GeneralizedHexagon, d);
}

Construction build_lps(std::uint64_t p, std::uint64_t q) {
  if (p == q) throw PreconditionError("LPS requires p != q");
  if (!is_prime(p)) throw PreconditionError("LPS requires p prime, got " + std::to_string(p));
  if (!is_prime(q)) throw PreconditionError("LPS requires q prime, got " + std::to_string(q));
  if (p % 4 != 1) throw PreconditionError("LPS requires p = 1 mod 4, got " + std::to_string(p));
  if (q % 4 != 1) throw PreconditionError("LPS requires q = 1 mod 4, got " + std::to_string(q));
  if (legendre(static_cast<std::int64_t>(p), q) != -1)
    throw PreconditionError("LPS bipartite variant requires (p/q) = -1; (" + std::to_string(p) + "/" +
                            std::to_string(q) + ") = +1");
  if (q * (q * q - 1) > Graph::kMaxVertices)
    throw PreconditionError("LPS graph on q(q^2-1) = " + std::to_string(q * (q * q - 1)) + " vertices exceeds the graph cap");

  const std::int64_t qi = static_cast<std::int64_t>(q);
  auto mod = [qi](std::int64_t v) { return ((v % qi) + qi) % qi; };
  const std::int64_t im = static_cast<std::int64_t>(*sqrt_minus_one(q));

  using Mat = std::array<std::int64_t, 4>;
  auto normalize_mat = [&](Mat m) {
    const auto it = std::find_if(m.begin(), m.end(), [](auto c) { return c != 0; });
    const auto inv = static_cast<std::int64_t>(pow_mod(static_cast<std::uint64_t>(*it), q - 2, q));
    for (auto& c : m) c = mod(c * inv);
    return m;
  };
  auto code = [qi](const Mat& m) { return ((m[0] * qi + m[1]) * qi + m[2]) * qi + m[3]; };

  std::vector<Mat> generators;
  for (const auto& s : quaternion_solutions(p))
    generators.push_back({mod(s.a + s.b * im), mod(s.c + s.d * im), mod(-s.c + s.d * im), mod(s.a - s.b * im)});

  // Enumerate PGL2(q) by normalised representatives, square determinants first.
  std::array<std::vector<Mat>, 2> by_side;
  for (std::int64_t c0 = 0; c0 < qi * qi * qi * qi; ++c0) {
    const Mat m{c0 / (qi * qi * qi), (c0 / (qi * qi)) % qi, (c0 / qi) % qi, c0 % qi};
    const auto first = std::find_if(m.begin(), m.end(), [](auto c) { return c != 0; });
    if (first == m.end() || *first != 1) continue;
    const std::int64_t det = mod(m[0] * m[3] - m[1] * m[2]);
    if (det == 0) continue;
    by_side[legendre(det, q) == 1 ? 0 : 1].push_back(m);
  }
  std::vector<Mat> elements = by_side[0];
  elements.insert(elements.end(), by_side[1].begin(), by_side[1].end());
  std::vector<std::int32_t> index(static_cast<std::size_t>(qi * qi * qi * qi), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) index[static_cast<std::size_t>(code(elements[i]))] = static_cast<std::int32_t>(i);

  GraphBuilder builder(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Mat& g = elements[i];
    for (const Mat& s : generators) {
      const Mat h = normalize_mat({mod(g[0] * s[0] + g[1] * s[2]), mod(g[0] * s[1] + g[1] * s[3]),
                                   mod(g[2] * s[0] + g[3] * s[2]), mod(g[2] * s[1] + g[3] * s[3])});
      const auto j = static_cast<Vertex>(index[static_cast<std::size_t>(code(h))]);
      if (j == i) throw PreconditionError("generator acts trivially in PGL2(" + std::to_string(q) + ")");
      builder.add_edge(static_cast<Vertex>(i), j);
    }
  }
  std::vector<std::uint8_t> sides(elements.size(), 1);
  std::fill(sides.begin(), sides.begin() + static_cast<std::ptrdiff_t>(by_side[0].size()), 0);
  std::vector<std::string> labels;
  for (const auto& m : elements)
    labels.push_back("[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" + std::to_string(m[2]) +
                     "," + std::to_string(m[3]) + "]]");
  builder.set_bipartition(std::move(sides));
  builder.set_labels(std::move(labels));

  Construction c{builder.build(), {}};
  c.descriptor.family = Family::Lps;
  c.descriptor.parameters = {p, q};
  c.descriptor.expected_n = static_cast<std::size_t>(q * (q * q - 1));
  c.descriptor.expected_degrees = {static_cast<std::size_t>(p + 1)};
  if (!matches_descriptor(c))
    throw PreconditionError("generator set collapses in PGL2(" + std::to_string(q) + "); q too small for p");
  return c;
}

Construction build_furedi(std::uint32_t t, std::uint64_t q) {
  const GaloisField f(q);
  if (t == 0 || (q - 1) % t != 0)
    throw PreconditionError(std::to_string(t) + " does not divide q-1 = " + std::to_string(q - 1));
  const auto subgroup = unit_subgroup(f, t);
  std::vector<char> in_subgroup(q, 0);
  for (auto h : subgroup) in_subgroup[h] = 1;

  const auto qq = static_cast<std::size_t>(q);
  std::vector<std::int32_t> orbit_of(qq * qq, -1);
  std::vector<std::pair<GaloisField::value_type, GaloisField::value_type>> reps;
  for (std::size_t code = 1; code < qq * qq; ++code) {
    if (orbit_of[code] >= 0) continue;
    const auto a = static_cast<GaloisField::value_type>(code / qq);
    const auto b = static_cast<GaloisField::value_type>(code % qq);
    const auto id = static_cast<std::int32_t>(reps.size());
    reps.emplace_back(a, b);
    for (auto h : subgroup) orbit_of[f.mul(h, a) * qq + f.mul(h, b)] = id;
  }

  std::vector<Edge> edges;
  for (Vertex u = 0; u < reps.size(); ++u)
    for (Vertex v = u + 1; v < reps.size(); ++v) {
      const auto [a, b] = reps[u];
      const auto [x, y] = reps[v];
      if (in_subgroup[f.add(f.mul(a, x), f.mul(b, y))]) edges.push_back({u, v});
    }
  std::vector<std::string> labels;
  for (const auto& [a, b] : reps) labels.push_back("<" + f.to_string(a) + "," + f.to_string(b) + ">");

  Construction c{Graph(reps.size(), edges, std::nullopt, std::move(labels)), {}};
  c.descriptor.family = Family::Furedi;
  c.descriptor.parameters = {t, q};
  c.descriptor.expected_n = static_cast<std::size_t>((q * q - 1) / t);
  c.descriptor.expected_degrees = {static_cast<std::size_t>(q - 1), static_cast<std::size_t>(q)};
  return c;
}

FurediStructureReport verify_furedi_structure(const Graph& g, std::uint32_t t, std::uint64_t q) {
  FurediStructureReport r;
  if (t == 0 || (q - 1) % t != 0) throw PreconditionError("t must divide q-1");
  const std::size_t zeros_expected = static_cast<std::size_t>((q - 1) / t - 1);
  auto fail = [&r](Vertex row, std::optional<Vertex> col, std::string why) {
    r.passed = false;
    r.row = row;
    r.column = col;
    r.failure = std::move(why);
    return r;
  };
  // Degree q-1 marks an absolute point (ax+by in H on its own orbit); the
  // dropped loop still counts toward common neighbourhoods.
  std::vector<char> absolute(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t diag = g.degree(v);
    if (diag != q && diag + 1 != q)
      return fail(v, v, "diagonal entry " + std::to_string(diag) + " not in {q-1, q}");
    absolute[v] = diag + 1 == q;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    std::size_t zeros = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (u == v) continue;
      std::size_t c = common_neighbor_count(g, u, v);
      if (g.adjacent(u, v)) c += static_cast<std::size_t>(absolute[u]) + static_cast<std::size_t>(absolute[v]);
      if (c == 0) {
        ++zeros;
      } else if (c != t) {
        return fail(v, u, "off-diagonal entry " + std::to_string(c) + " is neither 0 nor t");
      }
    }
    if (zeros != zeros_expected)
      return fail(v, std::nullopt, "row has " + std::to_string(zeros) + " zero entries, expected " +
                                       std::to_string(zeros_expected));
  }
  return r;
}

std::vector<Vertex> furedi_absolute_points(const Graph& g, std::uint64_t q) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 == q) out.push_back(v);
  return out;
}

std::vector<double> incidence_singular_values(const Graph& g) {
  if (!g.has_bipartition()) throw PreconditionError("incidence spectrum needs a bipartite graph with recorded sides");
  const auto rows = g.side_vertices(0);
  DenseMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double c = static_cast<double>(common_neighbor_count(g, rows[i], rows[j]));
      m(i, j) = c;
      m(j, i) = c;
    }
  return symmetric_eigenvalues(std::move(m));
}

}  // namespace pseudoham
