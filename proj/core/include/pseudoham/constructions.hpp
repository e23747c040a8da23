#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pseudoham/graph.hpp"

namespace pseudoham {

enum class Family { GeneralizedQuadrangle, GeneralizedHexagon, Lps, Furedi };

std::string family_name(Family f);  // "gq", "gh", "lps", "furedi"

/// Parameters of a built family member and the vertex count / degree set its
/// defining formulas predict.
struct ConstructionDescriptor {
  Family family = Family::GeneralizedQuadrangle;
  std::vector<std::uint64_t> parameters;  // (q), (q), (p, q) or (t, q)
  std::size_t expected_n = 0;
  std::vector<std::size_t> expected_degrees;  // sorted
};

struct Construction {
  Graph graph;
  ConstructionDescriptor descriptor;
};

/// True iff the graph's order and degree set match the descriptor exactly.
bool matches_descriptor(const Construction& c);

/// Incidence graph of the symplectic quadrangle W(q): points of PG(3,q) (side X,
/// vertices first) and the lines totally isotropic for x0y1-x1y0+x2y3-x3y2.
Construction build_generalized_quadrangle(std::uint64_t q);

/// Incidence graph of the split Cayley hexagon H(q) realised on the parabolic
/// quadric X0X4+X1X5+X2X6 = X3^2 of PG(6,q). Supported q: 2, 3, 4.
Construction build_generalized_hexagon(std::uint64_t q);

/// Bipartite Cayley graph of PGL2(q) generated by the p+1 matrices obtained from
/// the normalised quaternion solutions of p. Side X (square determinant) first.
Construction build_lps(std::uint64_t p, std::uint64_t q);

/// Orbit graph on (GF(q)^2 \ 0)/H, |H| = t, with <a,b> ~ <x,y> iff ax+by in H.
Construction build_furedi(std::uint32_t t, std::uint64_t q);

struct FurediStructureReport {
  bool passed = true;
  std::optional<Vertex> row;
  std::optional<Vertex> column;
  std::string failure;  // empty on success
};

/// Row-by-row check of A^2: diagonal in {q-1, q}, exactly (q-1)/t - 1 zero
/// off-diagonal entries per row, every other off-diagonal entry equal to t.
/// Off-diagonal entries are taken with the dropped loops restored, i.e. a
/// vertex of degree q-1 counts as its own neighbour.
FurediStructureReport verify_furedi_structure(const Graph& g, std::uint32_t t, std::uint64_t q);

/// Vertices of degree q-1 in a Füredi graph: the orbits whose loop was dropped.
std::vector<Vertex> furedi_absolute_points(const Graph& g, std::uint64_t q);

/// Eigenvalues (descending) of N N^T where N is the biadjacency matrix with rows
/// indexed by side X (side 0) and columns by side Y.
std::vector<double> incidence_singular_values(const Graph& g);

}  // namespace pseudoham
