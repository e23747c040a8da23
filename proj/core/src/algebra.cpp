#include "pseudoham/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pseudoham/big_count.hpp"
#include "pseudoham/error.hpp"

namespace pseudoham {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128_t>(a) * b % m);
}

using Poly = std::vector<std::uint32_t>;  // coefficient i of x^i; no trailing zeros

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - lead) * m[i]) % p);
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  trim(out);
  return out;
}

Poly decode(std::uint32_t v, std::uint32_t p) {
  Poly out;
  while (v != 0) {
    out.push_back(v % p);
    v /= p;
  }
  return out;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p digits of `idx`.
Poly monic_from_index(std::uint64_t idx, unsigned deg, std::uint32_t p) {
  Poly out(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i) {
    out[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  out[deg] = 1;
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= k / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx)
      if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
  }
  return true;
}

// Ordered by the tuple (c_{k-1}, ..., c_0), i.e. by the integer encoding.
Poly least_irreducible(unsigned k, std::uint32_t p) {
  const std::uint64_t count = ipow(p, k);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f = monic_from_index(idx, k, p);
    if (is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable for valid inputs
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto sp : kSmall) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (auto a : kSmall) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned k = 0;
    while (q % p == 0) {
      q /= p;
      ++k;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{p, k};
  }
  return PrimePower{q, 1};
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

int legendre(std::int64_t a, std::uint64_t q) {
  if (q % 2 == 0 || !is_prime(q)) throw PreconditionError("legendre symbol needs an odd prime modulus, got " + std::to_string(q));
  const auto qi = static_cast<std::int64_t>(q);
  const auto r = static_cast<std::uint64_t>(((a % qi) + qi) % qi);
  if (r == 0) return 0;
  return pow_mod(r, (q - 1) / 2, q) == 1 ? 1 : -1;
}

std::optional<std::uint64_t> sqrt_minus_one(std::uint64_t q) {
  for (std::uint64_t i = 1; i < q; ++i)
    if (mul_mod(i, i, q) == q - 1) return i;
  return std::nullopt;
}

// ---- GaloisField --------------------------------------------------------

GaloisField::GaloisField(std::uint64_t q) {
  const auto pp = as_prime_power(q);
  if (!pp) throw PreconditionError(std::to_string(q) + " is not a prime power");
  if (q > kMaxOrder) throw PreconditionError("field order " + std::to_string(q) + " exceeds 2^16");
  q_ = static_cast<std::uint32_t>(q);
  p_ = static_cast<std::uint32_t>(pp->p);
  k_ = pp->k;
  modulus_ = least_irreducible(k_, p_);

  // Find a primitive element by brute force over the slow polynomial product.
  const std::uint32_t units = q_ - 1;
  exp_.assign(2 * static_cast<std::size_t>(units) + 1, 0);
  log_.assign(q_, 0);
  for (std::uint32_t g = 1; g < q_; ++g) {
    const Poly gp = decode(g, p_);
    Poly cur{1};
    std::vector<std::uint32_t> powers;
    powers.reserve(units);
    bool primitive = true;
    for (std::uint32_t e = 0; e < units; ++e) {
      const std::uint32_t v = encode(cur, p_);
      if (e > 0 && v == 1) {
        primitive = false;
        break;
      }
      powers.push_back(v);
      cur = poly_mod(poly_mul(cur, gp, p_), modulus_, p_);
    }
    if (!primitive) continue;
    for (std::uint32_t e = 0; e < units; ++e) {
      exp_[e] = powers[e];
      exp_[e + units] = powers[e];
      log_[powers[e]] = e;
    }
    exp_[2 * static_cast<std::size_t>(units)] = powers[0];
    return;
  }
  throw Error("no primitive element found");
}

GaloisField::value_type GaloisField::from_int(std::int64_t v) const {
  const auto pi = static_cast<std::int64_t>(p_);
  return static_cast<value_type>(((v % pi) + pi) % pi);
}

GaloisField::value_type GaloisField::add(value_type a, value_type b) const {
  if (k_ == 1) return (a + b) % p_;
  value_type out = 0, scale = 1;
  while (a != 0 || b != 0) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

GaloisField::value_type GaloisField::sub(value_type a, value_type b) const {
  if (k_ == 1) return (a + p_ - b) % p_;
  value_type out = 0, scale = 1;
  while (a != 0 || b != 0) {
    out += ((a % p_ + p_ - b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

GaloisField::value_type GaloisField::inv(value_type a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  const std::uint32_t units = q_ - 1;
  return exp_[(units - log_[a]) % units];
}

GaloisField::value_type GaloisField::pow(value_type a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint32_t units = q_ - 1;
  return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % units)) % units)];
}

std::string GaloisField::to_string(value_type a) const {
  if (k_ == 1) return std::to_string(a);
  const Poly poly = decode(a, p_);
  if (poly.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = poly.size(); i-- > 0;) {
    if (poly[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || poly[i] != 1) os << poly[i];
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::vector<GaloisField::value_type> unit_subgroup(const GaloisField& f, std::uint32_t t) {
  const std::uint32_t units = f.order() - 1;
  if (t == 0 || units % t != 0)
    throw PreconditionError(std::to_string(t) + " does not divide q-1 = " + std::to_string(units));
  const auto gen = f.pow(f.primitive_element(), units / t);
  std::vector<GaloisField::value_type> out;
  auto cur = f.one();
  for (std::uint32_t i = 0; i < t; ++i) {
    out.push_back(cur);
    cur = f.mul(cur, gen);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuaternionSolution> quaternion_solutions(std::uint64_t p) {
  if (p % 4 != 1) throw PreconditionError(std::to_string(p) + " is not congruent to 1 mod 4");
  const auto pi = static_cast<std::int64_t>(p);
  const auto bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(p))) + 1;
  std::vector<QuaternionSolution> out;
  for (std::int64_t a = 1; a <= bound; a += 2)
    for (std::int64_t b = -bound - (bound % 2); b <= bound; b += 2)
      for (std::int64_t c = -bound - (bound % 2); c <= bound; c += 2) {
        const std::int64_t rest = pi - a * a - b * b - c * c;
        if (rest < 0) continue;
        const auto d = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
        if (d * d != rest || d % 2 != 0) continue;
        out.push_back({a, b, c, d});
        if (d != 0) out.push_back({a, b, c, -d});
      }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
  });
  return out;
}

std::vector<LpsParameters> find_lps_parameters(unsigned k, double delta, double epsilon,
                                               std::uint64_t search_limit) {
  if (delta <= 0.0 || epsilon < 0.0) throw PreconditionError("delta must be positive and epsilon non-negative");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t x = 5; x <= search_limit; x += 4)
    if (is_prime(x)) primes.push_back(x);
  std::vector<LpsParameters> out;
  const double exponent = static_cast<double>(k) / 2.0 + delta;
  for (auto p : primes) {
    const double lo = std::pow(static_cast<double>(p), exponent);
    const double hi = (1.0 + epsilon) * lo;
    if (lo > static_cast<double>(search_limit)) break;
    for (auto q : primes) {
      const auto qd = static_cast<double>(q);
      if (q == p || qd <= lo) continue;
      if (qd >= hi) break;
      if (legendre(static_cast<std::int64_t>(p), q) == -1) out.push_back({p, q});
    }
  }
  return out;
}

}  // namespace pseudoham
