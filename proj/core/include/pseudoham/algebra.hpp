#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pseudoham {

/// Deterministic Miller–Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t p = 0;
  unsigned k = 0;
};
/// (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Legendre symbol (a/q) by Euler's criterion. q must be an odd prime.
int legendre(std::int64_t a, std::uint64_t q);

/// Smallest i in [1, q) with i^2 = -1 mod q; nullopt if none (q prime).
std::optional<std::uint64_t> sqrt_minus_one(std::uint64_t q);

/// GF(q) for q = p^k <= 2^16. Elements are encoded as integers 0..q-1 whose
/// base-p digits are polynomial coefficients (digit i = coefficient of x^i)
/// modulo the lexicographically least monic irreducible polynomial of degree k.
class GaloisField {
 public:
  using value_type = std::uint32_t;
  static constexpr std::uint64_t kMaxOrder = 1u << 16;

  explicit GaloisField(std::uint64_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  /// Coefficients c_0..c_k of the modulus (c_k = 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::uint32_t primitive_element() const { return exp_[1]; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  /// Image of an integer in the prime subfield.
  value_type from_int(std::int64_t v) const;

  value_type add(value_type a, value_type b) const;
  value_type sub(value_type a, value_type b) const;
  value_type neg(value_type a) const { return sub(0, a); }
  value_type mul(value_type a, value_type b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  value_type inv(value_type a) const;  // throws on zero
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type pow(value_type a, std::uint64_t e) const;
  /// Discrete log base primitive_element(); a != 0.
  std::uint32_t log(value_type a) const { return log_[a]; }

  bool is_square(value_type a) const { return a == 0 || p_ == 2 || log_[a] % 2 == 0; }

  std::string to_string(value_type a) const;

 private:
  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  unsigned k_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1) so log sums need no reduction
  std::vector<std::uint32_t> log_;
};

/// Value type pairing an element with its field, for code that reads better
/// with operators than with GaloisField calls.
class FieldElement {
 public:
  FieldElement(const GaloisField& f, GaloisField::value_type v) : field_(&f), value_(v) {}

  GaloisField::value_type value() const { return value_; }
  const GaloisField& field() const { return *field_; }

  FieldElement operator+(FieldElement o) const { return {*field_, field_->add(value_, o.value_)}; }
  FieldElement operator-(FieldElement o) const { return {*field_, field_->sub(value_, o.value_)}; }
  FieldElement operator*(FieldElement o) const { return {*field_, field_->mul(value_, o.value_)}; }
  FieldElement operator/(FieldElement o) const { return {*field_, field_->div(value_, o.value_)}; }
  FieldElement operator-() const { return {*field_, field_->neg(value_)}; }
  FieldElement inverse() const { return {*field_, field_->inv(value_)}; }
  bool operator==(const FieldElement& o) const { return value_ == o.value_; }

 private:
  const GaloisField* field_;
  GaloisField::value_type value_;
};

/// The subgroup of order t of GF(q)^*, sorted by encoding. Requires t | q-1.
std::vector<GaloisField::value_type> unit_subgroup(const GaloisField& f, std::uint32_t t);

/// a^2 + b^2 + c^2 + d^2 = p with a > 0 odd and b, c, d even.
struct QuaternionSolution {
  std::int64_t a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const QuaternionSolution&, const QuaternionSolution&) = default;
};

/// All p+1 normalised solutions for a prime p = 1 mod 4, in lexicographic order.
std::vector<QuaternionSolution> quaternion_solutions(std::uint64_t p);

struct LpsParameters {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  friend bool operator==(const LpsParameters&, const LpsParameters&) = default;
};

/// Pairs of distinct primes p, q <= search_limit, both 1 mod 4, with (p/q) = -1
/// and p^(k/2+delta) < q < (1+epsilon) p^(k/2+delta). Sorted by (p, q).
std::vector<LpsParameters> find_lps_parameters(unsigned k, double delta, double epsilon,
                                               std::uint64_t search_limit);

}  // namespace pseudoham
