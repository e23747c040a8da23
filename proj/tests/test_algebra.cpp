#include <gtest/gtest.h>

#include <random>
#include <set>

#include "pseudoham/algebra.hpp"
#include "pseudoham/error.hpp"

using namespace pseudoham;

namespace {

bool brute_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST(Primes, MillerRabinMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), brute_prime(n)) << n;
  EXPECT_TRUE(is_prime(2305843009213693951ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Field, Orders) {
  EXPECT_EQ(GaloisField(5).order(), 5u);
  const GaloisField f9(9);
  EXPECT_EQ(f9.characteristic(), 3u);
  EXPECT_EQ(f9.degree(), 2u);
  std::set<std::uint32_t> powers;
  for (std::uint32_t e = 0; e < 8; ++e) powers.insert(f9.pow(f9.primitive_element(), e));
  EXPECT_EQ(powers.size(), 8u);
  EXPECT_THROW(GaloisField(6), PreconditionError);
  EXPECT_THROW(GaloisField(1), PreconditionError);
}

class FieldAxioms : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FieldAxioms, RandomTriples) {
  const GaloisField f(GetParam());
  std::mt19937_64 rng(GetParam());
  for (int i = 0; i < 1000; ++i) {
    const FieldElement a(f, rng() % f.order()), b(f, rng() % f.order()), c(f, rng() % f.order());
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, FieldElement(f, 0));
    if (a.value() != 0) {
      EXPECT_EQ(a * a.inverse(), FieldElement(f, 1));
    }
  }
  EXPECT_THROW(f.inv(0), PreconditionError);
}

INSTANTIATE_TEST_SUITE_P(Orders, FieldAxioms, ::testing::Values(2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81, 121, 125));

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(5, 13), -1);
  EXPECT_EQ(legendre(13, 5), -1);
  EXPECT_EQ(legendre(0, 7), 0);
  for (std::uint64_t q : {3, 5, 7, 11, 101}) EXPECT_EQ(legendre(1, q), 1);
  EXPECT_THROW(legendre(3, 2), PreconditionError);
  EXPECT_THROW(legendre(3, 15), PreconditionError);
}

TEST(Legendre, MatchesSquareEnumeration) {
  for (std::uint64_t q = 3; q <= 200; ++q) {
    if (!brute_prime(q)) continue;
    std::set<std::uint64_t> squares;
    for (std::uint64_t x = 1; x < q; ++x) squares.insert(x * x % q);
    for (std::uint64_t a = 1; a < q; ++a) EXPECT_EQ(legendre(std::int64_t(a), q), squares.count(a) ? 1 : -1);
  }
}

TEST(UnitSubgroup, Examples) {
  EXPECT_EQ(unit_subgroup(GaloisField(5), 2), (std::vector<std::uint32_t>{1, 4}));
  EXPECT_EQ(unit_subgroup(GaloisField(7), 3), (std::vector<std::uint32_t>{1, 2, 4}));
  EXPECT_THROW(unit_subgroup(GaloisField(7), 4), PreconditionError);
}

TEST(UnitSubgroup, ClosedOfOrderT) {
  for (std::uint64_t q : {7, 9, 13, 16, 25, 37}) {
    const GaloisField f(q);
    for (std::uint32_t t = 1; t < q; ++t) {
      if ((q - 1) % t) continue;
      const auto h = unit_subgroup(f, t);
      ASSERT_EQ(h.size(), t);
      const std::set<std::uint32_t> hs(h.begin(), h.end());
      for (auto a : h)
        for (auto b : h) EXPECT_TRUE(hs.count(f.mul(a, b)));
    }
  }
}

TEST(Quaternions, CountsAndNormalisation) {
  for (std::uint64_t p : {5, 13, 17, 29, 37}) {
    const auto sols = quaternion_solutions(p);
    EXPECT_EQ(sols.size(), p + 1);
    for (const auto& s : sols) {
      EXPECT_EQ(std::uint64_t(s.a * s.a + s.b * s.b + s.c * s.c + s.d * s.d), p);
      EXPECT_GT(s.a, 0);
      EXPECT_EQ(s.a % 2, 1);
      EXPECT_EQ(s.b % 2, 0);
      EXPECT_EQ(s.c % 2, 0);
      EXPECT_EQ(s.d % 2, 0);
    }
  }
  EXPECT_THROW(quaternion_solutions(7), PreconditionError);
}

TEST(LpsParameters, WindowSearch) {
  const auto found = find_lps_parameters(2, 0.5, 1.0, 200);
  EXPECT_NE(std::find(found.begin(), found.end(), LpsParameters{5, 13}), found.end());
  for (const auto& pq : found) {
    EXPECT_TRUE(brute_prime(pq.p) && brute_prime(pq.q));
    EXPECT_EQ(pq.p % 4, 1u);
    EXPECT_EQ(pq.q % 4, 1u);
    EXPECT_EQ(legendre(std::int64_t(pq.p), pq.q), -1);
    const double lo = std::pow(double(pq.p), 1.5);
    EXPECT_GT(double(pq.q), lo);
    EXPECT_LT(double(pq.q), 2.0 * lo);
  }
  EXPECT_TRUE(find_lps_parameters(2, 0.5, 0.0, 200).empty());
}
