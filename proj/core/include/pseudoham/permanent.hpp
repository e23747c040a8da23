#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pseudoham/big_count.hpp"
#include "pseudoham/eigensolver.hpp"
#include "pseudoham/graph.hpp"
#include "pseudoham/spectral.hpp"

namespace pseudoham {

/// Square 0/1 matrix.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  explicit BinaryMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  static BinaryMatrix adjacency(const Graph& g);
  /// Throws PreconditionError unless rows is square with entries in {0, 1}.
  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t size() const { return n_; }
  bool get(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { cells_[i * n_ + j] = v ? 1 : 0; }
  std::size_t ones() const;
  std::size_t row_sum(std::size_t i) const;
  DenseMatrix to_dense(double scale = 1.0) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
};

inline constexpr std::size_t kMaxRyserOrder = 24;

/// Ryser inclusion-exclusion in Gray-code order. n <= kMaxRyserOrder.
BigCount permanent_exact(const BinaryMatrix& m);

/// Ryser's formula on a real matrix, accumulated in long double.
double permanent_real(const DenseMatrix& m);

/// Alternating row/column scaling of a positive matrix until every row sum is
/// within `tolerance` of 1 (columns sum to 1 after each round).
DenseMatrix sinkhorn_normalize(DenseMatrix m, double tolerance = 1e-13, std::size_t max_rounds = 100000);

/// log of prod (r_i!)^(1/r_i) with the r_i equalised from the total count t of
/// ones (floor(t/n) or ceil(t/n), t - n floor(t/n) of the latter). -inf when
/// t < n, where some row is zero and the permanent vanishes.
double bregman_bound(std::size_t n, std::size_t ones);
double bregman_bound(const BinaryMatrix& m);

/// The classical per-row Minc-Bregman bound (actual row sums). A secondary
/// diagnostic, not the equalised variant above.
double minc_row_bound(const BinaryMatrix& m);

/// log(n! / n^n): the doubly stochastic lower bound.
double van_der_waerden_log(std::size_t n);

enum class Verdict { Yes, No, NotApplicable };
std::string verdict_name(Verdict v);  // "yes", "no", "not-applicable"

struct SuperstochasticResult {
  Verdict verdict = Verdict::NotApplicable;
  double max_flow = 0.0;
  /// On "no": rows I and columns J with sum_{I x J} a_ij < |I| + |J| - n.
  std::vector<std::size_t> witness_rows;
  std::vector<std::size_t> witness_cols;
  double witness_sum = 0.0;
  double witness_required = 0.0;  // |I| + |J| - n
  std::optional<double> divisor;  // the matrix tested was A / divisor
  std::string reason;
};

/// Decides whether M dominates a doubly stochastic matrix via max-flow:
/// source -> row (capacity 1), row -> column (a_ij), column -> sink (1).
/// Yes iff the flow reaches n. On no the min cut gives the witness: I = rows
/// on the source side, J = columns on the sink side.
SuperstochasticResult is_doubly_superstochastic(const DenseMatrix& m);

/// The superstochastic test on A / divisor.
SuperstochasticResult scaled_superstochastic_check(const Graph& g, double divisor);
/// The superstochastic test on A / (delta - 9 lambda_bar); not applicable
/// when delta - 9 lambda_bar <= 0.
SuperstochasticResult scaled_superstochastic_check(const Graph& g, const SpectralCertificate& cert);

struct ChainStep {
  std::string expression;
  std::string relation;  // relation to the previous step: ">=", "<=" or "="
  double log_value = 0.0;
  bool holds = true;  // the relation holds numerically at this n
};

struct ChainReport {
  std::vector<ChainStep> steps;
  double final_log = 0.0;
  bool monotone() const;
};

/// log per(A) >= n log((delta - 9 lambda_bar)/e) >= ... >= n log(Delta/e)
/// - 20n/log^2 Delta, every step evaluated at this n. Throws
/// PreconditionError when delta - 9 lambda_bar <= 0.
ChainReport permanent_lower_chain(std::size_t n, double delta, double Delta, double lambda_bar);
ChainReport permanent_lower_chain(const Graph& g, const SpectralCertificate& cert);

/// h(G) <= per(A) <= (ceil d)!^(n/floor d) <= ... <= (d/e)^n [(d/e)^(n/(d-1))
/// (d+1)^(2n/(d-1))], evaluated at this n and average degree d.
ChainReport permanent_upper_chain(std::size_t n, double d);

struct PermanentBounds {
  std::size_t n = 0;
  std::size_t ones = 0;
  std::optional<BigCount> exact;
  double bregman_log = 0.0;
  double minc_row_log = 0.0;
  /// Regular matrices (row and column sums r): n log r + log n! - n log n.
  std::optional<double> vdw_log;
  std::optional<SuperstochasticResult> superstochastic;
};

/// Bounds for m; the exact value is computed when `exact` is set and
/// n <= kMaxRyserOrder.
PermanentBounds permanent_bounds(const BinaryMatrix& m, bool exact = true);

}  // namespace pseudoham
