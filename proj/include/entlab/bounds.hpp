#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entlab/blob.hpp"
#include "entlab/entropy.hpp"
#include "entlab/sequence.hpp"

namespace entlab {

// One labeled summand of a bound formula.
struct BoundTerm {
  std::string label;
  double bits;
};

// A bound evaluation: the itemized formula value next to a measured size.
// terms always sum to formula_bits; satisfied means measured <= formula
// (for interval checks, measured inside [lower, formula)).
struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, double>> params;  // ordered for reports
  std::vector<BoundTerm> terms;
  double formula_bits = 0;
  double measured_bits = 0;
  double slack_bits = 0;  // formula - measured
  bool satisfied = false;
};

// zeta(lambda) for lambda > 1 to absolute error below eps: partial sum plus
// the integral tail with Euler-Maclaurin corrections, the cutoff doubled
// until the analytic remainder bound drops under eps. Throws
// std::invalid_argument for lambda <= 1 (the series diverges) or eps <= 0.
double zeta(double lambda, double eps = 1e-12);

// 8*H_k*n + (mu + 2/25)*n + sigma^k*(2*sigma*log2(sigma) + 9), itemized as
// entropy / linear / table terms. measured_bits is the compressed size the
// bound is checked against.
BoundReport manzini_bound(const Sequence& s, unsigned k, double mu,
                          double measured_bits);

// lambda*H_k*n + n*log2(zeta(lambda)) + c*sigma^(k+1)*log2(sigma), itemized.
// Requires lambda > 1 and c >= 0.
BoundReport klv_bound(const Sequence& s, unsigned k, double lambda, double c,
                      double measured_bits);

// The coder's per-symbol overhead on its own input: (payload bits minus the
// input's total information) / input length. Requires rle_tokens > 0.
double measured_mu(const PipelineStats& stats);

// Builds a Huffman code for p and checks the expected length lies in
// [H(p), H(p)+1). formula_bits = H+1, measured_bits = expected length, and
// satisfied additionally requires measured >= H (within 1e-9 rounding slop).
BoundReport noiseless_interval_check(const Distribution& p);

// One row of the compression-ratio-versus-entropy table.
struct ConvergenceRow {
  std::uint64_t n = 0;
  double hk = 0;
  double lz77_ratio = 0;  // compressed bits / n
  double lz78_ratio = 0;
  double bwt_ratio = 0;
};

ConvergenceRow convergence_row(const Sequence& s, unsigned k);

// Rows for each member of a family of strictly increasing length; throws
// std::invalid_argument when lengths fail to increase.
std::vector<ConvergenceRow> convergence_experiment(
    std::span<const Sequence> family, unsigned k);

}  // namespace entlab
