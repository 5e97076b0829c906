#include "entlab/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "entlab/huffman.hpp"
#include "entlab/lz.hpp"
#include "entlab/numeric.hpp"
#include "entlab/pipeline.hpp"

namespace entlab {

double zeta(double lambda, double eps) {
  if (!(lambda > 1.0)) throw std::invalid_argument("zeta: requires lambda > 1");
  if (!(eps > 0.0)) throw std::invalid_argument("zeta: requires eps > 0");

  // Remainder after the first Euler-Maclaurin correction term is bounded by
  // the next one: lambda*(lambda+1)*(lambda+2) * M^(-lambda-3) / 720.
  std::uint64_t m_cut = 64;
  while (lambda * (lambda + 1) * (lambda + 2) *
             std::pow((double)m_cut, -lambda - 3) / 720.0 >
         eps) {
    m_cut *= 2;
    if (m_cut > (1ull << 26))
      throw std::invalid_argument("zeta: tolerance unreachable");
  }

  NeumaierSum sum;
  for (std::uint64_t j = m_cut; j >= 1; --j)
    sum.add(std::pow((double)j, -lambda));
  double m = (double)m_cut;
  sum.add(std::pow(m, 1.0 - lambda) / (lambda - 1.0));
  sum.add(-std::pow(m, -lambda) / 2.0);
  sum.add(lambda * std::pow(m, -lambda - 1.0) / 12.0);
  return sum.value();
}

namespace {

BoundReport finish_report(BoundReport r, double measured_bits) {
  NeumaierSum total;
  for (const BoundTerm& t : r.terms) total.add(t.bits);
  r.formula_bits = total.value();
  r.measured_bits = measured_bits;
  r.slack_bits = r.formula_bits - measured_bits;
  r.satisfied = measured_bits <= r.formula_bits;
  return r;
}

}  // namespace

BoundReport manzini_bound(const Sequence& s, unsigned k, double mu,
                          double measured_bits) {
  if (mu < 0) throw std::invalid_argument("manzini_bound: requires mu >= 0");
  const double n = (double)s.size();
  const double sigma = (double)s.sigma();
  const double h = hk(s, k);

  BoundReport r;
  r.name = "manzini";
  r.params = {{"k", (double)k},
              {"n", n},
              {"sigma", sigma},
              {"mu", mu},
              {"hk", h}};
  r.terms = {
      {"entropy_term_8hkn", 8.0 * h * n},
      {"linear_term_(mu+2/25)n", (mu + 2.0 / 25.0) * n},
      {"table_term_sigma^k(2sigma*log2sigma+9)",
       std::pow(sigma, (double)k) *
           (2.0 * sigma * std::log2(sigma) + 9.0)},
  };
  return finish_report(std::move(r), measured_bits);
}

BoundReport klv_bound(const Sequence& s, unsigned k, double lambda, double c,
                      double measured_bits) {
  if (!(lambda > 1.0))
    throw std::invalid_argument("klv_bound: requires lambda > 1");
  if (c < 0) throw std::invalid_argument("klv_bound: requires c >= 0");
  const double n = (double)s.size();
  const double sigma = (double)s.sigma();
  const double h = hk(s, k);
  const double z = zeta(lambda, 1e-12);

  BoundReport r;
  r.name = "klv";
  r.params = {{"k", (double)k}, {"n", n},   {"sigma", sigma},
              {"lambda", lambda}, {"c", c}, {"hk", h},
              {"zeta", z}};
  r.terms = {
      {"entropy_term_lambda*hk*n", lambda * h * n},
      {"zeta_term_n*log2zeta", n * std::log2(z)},
      {"table_term_c*sigma^(k+1)*log2sigma",
       c * std::pow(sigma, (double)k + 1.0) * std::log2(sigma)},
  };
  return finish_report(std::move(r), measured_bits);
}

double measured_mu(const PipelineStats& stats) {
  if (stats.rle_tokens == 0)
    throw std::invalid_argument("measured_mu: no coder input");
  return ((double)stats.coder_payload_bits - stats.coder_input_information) /
         (double)stats.rle_tokens;
}

BoundReport noiseless_interval_check(const Distribution& p) {
  const double h = shannon_entropy(p);
  const double expected = huffman_expected_length(p.probs());

  BoundReport r;
  r.name = "noiseless_interval";
  r.params = {{"sigma", (double)p.size()}, {"entropy", h}};
  r.terms = {{"entropy", h}, {"plus_one", 1.0}};
  r.formula_bits = h + 1.0;
  r.measured_bits = expected;
  r.slack_bits = r.formula_bits - expected;
  r.satisfied = expected >= h - 1e-9 && expected < h + 1.0;
  return r;
}

ConvergenceRow convergence_row(const Sequence& s, unsigned k) {
  ConvergenceRow row;
  row.n = s.size();
  row.hk = hk(s, k);
  const double n = (double)s.size();
  row.lz77_ratio = (double)lz77_encode(s).total_bits() / n;
  row.lz78_ratio = (double)lz78_encode(s).total_bits() / n;
  row.bwt_ratio = (double)bwt_pipeline_encode(s).total_bits() / n;
  return row;
}

std::vector<ConvergenceRow> convergence_experiment(
    std::span<const Sequence> family, unsigned k) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(family.size());
  std::uint64_t prev = 0;
  for (const Sequence& s : family) {
    if (s.size() <= prev)
      throw std::invalid_argument(
          "convergence_experiment: lengths must strictly increase");
    prev = s.size();
    rows.push_back(convergence_row(s, k));
  }
  return rows;
}

}  // namespace entlab
