#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "signdeg/boolfn.hpp"
#include "signdeg/exactlp.hpp"
#include "signdeg/fourier.hpp"
#include "signdeg/rapprox.hpp"

namespace signdeg {

class HypothesisViolatedError : public Error {
 public:
  HypothesisViolatedError(std::string which, Rational margin)
      : Error("zero-correlation hypothesis violated: " + which),
        which(std::move(which)),
        margin(std::move(margin)) {}
  std::string which;
  Rational margin;  // amount by which the bound fails
};

class EmptyClassError : public Error {
 public:
  explicit EmptyClassError(std::uint32_t s)
      : Error("residue class " + std::to_string(s) + " is empty"), s(s) {}
  std::uint32_t s;
};

class DegreeExceedsCutoffError : public Error {
 public:
  DegreeExceedsCutoffError() : Error("polynomial degree exceeds the family cutoff") {}
};

// Weights w_1..w_n drawn uniformly from {0,...,2^(k+1)-1}: weight i is the
// k+1 low bits of SplitMix64 output i under `seed`.
struct WeightVector {
  int n = 0;
  int k = 0;
  std::vector<std::uint64_t> weights;
  std::uint64_t seed = 0;
};

WeightVector sample_weights(int n, int k, std::uint64_t seed);

// Partition of {0,1}^n by the residue of sum w_i x_i mod 2^(k+1).
struct ResidueClassPartition {
  WeightVector w;
  std::vector<std::uint32_t> residue_of_point;         // size 2^n
  std::vector<std::vector<std::uint32_t>> classes;     // point masks per residue

  int modulus() const { return 1 << (w.k + 1); }
  // 0/1 indicator table of X_s, indexed by point mask.
  std::vector<long long> indicator(std::uint32_t s) const;
};

ResidueClassPartition build_partition(const WeightVector& w);  // n <= 22

// The equivalent set-based definition: w_j = sum_i 2^i [j in S_i].
ResidueClassPartition partition_from_sets(int n,
                                          const std::vector<std::uint64_t>& sets);

// Exhaustive check of |f_s_hat(T) - delta_{T,empty}/2^(k+1)| <= 2^(-ceil(zeta n))
// over all classes and all |T| <= floor(eps n). The exponent is rounded up,
// the stricter reading for fractional zeta n.
struct SpectrumReport {
  Rational eps, zeta;
  int order_bound = 0;   // floor(eps n)
  int exponent = 0;      // ceil(zeta n)
  Rational bound;        // 2^(-exponent)
  struct ClassDeviation {
    std::uint32_t s = 0;
    Rational worst;
    std::uint64_t worst_mask = 0;
  };
  std::vector<ClassDeviation> per_class;
  Rational worst;
  std::uint32_t worst_class = 0;
  std::uint64_t worst_mask = 0;
  bool pass = false;
};

SpectrumReport verify_spectrum_bounds(const ResidueClassPartition& p,
                                      const Rational& eps, const Rational& zeta);

// Everything needed to re-check a zero-correlation construction offline:
// M alpha = gamma, sum|alpha| < 1, and the normalizer.
struct ZeroCorrelationCertificate {
  RationalMatrix m;
  RationalVector gamma;
  RationalVector alpha;
  Rational normalizer;
};

struct ZeroCorrelationResult {
  std::vector<Rational> mu;  // one weight per domain point
  ZeroCorrelationCertificate cert;
};

// Theorem: if sum_i |<f,chi_i>| < 1/2 and each row sum of pairwise
// correlations is <= 1/2, the distribution mu(x) = c(1 - f(x) sum a_i chi_i(x))
// with M a = gamma has exactly zero correlations E_mu[f chi_i].
// Hypotheses are verified before solving; M is strictly diagonally dominant
// by hypothesis, so the solve cannot hit SingularMatrix.
ZeroCorrelationResult zero_correlation_distribution(
    const BooleanFunction& f, const std::vector<BooleanFunction>& chis);

// Per-class distributions mu_s with mu_s_hat(S) = 0 for every nonempty
// |S| <= cutoff, hence identical moments across classes for all monomials of
// degree <= cutoff. Both formulations are verified exactly.
struct MomentMatchedFamily {
  ResidueClassPartition partition;
  int cutoff = 0;
  std::vector<std::uint64_t> family;                // nonempty masks, |S| <= cutoff
  std::vector<std::vector<Rational>> mu;            // per class, aligned with classes[s]
  std::vector<ZeroCorrelationCertificate> certs;    // per class
  std::vector<std::uint64_t> monomials;             // all masks incl. empty, |A| <= cutoff
  std::vector<Rational> moments;                    // common E_mu[prod_{i in A} x_i]
};

MomentMatchedFamily build_moment_matched(const ResidueClassPartition& p,
                                         int cutoff);

// Substitutes t = 2^(-k-1)(sum w_i x_i - s) into a degree <= cutoff
// polynomial in (x_1..x_n, t), replaces each x-monomial by its
// class-independent expectation, and returns the univariate P with
// P(s) = E_{mu_s}[poly(x, l(x,s))], verified exactly at every
// s in {+-1,...,+-2^k} (s indexes the class of s mod 2^(k+1)).
Polynomial univariate_reduce(const Polynomial& poly,
                             const MomentMatchedFamily& fam);

// Direct per-class expectation E_{mu_s}[poly(x, l(x,s))], the oracle the
// reduction is checked against. s in {+-1,...,+-2^k}.
Rational reduction_expectation(const MomentMatchedFamily& fam,
                               const Polynomial& poly, std::int64_t s);

// sign(1/2 + sum w_i x_i - 2^(k+1) sum_{i>n} x_i) on {0,1}^{2n}, stored with
// doubled coefficients; the odd constant keeps the form from vanishing.
Halfspace build_hard_halfspace(int n, int k, std::uint64_t seed);

// The block-symmetrized form f(x,t) on {0,1}^n x {0..n} from the same
// weights; R+(F,d) = R+(f,d) by symmetrization.
BooleanFunction hard_halfspace_grid_function(const WeightVector& w);

struct HardnessOptions {
  std::optional<Rational> eps;    // default 2k/n
  Rational zeta = make_rational(1, 5);
  std::optional<int> cutoff;      // default k
  Rational tol = pow2(-20);       // bracket tolerance for the d-degree stage
  int reduction_trials = 20;
  bool run_converse = false;      // degree-2d/4d brackets get big quickly
  Rational converse_tol = pow2(-10);
  int converse_max_d = 1;
};

struct HardnessStage {
  std::string name;
  bool ran = false;
  bool pass = false;
  std::string detail;
};

// Full pipeline: partition, spectrum check, moment matching, reduction
// battery, and the R+ cross-check lo(f,d) >= lo(grid 2^k, d) - 2 tol.
struct HardnessReport {
  int n = 0, k = 0, d = 0;
  std::uint64_t seed = 0;
  Rational eps, zeta, tol;
  int cutoff = 0;
  SpectrumReport spectrum;
  bool moment_ok = false;
  std::string moment_detail;
  bool reduction_ok = false;
  int reduction_trials = 0;
  std::optional<ApproxBracket> grid_bracket, hard_bracket;
  bool bracket_ok = false;
  // Sherstov converse chain: largest dd with lo(f,4dd) + lo(f,2dd) >= 1
  // certifies degthr(f AND f) >= dd + 1.
  int converse_chain_d = 0;
  int degthr_lower_bound = 1;
  std::vector<HardnessStage> stages;
  bool deterministic_ok = true;  // false iff a theorem-guaranteed check failed
};

HardnessReport hardness_report(int n, int k, std::uint64_t seed, int d,
                               const HardnessOptions& options = {});

}  // namespace signdeg
