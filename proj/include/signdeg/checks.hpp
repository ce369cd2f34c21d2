#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "signdeg/rational.hpp"

namespace signdeg {

// One verification row. Skip means the instance fell outside a theorem's
// hypotheses (an empirical miss, never a failure); Fail means a
// deterministic guarantee was violated.
enum class RowStatus { Pass, Skip, Fail };

struct CheckRow {
  std::string label;
  RowStatus status = RowStatus::Pass;
  std::string detail;
};

struct CheckSummary {
  std::string id;
  std::vector<CheckRow> rows;
  std::string note;

  void add(std::string label, RowStatus status, std::string detail = "") {
    rows.push_back({std::move(label), status, std::move(detail)});
  }
  std::size_t count(RowStatus s) const {
    std::size_t c = 0;
    for (const auto& r : rows)
      if (r.status == s) ++c;
    return c;
  }
  // Deterministic gate: no row may Fail. Skips only lower the reported
  // frequency.
  bool ok() const { return count(RowStatus::Fail) == 0; }
};

// Theorem batteries, shared by `signdeg verify` and the acceptance suite.

// Spectrum bound of the random-halfspace theorem over a seed sweep.
CheckSummary check_resheto(int n, int k, const Rational& eps, const Rational& zeta,
                           std::uint64_t seed_lo, std::uint64_t seed_hi);

// Moment matching: every seed whose per-class hypotheses pass must match
// moments exactly (deterministic); hypothesis misses are skips.
CheckSummary check_moment_match(int n, int k, int cutoff, std::uint64_t seed_lo,
                                std::uint64_t seed_hi);

// Univariate reduction battery on verified families: interpolation from
// d+1 residues matches everywhere, P(s) = s for the canonical form.
CheckSummary check_reduction(int n, int k, int degree, int trials,
                             std::uint64_t seed_lo, std::uint64_t seed_hi);

// BRS conjunction construction on random halfspace pairs.
CheckSummary check_brs(int n, int pairs, std::uint64_t seed);

// Sherstov converse: bracket-hi(f,4d) + bracket-hi(g,2d) < 1 at
// d = degthr(f AND g).
CheckSummary check_converse(int n, int pairs, std::uint64_t seed);

// Krause-Pudlak density: every parity family of size <= cap fails to
// sign-represent parity_n^KP, certifying dns >= cap + 1.
CheckSummary check_kp_density(int n, int cap, int jobs);

// Parseval + inversion on random rational tables.
CheckSummary check_parseval(int n, int trials, std::uint64_t seed);

// Bracket transfer between MAJ_n on the cube and its symmetrized grid.
CheckSummary check_symmetrization(int n_max, int d_max, const Rational& tol);

// Sign-grid zero law and monotonicity in d.
CheckSummary check_zero_law(int n_max, const Rational& tol);

// Certificate soundness on random feasibility instances.
CheckSummary check_lp_certificates(int instances, std::uint64_t seed);

// Threshold-degree ground truths: halfspaces, parities, constants.
CheckSummary check_degthr_ground_truths(int halfspaces, std::uint64_t seed);

// Zero-correlation construction on random hypothesis-passing instances.
CheckSummary check_zero_correlation(int instances, std::uint64_t seed);

// wht against the definitional O(4^n) oracle, plus the entropy bound sweep.
CheckSummary check_fourier_suite(int oracle_trials, int entropy_n_max,
                                 std::uint64_t seed);

}  // namespace signdeg
