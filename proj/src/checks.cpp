#include "signdeg/checks.hpp"

#include <algorithm>
#include <chrono>

#include "signdeg/boolfn.hpp"
#include "signdeg/exactlp.hpp"
#include "signdeg/fourier.hpp"
#include "signdeg/hardhs.hpp"
#include "signdeg/prng.hpp"
#include "signdeg/rapprox.hpp"
#include "signdeg/signrep.hpp"

namespace signdeg {

namespace {

Rational random_rational(SplitMix64& rng, long num_lo = -9, long num_hi = 9,
                         long den_hi = 4) {
  return make_rational(rng.next_in(num_lo, num_hi), rng.next_in(1, den_hi));
}

// Halfspace with doubled weights and an odd offset, so the form cannot
// vanish on the cube.
Halfspace random_cube_halfspace(SplitMix64& rng, int n, long mag = 8) {
  Halfspace h;
  h.n = n;
  h.c0 = 2 * rng.next_in(-mag, mag) + 1;
  for (int i = 0; i < n; ++i) h.coeffs.emplace_back(2 * rng.next_in(-mag, mag));
  return h;
}

BooleanFunction random_nonconstant_halfspace_function(SplitMix64& rng, int n,
                                                      Halfspace* out_h = nullptr) {
  for (;;) {
    const Halfspace h = random_cube_halfspace(rng, n);
    BooleanFunction f = halfspace_to_function(h, PointSet::cube(n));
    bool has_pos = false, has_neg = false;
    for (std::size_t i = 0; i < f.size() && !(has_pos && has_neg); ++i)
      (f.value(i) == 1 ? has_pos : has_neg) = true;
    if (has_pos && has_neg) {
      if (out_h) *out_h = h;
      return f;
    }
  }
}

BooleanFunction random_pm1_function(SplitMix64& rng, int n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint64_t> bits((size + 63) / 64, 0);
  for (auto& w : bits) w = rng.next();
  return BooleanFunction::from_bits(PointSet::cube(n), std::move(bits));
}

std::string freq_note(std::size_t pass, std::size_t total, const char* what) {
  return std::to_string(pass) + "/" + std::to_string(total) + " " + what;
}

}  // namespace

CheckSummary check_resheto(int n, int k, const Rational& eps, const Rational& zeta,
                           std::uint64_t seed_lo, std::uint64_t seed_hi) {
  CheckSummary sum;
  sum.id = "resheto";
  for (std::uint64_t seed = seed_lo; seed <= seed_hi; ++seed) {
    const SpectrumReport rep =
        verify_spectrum_bounds(build_partition(sample_weights(n, k, seed)), eps, zeta);
    sum.add("seed " + std::to_string(seed),
            rep.pass ? RowStatus::Pass : RowStatus::Skip,
            "worst " + rat_to_string(rep.worst) + " vs bound " +
                rat_to_string(rep.bound));
  }
  sum.note = freq_note(sum.count(RowStatus::Pass), sum.rows.size(),
                       "seeds satisfied the spectrum bound (empirical)");
  return sum;
}

CheckSummary check_moment_match(int n, int k, int cutoff, std::uint64_t seed_lo,
                                std::uint64_t seed_hi) {
  CheckSummary sum;
  sum.id = "moment-match";
  for (std::uint64_t seed = seed_lo; seed <= seed_hi; ++seed) {
    const std::string label = "seed " + std::to_string(seed);
    try {
      const MomentMatchedFamily fam =
          build_moment_matched(build_partition(sample_weights(n, k, seed)), cutoff);
      // build_moment_matched verifies zero correlations, mass, and exact
      // cross-class moment equality; reaching here means all of them hold.
      sum.add(label, RowStatus::Pass,
              std::to_string(fam.monomials.size()) + " moments equal across " +
                  std::to_string(fam.mu.size()) + " classes");
    } catch (const HypothesisViolatedError& e) {
      sum.add(label, RowStatus::Skip, "hypotheses: " + e.which);
    } catch (const EmptyClassError& e) {
      sum.add(label, RowStatus::Skip, e.what());
    } catch (const Error& e) {
      sum.add(label, RowStatus::Fail, e.what());
    }
  }
  sum.note = freq_note(sum.count(RowStatus::Pass), sum.rows.size(),
                       "seeds passed hypotheses; every one matched exactly");
  return sum;
}

CheckSummary check_reduction(int n, int k, int degree, int trials,
                             std::uint64_t seed_lo, std::uint64_t seed_hi) {
  CheckSummary sum;
  sum.id = "reduction";
  const int cutoff = k;
  const int cap = std::min(degree, cutoff);
  for (std::uint64_t seed = seed_lo; seed <= seed_hi; ++seed) {
    const std::string label = "seed " + std::to_string(seed);
    MomentMatchedFamily fam;
    try {
      fam = build_moment_matched(build_partition(sample_weights(n, k, seed)), cutoff);
    } catch (const HypothesisViolatedError& e) {
      sum.add(label, RowStatus::Skip, "hypotheses: " + e.which);
      continue;
    } catch (const EmptyClassError& e) {
      sum.add(label, RowStatus::Skip, e.what());
      continue;
    }

    try {
      // canonical linear form: P(s) = s exactly
      Polynomial canonical(n + 1);
      for (int i = 0; i < n; ++i) {
        std::vector<std::uint32_t> e(n + 1, 0);
        e[i] = 1;
        canonical.add_term(std::move(e),
                           Rational(static_cast<unsigned long>(
                               fam.partition.w.weights[i])));
      }
      std::vector<std::uint32_t> te(n + 1, 0);
      te[n] = 1;
      canonical.add_term(std::move(te), -pow2(k + 1));
      Polynomial expected_s(1);
      expected_s.add_term({1}, 1);
      if (!(univariate_reduce(canonical, fam) == expected_s))
        throw Error("canonical form did not reduce to P(s) = s");

      // random battery: reduce (self-verifying), then the interpolation
      // consistency check — cap+1 residues determine the rest
      SplitMix64 rng(seed * 0x9E3779B97F4A7C15ull + 17);
      std::vector<std::int64_t> s_values;
      const std::int64_t top = std::int64_t{1} << k;
      for (std::int64_t s = -top; s <= top; ++s)
        if (s != 0) s_values.push_back(s);

      for (int t = 0; t < trials; ++t) {
        Polynomial poly(n + 1);
        const int terms = 1 + static_cast<int>(rng.next_below(4));
        for (int j = 0; j < terms; ++j) {
          std::vector<std::uint32_t> exps(n + 1, 0);
          int budget = cap > 0 ? static_cast<int>(rng.next_below(cap + 1)) : 0;
          while (budget-- > 0) ++exps[rng.next_below(n + 1)];
          poly.add_term(std::move(exps), random_rational(rng));
        }
        const Polynomial reduced = univariate_reduce(poly, fam);

        std::vector<std::pair<Rational, Rational>> nodes;
        for (std::size_t i = 0; i < static_cast<std::size_t>(cap) + 1; ++i)
          nodes.push_back({Rational(static_cast<long>(s_values[i])),
                           reduction_expectation(fam, poly, s_values[i])});
        const Polynomial interpolant = interpolate_univariate(nodes);
        for (std::size_t i = nodes.size(); i < s_values.size(); ++i) {
          std::vector<std::int64_t> pt{s_values[i]};
          if (interpolant.eval(pt) != reduction_expectation(fam, poly, s_values[i]))
            throw Error("interpolated P missed a residue value");
        }
        if (!(interpolant == reduced))
          throw Error("interpolant differs from the reduced polynomial");
      }
      sum.add(label, RowStatus::Pass,
              std::to_string(trials) + " polynomials, degree <= " +
                  std::to_string(cap));
    } catch (const Error& e) {
      sum.add(label, RowStatus::Fail, e.what());
    }
  }
  sum.note = freq_note(sum.count(RowStatus::Pass), sum.rows.size(),
                       "verified families; reduction exact on each");
  return sum;
}

CheckSummary check_brs(int n, int pairs, std::uint64_t seed) {
  CheckSummary sum;
  sum.id = "brs";
  SplitMix64 rng(seed);
  const Rational third = make_rational(1, 3);
  for (int i = 0; i < pairs; ++i) {
    const std::string label = "pair " + std::to_string(i);
    try {
      const BooleanFunction f = random_nonconstant_halfspace_function(rng, n);
      const BooleanFunction g = random_nonconstant_halfspace_function(rng, n);
      const RdegResult df = rdeg(f, third, n);
      const RdegResult dg = rdeg(g, third, n);
      if (df.exceeded || dg.exceeded) throw Error("rdeg exceeded dmax on a cube");
      const int d = std::max(df.degree, dg.degree);
      const auto wf = rplus_witness(f, d, third);
      const auto wg = rplus_witness(g, d, third);
      if (!wf || !wg) throw Error("witness LP infeasible at its own degree");

      const Polynomial rep = brs_conjunction_polynomial(
          wf->p, wf->q, f.domain(), wg->p, wg->q, g.domain());
      const BooleanFunction conj = conjunction(f, g);
      if (rep.degree() > 2 * d) throw Error("BRS degree bound violated");
      for (std::size_t idx = 0; idx < conj.size(); ++idx) {
        if (sgn(rep.eval(conj.domain().point(idx))) != conj.value(idx))
          throw Error("BRS polynomial missed the sign at a point");
      }
      sum.add(label, RowStatus::Pass,
              "d=" + std::to_string(d) + ", degree " + std::to_string(rep.degree()) +
                  " <= " + std::to_string(2 * d));
    } catch (const Error& e) {
      sum.add(label, RowStatus::Fail, e.what());
    }
  }
  sum.note = freq_note(sum.count(RowStatus::Pass), sum.rows.size(),
                       "pairs sign-represented exhaustively");
  return sum;
}

CheckSummary check_converse(int n, int pairs, std::uint64_t seed) {
  CheckSummary sum;
  sum.id = "converse";
  SplitMix64 rng(seed);
  const Rational tol = pow2(-16);
  for (int i = 0; i < pairs; ++i) {
    const std::string label = "pair " + std::to_string(i);
    try {
      BooleanFunction f = random_pm1_function(rng, n);
      BooleanFunction g = random_pm1_function(rng, n);
      auto identically_false = [](const BooleanFunction& h) {
        for (std::size_t j = 0; j < h.size(); ++j)
          if (h.value(j) == -1) return false;
        return true;
      };
      while (identically_false(f)) f = random_pm1_function(rng, n);
      while (identically_false(g)) g = random_pm1_function(rng, n);

      const int d = threshold_degree(conjunction(f, g)).degree;
      const Rational hi_f = rplus_bracket(f, 4 * d, tol).hi;
      const Rational hi_g = rplus_bracket(g, 2 * d, tol).hi;
      if (hi_f + hi_g >= 1)
        throw Error("bracket-hi(f,4d) + bracket-hi(g,2d) = " +
                    rat_to_string(hi_f + hi_g) + " >= 1");
      sum.add(label, RowStatus::Pass,
              "d=" + std::to_string(d) + ", sum " + rat_to_string(hi_f + hi_g));
    } catch (const Error& e) {
      sum.add(label, RowStatus::Fail, e.what());
    }
  }
  sum.note = freq_note(sum.count(RowStatus::Pass), sum.rows.size(),
                       "pairs consistent with the converse bound");
  return sum;
}

CheckSummary check_kp_density(int n, int cap, int jobs) {
  CheckSummary sum;
  sum.id = "kp-density";
  try {
    BooleanFunction f = parity_function(n, (std::uint64_t{1} << n) - 1);
    f.set_name("parity:" + std::to_string(n));
    const DegreeCertificate cert = threshold_degree(f);
    if (cert.degree != n || !verify_degree_certificate(f, cert))
      sum.add("degthr(parity)", RowStatus::Fail,
              "expected " + std::to_string(n) + ", got " + std::to_string(cert.degree));
    else
      sum.add("degthr(parity)", RowStatus::Pass, "= " + std::to_string(n));

    const BooleanFunction fkp = krause_pudlak(f);
    const DensityResult res = threshold_density(fkp, cap, jobs);
    if (res.found)
      sum.add("families <= " + std::to_string(cap), RowStatus::Fail,
              "feasible family found, dns <= " + std::to_string(cap));
    else
      sum.add("families <= " + std::to_string(cap), RowStatus::Pass,
              "all infeasible, dns(f^KP) >= " + std::to_string(cap + 1) +
                  " >= 2^degthr = " + std::to_string(1 << cert.degree));
  } catch (const Error& e) {
    sum.add("kp-density", RowStatus::Fail, e.what());
  }
  return sum;
}

CheckSummary check_parseval(int n, int trials, std::uint64_t seed) {
  CheckSummary sum;
  sum.id = "parseval";
  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const std::string label = "trial " + std::to_string(t);
    try {
      CubeTable f;
      f.n = n;
      f.values.resize(std::size_t{1} << n);
      for (auto& v : f.values) v = random_rational(rng);
      const FourierSpectrum spec = wht(f);
      if (!parseval_check(f, spec)) throw Error("Parseval identity violated");
      if (synthesize(spec).values != f.values) throw Error("inversion not exact");
      sum.add(label, RowStatus::Pass);
    } catch (const Error& e) {
      sum.add(label, RowStatus::Fail, e.what());
    }
  }
  // +-1 functions have total spectral mass exactly 1
  try {
    const BooleanFunction f = random_pm1_function(rng, n);
    const FourierSpectrum spec = wht(to_table(f));
    Rational mass(0);
    for (const auto& c : spec.coeffs) mass += c * c;
    sum.add("pm1 mass", mass == 1 ? RowStatus::Pass : RowStatus::Fail,
            rat_to_string(mass));
  } catch (const Error& e) {
    sum.add("pm1 mass", RowStatus::Fail, e.what());
  }
  sum.note = freq_note(sum.count(RowStatus::Pass), sum.rows.size(), "exact");
  return sum;
}

CheckSummary check_symmetrization(int n_max, int d_max, const Rational& tol) {
  CheckSummary sum;
  sum.id = "symmetrization";
  for (int n = 2; n <= n_max; ++n) {
    const BooleanFunction f = majority(n);
    const BooleanFunction grid = block_symmetrize(f, {n});
    for (int d = 1; d <= d_max; ++d) {
      const std::string label = "n=" + std::to_string(n) + " d=" + std::to_string(d);
      try {
        const ApproxBracket cube_b = rplus_bracket(f, d, tol);
        const ApproxBracket grid_b = rplus_bracket(grid, d, tol);
        const Rational lo = std::max(cube_b.lo, grid_b.lo);
        const Rational hi = std::min(cube_b.hi, grid_b.hi);
        if (lo > hi + 2 * tol)
          throw Error("brackets [" + rat_to_string(cube_b.lo) + "," +
                      rat_to_string(cube_b.hi) + "] and [" +
                      rat_to_string(grid_b.lo) + "," + rat_to_string(grid_b.hi) +
                      "] fail to overlap");
        sum.add(label, RowStatus::Pass,
                "cube [" + rat_to_string(cube_b.lo) + "," + rat_to_string(cube_b.hi) +
                    "] grid [" + rat_to_string(grid_b.lo) + "," +
                    rat_to_string(grid_b.hi) + "]");
      } catch (const Error& e) {
        sum.add(label, RowStatus::Fail, e.what());
      }
    }
  }
  sum.note = freq_note(sum.count(RowStatus::Pass), sum.rows.size(),
                       "cells overlap within 2 tol");
  return sum;
}

CheckSummary check_zero_law(int n_max, const Rational& tol) {
  CheckSummary sum;
  sum.id = "zero-law";
  for (int n = 1; n <= n_max; ++n) {
    const std::string label = "N=" + std::to_string(n);
    try {
      Rational prev_hi;
      bool first = true;
      for (int d = 1; d <= n; ++d) {
        const ApproxBracket b = rplus_sign_grid(n, d, tol);
        const bool zero = sgn(b.hi) == 0;
        if (zero != (d >= n))
          throw Error("zero law failed at d=" + std::to_string(d) + ": hi=" +
                      rat_to_string(b.hi));
        if (!first && b.hi > prev_hi + 2 * tol)
          throw Error("hi increased at d=" + std::to_string(d));
        prev_hi = b.hi;
        first = false;
      }
      sum.add(label, RowStatus::Pass, "nonincreasing, hi = 0 exactly at d = N");
    } catch (const Error& e) {
      sum.add(label, RowStatus::Fail, e.what());
    }
  }
  sum.note = freq_note(sum.count(RowStatus::Pass), sum.rows.size(), "grids verified");
  return sum;
}

CheckSummary check_lp_certificates(int instances, std::uint64_t seed) {
  CheckSummary sum;
  sum.id = "lp-certificates";
  SplitMix64 rng(seed);
  std::size_t feasible = 0;
  for (int i = 0; i < instances; ++i) {
    const std::string label = "instance " + std::to_string(i);
    try {
      const int nvar = static_cast<int>(rng.next_in(1, 12));
      const int m = static_cast<int>(rng.next_in(0, 40));
      LinearProgram lp;
      lp.a = RationalMatrix(m, nvar);
      lp.b.resize(m);
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < nvar; ++c)
          lp.a(r, c) = rng.next_below(5) == 0 ? Rational(0) : random_rational(rng);
        lp.b[r] = random_rational(rng);
      }
      const FeasibilityOutcome out = check_feasible(lp);
      if (out.feasible) {
        ++feasible;
        if (!verify_feasible_point(lp, out.point))
          throw Error("reported point violates a constraint");
      } else if (!verify_farkas_certificate(lp, out.farkas)) {
        throw Error("reported Farkas certificate invalid");
      }
      sum.add(label, RowStatus::Pass, out.feasible ? "feasible" : "infeasible");
    } catch (const Error& e) {
      sum.add(label, RowStatus::Fail, e.what());
    }
  }
  sum.note = freq_note(sum.count(RowStatus::Pass), sum.rows.size(),
                       ("certificates verified (" + std::to_string(feasible) +
                        " feasible)")
                           .c_str());
  return sum;
}

CheckSummary check_degthr_ground_truths(int halfspaces, std::uint64_t seed) {
  CheckSummary sum;
  sum.id = "degthr-ground-truths";
  SplitMix64 rng(seed);
  for (int i = 0; i < halfspaces; ++i) {
    const std::string label = "halfspace " + std::to_string(i);
    try {
      const int n = static_cast<int>(rng.next_in(2, 10));
      Halfspace h;
      const BooleanFunction f = random_nonconstant_halfspace_function(rng, n, &h);
      const DegreeCertificate cert = threshold_degree(f);
      if (cert.degree != 1)
        throw Error("degree " + std::to_string(cert.degree) + " != 1");
      if (!verify_degree_certificate(f, cert)) throw Error("certificate invalid");
      for (std::size_t x = 0; x < f.size(); ++x) {
        // the halfspace's own integral form is itself a witness
        const Int v = h.eval(f.domain().point(x));
        if (sgn(v) != f.value(x)) throw Error("own form is not a witness");
      }
      sum.add(label, RowStatus::Pass, "n=" + std::to_string(n));
    } catch (const Error& e) {
      sum.add(label, RowStatus::Fail, e.what());
    }
  }
  for (int n = 1; n <= 4; ++n) {
    const std::string label = "parity n=" + std::to_string(n);
    try {
      BooleanFunction f = parity_function(n, (std::uint64_t{1} << n) - 1);
      f.set_name("parity:" + std::to_string(n));
      const DegreeCertificate cert = threshold_degree(f);
      if (cert.degree != n)
        throw Error("degree " + std::to_string(cert.degree) + " != n");
      if (!verify_degree_certificate(f, cert))
        throw Error("certificate invalid (Farkas at lower degrees)");
      sum.add(label, RowStatus::Pass);
    } catch (const Error& e) {
      sum.add(label, RowStatus::Fail, e.what());
    }
  }
  for (int v : {1, -1}) {
    const std::string label = v == 1 ? "constant +1" : "constant -1";
    try {
      const BooleanFunction f(PointSet::cube(3), std::vector<int>(8, v));
      const DegreeCertificate cert = threshold_degree(f);
      if (cert.degree != 0) throw Error("constant degree != 0");
      if (!verify_degree_certificate(f, cert)) throw Error("certificate invalid");
      sum.add(label, RowStatus::Pass);
    } catch (const Error& e) {
      sum.add(label, RowStatus::Fail, e.what());
    }
  }
  sum.note = freq_note(sum.count(RowStatus::Pass), sum.rows.size(), "ground truths");
  return sum;
}

CheckSummary check_zero_correlation(int instances, std::uint64_t seed) {
  CheckSummary sum;
  sum.id = "zero-correlation";
  SplitMix64 rng(seed);
  int accepted = 0;
  long attempts = 0;
  const long attempt_cap = 400L * instances;
  while (accepted < instances && attempts < attempt_cap) {
    ++attempts;
    // random 24-point subset of {0,1}^5, random f, two or three characters
    const int m = 5;
    const std::size_t cube_size = std::size_t{1} << m;
    std::vector<std::uint32_t> masks(cube_size);
    for (std::size_t i = 0; i < cube_size; ++i) masks[i] = i;
    for (std::size_t i = cube_size; i > 1; --i)
      std::swap(masks[i - 1], masks[rng.next_below(i)]);
    const std::size_t npts = 24;
    std::vector<std::uint32_t> chosen(masks.begin(), masks.begin() + npts);
    std::sort(chosen.begin(), chosen.end());
    std::vector<std::vector<std::int64_t>> pts;
    for (auto mask : chosen) {
      std::vector<std::int64_t> p(m);
      for (int j = 0; j < m; ++j) p[j] = (mask >> j) & 1;
      pts.push_back(std::move(p));
    }
    const PointSet x = PointSet::from_points(m, std::move(pts));

    std::vector<int> f_vals(npts);
    for (auto& v : f_vals) v = rng.next_bool() ? 1 : -1;
    const BooleanFunction f(x, f_vals);

    const int nchis = 2 + static_cast<int>(rng.next_below(2));
    std::vector<std::uint64_t> smasks;
    while (static_cast<int>(smasks.size()) < nchis) {
      const std::uint64_t s = 1 + rng.next_below(cube_size - 1);
      if (std::find(smasks.begin(), smasks.end(), s) == smasks.end())
        smasks.push_back(s);
    }
    std::vector<BooleanFunction> chis;
    for (auto s : smasks) {
      std::vector<int> vals(npts);
      for (std::size_t i = 0; i < npts; ++i) vals[i] = parity_char(s, chosen[i]);
      chis.emplace_back(x, vals);
    }

    try {
      const ZeroCorrelationResult res = zero_correlation_distribution(f, chis);
      ++accepted;
      const std::string label = "instance " + std::to_string(accepted);
      // independent re-verification by direct summation
      Rational mass(0), alpha_sum(0);
      bool positive = true;
      for (const auto& w : res.mu) {
        if (sgn(w) <= 0) positive = false;
        mass += w;
      }
      for (const auto& a : res.cert.alpha) alpha_sum += abs(a);
      bool zeroed = true;
      for (const auto& chi : chis) {
        Rational corr(0);
        for (std::size_t i = 0; i < npts; ++i)
          corr += res.mu[i] * f.value(i) * chi.value(i);
        if (sgn(corr) != 0) zeroed = false;
      }
      if (positive && mass == 1 && alpha_sum < 1 && zeroed)
        sum.add(label, RowStatus::Pass,
                "sum|alpha| = " + rat_to_string(alpha_sum));
      else
        sum.add(label, RowStatus::Fail, "distribution checks failed");
    } catch (const HypothesisViolatedError&) {
      // rejection sampling: instance outside the theorem's hypotheses
    }
  }
  sum.note = freq_note(sum.count(RowStatus::Pass), sum.rows.size(),
                       ("instances (from " + std::to_string(attempts) +
                        " attempts)")
                           .c_str());
  if (accepted < instances)
    sum.add("generation", RowStatus::Fail,
            "could not generate enough hypothesis-passing instances");
  return sum;
}

CheckSummary check_fourier_suite(int oracle_trials, int entropy_n_max,
                                 std::uint64_t seed) {
  CheckSummary sum;
  sum.id = "fourier";
  SplitMix64 rng(seed);
  for (int t = 0; t < oracle_trials; ++t) {
    const std::string label = "oracle trial " + std::to_string(t);
    try {
      const int n = 1 + static_cast<int>(rng.next_below(8));
      CubeTable f;
      f.n = n;
      f.values.resize(std::size_t{1} << n);
      for (auto& v : f.values) v = random_rational(rng);
      const FourierSpectrum spec = wht(f);
      const Rational scale = pow2(-n);
      for (std::size_t s = 0; s < spec.coeffs.size(); ++s) {
        Rational direct(0);
        for (std::size_t x = 0; x < f.values.size(); ++x)
          direct += f.values[x] * parity_char(s, x);
        if (direct * scale != spec.coeffs[s])
          throw Error("butterfly disagrees with the definitional sum");
      }
      if (!parseval_check(f, spec)) throw Error("Parseval violated");
      if (synthesize(spec).values != f.values) throw Error("inversion not exact");
      sum.add(label, RowStatus::Pass, "n=" + std::to_string(n));
    } catch (const Error& e) {
      sum.add(label, RowStatus::Fail, e.what());
    }
  }

  bool entropy_ok = true;
  for (int n = 1; n <= entropy_n_max && entropy_ok; ++n)
    for (int k = 0; 2 * k <= n && entropy_ok; ++k)
      entropy_ok = binary_entropy_bound_check(n, k);
  sum.add("entropy bound n <= " + std::to_string(entropy_n_max),
          entropy_ok ? RowStatus::Pass : RowStatus::Fail);

  try {
    CubeTable big;
    big.n = 20;
    big.values.resize(std::size_t{1} << 20);
    for (auto& v : big.values) v = rng.next_bool() ? 1 : -1;
    const auto start = std::chrono::steady_clock::now();
    const FourierSpectrum spec = wht(big);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    Rational mass(0);
    for (const auto& c : spec.coeffs) mass += c * c;
    const bool ok = mass == 1 && ms < 10'000;
    sum.add("wht n=20", ok ? RowStatus::Pass : RowStatus::Fail,
            std::to_string(ms) + " ms");
  } catch (const Error& e) {
    sum.add("wht n=20", RowStatus::Fail, e.what());
  }
  sum.note = freq_note(sum.count(RowStatus::Pass), sum.rows.size(), "exact");
  return sum;
}

}  // namespace signdeg
