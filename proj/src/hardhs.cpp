#include "signdeg/hardhs.hpp"

#include <algorithm>
#include <bit>

#include "signdeg/prng.hpp"

namespace signdeg {

WeightVector sample_weights(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 0 || k > 30) throw Error("sample_weights needs n >= 1, 0 <= k <= 30");
  WeightVector w;
  w.n = n;
  w.k = k;
  w.seed = seed;
  const std::uint64_t mask = (std::uint64_t{1} << (k + 1)) - 1;
  w.weights.resize(n);
  for (int i = 0; i < n; ++i) w.weights[i] = SplitMix64::at(seed, i) & mask;
  return w;
}

ResidueClassPartition build_partition(const WeightVector& w) {
  if (w.n > 22) throw SizeLimitError("build_partition supports n <= 22");
  if (static_cast<int>(w.weights.size()) != w.n)
    throw Error("weight vector length mismatch");
  const std::uint32_t mod = std::uint32_t{1} << (w.k + 1);
  for (auto wi : w.weights)
    if (wi >= mod) throw Error("weight out of range");

  ResidueClassPartition p;
  p.w = w;
  const std::size_t size = std::size_t{1} << w.n;
  p.residue_of_point.resize(size);
  p.classes.assign(mod, {});
  p.residue_of_point[0] = 0;
  for (std::size_t m = 1; m < size; ++m) {
    const int low = std::countr_zero(m);
    p.residue_of_point[m] =
        (p.residue_of_point[m & (m - 1)] + static_cast<std::uint32_t>(w.weights[low])) &
        (mod - 1);
  }
  for (std::size_t m = 0; m < size; ++m)
    p.classes[p.residue_of_point[m]].push_back(static_cast<std::uint32_t>(m));
  return p;
}

ResidueClassPartition partition_from_sets(int n,
                                          const std::vector<std::uint64_t>& sets) {
  if (sets.empty()) throw Error("partition_from_sets needs at least one set");
  WeightVector w;
  w.n = n;
  w.k = static_cast<int>(sets.size()) - 1;
  w.weights.assign(n, 0);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (int j = 0; j < n; ++j)
      if (sets[i] >> j & 1) w.weights[j] += std::uint64_t{1} << i;
  return build_partition(w);
}

std::vector<long long> ResidueClassPartition::indicator(std::uint32_t s) const {
  std::vector<long long> table(residue_of_point.size(), 0);
  for (std::uint32_t m : classes[s]) table[m] = 1;
  return table;
}

SpectrumReport verify_spectrum_bounds(const ResidueClassPartition& p,
                                      const Rational& eps, const Rational& zeta) {
  const int n = p.w.n;
  SpectrumReport rep;
  rep.eps = eps;
  rep.zeta = zeta;
  rep.order_bound = static_cast<int>(rat_floor(eps * n).get_si());
  rep.exponent = static_cast<int>(rat_ceil(zeta * n).get_si());
  rep.bound = pow2(-rep.exponent);
  rep.worst = 0;

  const Rational scale = pow2(-n);
  const Rational target_empty = pow2(-(p.w.k + 1));
  for (std::uint32_t s = 0; s < p.classes.size(); ++s) {
    const std::vector<long long> counts = wht_int64(p.indicator(s));
    SpectrumReport::ClassDeviation dev;
    dev.s = s;
    dev.worst = 0;
    for (std::uint64_t t = 0; t < counts.size(); ++t) {
      if (std::popcount(t) > rep.order_bound) continue;
      Rational coeff = Rational(static_cast<long>(counts[t])) * scale;
      if (t == 0) coeff -= target_empty;
      const Rational d = abs(coeff);
      if (d > dev.worst) {
        dev.worst = d;
        dev.worst_mask = t;
      }
    }
    if (dev.worst > rep.worst) {
      rep.worst = dev.worst;
      rep.worst_class = s;
      rep.worst_mask = dev.worst_mask;
    }
    rep.per_class.push_back(std::move(dev));
  }
  rep.pass = rep.worst <= rep.bound;
  return rep;
}

namespace {

// Shared core of Theorem 4.1: hypotheses, the linear solve, the sum |alpha|
// bound, the distribution itself, and exact re-verification.
ZeroCorrelationResult zero_correlation_core(
    const RationalMatrix& m, const RationalVector& gamma,
    const std::vector<int>& f_vals,
    const std::vector<std::vector<int>>& chi_vals) {
  const std::size_t k = gamma.size();
  const std::size_t npts = f_vals.size();

  Rational gamma_sum(0);
  for (const auto& g : gamma) gamma_sum += abs(g);
  if (gamma_sum >= make_rational(1, 2))
    throw HypothesisViolatedError("sum |<f,chi_i>| < 1/2",
                                  gamma_sum - make_rational(1, 2));
  for (std::size_t i = 0; i < k; ++i) {
    Rational row(0);
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) row += abs(m(i, j));
    if (row > make_rational(1, 2))
      throw HypothesisViolatedError(
          "sum_{j != i} |<chi_i,chi_j>| <= 1/2 at i=" + std::to_string(i),
          row - make_rational(1, 2));
  }

  ZeroCorrelationResult res;
  res.cert.m = m;
  res.cert.gamma = gamma;
  if (k > 0) {
    if (!is_strictly_diagonally_dominant(m))
      throw Error("internal: correlation matrix not diagonally dominant");
    res.cert.alpha = solve_linear_system(m, gamma);
  }

  Rational alpha_sum(0);
  for (const auto& a : res.cert.alpha) alpha_sum += abs(a);
  if (alpha_sum >= 1)
    throw Error("internal: sum |alpha| >= 1 despite verified hypotheses");

  // mu(x) = c (1 - f(x) sum alpha_i chi_i(x)), c normalizing the total to 1
  res.mu.assign(npts, Rational(1));
  Rational total(0);
  for (std::size_t x = 0; x < npts; ++x) {
    Rational dot(0);
    for (std::size_t i = 0; i < k; ++i)
      if (chi_vals[i][x] == 1)
        dot += res.cert.alpha[i];
      else
        dot -= res.cert.alpha[i];
    if (f_vals[x] == 1)
      res.mu[x] -= dot;
    else
      res.mu[x] += dot;
    if (sgn(res.mu[x]) <= 0)
      throw Error("internal: nonpositive mass despite sum |alpha| < 1");
    total += res.mu[x];
  }
  res.cert.normalizer = 1 / total;
  for (auto& v : res.mu) v *= res.cert.normalizer;

  // exact re-verification: correlations vanish and the mass sums to 1
  Rational mass(0);
  for (const auto& v : res.mu) mass += v;
  if (mass != 1) throw Error("internal: distribution mass != 1");
  for (std::size_t i = 0; i < k; ++i) {
    Rational corr(0);
    for (std::size_t x = 0; x < npts; ++x) {
      const int sign = f_vals[x] * chi_vals[i][x];
      if (sign == 1)
        corr += res.mu[x];
      else
        corr -= res.mu[x];
    }
    if (sgn(corr) != 0) throw Error("internal: correlation not exactly zero");
  }
  return res;
}

}  // namespace

ZeroCorrelationResult zero_correlation_distribution(
    const BooleanFunction& f, const std::vector<BooleanFunction>& chis) {
  const std::size_t npts = f.size();
  if (npts == 0) throw EmptySetError();
  for (const auto& chi : chis)
    if (!(chi.domain() == f.domain()))
      throw Error("chi domain differs from f domain");

  const std::size_t k = chis.size();
  std::vector<int> f_vals(npts);
  for (std::size_t x = 0; x < npts; ++x) f_vals[x] = f.value(x);
  std::vector<std::vector<int>> chi_vals(k, std::vector<int>(npts));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t x = 0; x < npts; ++x) chi_vals[i][x] = chis[i].value(x);

  const Rational inv_size = make_rational(1, static_cast<long>(npts));
  RationalMatrix m(k, k);
  RationalVector gamma(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      long acc = 0;
      for (std::size_t x = 0; x < npts; ++x) acc += chi_vals[i][x] * chi_vals[j][x];
      m(i, j) = Rational(acc) * inv_size;
    }
    long acc = 0;
    for (std::size_t x = 0; x < npts; ++x) acc += f_vals[x] * chi_vals[i][x];
    gamma[i] = Rational(acc) * inv_size;
  }
  return zero_correlation_core(m, gamma, f_vals, chi_vals);
}

MomentMatchedFamily build_moment_matched(const ResidueClassPartition& p,
                                         int cutoff) {
  if (cutoff < 0 || cutoff > p.w.n) throw Error("cutoff out of range");
  MomentMatchedFamily fam;
  fam.partition = p;
  fam.cutoff = cutoff;
  fam.family = subsets_up_to(p.w.n, cutoff, /*include_empty=*/false);
  fam.monomials = subsets_up_to(p.w.n, cutoff, /*include_empty=*/true);

  const std::size_t nclasses = p.classes.size();
  const std::size_t nchis = fam.family.size();

  for (std::uint32_t s = 0; s < nclasses; ++s) {
    const auto& cls = p.classes[s];
    if (cls.empty()) throw EmptyClassError(s);

    // One transform of the 0/1 indicator yields every needed correlation:
    // <chi_S, chi_T>_{X_s} = counts[S xor T] / |X_s|.
    const std::vector<long long> counts = wht_int64(p.indicator(s));
    const Rational inv_size = make_rational(1, static_cast<long>(cls.size()));

    RationalMatrix m(nchis, nchis);
    RationalVector gamma(nchis);
    for (std::size_t i = 0; i < nchis; ++i) {
      for (std::size_t j = 0; j < nchis; ++j)
        m(i, j) = Rational(static_cast<long>(counts[fam.family[i] ^ fam.family[j]])) *
                  inv_size;
      gamma[i] =
          Rational(static_cast<long>(counts[fam.family[i]])) * inv_size;
    }

    std::vector<int> f_vals(cls.size(), 1);  // f_s restricted to X_s is +1
    std::vector<std::vector<int>> chi_vals(nchis, std::vector<int>(cls.size()));
    for (std::size_t i = 0; i < nchis; ++i)
      for (std::size_t x = 0; x < cls.size(); ++x)
        chi_vals[i][x] = parity_char(fam.family[i], cls[x]);

    try {
      ZeroCorrelationResult res = zero_correlation_core(m, gamma, f_vals, chi_vals);
      fam.mu.push_back(std::move(res.mu));
      fam.certs.push_back(std::move(res.cert));
    } catch (const HypothesisViolatedError& e) {
      throw HypothesisViolatedError("class " + std::to_string(s) + ": " + e.which,
                                    e.margin);
    }
  }

  // Cross-class moment equality for every monomial of degree <= cutoff, the
  // equivalent formulation; both are required to hold.
  for (std::uint64_t mono : fam.monomials) {
    Rational common;
    for (std::uint32_t s = 0; s < nclasses; ++s) {
      Rational ex(0);
      const auto& cls = p.classes[s];
      for (std::size_t x = 0; x < cls.size(); ++x)
        if ((mono & ~static_cast<std::uint64_t>(cls[x])) == 0) ex += fam.mu[s][x];
      if (s == 0)
        common = ex;
      else if (ex != common)
        throw Error("internal: moment mismatch despite zero correlations");
    }
    fam.moments.push_back(common);
  }
  return fam;
}

Polynomial univariate_reduce(const Polynomial& poly,
                             const MomentMatchedFamily& fam) {
  const int n = fam.partition.w.n;
  const int k = fam.partition.w.k;
  if (poly.nvars() != n + 1)
    throw Error("reduction input must have variables (x_1..x_n, t)");
  if (poly.degree() > fam.cutoff) throw DegreeExceedsCutoffError();

  // Work in variables (x_1..x_n, s); x coordinates reduce multilinearly.
  std::vector<bool> binary(n + 1, true);
  binary[n] = false;

  Polynomial ell(n + 1);  // sum w_i x_i - s  (the 2^{-k-1} scale is applied per power)
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint32_t> e(n + 1, 0);
    e[i] = 1;
    ell.add_term(std::move(e),
                 Rational(static_cast<unsigned long>(fam.partition.w.weights[i])));
  }
  {
    std::vector<std::uint32_t> e(n + 1, 0);
    e[n] = 1;
    ell.add_term(std::move(e), -1);
  }

  std::uint32_t max_t_power = 0;
  for (const auto& [exps, c] : poly.terms())
    max_t_power = std::max(max_t_power, exps[n]);
  std::vector<Polynomial> ell_pow;
  ell_pow.emplace_back(n + 1);
  ell_pow[0].add_term(std::vector<std::uint32_t>(n + 1, 0), 1);
  for (std::uint32_t e = 1; e <= max_t_power; ++e)
    ell_pow.push_back(poly_mul(ell_pow[e - 1], ell, &binary));

  const Rational scale = pow2(-(k + 1));
  Polynomial substituted(n + 1);
  for (const auto& [exps, c] : poly.terms()) {
    const std::uint32_t e = exps[n];
    Polynomial mono(n + 1);
    std::vector<std::uint32_t> xe = exps;
    for (int j = 0; j < n; ++j) xe[j] = std::min(xe[j], 1u);
    xe[n] = 0;
    Rational coeff = c;
    for (std::uint32_t i = 0; i < e; ++i) coeff *= scale;
    mono.add_term(std::move(xe), coeff);
    substituted = substituted + poly_mul(mono, ell_pow[e], &binary);
  }

  // Replace every x-monomial by its class-independent expectation.
  std::vector<Rational> moment_of(std::size_t{1} << n, Rational(0));
  std::vector<bool> have(std::size_t{1} << n, false);
  for (std::size_t i = 0; i < fam.monomials.size(); ++i) {
    moment_of[fam.monomials[i]] = fam.moments[i];
    have[fam.monomials[i]] = true;
  }

  Polynomial reduced(1);
  for (const auto& [exps, c] : substituted.terms()) {
    std::uint64_t mask = 0;
    for (int j = 0; j < n; ++j)
      if (exps[j]) mask |= std::uint64_t{1} << j;
    if (!have[mask])
      throw Error("internal: substituted monomial above the cutoff");
    reduced.add_term({exps[static_cast<std::size_t>(n)]}, c * moment_of[mask]);
  }

  // Exact verification at every s in {+-1..+-2^k}: P(s) equals the direct
  // per-class expectation of poly(x, l(x,s)).
  const std::int64_t top = std::int64_t{1} << k;
  for (std::int64_t s = -top; s <= top; ++s) {
    if (s == 0) continue;
    std::vector<std::int64_t> spt{s};
    if (reduced.eval(spt) != reduction_expectation(fam, poly, s))
      throw Error("internal: univariate reduction identity failed");
  }
  return reduced;
}

Rational reduction_expectation(const MomentMatchedFamily& fam,
                               const Polynomial& poly, std::int64_t s) {
  const int n = fam.partition.w.n;
  const int k = fam.partition.w.k;
  if (poly.nvars() != n + 1)
    throw Error("reduction input must have variables (x_1..x_n, t)");
  const std::int64_t mod = std::int64_t{1} << (k + 1);
  const std::uint32_t residue =
      static_cast<std::uint32_t>(((s % mod) + mod) % mod);
  const auto& cls = fam.partition.classes[residue];
  Rational expect(0);
  for (std::size_t xi = 0; xi < cls.size(); ++xi) {
    const std::uint32_t x = cls[xi];
    std::int64_t wsum = 0;
    for (int j = 0; j < n; ++j)
      if (x >> j & 1) wsum += static_cast<std::int64_t>(fam.partition.w.weights[j]);
    const std::int64_t num = wsum - s;
    if (num % mod != 0) throw Error("internal: l(x,s) not an integer on the class");
    std::vector<std::int64_t> point(n + 1);
    for (int j = 0; j < n; ++j) point[j] = (x >> j) & 1;
    point[n] = num / mod;
    expect += fam.mu[residue][xi] * poly.eval(point);
  }
  return expect;
}

Halfspace build_hard_halfspace(int n, int k, std::uint64_t seed) {
  const WeightVector w = sample_weights(n, k, seed);
  Halfspace h;
  h.n = 2 * n;
  h.c0 = 1;
  h.coeffs.reserve(2 * n);
  for (int i = 0; i < n; ++i)
    h.coeffs.push_back(Int(2) * Int(static_cast<unsigned long>(w.weights[i])));
  const Int tail = Int(-1) * (Int(1) << (k + 2));
  for (int i = 0; i < n; ++i) h.coeffs.push_back(tail);
  return h;
}

BooleanFunction hard_halfspace_grid_function(const WeightVector& w) {
  Halfspace h;
  h.n = w.n + 1;
  h.c0 = 1;
  for (int i = 0; i < w.n; ++i)
    h.coeffs.push_back(Int(2) * Int(static_cast<unsigned long>(w.weights[i])));
  h.coeffs.push_back(Int(-1) * (Int(1) << (w.k + 2)));
  const PointSet domain =
      PointSet::cube(w.n).product(PointSet::box({{0, w.n}}));
  BooleanFunction f = halfspace_to_function(h, domain);
  f.set_name("hard-grid:" + std::to_string(w.n) + "," + std::to_string(w.k) +
             "," + std::to_string(w.seed));
  return f;
}

HardnessReport hardness_report(int n, int k, std::uint64_t seed, int d,
                               const HardnessOptions& options) {
  HardnessReport rep;
  rep.n = n;
  rep.k = k;
  rep.d = d;
  rep.seed = seed;
  rep.eps = options.eps ? *options.eps : make_rational(2 * k, n);
  rep.zeta = options.zeta;
  rep.tol = options.tol;
  rep.cutoff = options.cutoff ? *options.cutoff : k;

  const WeightVector w = sample_weights(n, k, seed);
  const ResidueClassPartition partition = build_partition(w);
  rep.stages.push_back({"partition", true, true,
                        std::to_string(partition.classes.size()) + " classes"});

  rep.spectrum = verify_spectrum_bounds(partition, rep.eps, rep.zeta);
  rep.stages.push_back({"spectrum", true, rep.spectrum.pass,
                        "worst deviation " + rat_to_string(rep.spectrum.worst)});

  MomentMatchedFamily fam;
  try {
    fam = build_moment_matched(partition, rep.cutoff);
    rep.moment_ok = true;
    rep.moment_detail = "moments matched through degree " +
                        std::to_string(rep.cutoff);
  } catch (const HypothesisViolatedError& e) {
    rep.moment_ok = false;
    rep.moment_detail = e.which;
  } catch (const EmptyClassError& e) {
    rep.moment_ok = false;
    rep.moment_detail = std::string("empty class ") + std::to_string(e.s);
  }
  rep.stages.push_back({"moment-match", true, rep.moment_ok, rep.moment_detail});

  if (rep.moment_ok && rep.reduction_trials >= 0) {
    rep.reduction_trials = options.reduction_trials;
    rep.reduction_ok = true;
    SplitMix64 rng(seed ^ 0xC0FFEEull);
    const int dmax = std::min(k, rep.cutoff);
    for (int trial = 0; trial < options.reduction_trials; ++trial) {
      Polynomial poly(n + 1);
      const int terms = 1 + static_cast<int>(rng.next_below(5));
      for (int t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> exps(n + 1, 0);
        int budget = dmax >= 0 ? static_cast<int>(rng.next_below(dmax + 1)) : 0;
        while (budget > 0) {
          const int var = static_cast<int>(rng.next_below(n + 1));
          exps[var] += 1;
          --budget;
        }
        poly.add_term(std::move(exps),
                      make_rational(rng.next_in(-9, 9), rng.next_in(1, 4)));
      }
      try {
        (void)univariate_reduce(poly, fam);  // throws on any exact mismatch
      } catch (const Error&) {
        rep.reduction_ok = false;
        break;
      }
    }
    rep.stages.push_back({"reduction", true, rep.reduction_ok,
                          std::to_string(options.reduction_trials) + " trials"});
    if (!rep.reduction_ok) rep.deterministic_ok = false;
  } else {
    rep.stages.push_back({"reduction", false, false, "skipped: no verified family"});
  }

  if (d > 0) {
    rep.grid_bracket = rplus_sign_grid(std::int64_t{1} << k, d, options.tol);
    rep.hard_bracket =
        rplus_bracket(hard_halfspace_grid_function(w), d, options.tol);
    const bool holds =
        rep.hard_bracket->lo >= rep.grid_bracket->lo - 2 * options.tol;
    rep.bracket_ok = holds;
    const bool theorem_applies = rep.moment_ok && d <= rep.cutoff && d <= k;
    rep.stages.push_back(
        {"bracket", true, holds || !theorem_applies,
         "lo(f)=" + rat_to_string(rep.hard_bracket->lo) +
             " lo(grid)=" + rat_to_string(rep.grid_bracket->lo) +
             (theorem_applies ? "" : " (outside theorem range)")});
    if (theorem_applies && !holds) rep.deterministic_ok = false;
  }

  if (options.run_converse) {
    const BooleanFunction f = hard_halfspace_grid_function(w);
    int chain = 0;
    for (int dd = 1; dd <= options.converse_max_d; ++dd) {
      const ApproxBracket b2 = rplus_bracket(f, 2 * dd, options.converse_tol);
      const ApproxBracket b4 = rplus_bracket(f, 4 * dd, options.converse_tol);
      if (b2.lo + b4.lo >= 1)
        chain = dd;
      else
        break;
    }
    rep.converse_chain_d = chain;
    rep.degthr_lower_bound = chain + 1;
    rep.stages.push_back({"converse-chain", true, true,
                          "degthr(f^f) >= " + std::to_string(chain + 1)});
  }

  return rep;
}

}  // namespace signdeg
