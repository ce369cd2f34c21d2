#include "signdeg/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <utility>

namespace signdeg {

namespace {

std::uint32_t total_degree(const std::vector<std::uint32_t>& exps) {
  std::uint32_t d = 0;
  for (auto e : exps) d += e;
  return d;
}

}  // namespace

// --- PointSet ---

PointSet PointSet::cube(int n) {
  if (n < 0 || n > 30) throw Error("cube dimension out of range");
  PointSet ps;
  ps.dim_ = n;
  ps.cube_n_ = n;
  ps.binary_.assign(n, true);
  return ps;
}

PointSet PointSet::from_points(int dim,
                               std::vector<std::vector<std::int64_t>> pts) {
  PointSet ps;
  ps.dim_ = dim;
  ps.binary_.assign(dim, true);
  auto flat = std::make_shared<std::vector<std::int64_t>>();
  flat->reserve(pts.size() * dim);
  auto index = std::make_shared<std::map<std::vector<std::int64_t>, std::size_t>>();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (static_cast<int>(pts[i].size()) != dim)
      throw Error("point dimension mismatch");
    if (!index->emplace(pts[i], i).second) throw Error("duplicate point");
    for (int j = 0; j < dim; ++j) {
      if (pts[i][j] != 0 && pts[i][j] != 1) ps.binary_[j] = false;
      flat->push_back(pts[i][j]);
    }
  }
  ps.flat_ = std::move(flat);
  ps.index_ = std::move(index);
  return ps;
}

PointSet PointSet::box(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& ranges) {
  // Mixed-radix order with the first coordinate as the least significant digit.
  std::size_t total = 1;
  for (const auto& [lo, hi] : ranges) {
    if (lo > hi) throw Error("empty box range");
    total *= static_cast<std::size_t>(hi - lo + 1);
  }
  std::vector<std::vector<std::int64_t>> ordered(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<std::int64_t> p(ranges.size());
    std::size_t rem = idx;
    for (std::size_t j = 0; j < ranges.size(); ++j) {
      const std::size_t width = static_cast<std::size_t>(ranges[j].second - ranges[j].first + 1);
      p[j] = ranges[j].first + static_cast<std::int64_t>(rem % width);
      rem /= width;
    }
    ordered[idx] = std::move(p);
  }
  return from_points(static_cast<int>(ranges.size()), std::move(ordered));
}

PointSet PointSet::signed_range(std::int64_t n) {
  if (n < 1) throw Error("signed range needs n >= 1");
  std::vector<std::vector<std::int64_t>> pts;
  for (std::int64_t v = -n; v <= n; ++v)
    if (v != 0) pts.push_back({v});
  return from_points(1, std::move(pts));
}

std::size_t PointSet::size() const {
  if (is_cube()) return std::size_t{1} << cube_n_;
  return flat_ ? flat_->size() / std::max(dim_, 1) : 0;
}

std::int64_t PointSet::coord(std::size_t idx, int j) const {
  if (is_cube()) return (idx >> j) & 1;
  return (*flat_)[idx * dim_ + j];
}

std::vector<std::int64_t> PointSet::point(std::size_t idx) const {
  std::vector<std::int64_t> p(dim_);
  for (int j = 0; j < dim_; ++j) p[j] = coord(idx, j);
  return p;
}

std::optional<std::size_t> PointSet::find(
    const std::vector<std::int64_t>& p) const {
  if (static_cast<int>(p.size()) != dim_) return std::nullopt;
  if (is_cube()) {
    std::size_t mask = 0;
    for (int j = 0; j < dim_; ++j) {
      if (p[j] != 0 && p[j] != 1) return std::nullopt;
      mask |= static_cast<std::size_t>(p[j]) << j;
    }
    return mask;
  }
  auto it = index_->find(p);
  if (it == index_->end()) return std::nullopt;
  return it->second;
}

PointSet PointSet::product(const PointSet& other) const {
  if (is_cube() && other.is_cube()) return cube(cube_n_ + other.cube_n_);
  std::vector<std::vector<std::int64_t>> pts;
  pts.reserve(size() * other.size());
  for (std::size_t o = 0; o < other.size(); ++o) {
    const auto right = other.point(o);
    for (std::size_t i = 0; i < size(); ++i) {
      auto p = point(i);
      p.insert(p.end(), right.begin(), right.end());
      pts.push_back(std::move(p));
    }
  }
  return from_points(dim_ + other.dim_, std::move(pts));
}

bool PointSet::operator==(const PointSet& other) const {
  if (dim_ != other.dim_ || size() != other.size()) return false;
  if (is_cube() && other.is_cube()) return cube_n_ == other.cube_n_;
  for (std::size_t i = 0; i < size(); ++i)
    for (int j = 0; j < dim_; ++j)
      if (coord(i, j) != other.coord(i, j)) return false;
  return true;
}

// --- BooleanFunction ---

BooleanFunction::BooleanFunction(PointSet domain, const std::vector<int>& values,
                                 std::string name)
    : domain_(std::move(domain)), name_(std::move(name)) {
  if (values.size() != domain_.size())
    throw Error("value table length does not match domain");
  bits_.assign((values.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == -1)
      bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else if (values[i] != 1)
      throw Error("Boolean function values must be +-1");
  }
}

BooleanFunction BooleanFunction::from_bits(PointSet domain,
                                           std::vector<std::uint64_t> bits,
                                           std::string name) {
  BooleanFunction f;
  f.domain_ = std::move(domain);
  const std::size_t n = f.domain_.size();
  if (bits.size() != (n + 63) / 64) throw Error("bit table length mismatch");
  if (n & 63) bits.back() &= (std::uint64_t{1} << (n & 63)) - 1;
  f.bits_ = std::move(bits);
  f.name_ = std::move(name);
  return f;
}

bool BooleanFunction::operator==(const BooleanFunction& other) const {
  return domain_ == other.domain_ && bits_ == other.bits_;
}

// --- Halfspace ---

Int Halfspace::eval(const std::vector<std::int64_t>& point) const {
  if (static_cast<int>(point.size()) != n) throw Error("halfspace dimension mismatch");
  Int acc = c0;
  for (int j = 0; j < n; ++j)
    if (point[j] != 0) acc += coeffs[j] * Int(static_cast<long>(point[j]));
  return acc;
}

BooleanFunction halfspace_to_function(const Halfspace& h, const PointSet& domain) {
  if (domain.dim() != h.n) throw Error("halfspace dimension mismatch");
  const std::size_t size = domain.size();
  std::vector<std::uint64_t> bits((size + 63) / 64, 0);

  // int64 fast path when no partial sum can overflow
  bool small = h.c0.fits_slong_p();
  std::int64_t maxc = 1;
  for (int j = 0; j < h.n && small; ++j) {
    small = h.coeffs[j].fits_slong_p();
    for (std::size_t i = 0; i < size && small; i += std::max<std::size_t>(1, size / 7))
      maxc = std::max(maxc, std::abs(domain.coord(i, j)));
  }
  if (small) {
    // conservative overflow bound using the largest coordinate seen anywhere
    maxc = 1;
    if (!domain.is_cube())
      for (std::size_t i = 0; i < size; ++i)
        for (int j = 0; j < h.n; ++j)
          maxc = std::max(maxc, std::abs(domain.coord(i, j)));
    long double bound = std::llabs(h.c0.get_si());
    for (int j = 0; j < h.n; ++j)
      bound += static_cast<long double>(std::llabs(h.coeffs[j].get_si())) * maxc;
    if (bound >= 4.0e18L) small = false;
  }

  if (small) {
    std::vector<std::int64_t> c(h.n);
    for (int j = 0; j < h.n; ++j) c[j] = h.coeffs[j].get_si();
    const std::int64_t c0 = h.c0.get_si();
    for (std::size_t i = 0; i < size; ++i) {
      std::int64_t acc = c0;
      for (int j = 0; j < h.n; ++j) {
        const std::int64_t x = domain.coord(i, j);
        if (x != 0) acc += c[j] * x;
      }
      if (acc == 0) throw VanishingFormError(domain.point(i));
      if (acc < 0) bits[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
  } else {
    for (std::size_t i = 0; i < size; ++i) {
      const Int acc = h.eval(domain.point(i));
      const int s = sgn(acc);
      if (s == 0) throw VanishingFormError(domain.point(i));
      if (s < 0) bits[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
  }
  return BooleanFunction::from_bits(domain, std::move(bits));
}

BooleanFunction conjunction(const BooleanFunction& f, const BooleanFunction& g) {
  const PointSet dom = f.domain().product(g.domain());
  const std::size_t nf = f.size();
  std::vector<std::uint64_t> bits((dom.size() + 63) / 64, 0);
  for (std::size_t jg = 0; jg < g.size(); ++jg) {
    if (!g.is_true(jg)) continue;
    for (std::size_t jf = 0; jf < nf; ++jf) {
      if (!f.is_true(jf)) continue;
      const std::size_t idx = jg * nf + jf;  // sign(1 + f + g) = -1 only here
      bits[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    }
  }
  return BooleanFunction::from_bits(dom, std::move(bits));
}

BooleanFunction majority(int n) {
  if (n < 1) throw Error("majority needs n >= 1");
  const PointSet dom = PointSet::cube(n);
  std::vector<std::uint64_t> bits((dom.size() + 63) / 64, 0);
  for (std::size_t mask = 0; mask < dom.size(); ++mask)
    if (2 * std::popcount(mask) > n)
      bits[mask >> 6] |= std::uint64_t{1} << (mask & 63);
  return BooleanFunction::from_bits(dom, std::move(bits),
                                    "maj:" + std::to_string(n));
}

BooleanFunction parity_function(int n, std::uint64_t s_mask) {
  const PointSet dom = PointSet::cube(n);
  std::vector<std::uint64_t> bits((dom.size() + 63) / 64, 0);
  for (std::size_t mask = 0; mask < dom.size(); ++mask)
    if (parity_char(s_mask, mask) == -1)
      bits[mask >> 6] |= std::uint64_t{1} << (mask & 63);
  return BooleanFunction::from_bits(dom, std::move(bits));
}

// --- monomials ---

namespace {

void gen_exponents(const PointSet& domain, int var, std::uint32_t remaining,
                   std::vector<std::uint32_t>& current,
                   std::vector<std::vector<std::uint32_t>>& out) {
  const int m = domain.dim();
  if (var == m) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const std::uint32_t cap =
      domain.coord_binary(var) ? std::min(1u, remaining) : remaining;
  for (std::uint32_t e = cap + 1; e-- > 0;) {
    current[var] = e;
    gen_exponents(domain, var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> monomial_basis(const PointSet& domain,
                                                       int d) {
  if (d < 0) throw Error("monomial basis needs d >= 0");
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current(domain.dim(), 0);
  for (int g = 0; g <= d; ++g) {
    const std::size_t before = out.size();
    gen_exponents(domain, 0, static_cast<std::uint32_t>(g), current, out);
    if (out.size() == before && g > 0) break;  // higher degrees are empty too
  }
  return out;
}

RationalMatrix monomial_values(
    const PointSet& domain, const std::vector<std::vector<std::uint32_t>>& basis) {
  RationalMatrix m(domain.size(), basis.size());
  std::vector<std::uint32_t> max_exp(domain.dim(), 0);
  bool all_multilinear = true;
  for (const auto& exps : basis)
    for (int j = 0; j < domain.dim(); ++j) {
      max_exp[j] = std::max(max_exp[j], exps[j]);
      if (exps[j] > 1) all_multilinear = false;
    }

  if (domain.is_cube() && all_multilinear) {
    std::vector<std::uint64_t> masks(basis.size(), 0);
    for (std::size_t c = 0; c < basis.size(); ++c)
      for (int j = 0; j < domain.dim(); ++j)
        if (basis[c][j]) masks[c] |= std::uint64_t{1} << j;
    for (std::size_t i = 0; i < domain.size(); ++i)
      for (std::size_t c = 0; c < basis.size(); ++c)
        m(i, c) = (masks[c] & ~static_cast<std::uint64_t>(i)) ? 0 : 1;
    return m;
  }

  std::vector<std::vector<Int>> powers(domain.dim());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (int j = 0; j < domain.dim(); ++j) {
      powers[j].assign(max_exp[j] + 1, Int(1));
      const Int x(static_cast<long>(domain.coord(i, j)));
      for (std::uint32_t e = 1; e <= max_exp[j]; ++e)
        powers[j][e] = powers[j][e - 1] * x;
    }
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Int v(1);
      for (int j = 0; j < domain.dim(); ++j)
        if (basis[c][j]) v *= powers[j][basis[c][j]];
      m(i, c) = Rational(v);
    }
  }
  return m;
}

// --- Polynomial ---

bool Polynomial::GrlexLess::operator()(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b) const {
  const std::uint32_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint32_t ea = i < a.size() ? a[i] : 0;
    const std::uint32_t eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb;  // larger leading exponent comes first
  }
  return false;
}

void Polynomial::add_term(std::vector<std::uint32_t> exps, const Rational& coeff) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw Error("exponent vector length mismatch");
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(exps), coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) {
      terms_.erase(it);
      recompute_degree();
      return;
    }
  }
  degree_ = std::max(degree_, static_cast<int>(total_degree(it->first)));
}

void Polynomial::recompute_degree() {
  degree_ = terms_.empty()
                ? -1
                : static_cast<int>(total_degree(terms_.rbegin()->first));
}

Rational Polynomial::coeff(const std::vector<std::uint32_t>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::eval(const std::vector<std::int64_t>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw Error("evaluation point dimension mismatch");
  Rational acc(0);
  for (const auto& [exps, c] : terms_) {
    Int v(1);
    for (int j = 0; j < nvars_; ++j)
      if (exps[j]) {
        Int p;
        const Int base(static_cast<long>(point[j]));
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), exps[j]);
        v *= p;
      }
    acc += c * Rational(v);
  }
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw Error("polynomial arity mismatch");
  Polynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw Error("polynomial arity mismatch");
  Polynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out(nvars_);
  if (sgn(c) == 0) return out;
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return nvars_ == other.nvars_ && terms_ == other.terms_;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b,
                    const std::vector<bool>* binary) {
  if (a.nvars() != b.nvars()) throw Error("polynomial arity mismatch");
  Polynomial out(a.nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      std::vector<std::uint32_t> e(a.nvars());
      for (int j = 0; j < a.nvars(); ++j) {
        e[j] = ea[j] + eb[j];
        if (binary && (*binary)[j] && e[j] > 1) e[j] = 1;
      }
      out.add_term(std::move(e), ca * cb);
    }
  return out;
}

Polynomial poly_shift_vars(const Polynomial& p, int offset, int new_nvars) {
  if (offset + p.nvars() > new_nvars) throw Error("variable shift out of range");
  Polynomial out(new_nvars);
  for (const auto& [e, c] : p.terms()) {
    std::vector<std::uint32_t> ne(new_nvars, 0);
    for (int j = 0; j < p.nvars(); ++j) ne[offset + j] = e[j];
    out.add_term(std::move(ne), c);
  }
  return out;
}

Polynomial interpolate_univariate(
    const std::vector<std::pair<Rational, Rational>>& samples) {
  const std::size_t n = samples.size();
  if (n == 0) throw Error("interpolation needs at least one sample");
  // Newton divided differences
  std::vector<Rational> coef(n);
  std::vector<Rational> work(n);
  for (std::size_t i = 0; i < n; ++i) work[i] = samples[i].second;
  coef[0] = work[0];
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      const Rational dx = samples[i + level].first - samples[i].first;
      if (sgn(dx) == 0) throw Error("duplicate interpolation node");
      work[i] = (work[i + 1] - work[i]) / dx;
    }
    coef[level] = work[0];
  }
  Polynomial p(1);
  Polynomial basis(1);
  basis.add_term({0}, 1);
  for (std::size_t level = 0; level < n; ++level) {
    p = p + basis * coef[level];
    Polynomial lin(1);
    lin.add_term({1}, 1);
    lin.add_term({0}, -samples[level].first);
    basis = poly_mul(basis, lin);
  }
  return p;
}

Polynomial symmetrize_polynomial(const Polynomial& phi, int n) {
  if (phi.nvars() != n) throw Error("symmetrization arity mismatch");
  if (phi.degree() > n) throw Error("symmetrization needs degree <= n");
  std::vector<Rational> orbit_sum(static_cast<std::size_t>(std::max(phi.degree(), 0)) + 1,
                                  Rational(0));
  for (const auto& [e, c] : phi.terms()) {
    for (auto exp : e)
      if (exp > 1) throw Error("symmetrization needs a multilinear polynomial");
    orbit_sum[total_degree(e)] += c;
  }
  // sum_j orbit_sum[j] / binom(n,j) * binom(t,j), built as polynomials in t
  Polynomial p(1);
  Polynomial binom_t(1);  // binom(t, j), starting at j = 0
  binom_t.add_term({0}, 1);
  for (std::size_t j = 0; j < orbit_sum.size(); ++j) {
    if (j > 0) {
      Polynomial lin(1);
      lin.add_term({1}, 1);
      lin.add_term({0}, -Rational(static_cast<long>(j - 1)));
      binom_t = poly_mul(binom_t, lin) * make_rational(1, static_cast<long>(j));
    }
    if (sgn(orbit_sum[j]) == 0) continue;
    Int nj;
    mpz_bin_uiui(nj.get_mpz_t(), n, static_cast<unsigned long>(j));
    p = p + binom_t * (orbit_sum[j] / Rational(nj));
  }
  return p;
}

BooleanFunction block_symmetrize(const BooleanFunction& f,
                                 const std::vector<int>& block_sizes) {
  const PointSet& dom = f.domain();
  int total = 0;
  for (int b : block_sizes) {
    if (b < 1) throw Error("block sizes must be positive");
    total += b;
  }
  if (!dom.is_cube() || dom.cube_n() != total)
    throw Error("block symmetrization needs a full cube domain");

  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  std::size_t grid_size = 1;
  for (int b : block_sizes) {
    ranges.push_back({0, b});
    grid_size *= static_cast<std::size_t>(b) + 1;
  }

  std::vector<int> values(grid_size, 0);
  std::vector<std::uint64_t> first_seen(grid_size, 0);
  for (std::uint64_t mask = 0; mask < dom.size(); ++mask) {
    std::size_t gidx = 0, radix = 1;
    int off = 0;
    for (int b : block_sizes) {
      const std::uint64_t block =
          (mask >> off) & ((std::uint64_t{1} << b) - 1);
      gidx += radix * std::popcount(block);
      radix *= static_cast<std::size_t>(b) + 1;
      off += b;
    }
    const int v = f.value(mask);
    if (values[gidx] == 0) {
      values[gidx] = v;
      first_seen[gidx] = mask;
    } else if (values[gidx] != v) {
      throw NotBlockSymmetricError(first_seen[gidx], mask);
    }
  }
  return BooleanFunction(PointSet::box(ranges), values);
}

bool binary_entropy_bound_check(int n, int k) {
  if (n < 1 || k < 0 || 2 * k > n) throw Error("entropy bound needs 0 <= k <= n/2");
  Int sum(0), binom;
  for (int i = 0; i <= k; ++i) {
    mpz_bin_uiui(binom.get_mpz_t(), n, i);
    sum += binom;
  }
  // 2^{H(k/n) n} = n^n / (k^k (n-k)^{n-k}) with 0^0 = 1
  Int lhs = sum, rhs;
  Int t;
  mpz_ui_pow_ui(t.get_mpz_t(), k, k);
  lhs *= t;
  mpz_ui_pow_ui(t.get_mpz_t(), n - k, n - k);
  lhs *= t;
  mpz_ui_pow_ui(rhs.get_mpz_t(), n, n);
  return lhs <= rhs;
}

std::vector<std::uint64_t> subsets_up_to(int n, int max_size, bool include_empty) {
  std::vector<std::uint64_t> out;
  if (include_empty) out.push_back(0);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (int c = 1; c <= std::min(max_size, n); ++c) {
    std::uint64_t v = (std::uint64_t{1} << c) - 1;
    while (v < limit) {
      out.push_back(v);
      const std::uint64_t t = v | (v - 1);  // Gosper's hack
      v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
  }
  return out;
}

}  // namespace signdeg
