#include "signdeg/signrep.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <thread>

namespace signdeg {

namespace {

std::string function_id_of(const BooleanFunction& f) {
  if (!f.name().empty()) return f.name();
  // stable content hash (FNV-1a over dimension and values)
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(f.domain().dim()));
  for (std::size_t i = 0; i < f.size(); ++i)
    mix(f.value(i) == -1 ? 0x9e3779b9ull + i : i);
  char buf[32];
  std::snprintf(buf, sizeof buf, "fn:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

Polynomial polynomial_from_coeffs(
    int nvars, const std::vector<std::vector<std::uint32_t>>& basis,
    const RationalVector& coeffs, std::size_t offset = 0) {
  Polynomial p(nvars);
  for (std::size_t j = 0; j < basis.size(); ++j)
    p.add_term(basis[j], coeffs[offset + j]);
  return p;
}

}  // namespace

LinearProgram sign_representation_lp(const BooleanFunction& f, int d) {
  const auto basis = monomial_basis(f.domain(), d);
  const RationalMatrix vals = monomial_values(f.domain(), basis);
  LinearProgram lp;
  lp.a = RationalMatrix(f.size(), basis.size());
  lp.b.assign(f.size(), Rational(1));
  for (std::size_t i = 0; i < f.size(); ++i) {
    const int fi = f.value(i);
    for (std::size_t j = 0; j < basis.size(); ++j)
      lp.a(i, j) = fi == 1 ? vals(i, j) : -vals(i, j);
  }
  return lp;
}

DegreeCertificate threshold_degree(const BooleanFunction& f) {
  if (f.size() > (std::size_t{1} << 14))
    throw SizeLimitError("threshold_degree domain exceeds 2^14 points");
  if (f.size() == 0) throw EmptySetError();

  DegreeCertificate cert;
  cert.function_id = function_id_of(f);
  for (int d = 0;; ++d) {
    const auto basis = monomial_basis(f.domain(), d);
    const FeasibilityOutcome out = check_feasible(sign_representation_lp(f, d));
    if (out.feasible) {
      cert.degree = d;
      cert.witness = polynomial_from_coeffs(f.domain().dim(), basis, out.point);
      return cert;
    }
    cert.lower_bound_certs.push_back(out.farkas);
    // On any finite integer domain some finite degree interpolates f itself,
    // so this loop terminates; the cap only guards against internal bugs.
    if (d > 4 * f.domain().dim() + static_cast<int>(f.size()))
      throw Error("internal: threshold degree search failed to terminate");
  }
}

bool verify_degree_certificate(const BooleanFunction& f,
                               const DegreeCertificate& cert) {
  if (cert.witness.degree() > cert.degree) return false;
  if (static_cast<int>(cert.lower_bound_certs.size()) != cert.degree)
    return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Rational v = cert.witness.eval(f.domain().point(i));
    if (f.value(i) * v < 1) return false;
  }
  for (int d = 0; d < cert.degree; ++d)
    if (!verify_farkas_certificate(sign_representation_lp(f, d),
                                   cert.lower_bound_certs[d]))
      return false;
  return true;
}

FeasibilityOutcome density_feasible(const BooleanFunction& f,
                                    const std::vector<std::uint64_t>& family) {
  if (!f.domain().is_cube()) throw Error("density needs a cube domain");
  if (family.empty()) throw Error("density family must be nonempty");
  LinearProgram lp;
  lp.a = RationalMatrix(f.size(), family.size());
  lp.b.assign(f.size(), Rational(1));
  for (std::size_t x = 0; x < f.size(); ++x) {
    const int fx = f.value(x);
    for (std::size_t j = 0; j < family.size(); ++j)
      lp.a(x, j) = fx * parity_char(family[j], x);
  }
  return check_feasible(lp);
}

namespace {

// Fixed-order enumeration of index combinations, shared by the sequential
// and parallel paths.
bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < m) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

DensityResult threshold_density(const BooleanFunction& f, int cap, int jobs) {
  if (!f.domain().is_cube()) throw Error("density needs a cube domain");
  const int n = f.domain().cube_n();
  if (n > 8) throw SizeLimitError("threshold_density supports n <= 8");
  if (cap < 1) throw Error("density cap must be >= 1");
  jobs = std::max(1, jobs);

  DensityResult res;
  res.function_id = function_id_of(f);
  res.cap = cap;

  const std::size_t num_masks = std::size_t{1} << n;

  for (int card = 1; card <= cap; ++card) {
    if (static_cast<std::size_t>(card) > num_masks) break;
    std::vector<std::size_t> idx(card);
    for (int i = 0; i < card; ++i) idx[i] = i;

    bool more = true;
    while (more) {
      // fixed-size block of families in enumeration order
      std::vector<std::vector<std::uint64_t>> block;
      const std::size_t block_target = static_cast<std::size_t>(jobs) * 64;
      while (more && block.size() < block_target) {
        std::vector<std::uint64_t> fam(card);
        for (int i = 0; i < card; ++i) fam[i] = idx[i];
        block.push_back(std::move(fam));
        more = next_combination(idx, num_masks);
      }

      std::vector<FeasibilityOutcome> outs(block.size());
      if (jobs == 1 || block.size() == 1) {
        for (std::size_t i = 0; i < block.size(); ++i)
          outs[i] = density_feasible(f, block[i]);
      } else {
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
          for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= block.size()) return;
            outs[i] = density_feasible(f, block[i]);
          }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
      }

      for (std::size_t i = 0; i < block.size(); ++i)
        if (outs[i].feasible) {
          res.found = true;
          res.family = block[i];
          res.lambda = outs[i].point;
          return res;
        }
    }
  }
  res.found = false;
  return res;
}

BooleanFunction krause_pudlak(const BooleanFunction& f) {
  if (!f.domain().is_cube()) throw Error("Krause-Pudlak needs a cube domain");
  const int n = f.domain().cube_n();
  if (3 * n > 24) throw SizeLimitError("Krause-Pudlak supports n <= 8");
  const PointSet dom = PointSet::cube(3 * n);
  const std::uint64_t low = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> bits((dom.size() + 63) / 64, 0);
  for (std::uint64_t m = 0; m < dom.size(); ++m) {
    const std::uint64_t x = m & low;
    const std::uint64_t y = (m >> n) & low;
    const std::uint64_t z = (m >> (2 * n)) & low;
    const std::uint64_t selector = (x & ~z) | (y & z);
    if (f.value(selector) == -1) bits[m >> 6] |= std::uint64_t{1} << (m & 63);
  }
  std::string name = f.name().empty() ? "" : "kp:" + f.name();
  return BooleanFunction::from_bits(dom, std::move(bits), std::move(name));
}

Polynomial brs_conjunction_polynomial(const Polynomial& p1, const Polynomial& q1,
                                      const PointSet& x, const Polynomial& p2,
                                      const Polynomial& q2, const PointSet& y) {
  if (p1.nvars() != x.dim() || q1.nvars() != x.dim() ||
      p2.nvars() != y.dim() || q2.nvars() != y.dim())
    throw Error("polynomial arity does not match its domain");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(q1.eval(x.point(i))) <= 0)
      throw NonpositiveDenominatorError(x.point(i));
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(q2.eval(y.point(i))) <= 0)
      throw NonpositiveDenominatorError(y.point(i));

  const int m = x.dim() + y.dim();
  const Polynomial p1w = poly_shift_vars(p1, 0, m);
  const Polynomial q1w = poly_shift_vars(q1, 0, m);
  const Polynomial p2w = poly_shift_vars(p2, x.dim(), m);
  const Polynomial q2w = poly_shift_vars(q2, x.dim(), m);
  return poly_mul(q1w, q2w) + poly_mul(p1w, q2w) + poly_mul(p2w, q1w);
}

}  // namespace signdeg
