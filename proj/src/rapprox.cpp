#include "signdeg/rapprox.hpp"

#include <utility>

namespace signdeg {

namespace {

// Rows come in per-point triples: sandwich lower, sandwich upper, q >= 1.
LinearProgram assemble_rplus_lp(const BooleanFunction& f,
                                const RationalMatrix& vals,
                                const Rational& eps) {
  const std::size_t npts = f.size();
  const std::size_t nb = vals.cols();
  const Rational lo_side = 1 - eps;
  const Rational hi_side = 1 + eps;

  LinearProgram lp;
  lp.a = RationalMatrix(3 * npts, 2 * nb);
  lp.b.assign(3 * npts, Rational(0));
  for (std::size_t i = 0; i < npts; ++i) {
    const int fi = f.value(i);
    for (std::size_t j = 0; j < nb; ++j) {
      const Rational& m = vals(i, j);
      if (sgn(m) == 0) continue;
      // f p - (1-eps) q >= 0
      lp.a(3 * i, j) = fi == 1 ? m : -m;
      lp.a(3 * i, nb + j) = -lo_side * m;
      // (1+eps) q - f p >= 0
      lp.a(3 * i + 1, j) = fi == 1 ? -m : m;
      lp.a(3 * i + 1, nb + j) = hi_side * m;
      // q >= 1
      lp.a(3 * i + 2, nb + j) = m;
    }
    lp.b[3 * i + 2] = 1;
  }
  return lp;
}

struct WitnessPair {
  Polynomial p, q;
};

WitnessPair extract_witness(const PointSet& domain,
                            const std::vector<std::vector<std::uint32_t>>& basis,
                            const RationalVector& point) {
  WitnessPair w{Polynomial(domain.dim()), Polynomial(domain.dim())};
  for (std::size_t j = 0; j < basis.size(); ++j) {
    w.p.add_term(basis[j], point[j]);
    w.q.add_term(basis[j], point[basis.size() + j]);
  }
  return w;
}

void check_eps_range(const Rational& eps) {
  if (sgn(eps) < 0 || eps >= 1) throw Error("eps must satisfy 0 <= eps < 1");
}

std::string id_or_blank(const BooleanFunction& f) {
  return f.name().empty() ? "fn" : f.name();
}

}  // namespace

LinearProgram rplus_lp(const BooleanFunction& f, int d, const Rational& eps) {
  check_eps_range(eps);
  const auto basis = monomial_basis(f.domain(), d);
  return assemble_rplus_lp(f, monomial_values(f.domain(), basis), eps);
}

FeasibilityOutcome rplus_feasible(const BooleanFunction& f, int d,
                                  const Rational& eps) {
  return check_feasible(rplus_lp(f, d, eps));
}

std::optional<RationalWitness> rplus_witness(const BooleanFunction& f, int d,
                                             const Rational& eps) {
  check_eps_range(eps);
  const auto basis = monomial_basis(f.domain(), d);
  const FeasibilityOutcome out =
      check_feasible(assemble_rplus_lp(f, monomial_values(f.domain(), basis), eps));
  if (!out.feasible) return std::nullopt;
  auto w = extract_witness(f.domain(), basis, out.point);
  return RationalWitness{std::move(w.p), std::move(w.q)};
}

ApproxBracket rplus_bracket(const BooleanFunction& f, int d, const Rational& tol) {
  if (sgn(tol) <= 0) throw Error("bracket tolerance must be positive");
  const auto basis = monomial_basis(f.domain(), d);
  const RationalMatrix vals = monomial_values(f.domain(), basis);

  ApproxBracket out;
  out.function_id = id_or_blank(f);
  out.degree = d;
  out.tol = tol;

  const FeasibilityOutcome exact =
      check_feasible(assemble_rplus_lp(f, vals, Rational(0)));
  if (exact.feasible) {
    out.lo = out.hi = 0;
    auto w = extract_witness(f.domain(), basis, exact.point);
    out.p = std::move(w.p);
    out.q = std::move(w.q);
  } else {
    out.lo = 0;
    out.hi = 1;
    out.lo_certificate = exact.farkas;
    // eps = 1 is always feasible: p = 0, q = 1 has pointwise error exactly 1
    out.p = Polynomial(f.domain().dim());
    out.q = Polynomial(f.domain().dim());
    out.q.add_term(std::vector<std::uint32_t>(f.domain().dim(), 0), 1);

    while (out.hi - out.lo > tol) {
      const Rational mid = (out.lo + out.hi) / 2;
      const FeasibilityOutcome probe =
          check_feasible(assemble_rplus_lp(f, vals, mid));
      if (probe.feasible) {
        out.hi = mid;
        auto w = extract_witness(f.domain(), basis, probe.point);
        out.p = std::move(w.p);
        out.q = std::move(w.q);
      } else {
        out.lo = mid;
        out.lo_certificate = probe.farkas;
      }
    }
  }

  if (!verify_bracket(f, out))
    throw Error("internal: bracket failed independent verification");
  return out;
}

BooleanFunction sign_grid_function(std::int64_t n) {
  Halfspace h;
  h.n = 1;
  h.c0 = 0;
  h.coeffs = {Int(1)};
  BooleanFunction f = halfspace_to_function(h, PointSet::signed_range(n));
  f.set_name("sign-grid:" + std::to_string(n));
  return f;
}

ApproxBracket rplus_sign_grid(std::int64_t n, int d, const Rational& tol) {
  if (n < 1) throw Error("sign grid needs N >= 1");
  if (d < 0) throw Error("degree must be nonnegative");
  return rplus_bracket(sign_grid_function(n), d, tol);
}

RdegResult rdeg(const BooleanFunction& f, const Rational& eps, int dmax) {
  if (sgn(eps) <= 0 || eps >= 1) throw Error("rdeg needs 0 < eps < 1");
  RdegResult res;
  for (int d = 0; d <= dmax; ++d) {
    if (check_feasible(rplus_lp(f, d, eps)).feasible) {
      res.degree = d;
      return res;
    }
  }
  res.exceeded = true;
  return res;
}

bool rplus_relation_check(const BooleanFunction& f, int d, const Rational& tol) {
  const ApproxBracket at_d = rplus_bracket(f, d, tol);
  const ApproxBracket at_2d = rplus_bracket(f, 2 * d, tol);
  return at_2d.hi <= at_d.hi + 2 * tol;
}

bool verify_bracket(const BooleanFunction& f, const ApproxBracket& bracket) {
  if (sgn(bracket.lo) < 0 || bracket.lo > bracket.hi || bracket.hi > 1)
    return false;
  if (bracket.hi - bracket.lo > bracket.tol) return false;
  if (bracket.p.degree() > bracket.degree || bracket.q.degree() > bracket.degree)
    return false;

  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto pt = f.domain().point(i);
    const Rational qv = bracket.q.eval(pt);
    if (qv < 1) return false;
    const Rational pv = bracket.p.eval(pt);
    // |f q - p| <= hi q  <=>  |f - p/q| <= hi
    if (abs(f.value(i) * qv - pv) > bracket.hi * qv) return false;
  }

  if (bracket.lo_certificate.empty())
    return sgn(bracket.lo) == 0 && sgn(bracket.hi) == 0;
  return verify_farkas_certificate(rplus_lp(f, bracket.degree, bracket.lo),
                                   bracket.lo_certificate);
}

}  // namespace signdeg
