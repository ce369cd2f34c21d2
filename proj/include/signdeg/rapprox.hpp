#pragma once

#include <optional>
#include <string>

#include "signdeg/boolfn.hpp"
#include "signdeg/exactlp.hpp"

namespace signdeg {

// Certified interval around R+(f, d). Only brackets are ever reported: the
// infimum need not be attained, so a point estimate would be unsound.
// Invariants (re-verified by verify_bracket):
//   0 <= lo <= hi <= 1, hi - lo <= tol,
//   q >= 1 on the domain and |f - p/q| <= hi at every point,
//   the feasibility LP at eps = lo is infeasible per lo_certificate
//   (empty certificate only in the exact case lo = hi = 0).
struct ApproxBracket {
  std::string function_id;
  int degree = 0;
  Rational lo, hi, tol;
  Polynomial p, q;
  RationalVector lo_certificate;
};

// The LP behind R+(f,d) <= eps, in sandwich form: for every domain point,
//   (1-eps) q(x) <= f(x) p(x) <= (1+eps) q(x)  and  q(x) >= 1,
// over the coefficients of p and q in the degree-d monomial basis
// (q >= 1 instead of q > 0 is WLOG by positive rescaling).
LinearProgram rplus_lp(const BooleanFunction& f, int d, const Rational& eps);

// Feasibility of the eps-approximation LP; 0 <= eps < 1.
FeasibilityOutcome rplus_feasible(const BooleanFunction& f, int d,
                                  const Rational& eps);

// The (p, q) pair from a feasible eps-LP, or nothing when infeasible.
struct RationalWitness {
  Polynomial p, q;
};
std::optional<RationalWitness> rplus_witness(const BooleanFunction& f, int d,
                                             const Rational& eps);

// Bisection on eps over [0,1]; feasible eps form an upward-closed set, so
// bisection is sound. Certificates are re-verified before returning.
ApproxBracket rplus_bracket(const BooleanFunction& f, int d, const Rational& tol);

// Sign function on {+-1,...,+-N}.
BooleanFunction sign_grid_function(std::int64_t n);
ApproxBracket rplus_sign_grid(std::int64_t n, int d, const Rational& tol);

// Least d <= dmax whose eps-LP is feasible. This equals min{d : R+(f,d)<=eps}
// whenever that infimum is attained at eps, and upper-bounds it otherwise
// (`attainment_caveat` records the proviso).
struct RdegResult {
  int degree = -1;
  bool exceeded = false;
  bool attainment_caveat = true;
};
RdegResult rdeg(const BooleanFunction& f, const Rational& eps, int dmax);

// hi(2d) <= hi(d) + 2 tol, the R+ half of the R(f,d) sandwich.
bool rplus_relation_check(const BooleanFunction& f, int d, const Rational& tol);

// Independent checker: witness error bound and Farkas certificate are
// validated exactly against freshly built LPs.
bool verify_bracket(const BooleanFunction& f, const ApproxBracket& bracket);

}  // namespace signdeg
