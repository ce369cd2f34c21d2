#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "signdeg/boolfn.hpp"
#include "signdeg/exactlp.hpp"

namespace signdeg {

class NonpositiveDenominatorError : public Error {
 public:
  explicit NonpositiveDenominatorError(std::vector<std::int64_t> point)
      : Error("denominator polynomial is not positive on the domain"),
        point(std::move(point)) {}
  std::vector<std::int64_t> point;
};

// Witness + Farkas certificates pinning the threshold degree from both
// sides, so consumers only ever need the checker, never the solver.
struct DegreeCertificate {
  std::string function_id;
  int degree = 0;
  Polynomial witness;
  // lower_bound_certs[d] proves the degree-d sign-representation LP
  // infeasible, for d = 0 .. degree-1.
  std::vector<RationalVector> lower_bound_certs;
};

struct DensityResult {
  std::string function_id;
  int cap = 0;
  bool found = false;
  std::vector<std::uint64_t> family;  // parity masks, set iff found
  RationalVector lambda;              // witness coefficients, aligned with family
};

// LP feasibility formulation of "some degree-<=d polynomial p has
// f(x) p(x) >= 1 everywhere" (>= 1 rather than > 0 is WLOG by scaling on a
// finite domain). Exposed so certificates can be re-verified independently.
LinearProgram sign_representation_lp(const BooleanFunction& f, int d);

// Least degree admitting a sign representation; domain capped at 2^14 points.
DegreeCertificate threshold_degree(const BooleanFunction& f);

// Full certificate re-verification with no LP solving: witness evaluation
// plus Farkas checks against freshly built constraint matrices.
bool verify_degree_certificate(const BooleanFunction& f,
                               const DegreeCertificate& cert);

// Can sum_{S in family} lambda_S chi_S sign-represent f on its cube?
FeasibilityOutcome density_feasible(const BooleanFunction& f,
                                    const std::vector<std::uint64_t>& family);

// Exhaustive search over families ordered by cardinality then lexicographic
// bitmask tuple; the first feasible family is minimal by construction.
// Requires a cube domain with n <= 8. `jobs` parallelizes within the fixed
// enumeration order, so results do not depend on the thread count.
DensityResult threshold_density(const BooleanFunction& f, int cap, int jobs = 1);

// f^KP(x,y,z) = f(..., x_i if z_i = 0 else y_i, ...) on {0,1}^{3n};
// coordinates are laid out as (x, y, z).
BooleanFunction krause_pudlak(const BooleanFunction& f);

// q1 q2 + p1 q2 + p2 q1 on the product domain. Requires q1 > 0 on X and
// q2 > 0 on Y (checked exhaustively); when the rational approximation errors
// sum below 1 pointwise, the result sign-represents f AND g.
Polynomial brs_conjunction_polynomial(const Polynomial& p1, const Polynomial& q1,
                                      const PointSet& x, const Polynomial& p2,
                                      const Polynomial& q2, const PointSet& y);

}  // namespace signdeg
