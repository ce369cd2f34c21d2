#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "signdeg/rational.hpp"

namespace signdeg {

class SingularMatrixError : public Error {
 public:
  SingularMatrixError() : Error("matrix has no unique solution") {}
};

class SizeLimitError : public Error {
 public:
  explicit SizeLimitError(const std::string& what) : Error(what) {}
};

using RationalVector = std::vector<Rational>;

// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalVector matvec(const RationalMatrix& a, const RationalVector& x);

// Solves A x = b exactly by fraction-free (Bareiss) elimination after
// clearing row denominators. Pivot choice is the first nonzero entry in
// column order, so results are bit-for-bit reproducible.
// Throws SingularMatrixError when no unique solution exists.
RationalVector solve_linear_system(const RationalMatrix& a,
                                   const RationalVector& b);

// |A_ii| > sum_{j != i} |A_ij| for every row.
bool is_strictly_diagonally_dominant(const RationalMatrix& a);

// Feasibility system: every row demands a_i . v >= b_i, variables free.
struct LinearProgram {
  RationalMatrix a;
  RationalVector b;

  std::size_t num_constraints() const { return a.rows(); }
  std::size_t num_variables() const { return a.cols(); }
};

// Either a point satisfying every constraint exactly, or a Farkas witness
// y >= 0 with y^T A = 0 and y^T b > 0 proving there is none.
struct FeasibilityOutcome {
  bool feasible = false;
  RationalVector point;    // set iff feasible
  RationalVector farkas;   // set iff infeasible; one entry per constraint
};

// Independent certificate checkers; the solver re-runs these before
// returning, and tests use them as the oracle.
bool verify_feasible_point(const LinearProgram& lp, const RationalVector& v);
bool verify_farkas_certificate(const LinearProgram& lp,
                               const RationalVector& y);

// Phase-1 simplex over exact rationals with Bland's pivoting rule.
// Feasibility only; no objective. The search runs on the Farkas alternative
// system (A^T y = 0, b^T y = 1, y >= 0), whose tableau has one row per
// variable rather than one per constraint, so point counts in the hundreds
// of thousands stay affordable. Duality recovers the feasible point when
// the alternative system is infeasible.
FeasibilityOutcome check_feasible(const LinearProgram& lp);

}  // namespace signdeg
