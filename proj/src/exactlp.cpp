#include "signdeg/exactlp.hpp"

#include <cstddef>
#include <utility>

namespace signdeg {

RationalMatrix::RationalMatrix(
    std::initializer_list<std::initializer_list<Rational>> init) {
  rows_ = init.size();
  cols_ = rows_ == 0 ? 0 : init.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw Error("ragged matrix initializer");
    for (const auto& v : row) data_.push_back(v);
  }
}

RationalVector matvec(const RationalMatrix& a, const RationalVector& x) {
  if (x.size() != a.cols()) throw Error("matvec dimension mismatch");
  RationalVector out(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0) out[i] += a(i, j) * x[j];
  return out;
}

RationalVector solve_linear_system(const RationalMatrix& a,
                                   const RationalVector& b) {
  if (a.rows() != a.cols()) throw Error("solve requires a square matrix");
  const std::size_t n = a.rows();
  if (b.size() != n) throw Error("solve dimension mismatch");
  if (n == 0) return {};

  // Augment [A | b] and clear denominators row by row; Bareiss then stays in
  // integers with exact divisions.
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    Int lcm(1);
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(i, j).get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), b[i].get_den_mpz_t());
    for (std::size_t j = 0; j <= n; ++j) {
      const Rational& src = j < n ? a(i, j) : b[i];
      m[i][j] = src.get_num() * (lcm / src.get_den());
    }
  }

  Int prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    // First exactly nonzero entry in column order.
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError();
    if (pivot != k) std::swap(m[pivot], m[k]);

    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }

  RationalVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
    x[i] = acc / Rational(m[i][i]);
  }
  return x;
}

bool is_strictly_diagonally_dominant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw Error("dominance test requires square matrix");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational off(0);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (j != i) off += abs(a(i, j));
    if (abs(a(i, i)) <= off) return false;
  }
  return true;
}

bool verify_feasible_point(const LinearProgram& lp, const RationalVector& v) {
  if (v.size() != lp.num_variables()) return false;
  for (std::size_t i = 0; i < lp.num_constraints(); ++i) {
    Rational acc(0);
    for (std::size_t j = 0; j < lp.num_variables(); ++j)
      if (sgn(lp.a(i, j)) != 0) acc += lp.a(i, j) * v[j];
    if (acc < lp.b[i]) return false;
  }
  return true;
}

bool verify_farkas_certificate(const LinearProgram& lp,
                               const RationalVector& y) {
  if (y.size() != lp.num_constraints()) return false;
  for (const Rational& yi : y)
    if (sgn(yi) < 0) return false;
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    Rational acc(0);
    for (std::size_t i = 0; i < lp.num_constraints(); ++i)
      if (sgn(y[i]) != 0) acc += y[i] * lp.a(i, j);
    if (sgn(acc) != 0) return false;
  }
  Rational yb(0);
  for (std::size_t i = 0; i < lp.num_constraints(); ++i)
    if (sgn(y[i]) != 0) yb += y[i] * lp.b[i];
  return sgn(yb) > 0;
}

namespace {

// Dense phase-1 tableau for the alternative system
//   A^T y = 0,  b^T y = 1,  y >= 0.
// Rows: one per LP variable plus one for b. Columns: one per LP constraint,
// then one artificial per row, then the right-hand side. The RHS is
// (0,...,0,1), already nonnegative, so the artificial basis starts feasible.
class AlternativeSystemTableau {
 public:
  explicit AlternativeSystemTableau(const LinearProgram& lp)
      : nvars_(lp.num_variables()),
        ncons_(lp.num_constraints()),
        rows_(nvars_ + 1),
        cols_(ncons_ + rows_ + 1) {
    constexpr std::size_t kMaxCells = 60'000'000;
    if (rows_ * cols_ > kMaxCells)
      throw SizeLimitError("LP tableau exceeds the size limit");

    tab_.assign(rows_, RationalVector(cols_, Rational(0)));
    rc_.assign(cols_, Rational(0));
    basis_.resize(rows_);

    for (std::size_t c = 0; c < ncons_; ++c) {
      for (std::size_t r = 0; r < nvars_; ++r) tab_[r][c] = lp.a(c, r);
      tab_[nvars_][c] = lp.b[c];
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      tab_[r][ncons_ + r] = 1;
      basis_[r] = ncons_ + r;
    }
    tab_[nvars_][cols_ - 1] = 1;  // rhs

    // Reduced costs under the all-artificial basis (cost vector: 1 on
    // artificials, 0 elsewhere); rc rhs cell holds minus the objective.
    for (std::size_t j = 0; j + 1 < cols_; ++j) {
      if (j >= ncons_) continue;  // artificials start at reduced cost 0
      Rational acc(0);
      for (std::size_t r = 0; r < rows_; ++r) acc += tab_[r][j];
      rc_[j] = -acc;
    }
    rc_[cols_ - 1] = -1;
  }

  // Runs Bland-rule simplex to optimality; returns the optimal objective.
  Rational minimize() {
    for (;;) {
      std::size_t enter = cols_ - 1;
      for (std::size_t j = 0; j + 1 < cols_; ++j)
        if (sgn(rc_[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == cols_ - 1) break;

      std::size_t leave = rows_;
      Rational best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (sgn(tab_[r][enter]) <= 0) continue;
        Rational ratio = tab_[r][cols_ - 1] / tab_[r][enter];
        if (leave == rows_ || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows_)
        throw Error("internal: phase-1 objective unbounded below");
      pivot(leave, enter);
    }
    return -rc_[cols_ - 1];
  }

  // Basic solution of the alternative system: y per LP constraint.
  RationalVector structural_solution() const {
    RationalVector y(ncons_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
      if (basis_[r] < ncons_) y[basis_[r]] = tab_[r][cols_ - 1];
    return y;
  }

  // Simplex multipliers read off the artificial columns: z_r = 1 - rc of
  // artificial r. At a positive optimum these certify z^T M <= 0, which
  // dualizes back to a feasible point of the original inequalities.
  RationalVector dual_multipliers() const {
    RationalVector z(rows_);
    for (std::size_t r = 0; r < rows_; ++r) z[r] = 1 - rc_[ncons_ + r];
    return z;
  }

 private:
  void pivot(std::size_t r, std::size_t e) {
    const Rational inv = 1 / tab_[r][e];
    for (auto& v : tab_[r])
      if (sgn(v) != 0) v *= inv;
    tab_[r][e] = 1;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn(tab_[i][e]) == 0) continue;
      const Rational f = tab_[i][e];
      RationalVector& row = tab_[i];
      const RationalVector& prow = tab_[r];
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(prow[j]) != 0) row[j] -= f * prow[j];
      row[e] = 0;
    }
    if (sgn(rc_[e]) != 0) {
      const Rational f = rc_[e];
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(tab_[r][j]) != 0) rc_[j] -= f * tab_[r][j];
      rc_[e] = 0;
    }
    basis_[r] = e;
  }

  std::size_t nvars_, ncons_, rows_, cols_;
  std::vector<RationalVector> tab_;
  RationalVector rc_;
  std::vector<std::size_t> basis_;
};

}  // namespace

FeasibilityOutcome check_feasible(const LinearProgram& lp) {
  if (lp.b.size() != lp.num_constraints())
    throw Error("LP bound vector length mismatch");

  FeasibilityOutcome out;
  if (lp.num_constraints() == 0) {
    out.feasible = true;
    out.point.assign(lp.num_variables(), Rational(0));
    return out;
  }

  AlternativeSystemTableau tableau(lp);
  const Rational optimum = tableau.minimize();

  if (sgn(optimum) == 0) {
    out.feasible = false;
    out.farkas = tableau.structural_solution();
    if (!verify_farkas_certificate(lp, out.farkas))
      throw Error("internal: Farkas certificate failed verification");
    return out;
  }

  const RationalVector z = tableau.dual_multipliers();
  const Rational& t = z.back();
  if (sgn(t) <= 0) throw Error("internal: nonpositive phase-1 dual");
  out.feasible = true;
  out.point.resize(lp.num_variables());
  for (std::size_t j = 0; j < lp.num_variables(); ++j)
    out.point[j] = -z[j] / t;
  if (!verify_feasible_point(lp, out.point))
    throw Error("internal: feasible point failed verification");
  return out;
}

}  // namespace signdeg
