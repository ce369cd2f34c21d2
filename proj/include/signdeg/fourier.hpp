#pragma once

#include <cstdint>
#include <vector>

#include "signdeg/boolfn.hpp"
#include "signdeg/rational.hpp"

namespace signdeg {

// Rational-valued function on the full cube {0,1}^n, indexed by point mask.
struct CubeTable {
  int n = 0;
  std::vector<Rational> values;
};

// Dense spectrum: coefficient per subset mask S of {1..n}.
// Spectra produced by wht satisfy Parseval exactly:
//   sum_S f_hat(S)^2 = 2^{-n} sum_x f(x)^2.
struct FourierSpectrum {
  int n = 0;
  std::vector<Rational> coeffs;

  const Rational& at(std::uint64_t s_mask) const { return coeffs[s_mask]; }
};

CubeTable to_table(const BooleanFunction& f);

// f_hat(S) = 2^{-n} sum_x f(x) chi_S(x), by the in-place butterfly in
// O(n 2^n) exact operations. Requires n <= 24.
FourierSpectrum wht(const CubeTable& f);

// Inverse: f(x) = sum_S f_hat(S) chi_S(x) (the same butterfly, unnormalized).
CubeTable synthesize(const FourierSpectrum& spectrum);

// Unnormalized transform sum_x f(x) chi_S(x) over int64, for 0/1 and +-1
// tables where intermediate values stay below 2^{n} * max|f|.
std::vector<long long> wht_int64(std::vector<long long> values);

// Exact mean of f*g over the points of restriction; EmptySetError when
// restriction is empty, Error when a point is missing from either domain.
struct ValuedFunction {
  PointSet domain;
  std::vector<Rational> values;
};
Rational correlation(const ValuedFunction& f, const ValuedFunction& g,
                     const PointSet& restriction);
Rational correlation(const BooleanFunction& f, const BooleanFunction& g,
                     const PointSet& restriction);

bool parseval_check(const CubeTable& f, const FourierSpectrum& spectrum);

}  // namespace signdeg
