#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "signdeg/exactlp.hpp"
#include "signdeg/rational.hpp"

namespace signdeg {

class VanishingFormError : public Error {
 public:
  explicit VanishingFormError(std::vector<std::int64_t> point)
      : Error("linear form vanishes on a domain point"), point(std::move(point)) {}
  std::vector<std::int64_t> point;
};

class NotBlockSymmetricError : public Error {
 public:
  NotBlockSymmetricError(std::uint64_t a, std::uint64_t b)
      : Error("function is not constant on block weight classes"),
        witness_a(a),
        witness_b(b) {}
  std::uint64_t witness_a, witness_b;  // cube masks with equal weight tuples
};

class EmptySetError : public Error {
 public:
  EmptySetError() : Error("operation on an empty point set") {}
};

// Finite ordered set of distinct points in Z^m. Full cubes {0,1}^n are
// tagged and never materialized: point index == bit mask, bit j-1 <-> x_j.
// Cartesian products index with the left factor varying fastest, which keeps
// products of cubes cube-tagged with the left factor in the low bits.
class PointSet {
 public:
  PointSet() = default;

  static PointSet cube(int n);
  static PointSet from_points(int dim, std::vector<std::vector<std::int64_t>> pts);
  // {lo_1..hi_1} x ... x {lo_k..hi_k}, first coordinate fastest.
  static PointSet box(const std::vector<std::pair<std::int64_t, std::int64_t>>& ranges);
  // {-N,...,-1, 1,...,N} in ascending order.
  static PointSet signed_range(std::int64_t n);

  std::size_t size() const;
  int dim() const { return dim_; }
  bool is_cube() const { return cube_n_ >= 0; }
  int cube_n() const { return cube_n_; }

  std::int64_t coord(std::size_t idx, int j) const;
  std::vector<std::int64_t> point(std::size_t idx) const;
  std::optional<std::size_t> find(const std::vector<std::int64_t>& p) const;
  // True when every point has 0/1 in coordinate j (monomials then reduce
  // multilinearly in that coordinate).
  bool coord_binary(int j) const { return binary_[j]; }

  PointSet product(const PointSet& other) const;

  bool operator==(const PointSet& other) const;

 private:
  int dim_ = 0;
  int cube_n_ = -1;                  // >= 0 iff full cube
  std::vector<bool> binary_;
  std::shared_ptr<const std::vector<std::int64_t>> flat_;  // size*dim, row-major
  std::shared_ptr<const std::map<std::vector<std::int64_t>, std::size_t>> index_;
};

// Boolean function as a +-1 value per domain point, bit-packed
// (set bit = value -1). Convention throughout: -1 encodes "true".
class BooleanFunction {
 public:
  BooleanFunction() = default;
  BooleanFunction(PointSet domain, const std::vector<int>& values,
                  std::string name = "");
  static BooleanFunction from_bits(PointSet domain, std::vector<std::uint64_t> bits,
                                   std::string name = "");

  const PointSet& domain() const { return domain_; }
  std::size_t size() const { return domain_.size(); }
  int value(std::size_t idx) const {
    return (bits_[idx >> 6] >> (idx & 63)) & 1 ? -1 : 1;
  }
  bool is_true(std::size_t idx) const { return value(idx) == -1; }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool operator==(const BooleanFunction& other) const;

 private:
  PointSet domain_;
  std::vector<std::uint64_t> bits_;
  std::string name_;
};

// sign(c0 + sum c_i x_i); the paper's half-integer offsets are stored with
// every coefficient doubled so the form stays integral.
struct Halfspace {
  int n = 0;
  Int c0;
  std::vector<Int> coeffs;  // c_1..c_n

  Int eval(const std::vector<std::int64_t>& point) const;
};

// Sparse polynomial over Q in `nvars` variables, keyed by exponent vector in
// graded-lex order (within a degree, larger leading exponents first).
class Polynomial {
 public:
  struct GrlexLess {
    bool operator()(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) const;
  };
  using TermMap = std::map<std::vector<std::uint32_t>, Rational, GrlexLess>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }  // -1 for the zero polynomial
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Accumulates; zero coefficients are never stored.
  void add_term(std::vector<std::uint32_t> exps, const Rational& coeff);
  Rational coeff(const std::vector<std::uint32_t>& exps) const;

  Rational eval(const std::vector<std::int64_t>& point) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;

  bool operator==(const Polynomial& other) const;

 private:
  void recompute_degree();

  int nvars_ = 0;
  int degree_ = -1;
  TermMap terms_;
};

// Product with optional multilinear reduction: exponents of coordinates
// flagged in `binary` are clamped to 1 (an identity on {0,1}-valued points).
Polynomial poly_mul(const Polynomial& a, const Polynomial& b,
                    const std::vector<bool>* binary = nullptr);
// Relabels variables into a wider space: variable i becomes offset + i.
Polynomial poly_shift_vars(const Polynomial& p, int offset, int new_nvars);
// Unique interpolant of degree < #samples through (t, value) pairs.
Polynomial interpolate_univariate(
    const std::vector<std::pair<Rational, Rational>>& samples);

// --- operations ---

BooleanFunction halfspace_to_function(const Halfspace& h, const PointSet& domain);

// (f AND g)(x,y) = sign(1 + f(x) + g(y)) on the product domain; -1 is true.
BooleanFunction conjunction(const BooleanFunction& f, const BooleanFunction& g);

// -1 iff x_1+...+x_n > n/2, on the full cube.
BooleanFunction majority(int n);

// chi_S with S given as a bit mask; x as a cube point mask.
inline int parity_char(std::uint64_t s_mask, std::uint64_t x_mask) {
  return __builtin_parityll(s_mask & x_mask) ? -1 : 1;
}
// chi_S as a BooleanFunction on the full cube.
BooleanFunction parity_function(int n, std::uint64_t s_mask);

// All exponent vectors of total degree <= d over the domain's coordinates,
// multilinear in binary coordinates, in graded-lex order.
std::vector<std::vector<std::uint32_t>> monomial_basis(const PointSet& domain,
                                                       int d);

// Values of each basis monomial at each point: entry (point, monomial).
RationalMatrix monomial_values(const PointSet& domain,
                               const std::vector<std::vector<std::uint32_t>>& basis);

// Univariate p of the same degree with E_{sigma}[phi(sigma x)] = p(|x|):
// each degree-j orbit averages to binom(|x|,j)/binom(n,j).
Polynomial symmetrize_polynomial(const Polynomial& phi, int n);

// Collapses a function on {0,1}^(n_1+...+n_k) that depends only on the block
// Hamming weights to its grid form on {0..n_1} x ... x {0..n_k}.
// The constancy precondition is verified exhaustively.
BooleanFunction block_symmetrize(const BooleanFunction& f,
                                 const std::vector<int>& block_sizes);

// sum_{i<=k} binom(n,i) <= 2^{H(k/n) n}; the right side equals
// n^n / (k^k (n-k)^(n-k)) exactly, so the comparison is pure integers.
bool binary_entropy_bound_check(int n, int k);

// All masks over {1..n} with popcount <= max_size, ordered by cardinality
// then numeric value. Set include_empty for the empty set up front.
std::vector<std::uint64_t> subsets_up_to(int n, int max_size, bool include_empty);

}  // namespace signdeg
