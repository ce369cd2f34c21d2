#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace signdeg {

// Exact arbitrary-precision scalars. GMP keeps mpq_class canonical
// (denominator > 0, gcd(num, den) = 1) across all arithmetic, which is the
// invariant everything downstream relies on.
using Int = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Construct num/den in canonical form.
inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Int(num), Int(den));
}

// 2^e for any integer e (negative exponents give dyadic fractions).
inline Rational pow2(long e) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? make_rational(1, 1) / Rational(p) : Rational(p);
}

inline int sign_of(const Rational& r) { return sgn(r); }

inline Rational rat_abs(const Rational& r) { return abs(r); }

// Largest integer <= r.
inline Int rat_floor(const Rational& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Int rat_ceil(const Rational& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// Serialized form used by every JSON/CSV surface: always "num/den".
inline std::string rat_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "a", "a/b", and "2^-t" / "2^t" (the command-line forms).
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw Error("empty rational literal");
  if (s.rfind("2^", 0) == 0) {
    try {
      return pow2(std::stol(s.substr(2)));
    } catch (const std::exception&) {
      throw Error("bad exponent in rational literal: " + s);
    }
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
  if (r.get_den() == 0) throw Error("zero denominator in rational literal: " + s);
  r.canonicalize();
  return r;
}

}  // namespace signdeg
