#include "signdeg/fourier.hpp"

namespace signdeg {

namespace {

void butterfly(std::vector<Rational>& v) {
  const std::size_t n = v.size();
  for (std::size_t len = 1; len < n; len <<= 1)
    for (std::size_t i = 0; i < n; i += len << 1)
      for (std::size_t j = i; j < i + len; ++j) {
        const Rational a = v[j];
        const Rational b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
}

void check_cube_size(int n) {
  if (n < 0 || n > 24) throw Error("transform supports 0 <= n <= 24");
}

}  // namespace

CubeTable to_table(const BooleanFunction& f) {
  if (!f.domain().is_cube()) throw Error("transform needs a full cube domain");
  CubeTable t;
  t.n = f.domain().cube_n();
  t.values.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) t.values[i] = f.value(i);
  return t;
}

FourierSpectrum wht(const CubeTable& f) {
  check_cube_size(f.n);
  if (f.values.size() != std::size_t{1} << f.n)
    throw Error("cube table has wrong size");
  FourierSpectrum spec;
  spec.n = f.n;
  spec.coeffs = f.values;
  butterfly(spec.coeffs);
  const Rational scale = pow2(-f.n);
  for (auto& c : spec.coeffs)
    if (sgn(c) != 0) c *= scale;
  return spec;
}

CubeTable synthesize(const FourierSpectrum& spectrum) {
  check_cube_size(spectrum.n);
  if (spectrum.coeffs.size() != std::size_t{1} << spectrum.n)
    throw Error("spectrum has wrong size");
  CubeTable t;
  t.n = spectrum.n;
  t.values = spectrum.coeffs;
  butterfly(t.values);
  return t;
}

std::vector<long long> wht_int64(std::vector<long long> values) {
  const std::size_t n = values.size();
  for (std::size_t len = 1; len < n; len <<= 1)
    for (std::size_t i = 0; i < n; i += len << 1)
      for (std::size_t j = i; j < i + len; ++j) {
        const long long a = values[j];
        const long long b = values[j + len];
        values[j] = a + b;
        values[j + len] = a - b;
      }
  return values;
}

Rational correlation(const ValuedFunction& f, const ValuedFunction& g,
                     const PointSet& restriction) {
  if (restriction.size() == 0) throw EmptySetError();
  Rational acc(0);
  for (std::size_t i = 0; i < restriction.size(); ++i) {
    const auto p = restriction.point(i);
    const auto fi = f.domain.find(p);
    const auto gi = g.domain.find(p);
    if (!fi || !gi) throw Error("restriction point outside a domain");
    acc += f.values[*fi] * g.values[*gi];
  }
  return acc / Rational(static_cast<unsigned long>(restriction.size()));
}

Rational correlation(const BooleanFunction& f, const BooleanFunction& g,
                     const PointSet& restriction) {
  if (restriction.size() == 0) throw EmptySetError();
  long long acc = 0;
  for (std::size_t i = 0; i < restriction.size(); ++i) {
    const auto p = restriction.point(i);
    const auto fi = f.domain().find(p);
    const auto gi = g.domain().find(p);
    if (!fi || !gi) throw Error("restriction point outside a domain");
    acc += f.value(*fi) * g.value(*gi);
  }
  return make_rational(acc, static_cast<long>(restriction.size()));
}

bool parseval_check(const CubeTable& f, const FourierSpectrum& spectrum) {
  if (f.n != spectrum.n) throw Error("dimension mismatch");
  Rational lhs(0);
  for (const auto& c : spectrum.coeffs)
    if (sgn(c) != 0) lhs += c * c;
  Rational rhs(0);
  for (const auto& v : f.values)
    if (sgn(v) != 0) rhs += v * v;
  rhs *= pow2(-f.n);
  return lhs == rhs;
}

}  // namespace signdeg
