#pragma once

#include <json.hpp>

#include "signdeg/boolfn.hpp"
#include "signdeg/fourier.hpp"
#include "signdeg/hardhs.hpp"
#include "signdeg/rapprox.hpp"
#include "signdeg/signrep.hpp"

// JSON schemas for every persisted artifact. Rationals are always "num/den"
// strings; big integers are decimal strings; sparse vectors are
// [index, value] pairs with zeros omitted. nlohmann::json orders keys, so
// serialization is byte-deterministic.
namespace signdeg {

using Json = nlohmann::json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json vector_to_json(const RationalVector& v);         // dense
Json sparse_vector_to_json(const RationalVector& v);  // [index, "num/den"] pairs
RationalVector sparse_vector_from_json(const Json& j, std::size_t size);

Json to_json(const PointSet& ps);
PointSet point_set_from_json(const Json& j);

Json to_json(const BooleanFunction& f);
BooleanFunction boolean_function_from_json(const Json& j);

Json to_json(const Halfspace& h);
Halfspace halfspace_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const FourierSpectrum& s);  // zeros omitted, ascending mask

Json to_json(const DegreeCertificate& c);
Json to_json(const DensityResult& r);
Json to_json(const ApproxBracket& b);
Json to_json(const SpectrumReport& r);
Json to_json(const MomentMatchedFamily& fam);
Json to_json(const HardnessReport& r);

}  // namespace signdeg
