#pragma once

// JSON interchange. Rationals are "num/den" strings; integers inside JSON
// documents are also accepted on input.

#include <json.hpp>

#include "exclusion.hpp"
#include "torsion_bounds.hpp"

namespace fibra {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const P1Point& p);
// ["u0","u1"], a single "n/d" string or number, or "inf".
P1Point p1_from_json(const Json& j);

Json to_json(const SurfacePoint& P);
SurfacePoint point_from_json(const Json& j);

Json to_json(const Surface222& S);
Surface222 surface_from_json(const Json& j);

// [[e0, (e1, e2,) "n/d"], ...] in ascending term order.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, int arity);

Json to_json(const BoundTable& table);
Json to_json(const OrderResult& o);
OrderResult order_from_json(const Json& j);
Json to_json(const ZMembership& z);
Json to_json(const ExclusionEquations& eq);
Json to_json(const FiberComponent& C);
FiberComponent component_from_json(const Json& j);
Json to_json(const ComponentCertificate& c);
Json to_json(const ValidationReport& r);

// Validation plus the invariants of both fibrations. InvalidSurface error,
// listing the failed checks, when validation fails.
Json analysis_report(const Surface222& S);

// Parse with a Parse error code on malformed text.
Json parse_json(std::string_view text);

}  // namespace fibra
