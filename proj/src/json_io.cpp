#include "json_io.hpp"

#include <algorithm>

namespace fibra {

namespace {

Error shape_error(const std::string& what) { return Error(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw shape_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

int small_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw shape_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<std::uint64_t>())));
    return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  }
  throw shape_error("rational must be a \"num/den\" string or an integer");
}

Json to_json(const P1Point& p) {
  const P1Point n = p.normalized();
  return Json::array({to_json(n.u0), to_json(n.u1)});
}

P1Point p1_from_json(const Json& j) {
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "infinity")) return P1Point::infinity();
  if (j.is_array()) {
    if (j.size() != 2) throw shape_error("projective coordinate needs two entries");
    return P1Point::make(rational_from_json(j[0]), rational_from_json(j[1]));
  }
  return P1Point::affine(rational_from_json(j));
}

Json to_json(const SurfacePoint& P) {
  return Json{{"x", to_json(P.x)}, {"y", to_json(P.y)}, {"t", to_json(P.t)}};
}

SurfacePoint point_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 3) throw shape_error("point needs three coordinates");
    return {p1_from_json(j[0]), p1_from_json(j[1]), p1_from_json(j[2])};
  }
  return {p1_from_json(field(j, "x")), p1_from_json(field(j, "y")), p1_from_json(field(j, "t"))};
}

Json to_json(const Surface222& S) {
  Json coeffs = Json::array();
  for (int i = 0; i < 3; ++i)
    for (int jj = 0; jj < 3; ++jj)
      for (int k = 0; k < 3; ++k)
        if (S.coeff(i, jj, k) != 0) coeffs.push_back(Json::array({i, jj, k, to_json(S.coeff(i, jj, k))}));
  return Json{{"type", "surface222"}, {"coeffs", coeffs}};
}

Surface222 surface_from_json(const Json& j) {
  if (j.is_object() && j.contains("type") && j.at("type") != "surface222")
    throw shape_error("expected a surface222 document");
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw shape_error("coeffs must be an array");
  std::array<Rational, 27> c{};
  for (const Json& term : coeffs) {
    if (!term.is_array() || term.size() != 4) throw shape_error("coefficient entries are [i, j, k, \"n/d\"]");
    const int i = small_int(term[0], "exponent");
    const int jj = small_int(term[1], "exponent");
    const int k = small_int(term[2], "exponent");
    if (i < 0 || i > 2 || jj < 0 || jj > 2 || k < 0 || k > 2)
      throw Error(ErrorCode::InvalidSurface, "exponents must lie in 0..2");
    c[static_cast<std::size_t>(Surface222::index(i, jj, k))] += rational_from_json(term[3]);
  }
  return Surface222(c);
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term = Json::array();
    for (int v = 0; v < p.arity(); ++v) term.push_back(e[static_cast<std::size_t>(v)]);
    term.push_back(to_json(c));
    terms.push_back(std::move(term));
  }
  return terms;
}

Polynomial polynomial_from_json(const Json& j, int arity) {
  if (!j.is_array()) throw shape_error("polynomial must be an array of terms");
  Polynomial p(arity);
  for (const Json& term : j) {
    if (!term.is_array() || term.size() != static_cast<std::size_t>(arity) + 1)
      throw shape_error("term has the wrong number of exponents");
    Exponents e{0, 0, 0};
    for (int v = 0; v < arity; ++v) {
      const int ev = small_int(term[static_cast<std::size_t>(v)], "exponent");
      if (ev < 0) throw shape_error("negative exponent");
      e[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(ev);
    }
    p.add_term(e, rational_from_json(term[static_cast<std::size_t>(arity)]));
  }
  return p;
}

Json to_json(const BoundTable& table) {
  Json caps = Json::array();
  for (const PrimeCap& c : table.caps) caps.push_back(Json::array({c.p, c.exponent}));
  return Json{{"d", table.degree}, {"caps", caps}, {"B", table.bound.get_str()}, {"mazur", table.mazur}};
}

Json to_json(const OrderResult& o) {
  Json reductions = Json::array();
  for (const Reduction& r : o.reductions)
    reductions.push_back(Json{{"p", r.p}, {"group_order", r.group_order}, {"point_order", r.point_order}});
  Json j{{"axis", o.axis}, {"smooth", o.smooth}, {"kind", to_string(o.kind)}, {"fixed_point", o.fixed_point},
         {"reductions", reductions}};
  if (o.finite()) j["order"] = o.order;
  return j;
}

OrderResult order_from_json(const Json& j) {
  OrderResult o;
  o.axis = small_int(field(j, "axis"), "axis");
  o.smooth = field(j, "smooth").get<bool>();
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "finite") {
    o.kind = OrderResult::Kind::Finite;
    o.order = field(j, "order").get<std::uint64_t>();
  } else if (kind == "infinite") {
    o.kind = OrderResult::Kind::Infinite;
  } else if (kind == "undefined") {
    o.kind = OrderResult::Kind::Undefined;
  } else {
    throw shape_error("unknown order kind '" + kind + "'");
  }
  if (j.contains("fixed_point")) o.fixed_point = j.at("fixed_point").get<bool>();
  return o;
}

Json to_json(const ZMembership& z) {
  return Json{{"value", to_string(z.value)}, {"caveat", z.caveat}, {"reason", z.reason}, {"order", to_json(z.order)}};
}

Json to_json(const ExclusionEquations& eq) {
  Json gens = Json::array();
  for (const Polynomial& g : eq.generators) {
    // Only x (variable 0) and t (variable 2) occur.
    Json terms = Json::array();
    for (const auto& [e, c] : g.terms()) terms.push_back(Json::array({e[0], e[2], to_json(c)}));
    gens.push_back(std::move(terms));
  }
  return Json{{"axis", eq.axis},
              {"r", eq.r},
              {"variables", Json::array({"x", "t"})},
              {"generators", gens},
              {"degeneracy_loci", eq.degeneracy_loci},
              {"warnings", eq.warnings}};
}

Json to_json(const FiberComponent& C) {
  return Json{{"axis", C.axis},
              {"base", to_json(C.base)},
              {"factor", to_json(C.factor)},
              {"s_degree", C.s_degree},
              {"y_degree", C.y_degree},
              {"whole_fiber", C.whole_fiber},
              {"horizontal", C.horizontal()},
              {"description", describe(C)}};
}

FiberComponent component_from_json(const Json& j) {
  FiberComponent C;
  C.axis = small_int(field(j, "axis"), "axis");
  check_axis(C.axis);
  C.base = p1_from_json(field(j, "base"));
  C.factor = polynomial_from_json(field(j, "factor"), 3);
  C.s_degree = small_int(field(j, "s_degree"), "s_degree");
  C.y_degree = small_int(field(j, "y_degree"), "y_degree");
  if (j.contains("whole_fiber")) C.whole_fiber = j.at("whole_fiber").get<bool>();
  return C;
}

Json to_json(const ComponentCertificate& c) {
  Json j{{"component", to_json(c.component)},
         {"status", to_string(c.status)},
         {"candidates_tested", c.candidates_tested},
         {"reason", c.reason}};
  if (c.witness) {
    j["witness"] = to_json(*c.witness);
    j["witness_order"] = to_json(c.witness_order);
  }
  return j;
}

Json to_json(const ValidationReport& r) {
  Json lines = Json::array();
  for (const auto& [x0, t0] : r.vertical_lines) lines.push_back(Json{{"x", to_json(x0)}, {"t", to_json(t0)}});
  return Json{{"valid", r.valid}, {"failures", r.failures}, {"warnings", r.warnings}, {"vertical_lines", lines}};
}

Json analysis_report(const Surface222& S) {
  const ValidationReport report = S.validate();
  if (!report.valid) {
    std::string msg = "invalid surface:";
    for (const std::string& f : report.failures) msg += " " + f + ";";
    msg.pop_back();
    throw Error(ErrorCode::InvalidSurface, msg);
  }
  Json axes = Json::array();
  for (int axis = 1; axis <= 2; ++axis) {
    const Polynomial& delta = S.singular_locus(axis);
    const RationalFunction j = S.j_map(axis);
    const auto d = S.j_degree(axis);
    Json singular = Json::array();
    std::vector<Rational> roots = rational_roots(delta);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const Rational& r : roots) singular.push_back(to_json(P1Point::affine(r)));
    if (S.fiber_is_singular(axis, P1Point::infinity())) singular.push_back(to_json(P1Point::infinity()));
    axes.push_back(Json{{"axis", axis},
                        {"base", axis == 1 ? "t" : "x"},
                        {"fiber", Json::array({axis == 1 ? "x" : "t", "y"})},
                        {"delta", to_json(delta)},
                        {"delta_degree", delta.degree()},
                        {"j_map", Json{{"num", to_json(j.numerator())}, {"den", to_json(j.denominator())}}},
                        {"d", d ? Json(*d) : Json("infinity")},
                        {"isotrivial", !d.has_value()},
                        {"M", S.chi_degree(axis)},
                        {"rational_singular_fibers", singular}});
  }
  return Json{{"surface", to_json(S)}, {"validation", to_json(report)}, {"axes", axes}};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace fibra
