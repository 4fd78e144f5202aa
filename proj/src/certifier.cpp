#include "certifier.hpp"

#include <algorithm>
#include <set>

#include "diagonal.hpp"

namespace fibra {

const char* to_string(Verdict::Outcome o) { return o == Verdict::Outcome::Dense ? "Dense" : "Inconclusive"; }

Json to_json(const Verdict& v) {
  return Json{{"outcome", to_string(v.outcome)}, {"rule", v.rule},         {"subject", v.subject},
              {"evidence", v.evidence},          {"caveats", v.caveats},   {"blocking", v.blocking}};
}

Verdict verdict_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "verdict must be an object");
  Verdict v;
  const std::string outcome = j.value("outcome", "");
  if (outcome == "Dense") {
    v.outcome = Verdict::Outcome::Dense;
  } else if (outcome == "Inconclusive") {
    v.outcome = Verdict::Outcome::Inconclusive;
  } else {
    throw Error(ErrorCode::Parse, "unknown verdict outcome '" + outcome + "'");
  }
  v.rule = j.value("rule", "");
  if (!j.contains("subject") || !j.contains("evidence") || !j.at("evidence").is_array())
    throw Error(ErrorCode::Parse, "verdict needs a subject and an evidence array");
  v.subject = j.at("subject");
  v.evidence = j.at("evidence");
  if (j.contains("caveats")) v.caveats = j.at("caveats").get<std::vector<std::string>>();
  if (j.contains("blocking")) v.blocking = j.at("blocking").get<std::vector<std::string>>();
  return v;
}

int mu_factor(const Rational& j0) {
  if (j0 == 1728) return 4;
  if (j0 == 0) return 6;
  return 2;
}

const char* to_string(ThresholdMode m) { return m == ThresholdMode::Min ? "min" : "sum"; }

ThresholdMode threshold_mode_from_string(const std::string& s) {
  if (s == "min" || s == "notefficient") return ThresholdMode::Min;
  if (s == "sum" || s == "efficienttwo") return ThresholdMode::Sum;
  throw Error(ErrorCode::InvalidArgument, "threshold mode must be 'min' or 'sum'");
}

Integer threshold_value(ThresholdMode mode, const Integer& d1, const Integer& M1, const Integer& d2,
                        const Integer& M2, const Integer& nK) {
  if (nK < 0 || d1 < 0 || d2 < 0 || M1 < 0 || M2 < 0)
    throw Error(ErrorCode::InvalidArgument, "threshold data must be nonnegative");
  const Integer a = d1 * M1;
  const Integer b = d2 * M2;
  return mode == ThresholdMode::Min ? Integer(nK * (a < b ? a : b)) : Integer(nK * (a + b));
}

namespace {

Json order_fact(const SurfacePoint& P, const OrderResult& o) {
  Json j = to_json(o);
  j["fact"] = "class_order";
  j["point"] = to_json(P);
  return j;
}

Json component_json(const ComponentCertificate& cert) {
  Json j{{"fact", "component"}, {"axis", cert.component.axis}, {"component", to_json(cert.component)},
         {"status", to_string(cert.status)}};
  return j;
}

Json witness_fact(const ComponentCertificate& cert) {
  return Json{{"fact", "witness"},
              {"axis", cert.component.axis},
              {"component", to_json(cert.component)},
              {"point", to_json(*cert.witness)},
              {"order", to_json(cert.witness_order)}};
}

std::string order_phrase(const OrderResult& o) {
  if (!o.smooth) return "singular fibre";
  if (o.infinite()) return "class of infinite order";
  return "class of order " + std::to_string(o.order);
}

}  // namespace

Verdict certify_point(const Surface222& S, const SurfacePoint& P0, const CertifyOptions& options) {
  S.require_on_surface(P0);
  const SurfacePoint P = P0.normalized();
  Verdict v;
  v.rule = "efficient";
  v.subject = to_json(S);
  v.evidence.push_back(Json{{"fact", "on_surface"}, {"point", to_json(P)}});
  const BoundTable table = options.degree == 1 ? global_bound(1) : global_bound(options.degree);
  v.evidence.push_back(Json{{"fact", "constants"}, {"d", options.degree}, {"B", table.bound.get_str()}});
  if (options.degree != 1) {
    v.blocking.push_back("Dense is only asserted for d = 1; arithmetic is over Q");
    return v;
  }

  std::array<OrderResult, 2> orders;
  for (int axis = 1; axis <= 2; ++axis) {
    OrderResult& o = orders[static_cast<std::size_t>(axis - 1)];
    o = class_order(S, axis, P);
    v.evidence.push_back(order_fact(P, o));
  }

  for (int axis = 1; axis <= 2; ++axis) {
    const OrderResult& o = orders[static_cast<std::size_t>(axis - 1)];
    const int other = axis == 1 ? 2 : 1;
    const std::string tag = "axis " + std::to_string(axis) + ": ";
    if (o.smooth) {
      if (!o.infinite()) {
        // Finite orders here are at most 2520 <= B, so P lies in T_axis(B).
        v.blocking.push_back(tag + "class of order " + std::to_string(o.order) + " <= B, P lies in Z_" +
                             std::to_string(axis) + "(B)");
        continue;
      }
    } else {
      const bool singular_point = S.is_singular_point_of_fiber(axis, P);
      v.evidence.push_back(Json{{"fact", "fiber_point"}, {"axis", axis}, {"point", to_json(P)},
                                {"singular_point", singular_point}});
      if (singular_point) {
        v.blocking.push_back(tag + "singular point of a singular fibre, P lies in Z_" + std::to_string(axis) + "(B)");
        continue;
      }
    }
    const ComponentCertificate cert = component_certificate(S, P, axis, options.witness);
    v.evidence.push_back(component_json(cert));
    if (cert.status != ComponentCertificate::Status::Certified) {
      v.blocking.push_back(tag + "component " + describe(cert.component) + " not certified against axis " +
                           std::to_string(other) + " (" + cert.reason + ")");
      continue;
    }
    v.evidence.push_back(witness_fact(cert));
    if (!o.smooth) {
      v.caveats.push_back(tag + "nonsingular point of a singular fibre; its component is a rational curve with a "
                                "smooth rational point, so it carries infinitely many rational points");
    }
    v.outcome = Verdict::Outcome::Dense;
    v.blocking.clear();
    return v;
  }
  if (orders[0].smooth && orders[1].smooth && orders[0].finite() && orders[1].finite()) {
    v.blocking.push_back("class torsion for both fibrations (orders " + std::to_string(orders[0].order) + " and " +
                         std::to_string(orders[1].order) + "), so P lies in Z_1(B) and Z_2(B)");
  }
  return v;
}

Verdict certify_threshold(const Surface222& S, const ThresholdInput& input, const WitnessOptions& witness) {
  if (input.nK < 0) throw Error(ErrorCode::InvalidArgument, "n_K must be nonnegative");
  const auto d1 = S.j_degree(1);
  const auto d2 = S.j_degree(2);
  if (!d1 || !d2) {
    if (input.mode == ThresholdMode::Min)
      throw Error(ErrorCode::Precondition, "the min rule needs both j-maps nonconstant");
    throw Error(ErrorCode::Precondition, "the sum rule needs both d_i finite");
  }
  const int M1 = S.chi_degree(1);
  const int M2 = S.chi_degree(2);
  const Integer T = threshold_value(input.mode, *d1, M1, *d2, M2, input.nK);

  std::vector<SurfacePoint> points;
  for (const SurfacePoint& P : input.points) {
    S.require_on_surface(P);
    points.push_back(P.normalized());
  }
  std::sort(points.begin(), points.end(), point_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Verdict v;
  v.rule = input.mode == ThresholdMode::Min ? "notefficient" : "efficienttwo";
  v.subject = to_json(S);
  Integer count = 0;
  for (const SurfacePoint& P : points) {
    Json fact{{"fact", "point"}, {"point", to_json(P)}};
    // Strict closure: a nonsingular point of a singular fibre is never counted
    // as outside Z_i, since the closure of T_i is not decided there.
    std::array<ZMembership, 2> z{in_Z(S, 1, P, kThresholdCutoff, true), in_Z(S, 2, P, kThresholdCutoff, true)};
    fact["z"] = Json::array({to_json(z[0]), to_json(z[1])});
    const bool out1 = z[0].value == Tri::False;
    const bool out2 = z[1].value == Tri::False;
    bool outside = input.mode == ThresholdMode::Min ? (out1 && out2) : (out1 || out2);
    std::string reason = outside ? "" : (input.mode == ThresholdMode::Min ? "inside Z_1(15) or Z_2(15)"
                                                                          : "inside Z_1(15) and Z_2(15)");
    Json comps = Json::array();
    if (outside) {
      // Every geometric component through P lies in a Q-component through P,
      // and a rational witness on a Q-component lies on all its conjugates.
      for (int axis = 1; axis <= 2 && outside; ++axis) {
        for (const FiberComponent& C : components_through(S, axis, P)) {
          const ComponentCertificate cert = certify_component(S, C, P, witness);
          Json cj{{"component", to_json(C)}, {"status", to_string(cert.status)}};
          if (cert.witness) {
            cj["witness"] = to_json(*cert.witness);
            cj["witness_order"] = to_json(cert.witness_order);
          }
          comps.push_back(std::move(cj));
          if (cert.status != ComponentCertificate::Status::Certified) {
            outside = false;
            reason = "component " + describe(C) + " not certified outside Z_0(15)";
            break;
          }
        }
      }
    }
    fact["components"] = comps;
    fact["counted"] = outside;
    if (!reason.empty()) fact["reason"] = reason;
    if (outside) ++count;
    v.evidence.push_back(std::move(fact));
  }
  v.evidence.push_back(Json{{"fact", "threshold"},
                            {"mode", to_string(input.mode)},
                            {"nK", input.nK.get_str()},
                            {"d", Json::array({*d1, *d2})},
                            {"M", Json::array({M1, M2})},
                            {"cutoff", kThresholdCutoff},
                            {"threshold", T.get_str()},
                            {"count", count.get_str()}});
  if (exceeds_threshold(count, T)) {
    v.outcome = Verdict::Outcome::Dense;
  } else {
    v.blocking.push_back("certified count " + count.get_str() + " does not exceed the threshold " + T.get_str());
  }
  return v;
}

// ---------------------------------------------------------------------------
// Replay

namespace {

class Replay {
 public:
  explicit Replay(const Surface222& S) : S_(S) {}

  void fail(const std::string& msg) { failures.push_back(msg); }

  bool order_matches(const SurfacePoint& P, int axis, const Json& recorded, const std::string& where) {
    const OrderResult expect = order_from_json(recorded);
    if (expect.axis != axis) {
      fail(where + ": recorded axis differs");
      return false;
    }
    const OrderResult got = class_order(S_, axis, P);
    if (got.smooth != expect.smooth || got.kind != expect.kind || (got.finite() && got.order != expect.order)) {
      fail(where + ": class order replays as " + order_phrase(got) + ", recorded " + order_phrase(expect));
      return false;
    }
    return true;
  }

  bool component_exists(const FiberComponent& C, const std::string& where) {
    for (const FiberComponent& D : fiber_components(S_, C.axis, C.base)) {
      if (D.s_degree != C.s_degree || D.y_degree != C.y_degree || C.factor.is_zero()) continue;
      // Equal up to a nonzero scalar.
      const Rational ratio = D.factor.leading_coefficient() / C.factor.leading_coefficient();
      if (D.factor == C.factor * ratio) return true;
    }
    fail(where + ": recorded component is not a component of that fibre");
    return false;
  }

  bool point_on(const SurfacePoint& P, const std::string& where) {
    if (!S_.contains(P)) {
      fail(where + ": point is not on the surface");
      return false;
    }
    return true;
  }

  bool witness_valid(const FiberComponent& C, const SurfacePoint& W, const Json* order, const std::string& where) {
    if (!point_on(W, where)) return false;
    if (!C.contains(W)) {
      fail(where + ": witness is not on its component");
      return false;
    }
    const int other = C.axis == 1 ? 2 : 1;
    if (order && !order_matches(W, other, *order, where)) return false;
    if (!verify_witness(S_, C, W)) {
      fail(where + ": witness does not have infinite order on a smooth fibre");
      return false;
    }
    return true;
  }

  std::vector<std::string> failures;

 private:
  const Surface222& S_;
};

void recheck_efficient(const Surface222& S, const Verdict& v, Replay& rp) {
  std::optional<SurfacePoint> P;
  std::optional<unsigned> degree;
  std::array<std::optional<OrderResult>, 2> orders;
  std::array<std::optional<bool>, 2> singular_point;
  std::array<bool, 2> horizontal{false, false};
  std::array<bool, 2> witnessed{false, false};
  for (std::size_t k = 0; k < v.evidence.size(); ++k) {
    const Json& f = v.evidence[k];
    const std::string where = "fact " + std::to_string(k);
    const std::string kind = f.value("fact", "");
    if (kind == "on_surface") {
      P = point_from_json(f.at("point")).normalized();
      rp.point_on(*P, where);
    } else if (kind == "constants") {
      degree = f.at("d").get<unsigned>();
      const BoundTable table = global_bound(*degree);
      if (table.bound.get_str() != f.at("B").get<std::string>()) rp.fail(where + ": B(d) does not replay");
    } else if (kind == "class_order") {
      const SurfacePoint Q = point_from_json(f.at("point"));
      const int axis = f.at("axis").get<int>();
      check_axis(axis);
      if (P && !(Q == *P)) rp.fail(where + ": order recorded for another point");
      if (rp.order_matches(Q, axis, f, where)) orders[static_cast<std::size_t>(axis - 1)] = order_from_json(f);
    } else if (kind == "fiber_point") {
      const SurfacePoint Q = point_from_json(f.at("point"));
      const int axis = f.at("axis").get<int>();
      check_axis(axis);
      const bool got = S.is_singular_point_of_fiber(axis, Q);
      if (got != f.at("singular_point").get<bool>()) {
        rp.fail(where + ": singular-point status does not replay");
      } else {
        singular_point[static_cast<std::size_t>(axis - 1)] = got;
      }
    } else if (kind == "component") {
      const FiberComponent C = component_from_json(f.at("component"));
      if (!rp.component_exists(C, where)) continue;
      if (P && !C.contains(*P)) {
        rp.fail(where + ": component does not contain the point");
        continue;
      }
      if (C.horizontal()) horizontal[static_cast<std::size_t>(C.axis - 1)] = true;
    } else if (kind == "witness") {
      const FiberComponent C = component_from_json(f.at("component"));
      if (!rp.component_exists(C, where)) continue;
      const SurfacePoint W = point_from_json(f.at("point"));
      const Json* order = f.contains("order") ? &f.at("order") : nullptr;
      if (rp.witness_valid(C, W, order, where) && P && C.contains(*P))
        witnessed[static_cast<std::size_t>(C.axis - 1)] = true;
    } else {
      rp.fail(where + ": unknown fact '" + kind + "'");
    }
  }
  if (v.outcome != Verdict::Outcome::Dense) return;
  if (!P) rp.fail("Dense verdict without an on_surface fact");
  if (!degree || *degree != 1) rp.fail("Dense verdict needs the constants fact with d = 1");
  bool supported = false;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& o = orders[i];
    if (!o) continue;
    const bool eligible = o->smooth ? o->infinite() : (singular_point[i] && !*singular_point[i]);
    if (eligible && horizontal[i] && witnessed[i]) supported = true;
  }
  if (!supported) rp.fail("no axis carries a complete chain: eligible point, horizontal component, witness");
}

void recheck_threshold(const Surface222& S, const Verdict& v, Replay& rp) {
  const Json* threshold = nullptr;
  Integer counted = 0;
  std::set<std::string> seen;
  ThresholdMode mode = ThresholdMode::Min;
  bool mode_known = false;
  for (const Json& f : v.evidence) {
    if (f.value("fact", "") == "threshold") {
      threshold = &f;
      mode = threshold_mode_from_string(f.at("mode").get<std::string>());
      mode_known = true;
    }
  }
  if (!threshold) {
    rp.fail("threshold fact missing");
    return;
  }
  if ((v.rule == "notefficient") != (mode == ThresholdMode::Min) || !mode_known) rp.fail("rule and mode disagree");
  const std::uint64_t cutoff = threshold->at("cutoff").get<std::uint64_t>();
  if (cutoff != kThresholdCutoff) rp.fail("cutoff must be 15");

  for (std::size_t k = 0; k < v.evidence.size(); ++k) {
    const Json& f = v.evidence[k];
    const std::string where = "fact " + std::to_string(k);
    const std::string kind = f.value("fact", "");
    if (kind == "threshold") continue;
    if (kind != "point") {
      rp.fail(where + ": unknown fact '" + kind + "'");
      continue;
    }
    const SurfacePoint P = point_from_json(f.at("point")).normalized();
    if (!rp.point_on(P, where)) continue;
    if (!seen.insert(to_json(P).dump()).second) {
      rp.fail(where + ": duplicate point");
      continue;
    }
    const bool claimed = f.at("counted").get<bool>();
    std::array<bool, 2> out{false, false};
    bool z_ok = true;
    for (int axis = 1; axis <= 2; ++axis) {
      const ZMembership z = in_Z(S, axis, P, cutoff, true);
      const Json& rec = f.at("z").at(static_cast<std::size_t>(axis - 1));
      if (rec.at("value").get<std::string>() != to_string(z.value)) {
        rp.fail(where + ": Z_" + std::to_string(axis) + " membership does not replay");
        z_ok = false;
      }
      if (!rp.order_matches(P, axis, rec.at("order"), where)) z_ok = false;
      out[static_cast<std::size_t>(axis - 1)] = z.value == Tri::False;
    }
    if (!claimed) continue;
    if (!z_ok) continue;
    const bool outside = mode == ThresholdMode::Min ? (out[0] && out[1]) : (out[0] || out[1]);
    if (!outside) {
      rp.fail(where + ": counted point is inside the excluded set");
      continue;
    }
    // Every component through P needs a replayed witness.
    bool all = true;
    for (int axis = 1; axis <= 2 && all; ++axis) {
      for (const FiberComponent& C : components_through(S, axis, P)) {
        bool found = false;
        for (const Json& cj : f.at("components")) {
          if (!cj.contains("witness")) continue;
          const FiberComponent R = component_from_json(cj.at("component"));
          if (R.axis != C.axis || R.s_degree != C.s_degree || R.y_degree != C.y_degree || !(R.base == C.base)) continue;
          if (R.factor.is_zero() ||
              !(C.factor == R.factor * (C.factor.leading_coefficient() / R.factor.leading_coefficient())))
            continue;
          const Json* order = cj.contains("witness_order") ? &cj.at("witness_order") : nullptr;
          if (rp.witness_valid(C, point_from_json(cj.at("witness")), order, where)) {
            found = true;
            break;
          }
        }
        if (!found) {
          rp.fail(where + ": component " + describe(C) + " lacks a valid witness");
          all = false;
          break;
        }
      }
    }
    if (all) ++counted;
  }

  const auto d1 = S.j_degree(1);
  const auto d2 = S.j_degree(2);
  if (!d1 || !d2) {
    rp.fail("threshold rules need nonconstant j-maps");
    return;
  }
  const Json& d = threshold->at("d");
  const Json& M = threshold->at("M");
  if (d.at(0).get<int>() != *d1 || d.at(1).get<int>() != *d2) rp.fail("recorded d_i do not replay");
  if (M.at(0).get<int>() != S.chi_degree(1) || M.at(1).get<int>() != S.chi_degree(2)) rp.fail("recorded M_i do not replay");
  const Integer nK(threshold->at("nK").get<std::string>());
  const Integer T = threshold_value(mode, *d1, S.chi_degree(1), *d2, S.chi_degree(2), nK);
  if (T.get_str() != threshold->at("threshold").get<std::string>()) rp.fail("threshold arithmetic does not replay");
  if (counted.get_str() != threshold->at("count").get<std::string>())
    rp.fail("recorded count " + threshold->at("count").get<std::string>() + " but " + counted.get_str() + " replay");
  const bool dense = exceeds_threshold(counted, T);
  if ((v.outcome == Verdict::Outcome::Dense) != dense) rp.fail("outcome does not follow from count and threshold");
}

}  // namespace

RecheckResult recheck(const Json& verdict) {
  RecheckResult result;
  try {
    const Verdict v = verdict_from_json(verdict);
    if (v.rule == "diagonal") {
      recheck_diagonal(v, result.failures);
      result.ok = result.failures.empty();
      return result;
    }
    const Surface222 S = surface_from_json(v.subject);
    Replay rp(S);
    if (v.rule == "efficient") {
      recheck_efficient(S, v, rp);
    } else if (v.rule == "notefficient" || v.rule == "efficienttwo") {
      recheck_threshold(S, v, rp);
    } else {
      rp.fail("unknown rule '" + v.rule + "'");
    }
    result.failures = std::move(rp.failures);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    result.failures.push_back(std::string("replay error: ") + e.what());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed evidence: ") + e.what());
  }
  result.ok = result.failures.empty();
  return result;
}

}  // namespace fibra
