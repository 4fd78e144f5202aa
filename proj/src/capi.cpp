#include "fibra/fibra.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "certifier.hpp"
#include "diagonal.hpp"

struct fibra_surface {
  fibra::Surface222 surface;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_last_code;

fibra_status status_for(fibra::ErrorCode code) {
  using fibra::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return FIBRA_ERR_PARSE;
    case ErrorCode::InvalidArgument:
    case ErrorCode::ArityMismatch: return FIBRA_ERR_INVALID_ARGUMENT;
    case ErrorCode::Resource: return FIBRA_ERR_RESOURCE;
    case ErrorCode::Internal: return FIBRA_ERR_INTERNAL;
    default: return FIBRA_ERR_DOMAIN;
  }
}

fibra_status fail(fibra_status s, const char* code, const std::string& msg) {
  g_last_error = msg;
  g_last_code = code;
  return s;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
fibra_status guarded(char** out_json, F&& body) {
  if (out_json) *out_json = nullptr;
  try {
    fibra::Json result = body();
    if (out_json) *out_json = copy_string(result.dump());
    g_last_error.clear();
    g_last_code.clear();
    return FIBRA_OK;
  } catch (const fibra::Error& e) {
    return fail(status_for(e.code()), fibra::error_code_name(e.code()), e.what());
  } catch (const fibra::Json::exception& e) {
    return fail(FIBRA_ERR_PARSE, "parse_error", std::string("malformed JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(FIBRA_ERR_RESOURCE, "resource_exhausted", "out of memory");
  } catch (const std::exception& e) {
    return fail(FIBRA_ERR_INTERNAL, "internal", e.what());
  }
}

void require(const void* p, const char* what) {
  if (!p) throw fibra::Error(fibra::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

fibra::Json parse(const char* text, const char* what) {
  require(text, what);
  return fibra::parse_json(text);
}

}  // namespace

extern "C" {

const char* fibra_version(void) { return FIBRA_VERSION_STRING; }

const char* fibra_last_error(void) { return g_last_error.c_str(); }

const char* fibra_last_error_code(void) { return g_last_code.c_str(); }

void fibra_string_free(char* s) { std::free(s); }

fibra_status fibra_bound(unsigned degree, int mazur, char** out_json) {
  return guarded(out_json, [&] {
    if (mazur && degree != 1)
      throw fibra::Error(fibra::ErrorCode::InvalidArgument, "the Mazur bound applies to d = 1 only");
    return fibra::to_json(mazur ? fibra::mazur_bound() : fibra::global_bound(degree));
  });
}

fibra_status fibra_surface_parse(const char* json, fibra_surface** out) {
  return guarded(nullptr, [&] {
    require(out, "output handle");
    *out = nullptr;
    fibra::Surface222 S = fibra::surface_from_json(parse(json, "surface JSON"));
    *out = new fibra_surface{std::move(S)};
    return fibra::Json();
  });
}

void fibra_surface_free(fibra_surface* surface) { delete surface; }

fibra_status fibra_surface_json(const fibra_surface* surface, char** out_json) {
  return guarded(out_json, [&] {
    require(surface, "surface");
    return fibra::to_json(surface->surface);
  });
}

fibra_status fibra_analyze(const fibra_surface* surface, char** out_json) {
  return guarded(out_json, [&] {
    require(surface, "surface");
    return fibra::analysis_report(surface->surface);
  });
}

fibra_status fibra_order(const fibra_surface* surface, int axis, const char* point_json, char** out_json) {
  return guarded(out_json, [&] {
    require(surface, "surface");
    const fibra::SurfacePoint P = fibra::point_from_json(parse(point_json, "point JSON"));
    fibra::Json j = fibra::to_json(fibra::class_order(surface->surface, axis, P));
    j["point"] = fibra::to_json(P.normalized());
    return j;
  });
}

fibra_status fibra_exclusion(const fibra_surface* surface, int axis, unsigned r, unsigned r_max,
                             unsigned long monomial_budget, char** out_json) {
  return guarded(out_json, [&] {
    require(surface, "surface");
    fibra::EmitOptions options;
    if (r_max) options.r_max = r_max;
    if (monomial_budget) options.monomial_budget = monomial_budget;
    return fibra::to_json(fibra::emit_T_equations(surface->surface, axis, r, options));
  });
}

fibra_status fibra_certify(const fibra_surface* surface, const char* point_json, unsigned degree, int* dense,
                           char** out_json) {
  return guarded(out_json, [&] {
    require(surface, "surface");
    fibra::CertifyOptions options;
    options.degree = degree;
    const fibra::Verdict v =
        fibra::certify_point(surface->surface, fibra::point_from_json(parse(point_json, "point JSON")), options);
    if (dense) *dense = v.outcome == fibra::Verdict::Outcome::Dense;
    return fibra::to_json(v);
  });
}

fibra_status fibra_certify_threshold(const fibra_surface* surface, const char* points_json, const char* n_k,
                                     const char* mode, int* dense, char** out_json) {
  return guarded(out_json, [&] {
    require(surface, "surface");
    require(n_k, "n_K");
    require(mode, "mode");
    const fibra::Json pts = parse(points_json, "points JSON");
    const fibra::Json& list = pts.is_object() && pts.contains("points") ? pts.at("points") : pts;
    if (!list.is_array()) throw fibra::Error(fibra::ErrorCode::Parse, "points must be an array");
    fibra::ThresholdInput input;
    for (const auto& p : list) input.points.push_back(fibra::point_from_json(p));
    const fibra::Rational nk = fibra::parse_rational(n_k);
    if (nk.get_den() != 1) throw fibra::Error(fibra::ErrorCode::InvalidArgument, "n_K must be an integer");
    input.nK = nk.get_num();
    input.mode = fibra::threshold_mode_from_string(mode);
    const fibra::Verdict v = fibra::certify_threshold(surface->surface, input);
    if (dense) *dense = v.outcome == fibra::Verdict::Outcome::Dense;
    return fibra::to_json(v);
  });
}

fibra_status fibra_recheck(const char* verdict_json, int* ok, char** out_json) {
  return guarded(out_json, [&] {
    const fibra::RecheckResult r = fibra::recheck(parse(verdict_json, "verdict JSON"));
    if (ok) *ok = r.ok;
    return fibra::Json{{"ok", r.ok}, {"failures", r.failures}};
  });
}

fibra_status fibra_quartic_search(const char* t, unsigned height, int all, unsigned threads, int* found,
                                  char** out_json) {
  return guarded(out_json, [&] {
    require(t, "t");
    fibra::SearchOptions options;
    options.height = height;
    options.all = all != 0;
    options.threads = threads;
    const fibra::SearchReport r = fibra::conjecture_search(fibra::parse_rational(t), options);
    if (found) *found = r.found.has_value();
    return fibra::to_json(r);
  });
}

fibra_status fibra_quartic_certify(const char* coeffs_json, const char* point_json, int* dense, char** out_json) {
  return guarded(out_json, [&] {
    const fibra::DiagonalQuartic V = fibra::diagonal_from_json(parse(coeffs_json, "coefficients JSON"));
    const fibra::Verdict v = fibra::certify_theorem1(V, fibra::quartic_point_from_json(parse(point_json, "point JSON")));
    if (dense) *dense = v.outcome == fibra::Verdict::Outcome::Dense;
    return fibra::to_json(v);
  });
}

fibra_status fibra_quartic_sweep(unsigned max_term, unsigned height, unsigned threads, char** out_json) {
  return guarded(out_json, [&] {
    if (max_term < 1) throw fibra::Error(fibra::ErrorCode::InvalidArgument, "max term must be at least 1");
    fibra::Json rows = fibra::Json::array();
    for (const fibra::SweepRow& row : fibra::conjecture_sweep(max_term, height, threads)) {
      rows.push_back(fibra::Json{{"t", std::to_string(row.num) + "/" + std::to_string(row.den)},
                                 {"tested", row.tested},
                                 {"found", row.found ? fibra::to_json(*row.found) : fibra::Json(nullptr)}});
    }
    return fibra::Json{{"max_term", max_term}, {"H", height}, {"rows", rows}};
  });
}

}  // extern "C"
