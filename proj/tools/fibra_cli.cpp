// fibra command line front end. Talks to the library through the C API only.
//
// Every run prints one JSON report {tool, version, config, result} (or
// {..., error} on failure). Exit codes: 0 Dense or success, 2 Inconclusive,
// 1 error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "fibra/fibra.h"

using Json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

struct Failure {
  std::string code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"io_error", "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON when the argument looks like a document, otherwise a file path.
std::string json_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[' || arg[first] == '"')) return arg;
  return read_file(arg);
}

// "a,b,c" -> ["a","b","c"].
std::string list_argument(const std::string& arg) {
  Json out = Json::array();
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out.dump();
}

Json take(fibra_status status, char** outp) {
  char* out = *outp;
  if (status != FIBRA_OK) throw Failure{fibra_last_error_code(), fibra_last_error()};
  Json j = Json::parse(out ? out : "null");
  fibra_string_free(out);
  return j;
}

class Surface {
 public:
  explicit Surface(const std::string& path) {
    const std::string text = read_file(path);
    if (fibra_surface_parse(text.c_str(), &handle_) != FIBRA_OK) throw Failure{fibra_last_error_code(), fibra_last_error()};
  }
  ~Surface() { fibra_surface_free(handle_); }
  Surface(const Surface&) = delete;
  Surface& operator=(const Surface&) = delete;
  const fibra_surface* get() const { return handle_; }

 private:
  fibra_surface* handle_ = nullptr;
};

struct Outcome {
  Json result;
  int exit_code = kExitOk;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify Zariski density of rational points on surfaces with two elliptic fibrations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  bool json_flag = true;
  bool pretty = false;
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");
  app.add_flag("--json", json_flag, "Emit JSON (always on)");
  app.add_flag("--pretty", pretty, "Indent the report");

  unsigned degree = 1;
  bool mazur = false;
  int axis = 1;
  unsigned r = 1;
  unsigned r_max = 5;
  unsigned long budget = 0;
  std::string surface_path, point_arg, points_arg, mode = "min", nk = "0", verdict_path;
  std::string t_arg, coeffs_arg, qpoint_arg;
  unsigned height = 100, threads = 0, max_term = 20;
  bool all = false;

  auto* bound = app.add_subcommand("bound", "Torsion bound B(d) with its prime-power caps");
  bound->add_option("--degree,-d", degree, "Degree d of the number field")->check(CLI::Range(1u, 64u));
  bound->add_flag("--mazur", mazur, "Use the sharper bound 2520 for d = 1");

  auto* analyze = app.add_subcommand("analyze", "Validation and fibration invariants of a surface");
  analyze->add_option("surface", surface_path, "Surface JSON file")->required();

  auto* order = app.add_subcommand("order", "Order of the class (alpha(P)) - (P) on the fibre through P");
  order->add_option("surface", surface_path, "Surface JSON file")->required();
  order->add_option("--point,-p", point_arg, "Point JSON (file or inline)")->required();
  order->add_option("--axis", axis, "Fibration 1 (base t) or 2 (base x)")->check(CLI::IsMember({1, 2}));

  auto* exclusion = app.add_subcommand("exclusion", "Equations for the exact-order-r locus T_{axis,r}");
  exclusion->add_option("surface", surface_path, "Surface JSON file")->required();
  exclusion->add_option("--axis", axis, "Fibration 1 or 2")->check(CLI::IsMember({1, 2}));
  exclusion->add_option("--r", r, "Exact order r")->check(CLI::Range(1u, 15u));
  exclusion->add_option("--r-max", r_max, "Largest r accepted; above 5 the cost grows quickly")->check(CLI::Range(1u, 15u));
  exclusion->add_option("--budget", budget, "Monomial budget per generator (0: default 5000)");

  auto* certify = app.add_subcommand("certify", "Single-point density certificate");
  certify->add_option("surface", surface_path, "Surface JSON file")->required();
  certify->add_option("--point,-p", point_arg, "Point JSON (file or inline)")->required();
  certify->add_option("--degree,-d", degree, "Degree d selecting B(d)")->check(CLI::Range(1u, 16u));

  auto* threshold = app.add_subcommand("certify-threshold", "Density certificate from many points");
  threshold->add_option("surface", surface_path, "Surface JSON file")->required();
  threshold->add_option("--points", points_arg, "JSON array of points (file or inline)")->required();
  threshold->add_option("--nk", nk, "The constant n_K (nonnegative integer)");
  threshold->add_option("--mode", mode, "min or sum")->check(CLI::IsMember({"min", "sum"}));

  auto* recheck = app.add_subcommand("recheck", "Replay the evidence chain of a verdict");
  recheck->add_option("verdict", verdict_path, "Verdict JSON file, or a report containing one")->required();

  auto* qsearch = app.add_subcommand("quartic-search", "Search x^4 - y^4 = t (z^4 - w^4) for a certifying point");
  qsearch->add_option("--t", t_arg, "t as a/b")->required();
  qsearch->add_option("--height,-H", height, "Height bound H")->check(CLI::Range(1u, 5000u));
  qsearch->add_flag("--all", all, "Report every certifying point");
  qsearch->add_option("--threads", threads, "Worker threads (0: all cores)");

  auto* qcert = app.add_subcommand("quartic-certify", "Density criterion for a diagonal quartic");
  qcert->add_option("--coeffs", coeffs_arg, "a,b,c,d")->required();
  qcert->add_option("--point", qpoint_arg, "x,y,z,w")->required();

  auto* qsweep = app.add_subcommand("quartic-sweep", "quartic-search for every t = a/b with a, b <= N");
  qsweep->add_option("--max", max_term, "N")->check(CLI::Range(1u, 100u));
  qsweep->add_option("--height,-H", height, "Height bound H")->check(CLI::Range(1u, 5000u));
  qsweep->add_option("--threads", threads, "Worker threads (0: all cores)");

  CLI11_PARSE(app, argc, argv);
  (void)json_flag;

  CLI::App* sub = app.get_subcommands().front();
  Json config{{"subcommand", sub->get_name()}};
  Json report{{"tool", "fibra"}, {"version", fibra_version()}};
  int exit_code = kExitOk;

  try {
    Outcome o;
    const std::string name = sub->get_name();
    if (name == "bound") {
      config["degree"] = degree;
      config["mazur"] = mazur;
      char* out = nullptr;
      o.result = take(fibra_bound(degree, mazur, &out), &out);
    } else if (name == "analyze") {
      config["surface"] = surface_path;
      Surface S(surface_path);
      char* out = nullptr;
      o.result = take(fibra_analyze(S.get(), &out), &out);
    } else if (name == "order") {
      const std::string point = json_argument(point_arg);
      config.update({{"surface", surface_path}, {"point", Json::parse(point)}, {"axis", axis}});
      Surface S(surface_path);
      char* out = nullptr;
      o.result = take(fibra_order(S.get(), axis, point.c_str(), &out), &out);
    } else if (name == "exclusion") {
      config.update({{"surface", surface_path}, {"axis", axis}, {"r", r}, {"r_max", r_max}, {"budget", budget}});
      Surface S(surface_path);
      char* out = nullptr;
      o.result = take(fibra_exclusion(S.get(), axis, r, r_max, budget, &out), &out);
    } else if (name == "certify") {
      const std::string point = json_argument(point_arg);
      config.update({{"surface", surface_path}, {"point", Json::parse(point)}, {"degree", degree}});
      Surface S(surface_path);
      char* out = nullptr;
      int dense = 0;
      o.result = take(fibra_certify(S.get(), point.c_str(), degree, &dense, &out), &out);
      o.exit_code = dense ? kExitOk : kExitInconclusive;
    } else if (name == "certify-threshold") {
      const std::string points = json_argument(points_arg);
      config.update({{"surface", surface_path}, {"points", Json::parse(points)}, {"nk", nk}, {"mode", mode}});
      Surface S(surface_path);
      char* out = nullptr;
      int dense = 0;
      o.result = take(fibra_certify_threshold(S.get(), points.c_str(), nk.c_str(), mode.c_str(), &dense, &out), &out);
      o.exit_code = dense ? kExitOk : kExitInconclusive;
    } else if (name == "recheck") {
      config["verdict"] = verdict_path;
      Json doc = Json::parse(read_file(verdict_path));
      // Accept a full CLI report as well as a bare verdict.
      if (doc.is_object() && doc.contains("result") && doc.at("result").is_object()) doc = doc.at("result");
      if (doc.is_object() && doc.contains("verdict") && !doc.contains("evidence")) doc = doc.at("verdict");
      const std::string text = doc.dump();
      char* out = nullptr;
      int ok = 0;
      o.result = take(fibra_recheck(text.c_str(), &ok, &out), &out);
      o.exit_code = ok ? kExitOk : kExitInconclusive;
    } else if (name == "quartic-search") {
      config.update({{"t", t_arg}, {"height", height}, {"all", all}, {"threads", threads}});
      char* out = nullptr;
      int found = 0;
      o.result = take(fibra_quartic_search(t_arg.c_str(), height, all, threads, &found, &out), &out);
      o.exit_code = found ? kExitOk : kExitInconclusive;
    } else if (name == "quartic-certify") {
      const std::string coeffs = list_argument(coeffs_arg);
      const std::string point = list_argument(qpoint_arg);
      config.update({{"coeffs", Json::parse(coeffs)}, {"point", Json::parse(point)}});
      char* out = nullptr;
      int dense = 0;
      o.result = take(fibra_quartic_certify(coeffs.c_str(), point.c_str(), &dense, &out), &out);
      o.exit_code = dense ? kExitOk : kExitInconclusive;
    } else if (name == "quartic-sweep") {
      config.update({{"max", max_term}, {"height", height}, {"threads", threads}});
      char* out = nullptr;
      o.result = take(fibra_quartic_sweep(max_term, height, threads, &out), &out);
    }
    report["config"] = config;
    report["result"] = o.result;
    exit_code = o.exit_code;
  } catch (const Failure& f) {
    report["config"] = config;
    report["error"] = Json{{"code", f.code}, {"message", f.message}};
    std::cerr << "error (" << f.code << "): " << f.message << "\n";
    exit_code = kExitError;
  } catch (const Json::exception& e) {
    report["config"] = config;
    report["error"] = Json{{"code", "parse_error"}, {"message", e.what()}};
    std::cerr << "error (parse_error): " << e.what() << "\n";
    exit_code = kExitError;
  }

  const std::string text = report.dump(pretty ? 2 : -1) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitError;
    }
    out << text;
  }
  return exit_code;
}
