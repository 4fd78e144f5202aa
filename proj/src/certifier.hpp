#pragma once

#include <string>
#include <vector>

#include "json_io.hpp"

namespace fibra {

struct Verdict {
  enum class Outcome { Dense, Inconclusive };

  Outcome outcome = Outcome::Inconclusive;
  std::string rule;  // "efficient", "notefficient", "efficienttwo" or "diagonal"
  Json subject;      // the surface or the diagonal quartic
  Json evidence = Json::array();
  std::vector<std::string> caveats;
  std::vector<std::string> blocking;
};

const char* to_string(Verdict::Outcome o);
Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

// 4 for j0 = 1728, 6 for j0 = 0, 2 otherwise.
int mu_factor(const Rational& j0);

struct CertifyOptions {
  unsigned degree = 1;
  WitnessOptions witness;
};

Verdict certify_point(const Surface222& S, const SurfacePoint& P, const CertifyOptions& options = {});

enum class ThresholdMode { Min, Sum };
const char* to_string(ThresholdMode m);
ThresholdMode threshold_mode_from_string(const std::string& s);

// n_K * min(d1 M1, d2 M2) or n_K * (d1 M1 + d2 M2).
Integer threshold_value(ThresholdMode mode, const Integer& d1, const Integer& M1, const Integer& d2,
                        const Integer& M2, const Integer& nK);
inline bool exceeds_threshold(const Integer& count, const Integer& threshold) { return count > threshold; }

inline constexpr std::uint64_t kThresholdCutoff = 15;

struct ThresholdInput {
  std::vector<SurfacePoint> points;
  Integer nK = 0;
  ThresholdMode mode = ThresholdMode::Min;
};

Verdict certify_threshold(const Surface222& S, const ThresholdInput& input, const WitnessOptions& witness = {});

struct RecheckResult {
  bool ok = false;
  std::vector<std::string> failures;
};

// Replays every fact of the evidence chain from the recorded data.
RecheckResult recheck(const Json& verdict);

}  // namespace fibra
