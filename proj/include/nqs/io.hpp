#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "nqs/bounds.hpp"
#include "nqs/codes.hpp"
#include "nqs/entropy.hpp"
#include "nqs/hashing.hpp"
#include "nqs/protocols.hpp"

namespace nqs {

/// Keys keep insertion order so serialized output is stable and readable.
using Json = nlohmann::ordered_json;

/// Reals printed with 12 significant digits.
std::string format_real(double v);

/// {"registers": [{"name", "size"}...], "probs": [...]} with row-major probs.
Json to_json(const ProbabilityTable& table);
JointDistribution distribution_from_json(const Json& j);

/// {"n", "k", "generator": [hex row...], "min_distance"}.
Json to_json(const LinearCode& code);
LinearCode code_from_json(const Json& j);

Json to_json(const ToeplitzHash& h);
ToeplitzHash hash_from_json(const Json& j);

Json to_json(const RotTranscript& t);
Json to_json(const RobustTranscript& t);
Json to_json(const QidTranscript& t);

inline constexpr const char* kRateCurveHeader = "r,nu,n,delta,gamma,capacity,ell,ot_rate,eps,two_eps,feasible";
inline constexpr const char* kRegionHeader = "r,nu,capacity,product,feasible";

void write_csv(std::ostream& out, const std::vector<RateRow>& rows);
void write_csv(std::ostream& out, const std::vector<RegionRow>& rows);
Json to_json(const std::vector<RateRow>& rows);
Json to_json(const std::vector<RegionRow>& rows);

}  // namespace nqs
