#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "tensorshift/indexcomb.hpp"
#include "tensorshift/specnorm.hpp"
#include "tensorshift/verify.hpp"

namespace tensorshift::io {

using json = nlohmann::ordered_json;

/// 12-significant-digit text form of a double; stable under reparse-and-print.
std::string fmt12(double v);

/// Serializes with doubles printed via fmt12 and 2-space indentation.
void write_json(std::ostream& out, const json& doc);
std::string to_string(const json& doc);

json to_json(const NormProfile& p);
NormProfile profile_from_json(const json& doc);
std::string to_csv(const NormProfile& p);

json to_json(const CensusReport& r);
CensusReport census_from_json(const json& doc);
std::string to_csv(const CensusReport& r);

json to_json(const VerificationReport& r);
VerificationReport verification_from_json(const json& doc);

/// Regression baselines: one JSON file per name under dir, holding the
/// quantity map. Writes the file when absent; otherwise compares within tol.
struct GoldenResult {
    bool written = false;
    bool matched = false;
    std::string detail;
};
GoldenResult golden_check(const std::string& dir, const std::string& name,
                          const std::vector<std::pair<std::string, double>>& quantities,
                          double tol = 1e-9);

}  // namespace tensorshift::io
