#pragma once

// JSON views of the domain types and the output envelope shared by every CLI
// command. nlohmann::json keeps object keys sorted, which makes the output
// byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "shiftfam/core.hpp"
#include "shiftfam/family.hpp"
#include "shiftfam/oracle.hpp"

namespace shiftfam {

struct OutputEnvelope {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> warnings;
};

nlohmann::json to_json(const OutputEnvelope& env);
/// Pretty-printed with two-space indentation and a trailing newline.
std::string serialize(const OutputEnvelope& env);

nlohmann::json to_json(const NumericalSemigroup& h);
nlohmann::json to_json(const TraceData& t);
nlohmann::json to_json(const NGCertificate& c);
nlohmann::json to_json(const ShiftSpec& spec);
nlohmann::json to_json(const PProfile& p);
nlohmann::json to_json(const ClosedForm& c);
nlohmann::json to_json(const BoundN& b);
nlohmann::json to_json(const Flag& f);
nlohmann::json to_json(const FamilyFlags& f);
nlohmann::json to_json(const ResidueScan& s);
nlohmann::json to_json(const oracle::DiffReport& r);

/// Full single-semigroup analysis, as printed by `analyze`.
nlohmann::json analyze_json(const NumericalSemigroup& h);

/// CSV for residue scans: header `lambda,n,residue`, one row per lambda.
std::string residue_csv(const ResidueScan& scan);

}  // namespace shiftfam
