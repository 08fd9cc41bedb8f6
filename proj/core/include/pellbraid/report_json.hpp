#pragma once

#include <utility>

#include <nlohmann/json.hpp>

#include "pellbraid/closed_forms.hpp"
#include "pellbraid/identities.hpp"
#include "pellbraid/oracle.hpp"
#include "pellbraid/padic.hpp"

namespace pellbraid {

// Big integers travel as decimal strings: JSON numbers cannot carry
// arbitrary precision. All emitters are byte-stable for equal inputs and
// every from_json inverts its to_json.

nlohmann::json to_json(const IdentityReport& report);
IdentityReport identity_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GcdReport& report);
GcdReport gcd_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CurlQuery& query, const OracleResult& result);
std::pair<CurlQuery, OracleResult> oracle_result_from_json(
    const nlohmann::json& j);

nlohmann::json to_json(const ConjectureFinding& finding);
ConjectureFinding conjecture_finding_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EntryPointRecord& record);

}  // namespace pellbraid
