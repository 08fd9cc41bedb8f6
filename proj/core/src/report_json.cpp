#include "pellbraid/report_json.hpp"

#include <stdexcept>
#include <string>

namespace pellbraid {

namespace {

using nlohmann::json;

std::string encode(const Integer& value) { return value.get_str(); }

Integer decode(const json& j) { return Integer(j.get<std::string>()); }

SequenceKind kind_from_json(const json& j) {
  auto kind = parse_kind(j.get<std::string>());
  if (!kind) throw std::invalid_argument("unknown sequence kind in JSON");
  return *kind;
}

}  // namespace

json to_json(const IdentityReport& report) {
  json ranges = json::array();
  for (const auto& range : report.ranges)
    ranges.push_back({{"name", range.name}, {"lo", range.lo}, {"hi", range.hi}});
  json failures = json::array();
  for (const auto& failure : report.failures) {
    json params = json::object();
    for (const auto& [name, value] : failure.params) params[name] = value;
    failures.push_back({{"params", params},
                        {"lhs", encode(failure.lhs)},
                        {"rhs", encode(failure.rhs)}});
  }
  return {{"identity_id", report.identity_id},
          {"ranges", ranges},
          {"checked", report.checked},
          {"failures", failures}};
}

IdentityReport identity_report_from_json(const json& j) {
  IdentityReport report;
  report.identity_id = j.at("identity_id").get<std::string>();
  for (const auto& range : j.at("ranges"))
    report.ranges.push_back({range.at("name").get<std::string>(),
                             range.at("lo").get<std::int64_t>(),
                             range.at("hi").get<std::int64_t>()});
  report.checked = j.at("checked").get<std::int64_t>();
  for (const auto& failure : j.at("failures")) {
    IdentityFailure f;
    for (const auto& [name, value] : failure.at("params").items())
      f.params.emplace_back(name, value.get<std::int64_t>());
    f.lhs = decode(failure.at("lhs"));
    f.rhs = decode(failure.at("rhs"));
    report.failures.push_back(std::move(f));
  }
  return report;
}

json to_json(const GcdReport& report) {
  return {{"kind", std::string(kind_name(report.kind))},
          {"k", report.k},
          {"m", report.m},
          {"closed_form",
           report.closed_form ? json(encode(*report.closed_form)) : json()},
          {"oracle", encode(report.oracle)},
          {"agree", report.agree},
          {"horizon", report.horizon},
          {"stabilized_at", report.stabilized_at}};
}

GcdReport gcd_report_from_json(const json& j) {
  GcdReport report;
  report.kind = kind_from_json(j.at("kind"));
  report.k = j.at("k").get<std::int64_t>();
  report.m = j.at("m").get<std::int64_t>();
  if (!j.at("closed_form").is_null())
    report.closed_form = decode(j.at("closed_form"));
  report.oracle = decode(j.at("oracle"));
  report.agree = j.at("agree").get<bool>();
  report.horizon = j.at("horizon").get<std::int64_t>();
  report.stabilized_at = j.at("stabilized_at").get<std::int64_t>();
  return report;
}

json to_json(const CurlQuery& query, const OracleResult& result) {
  return {{"kind", std::string(kind_name(query.kind))},
          {"k", query.k},
          {"m", query.m},
          {"value", encode(result.value)},
          {"horizon", result.horizon},
          {"stabilized_at", result.stabilized_at},
          {"stable", result.stable}};
}

std::pair<CurlQuery, OracleResult> oracle_result_from_json(const json& j) {
  CurlQuery query{kind_from_json(j.at("kind")), j.at("k").get<std::int64_t>(),
                  j.at("m").get<std::int64_t>()};
  OracleResult result{decode(j.at("value")), j.at("horizon").get<std::int64_t>(),
                      j.at("stabilized_at").get<std::int64_t>(),
                      j.at("stable").get<bool>()};
  return {query, result};
}

json to_json(const ConjectureFinding& finding) {
  json witnesses = json::array();
  for (const auto& witness : finding.witnesses)
    witnesses.push_back({{"p", witness.p}, {"entry", witness.entry}});
  return {{"k", finding.k},
          {"gcd_qk_k", encode(finding.gcd_qk_k)},
          {"witnesses", witnesses},
          {"holds", finding.biconditional_holds}};
}

ConjectureFinding conjecture_finding_from_json(const json& j) {
  ConjectureFinding finding;
  finding.k = j.at("k").get<std::int64_t>();
  finding.gcd_qk_k = decode(j.at("gcd_qk_k"));
  for (const auto& witness : j.at("witnesses"))
    finding.witnesses.push_back({witness.at("p").get<std::int64_t>(),
                                 witness.at("entry").get<std::int64_t>()});
  finding.biconditional_holds = j.at("holds").get<bool>();
  return finding;
}

json to_json(const EntryPointRecord& record) {
  return {{"kind", std::string(kind_name(record.kind))},
          {"p", record.p},
          {"entry", record.entry ? json(*record.entry) : json()},
          {"period", record.period}};
}

}  // namespace pellbraid
