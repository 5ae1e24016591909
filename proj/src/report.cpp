#include "qbk/report.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace qbk {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 10> kIdentityNames{{
    {IdentityId::warnaar, "warnaar"},
    {IdentityId::garrett_hummel, "garrett_hummel"},
    {IdentityId::schlosser_m2, "schlosser_m2"},
    {IdentityId::schlosser_m3, "schlosser_m3"},
    {IdentityId::schlosser_m4, "schlosser_m4"},
    {IdentityId::schlosser_m5, "schlosser_m5"},
    {IdentityId::kim_linear, "kim_linear"},
    {IdentityId::kim_quadratic, "kim_quadratic"},
    {IdentityId::theorem3, "theorem3"},
    {IdentityId::s12_vs_theorem3, "s12_vs_theorem3"},
}};

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& [value, name] : kIdentityNames) {
    if (value == id) return name;
  }
  throw std::invalid_argument("unknown IdentityId");
}

IdentityId identity_from_string(std::string_view name) {
  for (const auto& [value, known] : kIdentityNames) {
    if (known == name) return value;
  }
  throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& [value, name] : kIdentityNames) v.push_back(value);
    return v;
  }();
  return ids;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::equal: return "equal";
    case Status::mismatch: return "mismatch";
    case Status::error: return "error";
  }
  throw std::invalid_argument("unknown Status");
}

Status status_from_string(std::string_view s) {
  if (s == "equal") return Status::equal;
  if (s == "mismatch") return Status::mismatch;
  if (s == "error") return Status::error;
  throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

VerificationReport VerificationReport::compare(IdentityId id, std::vector<int> params,
                                               const QRatio& lhs, const QRatio& rhs) {
  return VerificationReport{id, std::move(params), lhs == rhs ? Status::equal : Status::mismatch,
                            lhs.to_string(), rhs.to_string()};
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["identity"] = std::string(qbk::to_string(identity));
  j["params"] = params;
  j["status"] = std::string(qbk::to_string(status));
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  r.identity = identity_from_string(j.at("identity").get<std::string>());
  r.params = j.at("params").get<std::vector<int>>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.lhs = j.at("lhs").get<std::string>();
  r.rhs = j.at("rhs").get<std::string>();
  return r;
}

std::string VerificationReport::to_json_line() const { return to_json().dump(); }

bool report_order(const VerificationReport& a, const VerificationReport& b) {
  if (a.identity != b.identity) return a.identity < b.identity;
  return a.params < b.params;
}

}  // namespace qbk
