#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qbk/qratio.hpp"

namespace qbk {

enum class IdentityId {
  warnaar,
  garrett_hummel,
  schlosser_m2,
  schlosser_m3,
  schlosser_m4,
  schlosser_m5,
  kim_linear,
  kim_quadratic,
  theorem3,
  s12_vs_theorem3,
};

std::string_view to_string(IdentityId id);
/// Throws std::invalid_argument for unknown names.
IdentityId identity_from_string(std::string_view name);
const std::vector<IdentityId>& all_identities();

enum class Status { equal, mismatch, error };
std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

/// Outcome of one identity instance. Both sides are kept in canonical rendering even on
/// success so reports diff cleanly across versions.
struct VerificationReport {
  IdentityId identity = IdentityId::warnaar;
  std::vector<int> params;
  Status status = Status::error;
  std::string lhs;
  std::string rhs;

  static VerificationReport compare(IdentityId id, std::vector<int> params, const QRatio& lhs,
                                    const QRatio& rhs);

  /// {"identity","params","status","lhs","rhs"} in that key order.
  nlohmann::ordered_json to_json() const;
  static VerificationReport from_json(const nlohmann::ordered_json& j);
  /// One line, no trailing newline.
  std::string to_json_line() const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Sort key used for every emitted report stream.
bool report_order(const VerificationReport& a, const VerificationReport& b);

}  // namespace qbk
