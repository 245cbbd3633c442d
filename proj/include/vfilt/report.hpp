#pragma once

#include "vfilt/algebra.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace vfilt {

enum class CheckStatus { pass, fail, skipped };

std::string status_name(CheckStatus s);

struct CheckRecord {
  std::string name;
  nlohmann::ordered_json params;
  CheckStatus status = CheckStatus::pass;
  std::optional<State> witness;  // always present on failure
  std::string note;
};

/// Ordered list of check outcomes. Failures must carry a witness vector;
/// skips must carry a reason.
class VerificationReport {
public:
  void pass(std::string name, nlohmann::ordered_json params, std::string note = {});
  void fail(std::string name, nlohmann::ordered_json params, State witness, std::string note = {});
  void skip(std::string name, nlohmann::ordered_json params, std::string reason);

  /// Records pass, or fail with the witness when one is given.
  void check(std::string name, nlohmann::ordered_json params, const std::optional<State>& witness,
             std::string note = {});

  void append(const VerificationReport& other);

  const std::vector<CheckRecord>& records() const { return records_; }
  std::size_t count(CheckStatus s) const;
  bool all_passed() const { return count(CheckStatus::fail) == 0; }

  /// First record with the given name, if any.
  const CheckRecord* find(const std::string& name) const;

private:
  std::vector<CheckRecord> records_;
};

}  // namespace vfilt
