#include "vfilt/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace vfilt {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

void VerificationReport::pass(std::string name, nlohmann::ordered_json params, std::string note) {
  records_.push_back({std::move(name), std::move(params), CheckStatus::pass, std::nullopt, std::move(note)});
}

void VerificationReport::fail(std::string name, nlohmann::ordered_json params, State witness,
                              std::string note) {
  records_.push_back(
      {std::move(name), std::move(params), CheckStatus::fail, std::move(witness), std::move(note)});
}

void VerificationReport::skip(std::string name, nlohmann::ordered_json params, std::string reason) {
  if (reason.empty()) throw std::logic_error("skipped check '" + name + "' needs a reason");
  records_.push_back(
      {std::move(name), std::move(params), CheckStatus::skipped, std::nullopt, std::move(reason)});
}

void VerificationReport::check(std::string name, nlohmann::ordered_json params,
                               const std::optional<State>& witness, std::string note) {
  if (witness) {
    fail(std::move(name), std::move(params), *witness, std::move(note));
  } else {
    pass(std::move(name), std::move(params), std::move(note));
  }
}

void VerificationReport::append(const VerificationReport& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return std::count_if(records_.begin(), records_.end(),
                       [s](const CheckRecord& r) { return r.status == s; });
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
  for (const auto& r : records_)
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace vfilt
