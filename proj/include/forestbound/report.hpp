#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace forestbound {

enum class CheckStatus {
  kPass,
  kFail,
  // An open conjecture was contradicted. Not a bug in this tool; the witness
  // is the interesting output.
  kCritical,
};

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kCritical: return "critical";
  }
  return "fail";
}

struct CheckRecord {
  std::string claim;
  std::string inputs;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::kPass;
  std::string margin;
  nlohmann::json witness;  // null unless a counterexample graph is attached
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string suite)
      : suite_(std::move(suite)), start_(std::chrono::steady_clock::now()) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckRecord>& checks() const { return checks_; }

  void add(CheckRecord r) { checks_.push_back(std::move(r)); }

  void check(std::string claim, std::string inputs, bool ok, std::string expected = {},
             std::string actual = {}, std::string margin = {}) {
    add({std::move(claim), std::move(inputs), std::move(expected), std::move(actual),
         ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(margin), nullptr});
  }

  void merge(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.status == s ? 1 : 0;
    return n;
  }
  std::size_t passed() const { return count(CheckStatus::kPass); }
  std::size_t failed() const { return count(CheckStatus::kFail); }
  std::size_t critical() const { return count(CheckStatus::kCritical); }
  bool ok() const { return failed() == 0; }

  // 0 clean, 1 failures, 4 conjecture counterexample and no failures.
  int exit_status() const {
    if (failed() > 0) return 1;
    if (critical() > 0) return 4;
    return 0;
  }

  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  nlohmann::json to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : checks_) {
      nlohmann::json j = {{"claim", c.claim},       {"inputs", c.inputs}, {"expected", c.expected},
                          {"actual", c.actual},     {"status", to_string(c.status)},
                          {"margin", c.margin}};
      if (!c.witness.is_null()) j["witness"] = c.witness;
      checks.push_back(std::move(j));
    }
    return {{"suite", suite_},
            {"checks", std::move(checks)},
            {"summary", {{"passed", passed()}, {"failed", failed()}, {"critical", critical()}}},
            {"duration_seconds", elapsed_seconds()}};
  }

  std::string summary_line() const {
    return suite_ + ": " + std::to_string(passed()) + " passed, " + std::to_string(failed()) +
           " failed, " + std::to_string(critical()) + " critical";
  }

 private:
  std::string suite_;
  std::vector<CheckRecord> checks_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace forestbound
