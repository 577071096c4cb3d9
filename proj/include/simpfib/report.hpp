// Pass/fail records shared by every validator, and the versioned report
// that the command-line front end prints.

#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace simpfib {

inline constexpr char const* kReportSchema = "simpfib-report/1";

struct CheckRecord {
  std::string name;
  int dimension = -1;  // -1 when the check is not graded
  bool passed = true;
  std::uint64_t checked = 0;
  std::optional<std::string> counterexample;
  double millis = 0.0;

  bool operator==(CheckRecord const&) const = default;
};

class Report {
 public:
  explicit Report(std::string suite = {}) : suite_(std::move(suite)) {}

  std::string const& suite() const noexcept { return suite_; }
  std::vector<CheckRecord> const& records() const noexcept { return records_; }
  nlohmann::json& config() noexcept { return config_; }
  nlohmann::json const& config() const noexcept { return config_; }

  void add(CheckRecord record) { records_.push_back(std::move(record)); }
  void add(std::vector<CheckRecord> const& records);
  /// Records of `other` are appended with `prefix` prepended to their names.
  void append(Report const& other, std::string const& prefix = {});

  bool passed() const noexcept;
  std::vector<CheckRecord> failures() const;
  /// First record whose name starts with `prefix`, if any.
  CheckRecord const* find(std::string const& prefix) const;

  nlohmann::json to_json() const;
  static Report from_json(nlohmann::json const& j);
  std::string to_text() const;

 private:
  std::string suite_;
  std::vector<CheckRecord> records_;
  nlohmann::json config_ = nlohmann::json::object();
};

}  // namespace simpfib
