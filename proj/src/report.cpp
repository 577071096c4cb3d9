#include "simpfib/report.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <stdexcept>

namespace simpfib {

void Report::add(std::vector<CheckRecord> const& records) {
  records_.insert(records_.end(), records.begin(), records.end());
}

void Report::append(Report const& other, std::string const& prefix) {
  for (auto record : other.records_) {
    record.name = prefix + record.name;
    records_.push_back(std::move(record));
  }
}

bool Report::passed() const noexcept {
  return std::all_of(records_.begin(), records_.end(),
                     [](CheckRecord const& r) { return r.passed; });
}

std::vector<CheckRecord> Report::failures() const {
  std::vector<CheckRecord> out;
  std::copy_if(records_.begin(), records_.end(), std::back_inserter(out),
               [](CheckRecord const& r) { return !r.passed; });
  return out;
}

CheckRecord const* Report::find(std::string const& prefix) const {
  for (auto const& r : records_) {
    if (r.name.rfind(prefix, 0) == 0) {
      return &r;
    }
  }
  return nullptr;
}

nlohmann::json Report::to_json() const {
  nlohmann::json records = nlohmann::json::array();
  for (auto const& r : records_) {
    records.push_back({
        {"name", r.name},
        {"dimension", r.dimension},
        {"status", r.passed ? "pass" : "fail"},
        {"checked", r.checked},
        {"counterexample", r.counterexample ? nlohmann::json(*r.counterexample)
                                            : nlohmann::json(nullptr)},
        {"millis", r.millis},
    });
  }
  return {
      {"schema", kReportSchema},
      {"suite", suite_},
      {"status", passed() ? "pass" : "fail"},
      {"config", config_},
      {"records", records},
  };
}

Report Report::from_json(nlohmann::json const& j) {
  if (j.at("schema").get<std::string>() != kReportSchema) {
    throw std::runtime_error("unknown report schema " +
                             j.at("schema").dump());
  }
  Report report(j.at("suite").get<std::string>());
  report.config_ = j.at("config");
  for (auto const& r : j.at("records")) {
    CheckRecord record;
    record.name = r.at("name").get<std::string>();
    record.dimension = r.at("dimension").get<int>();
    record.passed = r.at("status").get<std::string>() == "pass";
    record.checked = r.at("checked").get<std::uint64_t>();
    if (!r.at("counterexample").is_null()) {
      record.counterexample = r.at("counterexample").get<std::string>();
    }
    record.millis = r.at("millis").get<double>();
    report.records_.push_back(std::move(record));
  }
  return report;
}

std::string Report::to_text() const {
  std::string out = fmt::format("suite {}\n", suite_);
  if (!config_.empty()) {
    out += fmt::format("config {}\n", config_.dump());
  }
  for (auto const& r : records_) {
    out += fmt::format("{}  {}", r.passed ? "PASS" : "FAIL", r.name);
    if (r.dimension >= 0) {
      out += fmt::format("  dim={}", r.dimension);
    }
    out += fmt::format("  checked={}\n", r.checked);
    if (r.counterexample) {
      out += fmt::format("      counterexample: {}\n", *r.counterexample);
    }
  }
  auto failed = failures().size();
  out += fmt::format("overall {} ({} records, {} failed)\n",
                     failed == 0 ? "PASS" : "FAIL", records_.size(), failed);
  return out;
}

}  // namespace simpfib
