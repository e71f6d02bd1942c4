#include "torsion/report.hpp"

#include <algorithm>

namespace torsion {

void Report::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks) checks.push_back({other.title + "/" + c.name, c.passed, c.detail});
  if (!other.data.empty()) data[other.title] = other.data;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

nlohmann::json Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  nlohmann::json out = {{"title", title}, {"passed", passed()}, {"failures", failures()}, {"checks", arr}};
  if (!data.empty()) out["data"] = data;
  return out;
}

std::string Report::to_text() const {
  std::string out = title + ": " + (passed() ? "PASS" : "FAIL") + " (" +
                    std::to_string(checks.size() - failures()) + "/" + std::to_string(checks.size()) +
                    " checks)\n";
  for (const auto& c : checks) {
    out += std::string(c.passed ? "  ok   " : "  FAIL ") + c.name;
    if (!c.detail.empty()) out += "  " + c.detail;
    out += "\n";
  }
  return out;
}

}  // namespace torsion
