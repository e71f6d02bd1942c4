#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace torsion {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Ordered list of named pass/fail checks. Contains no timings, so equal inputs
// give byte-identical output.
struct Report {
  Report() = default;
  explicit Report(std::string t) : title(std::move(t)) {}

  std::string title;
  std::vector<Check> checks;
  nlohmann::json data = nlohmann::json::object();

  void add(std::string name, bool passed, std::string detail = {});
  // Appends other's checks, prefixing their names with other.title.
  void merge(const Report& other);
  bool passed() const;
  std::size_t failures() const;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace torsion
