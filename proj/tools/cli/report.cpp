#include "report.hpp"

#include <sstream>

namespace slodowy::cli {

void RunReport::check(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

void RunReport::append(const RunReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + "." + c.name, c.pass, c.detail});
  results[prefix] = other.results;
}

int RunReport::exit_code() const {
  for (const auto& c : checks)
    if (!c.pass) return kIdentityViolation;
  return kPass;
}

json RunReport::to_json() const {
  json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  j["checks"] = json::array();
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  j["exit_code"] = exit_code();
  return j;
}

namespace {

void render(std::ostringstream& os, const json& value, const std::string& indent) {
  for (const auto& [key, v] : value.items()) {
    if (v.is_object()) {
      os << indent << key << ":\n";
      render(os, v, indent + "  ");
    } else if (v.is_string()) {
      os << indent << key << ": " << v.get<std::string>() << "\n";
    } else {
      os << indent << key << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  render(os, results, "");
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << "exit_code: " << exit_code() << "\n";
  return os.str();
}

}  // namespace slodowy::cli
