#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace slodowy::cli {

using nlohmann::json;

enum ExitCode { kPass = 0, kIdentityViolation = 1, kInvalidInput = 2 };

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RunReport {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::vector<Check> checks;

  void check(std::string name, bool pass, std::string detail = "");
  void append(const RunReport& other, const std::string& prefix);
  int exit_code() const;
  json to_json() const;
  std::string to_text() const;
};

}  // namespace slodowy::cli
