#pragma once

#include <cstdint>
#include <string>

#include "report.hpp"

namespace slodowy::cli {

struct GlobalFlags {
  std::string emit = "text";
  std::uint64_t seed = 0;
  long degree_bound = 7;
};

RunReport cmd_slice(const GlobalFlags& g, const std::string& algebra, int rank, const std::string& orbit);
RunReport cmd_classify(const GlobalFlags& g, const std::string& algebra, int rank, const std::string& orbit,
                       bool enumerate);
RunReport cmd_g2(const GlobalFlags& g, const std::string& action);
RunReport cmd_f4(const GlobalFlags& g, const std::string& action);
RunReport cmd_dualpair(const GlobalFlags& g, int n, int i);
RunReport cmd_check_all(const GlobalFlags& g);

// Suites shared by the subcommands and `check all`.
RunReport suite_hook(const std::vector<int>& ns);
RunReport hook_instance(int n);
RunReport suite_classify();
RunReport suite_g2(long degree_bound);
RunReport suite_f4();
RunReport suite_dualpair(std::uint64_t seed);

}  // namespace slodowy::cli
