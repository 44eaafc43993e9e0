#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slodowy/classify/partition.hpp"

namespace slodowy::classify {

// Classical families carry a partition; G2 uses "dim:<k>", F4 "regular|subregular|other",
// E-types "regular|nonregular".
struct OrbitLabel {
  Family family = Family::A;
  int rank = 1;
  std::optional<Partition> partition;
  std::string name;

  std::string to_string() const;
};

struct ClassificationVerdict {
  int b2 = 0;
  bool star = false;
  std::optional<std::string> subregular_singularity;
  std::vector<std::string> notes;
};

int family_rank(Family f, int rank);
OrbitLabel parse_orbit_label(Family f, int rank, const std::string& orbit);
bool is_regular(const OrbitLabel& label);
bool is_subregular(const OrbitLabel& label);

ClassificationVerdict classify(const OrbitLabel& label);
std::string subregular_singularity(Family f, int rank);

// All non-regular orbit labels of the family, in a fixed order.
std::vector<OrbitLabel> nonregular_orbits(Family f, int rank);
// Closure order; labels must share family and rank.
bool label_closure_leq(const OrbitLabel& a, const OrbitLabel& b);

}  // namespace slodowy::classify
