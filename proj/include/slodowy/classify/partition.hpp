#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace slodowy::classify {

enum class Family { A, B, C, D, G2, F4, E6, E7, E8 };

std::string family_name(Family f);
Family parse_family(std::string_view s);
bool is_classical(Family f);

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int sum() const;
  int multiplicity(int part) const;
  std::string to_string() const;  // "[6,1,1]"
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

// Comma-separated positive integers, weakly decreasing. Throws InputError otherwise.
Partition parse_partition(std::string_view s);
// Sorts and drops zero parts.
Partition make_partition(std::vector<int> parts);

// Sum of parts the family's defining representation needs at this rank.
int defining_dim(Family f, int rank);
bool valid_partition(Family f, int rank, const Partition& d);
bool dominance_leq(const Partition& d, const Partition& e);
bool closure_leq(Family f, int rank, const Partition& d, const Partition& e);

std::vector<Partition> all_partitions(int m);
std::vector<Partition> valid_partitions(Family f, int rank);
Partition regular_partition(Family f, int rank);
Partition subregular_partition(Family f, int rank);

}  // namespace slodowy::classify
