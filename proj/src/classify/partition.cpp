#include "slodowy/classify/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "slodowy/errors.hpp"

namespace slodowy::classify {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::G2, Family::F4, Family::E6, Family::E7,
                   Family::E8}) {
    std::string n = family_name(f);
    std::string lower = n;
    std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
    if (s == n || s == lower) return f;
  }
  throw InputError("unknown family: " + std::string(s));
}

bool is_classical(Family f) { return f == Family::A || f == Family::B || f == Family::C || f == Family::D; }

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::multiplicity(int part) const { return static_cast<int>(std::count(parts.begin(), parts.end(), part)); }

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
  return out + "]";
}

Partition parse_partition(std::string_view s) {
  Partition p;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string_view::npos) end = s.size();
    std::string_view tok = s.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0)
      throw InputError("partition parts must be positive integers: '" + std::string(s) + "'");
    if (!p.parts.empty() && v > p.parts.back())
      throw InputError("partition must be weakly decreasing: '" + std::string(s) + "'");
    p.parts.push_back(v);
    start = end + 1;
  }
  return p;
}

Partition make_partition(std::vector<int> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition{std::move(parts)};
}

int defining_dim(Family f, int rank) {
  switch (f) {
    case Family::A: return rank + 1;
    case Family::B: return 2 * rank + 1;
    case Family::C:
    case Family::D: return 2 * rank;
    default: throw InputError("family " + family_name(f) + " has no partition labels");
  }
}

bool valid_partition(Family f, int rank, const Partition& d) {
  if (!is_classical(f) || rank < 1) return false;
  if (d.sum() != defining_dim(f, rank)) return false;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    if (d.parts[i] <= 0 || (i > 0 && d.parts[i] > d.parts[i - 1])) return false;
  }
  for (int part : d.parts) {
    int m = d.multiplicity(part);
    // B, D: even parts come in pairs. C: odd parts come in pairs.
    if ((f == Family::B || f == Family::D) && part % 2 == 0 && m % 2 != 0) return false;
    if (f == Family::C && part % 2 == 1 && m % 2 != 0) return false;
  }
  return true;
}

bool dominance_leq(const Partition& d, const Partition& e) {
  std::size_t len = std::max(d.parts.size(), e.parts.size());
  int sd = 0;
  int se = 0;
  for (std::size_t k = 0; k < len; ++k) {
    sd += k < d.parts.size() ? d.parts[k] : 0;
    se += k < e.parts.size() ? e.parts[k] : 0;
    if (sd > se) return false;
  }
  return sd == se;
}

bool closure_leq(Family f, int rank, const Partition& d, const Partition& e) {
  if (!valid_partition(f, rank, d) || !valid_partition(f, rank, e))
    throw InputError("closure order needs valid partitions for " + family_name(f) + std::to_string(rank));
  return dominance_leq(d, e);
}

namespace {

void gen(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> all_partitions(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (m >= 0) gen(m, m, cur, out);
  return out;
}

std::vector<Partition> valid_partitions(Family f, int rank) {
  std::vector<Partition> out;
  for (auto& p : all_partitions(defining_dim(f, rank)))
    if (valid_partition(f, rank, p)) out.push_back(std::move(p));
  return out;
}

Partition regular_partition(Family f, int rank) {
  switch (f) {
    case Family::A: return Partition{{rank + 1}};
    case Family::B: return Partition{{2 * rank + 1}};
    case Family::C: return Partition{{2 * rank}};
    case Family::D: return Partition{{2 * rank - 1, 1}};
    default: throw InputError("family " + family_name(f) + " has no partition labels");
  }
}

Partition subregular_partition(Family f, int rank) {
  switch (f) {
    case Family::A: return make_partition({rank, 1});
    case Family::B: return make_partition({2 * rank - 1, 1, 1});
    case Family::C: return make_partition({2 * rank - 2, 2});
    case Family::D: return make_partition({2 * rank - 3, 3});
    default: throw InputError("family " + family_name(f) + " has no partition labels");
  }
}

}  // namespace slodowy::classify
