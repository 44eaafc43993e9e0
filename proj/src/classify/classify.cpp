#include "slodowy/classify/classify.hpp"

#include "slodowy/errors.hpp"

namespace slodowy::classify {

namespace {

const std::vector<int> kG2Dims{12, 10, 8, 6, 0};

int g2_dim(const OrbitLabel& l) {
  if (l.name.rfind("dim:", 0) != 0) throw InputError("G2 orbits are labelled dim:<k>, got " + l.name);
  int d = 0;
  try {
    d = std::stoi(l.name.substr(4));
  } catch (const std::exception&) {
    throw InputError("bad G2 orbit label " + l.name);
  }
  if (std::find(kG2Dims.begin(), kG2Dims.end(), d) == kG2Dims.end())
    throw InputError("G2 has no nilpotent orbit of dimension " + std::to_string(d));
  return d;
}

int f4_level(const OrbitLabel& l) {
  if (l.name == "regular") return 2;
  if (l.name == "subregular") return 1;
  if (l.name == "other") return 0;
  throw InputError("F4 orbits are regular|subregular|other, got " + l.name);
}

void check_rank(Family f, int rank) {
  if (f == Family::B || f == Family::C) {
    if (rank < 2) throw InputError(family_name(f) + " needs rank >= 2");
  } else if (f == Family::D) {
    if (rank < 4) throw InputError("D needs rank >= 4");
  } else if (f == Family::A && rank < 1) {
    throw InputError("A needs rank >= 1");
  }
}

}  // namespace

std::string OrbitLabel::to_string() const {
  std::string base = family_name(family);
  if (is_classical(family)) base += std::to_string(rank);
  return base + " " + (partition ? partition->to_string() : name);
}

int family_rank(Family f, int rank) {
  switch (f) {
    case Family::G2: return 2;
    case Family::F4: return 4;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    default: return rank;
  }
}

OrbitLabel parse_orbit_label(Family f, int rank, const std::string& orbit) {
  OrbitLabel l;
  l.family = f;
  l.rank = family_rank(f, rank);
  if (is_classical(f)) {
    check_rank(f, l.rank);
    l.partition = parse_partition(orbit);
    if (!valid_partition(f, l.rank, *l.partition))
      throw InputError(l.partition->to_string() + " is not a valid orbit label for " + family_name(f) +
                       std::to_string(l.rank));
    return l;
  }
  l.name = orbit;
  if (f == Family::G2) g2_dim(l);
  if (f == Family::F4) f4_level(l);
  if ((f == Family::E6 || f == Family::E7 || f == Family::E8) && orbit != "regular" && orbit != "nonregular")
    throw InputError("E-type orbits are regular|nonregular, got " + orbit);
  return l;
}

bool is_regular(const OrbitLabel& l) {
  if (is_classical(l.family)) return l.partition && *l.partition == regular_partition(l.family, l.rank);
  if (l.family == Family::G2) return g2_dim(l) == 12;
  return l.name == "regular";
}

bool is_subregular(const OrbitLabel& l) {
  if (is_classical(l.family)) return l.partition && *l.partition == subregular_partition(l.family, l.rank);
  if (l.family == Family::G2) return g2_dim(l) == 10;
  return l.name == "subregular";
}

std::string subregular_singularity(Family f, int rank) {
  switch (f) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "A" + std::to_string(2 * rank - 1);
    case Family::C: return "D" + std::to_string(rank + 1);
    case Family::D: return "D" + std::to_string(rank);
    case Family::G2: return "D4";
    case Family::F4: return "E6";
    default: return family_name(f);
  }
}

ClassificationVerdict classify(const OrbitLabel& l) {
  if (is_classical(l.family)) {
    check_rank(l.family, l.rank);
    if (!l.partition || !valid_partition(l.family, l.rank, *l.partition))
      throw InputError("invalid orbit label " + l.to_string());
  }
  if (is_regular(l)) throw InputError("regular orbit excluded: " + l.to_string());

  const int n = l.rank;
  ClassificationVerdict v;
  v.b2 = n;
  switch (l.family) {
    case Family::A:
    case Family::D:
    case Family::E6:
    case Family::E7:
    case Family::E8: v.notes.push_back("simply laced: every non-regular orbit satisfies b2 = rank"); break;
    case Family::B:
      if (*l.partition == make_partition({2 * n - 1, 1, 1})) {
        v.b2 = 2 * n - 1;
        v.notes.push_back("type B subregular [2n-1,1,1]: b2 = 2n-1");
      } else {
        v.notes.push_back("type B, not subregular: b2 = n");
      }
      break;
    case Family::C: {
      const auto& p = l.partition->parts;
      bool two_rows = p.size() == 2 && p[0] % 2 == 0 && p[1] % 2 == 0;
      bool hit = two_rows || (p.size() == 2 && p[0] == n && p[1] == n);
      if (hit) {
        v.b2 = n + 1;
        v.notes.push_back("type C two-row orbit [n,n] or [2n-2i,2i]: b2 = n+1");
      } else {
        v.notes.push_back("type C, other orbit: b2 = n");
      }
      break;
    }
    case Family::G2: {
      int d = g2_dim(l);
      v.b2 = d == 10 ? 4 : d == 8 ? 3 : 2;
      if (d == 0) {
        v.notes.push_back("zero orbit: fibre is the full flag variety, b2 = rank (inferred, not tabulated)");
      } else {
        v.notes.push_back("G2 orbit of dimension " + std::to_string(d) + ": tabulated b2");
      }
      break;
    }
    case Family::F4:
      v.b2 = l.name == "subregular" ? 6 : 4;
      v.notes.push_back(l.name == "subregular" ? "F4 subregular: b2 = 6" : "F4 below the 44-dimensional orbit: b2 = 4");
      break;
  }
  v.star = v.b2 == n;
  if (is_subregular(l)) v.subregular_singularity = subregular_singularity(l.family, n);
  return v;
}

std::vector<OrbitLabel> nonregular_orbits(Family f, int rank) {
  std::vector<OrbitLabel> out;
  int r = family_rank(f, rank);
  if (is_classical(f)) {
    check_rank(f, r);
    for (auto& p : valid_partitions(f, r)) {
      OrbitLabel l{f, r, p, ""};
      if (!is_regular(l)) out.push_back(std::move(l));
    }
    return out;
  }
  std::vector<std::string> names;
  if (f == Family::G2) names = {"dim:10", "dim:8", "dim:6", "dim:0"};
  else if (f == Family::F4) names = {"subregular", "other"};
  else names = {"nonregular"};
  for (auto& nm : names) out.push_back(OrbitLabel{f, r, std::nullopt, nm});
  return out;
}

bool label_closure_leq(const OrbitLabel& a, const OrbitLabel& b) {
  if (a.family != b.family || a.rank != b.rank) throw InputError("closure order across different algebras");
  if (is_classical(a.family)) return closure_leq(a.family, a.rank, *a.partition, *b.partition);
  if (a.family == Family::G2) return g2_dim(a) <= g2_dim(b);
  if (a.family == Family::F4) return f4_level(a) <= f4_level(b);
  return a.name == b.name || b.name == "regular";
}

}  // namespace slodowy::classify
