#include <algorithm>
#include <numeric>

#include "slodowy/g2/slice.hpp"

namespace slodowy::g2 {

namespace {

using exact::Scalar;

long height(const Scalar& s) {
  mpq_class r = s.rational_part();
  return std::max(mpz_class(abs(r.get_num())).get_si(), r.get_den().get_si());
}

// Nonzero p/q with |p|, q ≤ bound, by height, then positive before negative, then value.
std::vector<Scalar> candidates(long bound) {
  std::vector<Scalar> out;
  for (long q = 1; q <= bound; ++q)
    for (long p = 1; p <= bound; ++p)
      if (std::gcd(p, q) == 1) {
        out.push_back(Scalar::fraction(p, q));
        out.push_back(Scalar::fraction(-p, q));
      }
  std::stable_sort(out.begin(), out.end(), [](const Scalar& x, const Scalar& y) {
    long hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    bool px = x.rational_part() > 0, py = y.rational_part() > 0;
    if (px != py) return px;
    return mpq_class(abs(x.rational_part())) < mpq_class(abs(y.rational_part()));
  });
  return out;
}

// Relation as Σ k2^i k3^j P_ij.
using Graded = std::vector<std::pair<std::pair<unsigned, unsigned>, MPoly>>;

Graded split(const MPoly& rel) {
  Graded g;
  for (unsigned i = 0; i <= rel.degree_in("k2"); ++i) {
    MPoly ci = rel.coefficient("k2", i);
    for (unsigned j = 0; j <= ci.degree_in("k3"); ++j) {
      MPoly cij = ci.coefficient("k3", j);
      if (!cij.is_zero()) g.push_back({{i, j}, cij.with_vars(exact::VarList{"x1", "x2", "y1", "y2"})});
    }
  }
  return g;
}

Scalar spow(const Scalar& s, unsigned e) {
  Scalar r(1);
  for (unsigned k = 0; k < e; ++k) r *= s;
  return r;
}

}  // namespace

S3ModelReport s3_invariant_model_check(long bound) {
  if (bound < 1) throw InputError("normalization bound must be positive");
  auto env = exact::make_env({"x1", "x2", "y1", "y2", "T"});
  auto var = [&](const char* n) { return MPoly::variable(env, n); };
  const MPoly x1 = var("x1"), x2 = var("x2"), y1 = var("y1"), y2 = var("y2"), T = var("T");
  std::vector<MPoly> z = {x1 + T * y1, x2 + T * y2, -(x1 + T * y1) - (x2 + T * y2)};
  MPoly e2 = z[0] * z[1] + z[0] * z[2] + z[1] * z[2];
  MPoly e3 = z[0] * z[1] * z[2];
  const exact::VarList base = {"x1", "x2", "y1", "y2"};
  auto pol = [&](const MPoly& F, unsigned deg) {
    std::vector<MPoly> out;
    long binom = 1;
    for (unsigned k = 0; k <= deg; ++k) {
      out.push_back((F.coefficient("T", k) * Scalar::fraction(1, binom)).with_vars(base));
      binom = binom * long(deg - k) / long(k + 1);
    }
    return out;
  };
  std::vector<MPoly> p2 = pol(e2, 2), p3 = pol(e3, 3);

  auto kenv = exact::make_env({"k2", "k3", "x1", "x2", "y1", "y2"});
  MPoly k2 = MPoly::variable(kenv, "k2"), k3 = MPoly::variable(kenv, "k3");
  const std::vector<std::string> names = {"a", "b", "c", "p", "q", "r", "s"};
  std::map<std::string, MPoly> scaled;
  for (std::size_t i = 0; i < 3; ++i) scaled[names[i]] = k2 * p2[i];
  for (std::size_t i = 0; i < 4; ++i) scaled[names[3 + i]] = k3 * p3[i];

  G2SliceData d;
  {
    // The relations alone, without the g2 checks.
    auto env8 = exact::make_env({"a", "b", "c", "p", "q", "r", "s"});
    auto v = [&](const char* n) { return MPoly::variable(env8, n); };
    const MPoly a = v("a"), b = v("b"), c = v("c"), p = v("p"), q = v("q"), r = v("r"), s = v("s");
    MPoly disc = a * c - b * b;
    d.t1 = a * disc + (q * q - r * p) * Scalar(2);
    d.t2 = b * disc + (r * q - p * s);
    d.t3 = c * disc + (r * r - q * s) * Scalar(2);
    d.z1 = a * s - b * r * Scalar(2) + c * q;
    d.z2 = a * r - b * q * Scalar(2) + c * p;
  }
  const std::vector<std::pair<std::string, const MPoly*>> rels = {
      {"z1", &d.z1}, {"z2", &d.z2}, {"t1", &d.t1}, {"t2", &d.t2}, {"t3", &d.t3}};
  std::vector<Graded> graded;
  for (const auto& [name, rel] : rels) graded.push_back(split(rel->substitute(scaled)));

  S3ModelReport rep;
  auto cands = candidates(bound);
  std::vector<std::pair<Scalar, Scalar>> pairs;
  for (const auto& u : cands)
    for (const auto& w : cands) pairs.emplace_back(u, w);
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return std::max(height(x.first), height(x.second)) < std::max(height(y.first), height(y.second));
  });
  for (const auto& [c2, c3] : pairs) {
    ++rep.candidates_tried;
    bool ok = true;
    for (const auto& g : graded) {
      MPoly sum;
      for (const auto& [e, poly] : g) sum += poly * (spow(c2, e.first) * spow(c3, e.second));
      if (!sum.is_zero()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    rep.found = true;
    rep.kappa2 = c2;
    rep.kappa3 = c3;
    break;
  }
  if (!rep.found) return rep;

  std::map<std::string, MPoly> values;
  for (std::size_t i = 0; i < 3; ++i) values[names[i]] = p2[i] * rep.kappa2;
  for (std::size_t i = 0; i < 4; ++i) values[names[3 + i]] = p3[i] * rep.kappa3;
  for (const auto& n : names) rep.invariants.emplace_back(n, values.at(n));
  for (const auto& [name, rel] : rels) rep.relations.emplace_back(name, rel->substitute(values).trimmed());
  return rep;
}

}  // namespace slodowy::g2
