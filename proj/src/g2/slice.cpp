#include "slodowy/g2/slice.hpp"

#include "slodowy/exact/elimination.hpp"

namespace slodowy::g2 {

namespace {

const exact::VarList kSliceVars = {"a", "b", "c", "p", "q", "r", "s", "u"};

std::vector<MPoly> slice_vars() {
  auto env = exact::make_env(kSliceVars);
  std::vector<MPoly> out;
  for (std::size_t k = 0; k < kSliceVars.size(); ++k) out.push_back(MPoly::variable(env, k));
  return out;
}

G2Elt sl3(std::size_t i, std::size_t j) {
  G2Elt e;
  e.A(i, j) = MPoly(1);
  return e;
}

void require(bool ok, const std::string& what, const G2Elt& diff) {
  if (ok) return;
  std::string d = exact::to_string(diff.A) + " | " + exact::to_string(diff.v) + " | " + exact::to_string(diff.w);
  throw IdentityError(what, d);
}

}  // namespace

G2Triple minimal_triple() {
  G2Triple t;
  t.x = sl3(0, 1);
  t.y = sl3(1, 0);
  t.h.A(0, 0) = MPoly(1);
  t.h.A(1, 1) = MPoly(-1);
  return t;
}

G2Elt slice_element() {
  auto v = slice_vars();
  const auto &a = v[0], &b = v[1], &c = v[2], &p = v[3], &q = v[4], &r = v[5], &s = v[6], &u = v[7];
  const Scalar half = Scalar::fraction(1, 2);
  G2Elt e;
  e.A(0, 0) = -b * half;
  e.A(0, 1) = MPoly(1);
  e.A(1, 0) = u;
  e.A(1, 1) = -b * half;
  e.A(1, 2) = p;
  e.A(2, 0) = s;
  e.A(2, 2) = b;
  e.v(1, 0) = q * Scalar(2);
  e.v(2, 0) = c;
  e.w(0, 0) = r * Scalar(2);
  e.w(0, 2) = a;
  return e;
}

G2Elt printed_slice_element() {
  auto v = slice_vars();
  const auto &a = v[0], &b = v[1], &c = v[2], &p = v[3], &q = v[4], &r = v[5], &s = v[6], &u = v[7];
  const Scalar half = Scalar::fraction(1, 2);
  G2Elt e;
  e.A(0, 0) = b * half;
  e.A(0, 1) = MPoly(1);
  e.A(1, 0) = u;
  e.A(1, 1) = b * half;
  e.A(1, 2) = p;
  e.A(2, 0) = s;
  e.A(2, 2) = -b;
  e.v(1, 0) = q * Scalar(2);
  e.v(2, 0) = a;
  e.w(0, 0) = r * Scalar(2);
  e.w(0, 2) = c;
  return e;
}

MPoly chi6_identity_rhs(const G2SliceData& d, const MPoly& t4, const MPoly& t5) {
  auto v = slice_vars();
  const auto &a = v[0], &b = v[1], &c = v[2];
  const Scalar half = Scalar::fraction(1, 2);
  MPoly disc = a * c - b * b;
  return d.t1 * d.t3 - d.t2 * d.t2 - (t4 * t4 * a + t4 * t5 * b * Scalar(2) + t5 * t5 * c) * half -
         (a * d.t3 - b * d.t2 * Scalar(2) + c * d.t1) * d.chi2 * half + disc * d.chi2 * d.chi2 * Scalar::fraction(1, 4);
}

G2SliceData g2_slice_minimal() {
  G2Triple tr = minimal_triple();
  require(bracket(tr.h, tr.x) == tr.x * MPoly(2), "[h,x] = 2x", bracket(tr.h, tr.x) - tr.x * MPoly(2));
  require(bracket(tr.h, tr.y) == tr.y * MPoly(-2), "[h,y] = -2y", bracket(tr.h, tr.y) + tr.y * MPoly(2));
  require(bracket(tr.x, tr.y) == tr.h, "[x,y] = h", bracket(tr.x, tr.y) - tr.h);

  G2SliceData d;
  d.xi = slice_element();
  G2Elt comm = bracket(tr.y, d.xi - tr.x);
  require(comm.is_zero(), "[y, xi - x] = 0", comm);

  auto bas = basis();
  exact::ScalarMatrix ad(14, 14);
  for (std::size_t j = 0; j < 14; ++j) {
    auto c = coords(bracket(tr.y, bas[j]));
    for (std::size_t i = 0; i < 14; ++i) ad(i, j) = c[i];
  }
  d.kernel_dim = exact::kernel_basis(ad).size();
  if (d.kernel_dim != 8) throw IdentityError("dim Ker ad y != 8", std::to_string(d.kernel_dim));

  d.weights = {{"a", 2}, {"b", 2}, {"c", 2}, {"p", 3}, {"q", 3}, {"r", 3}, {"s", 3}, {"u", 4}};
  auto v = slice_vars();
  const auto &a = v[0], &b = v[1], &c = v[2], &p = v[3], &q = v[4], &r = v[5], &s = v[6];
  MPoly disc = a * c - b * b;
  d.t1 = a * disc + (q * q - r * p) * Scalar(2);
  d.t2 = b * disc + (r * q - p * s);
  d.t3 = c * disc + (r * r - q * s) * Scalar(2);
  d.z1 = a * s - b * r * Scalar(2) + c * q;
  d.z2 = a * r - b * q * Scalar(2) + c * p;
  d.f = d.z1 * d.z1 * a - d.z1 * d.z2 * b * Scalar(2) + d.z2 * d.z2 * c + (d.t2 * d.t2 - d.t1 * d.t3) * Scalar(2);

  Invariants inv = g2_invariants(d.xi);
  d.chi2 = inv.chi2;
  d.chi6 = inv.chi6;
  MPoly expected_chi2 = (v[7] - disc * Scalar::fraction(3, 4)) * Scalar(-2);
  if (!(d.chi2 == expected_chi2)) throw IdentityError("chi2(xi) != -2(u - 3/4(ac-b^2))", (d.chi2 - expected_chi2).to_string());

  const std::vector<std::pair<std::string, std::pair<MPoly, MPoly>>> readings = {
      {"t4=z1,t5=z2", {d.z1, d.z2}},
      {"t4=z2,t5=z1", {d.z2, d.z1}},
      {"t4=z1,t5=-z2", {d.z1, -d.z2}},
      {"t4=-z1,t5=z2", {-d.z1, d.z2}},
  };
  for (const auto& [label, t] : readings) {
    bool holds = d.chi6 == chi6_identity_rhs(d, t.first, t.second);
    d.readings.push_back({label, holds});
    if (holds && !d.passing_reading) d.passing_reading = label;
  }
  return d;
}

MPoly g2_hypersurface() {
  G2SliceData d = g2_slice_minimal();
  auto v = slice_vars();
  MPoly disc = v[0] * v[2] - v[1] * v[1];
  MPoly g = d.chi6.substitute({{"u", disc * Scalar::fraction(3, 4)}}) * Scalar(-2);
  g = g.with_vars(exact::VarList{"a", "b", "c", "p", "q", "r", "s"});
  MPoly f = d.f.with_vars(g.env());
  if (!(g == f)) throw IdentityError("-2 chi6(xi)|_{chi2=0} differs from f", (g - f).to_string());
  return g;
}

bool SingularLocusReport::all_found() const {
  for (const auto& e : entries)
    if (!e.found) return false;
  return !entries.empty();
}

SingularLocusReport g2_singular_locus_check(long bound) {
  if (bound < 0) throw InputError("degree bound must be non-negative");
  G2SliceData d = g2_slice_minimal();
  const exact::VarList vars = {"a", "b", "c", "p", "q", "r", "s"};
  auto env = exact::make_env(vars);
  exact::Weights w;
  for (const auto& name : vars) w[name] = d.weights.at(name);
  std::vector<MPoly> gens;
  for (const MPoly* g : {&d.t1, &d.t2, &d.t3, &d.z1, &d.z2}) gens.push_back(g->with_vars(env));
  MPoly f = d.f.with_vars(env);
  SingularLocusReport rep;
  for (const auto& name : vars) {
    CertificateEntry e;
    e.var = name;
    MPoly df = f.derivative(name);
    for (long b = bound; b <= std::max(bound, 12L); ++b) {
      auto cof = exact::ideal_membership_bounded(df, gens, w, b);
      e.bound = b;
      if (cof) {
        e.found = true;
        e.cofactors = *cof;
        break;
      }
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace slodowy::g2
