#include "slodowy/dualpair/dualpair.hpp"

#include "slodowy/errors.hpp"
#include "slodowy/liealg/algebra.hpp"

namespace slodowy::dualpair {

namespace {

using Vec = std::vector<Scalar>;

Scalar form_value(const ScalarMatrix& G, const Vec& a, const Vec& b) {
  Scalar s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) s += a[i] * G(i, j) * b[j];
  }
  return s;
}

Vec axpy(const Vec& y, const Scalar& a, const Vec& x) {
  Vec out = y;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += a * x[i];
  return out;
}

Vec scaled(const Vec& x, const Scalar& a) {
  Vec out = x;
  for (auto& c : out) c *= a;
  return out;
}

// Columns of the returned matrix form a basis with Pᵀ G P equal to the standard antidiagonal form:
// pairs (e_k, f_k) with (e_k, f_k) = 1 sit at positions k and m−1−k.
ScalarMatrix hyperbolic_basis(const ScalarMatrix& G, bool skew) {
  const std::size_t m = G.rows();
  std::vector<Vec> work;
  for (std::size_t i = 0; i < m; ++i) {
    Vec e(m, Scalar(0));
    e[i] = 1;
    work.push_back(e);
  }
  std::vector<std::pair<Vec, Vec>> pairs;
  while (!work.empty()) {
    std::optional<Vec> e;
    for (const auto& w : work)
      if (form_value(G, w, w).is_zero()) {
        e = w;
        break;
      }
    for (std::size_t a = 0; !e && a < work.size(); ++a)
      for (std::size_t b = a + 1; !e && b < work.size(); ++b)
        for (int sgn : {1, -1}) {
          Vec c = axpy(work[a], Scalar(sgn), work[b]);
          if (form_value(G, c, c).is_zero()) {
            e = c;
            break;
          }
        }
    if (!e) throw StructureError("form has no rational isotropic vector");
    std::optional<Vec> f;
    for (const auto& w : work) {
      Scalar p = form_value(G, *e, w);
      if (!p.is_zero()) {
        f = scaled(w, p.inverse());
        break;
      }
    }
    if (!f) throw StructureError("degenerate form");
    if (!skew) f = axpy(*f, -form_value(G, *f, *f) * Scalar::fraction(1, 2), *e);
    const Scalar fe = form_value(G, *f, *e);
    std::vector<Vec> next;
    for (const auto& w : work) {
      Vec r = axpy(w, -form_value(G, w, *f), *e);
      r = axpy(r, -form_value(G, w, *e) * fe.inverse(), *f);
      next.push_back(r);
    }
    // Keep an independent spanning subset.
    ScalarMatrix rows(next.size(), m);
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j < m; ++j) rows(i, j) = next[i][j];
    auto rr = exact::rref(rows);
    work.clear();
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      Vec v(m);
      for (std::size_t j = 0; j < m; ++j) v[j] = rr.reduced(i, j);
      work.push_back(v);
    }
    pairs.emplace_back(*e, *f);
  }
  ScalarMatrix P(m, m);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    for (std::size_t j = 0; j < m; ++j) {
      P(j, k) = pairs[k].first[j];
      P(j, m - 1 - k) = pairs[k].second[j];
    }
  return P;
}

std::string entry_name(std::size_t r, std::size_t c) { return "x" + std::to_string(r + 1) + "_" + std::to_string(c + 1); }

}  // namespace

KPConfig make_config(int n) {
  if (n < 2) throw InputError("dual pair needs n >= 2");
  return make_config(liealg::standard_symmetric_form(2 * n), liealg::standard_skew_form(2 * n - 2));
}

KPConfig make_config(const ScalarMatrix& G_V, const ScalarMatrix& G_U) {
  if (!G_V.is_square() || !G_U.is_square() || G_V.rows() != G_U.rows() + 2 || G_V.rows() % 2 != 0)
    throw DimensionError("forms must be 2n x 2n and (2n-2) x (2n-2)");
  if (!(G_V.transpose() == G_V)) throw StructureError("G_V must be symmetric");
  if (!(G_U.transpose() == -G_U)) throw StructureError("G_U must be skew");
  auto inv = exact::inverse(G_V);
  if (!inv || !exact::inverse(G_U)) throw StructureError("forms must be invertible");
  KPConfig cfg;
  cfg.n = int(G_V.rows() / 2);
  cfg.G_V = G_V;
  cfg.G_U = G_U;
  cfg.G_V_inv = *inv;
  return cfg;
}

ScalarMatrix adjoint(const KPConfig& cfg, const ScalarMatrix& X) {
  if (X.rows() != cfg.dim_u() || X.cols() != cfg.dim_v()) throw DimensionError("X must be (2n-2) x 2n");
  return cfg.G_V_inv * X.transpose() * cfg.G_U;
}

PolyMatrix adjoint(const KPConfig& cfg, const PolyMatrix& X) {
  if (X.rows() != cfg.dim_u() || X.cols() != cfg.dim_v()) throw DimensionError("X must be (2n-2) x 2n");
  return exact::to_poly(cfg.G_V_inv) * X.transpose() * exact::to_poly(cfg.G_U);
}

ScalarMatrix adjoint_of_adjoint(const KPConfig& cfg, const ScalarMatrix& Xs) {
  if (Xs.rows() != cfg.dim_v() || Xs.cols() != cfg.dim_u()) throw DimensionError("X* must be 2n x (2n-2)");
  // (X* u, v)_V = (u, X** v)_U
  return *exact::inverse(cfg.G_U) * Xs.transpose() * cfg.G_V;
}

KPMaps kp_maps(const KPConfig& cfg, const ScalarMatrix& X) {
  ScalarMatrix Xs = adjoint(cfg, X);
  return {X * Xs, Xs * X};
}

bool in_sp_u(const KPConfig& cfg, const ScalarMatrix& m) { return (m.transpose() * cfg.G_U + cfg.G_U * m).is_zero(); }
bool in_so_v(const KPConfig& cfg, const ScalarMatrix& m) { return (m.transpose() * cfg.G_V + cfg.G_V * m).is_zero(); }

Scalar pfaffian_of_rho(const KPConfig& cfg, const ScalarMatrix& X) {
  return exact::pfaffian(cfg.G_V * kp_maps(cfg, X).rho);
}

bool pfaffian_locus_check(const KPConfig& cfg, const ScalarMatrix& X) { return pfaffian_of_rho(cfg, X).is_zero(); }

KPElement kp_find_element(int n, int i) {
  if (n < 2) throw InputError("dual pair needs n >= 2");
  if (i < 1 || i > n) throw InputError("need 1 <= i <= n");
  if (i % 2 == 0 && i != n) throw InputError("need i odd or i = n");
  const std::vector<int> L = {2 * n - i, i};
  const std::size_t dv = 2 * std::size_t(n), du = dv - 2;
  ScalarMatrix X(du, dv), AV(dv, dv), AU(du, du);
  std::vector<std::size_t> voff = {0, std::size_t(L[0])}, uoff = {0, std::size_t(L[0] - 1)};
  // String s: X v_j = u_j for j < L_s, X v_{L_s} = 0.
  for (std::size_t s = 0; s < 2; ++s)
    for (int j = 0; j + 1 < L[s]; ++j) X(uoff[s] + j, voff[s] + j) = 1;
  auto sgn = [](int k) { return k % 2 == 0 ? 1 : -1; };
  if (L[0] % 2 == 1) {
    // Each string self-dual; the middle vectors get opposite squares so the forms are split.
    std::vector<int> c = {1, -sgn((L[0] + 1) / 2 - 1) * sgn((L[1] + 1) / 2 - 1)};
    for (std::size_t s = 0; s < 2; ++s) {
      for (int j = 0; j < L[s]; ++j) AV(voff[s] + j, voff[s] + L[s] - 1 - j) = c[s] * sgn(j);
      for (int j = 0; j + 1 < L[s]; ++j) AU(uoff[s] + j, uoff[s] + L[s] - 2 - j) = c[s] * sgn(j);
    }
  } else {
    // Two strings of equal even length, dual to each other.
    const int l = L[0];
    for (int j = 0; j < l; ++j) {
      AV(voff[0] + j, voff[1] + l - 1 - j) = sgn(j);
      AV(voff[1] + l - 1 - j, voff[0] + j) = sgn(j);
    }
    for (int j = 0; j + 1 < l; ++j) {
      AU(uoff[0] + j, uoff[1] + l - 2 - j) = sgn(j);
      AU(uoff[1] + l - 2 - j, uoff[0] + j) = -sgn(j);
    }
  }
  if (!(AV.transpose() == AV) || !(AU.transpose() == -AU)) throw StructureError("string forms have wrong parity");
  ScalarMatrix PV = hyperbolic_basis(AV, false), PU = hyperbolic_basis(AU, true);
  KPConfig cfg = make_config(n);
  if (!(PV.transpose() * AV * PV == cfg.G_V) || !(PU.transpose() * AU * PU == cfg.G_U))
    throw IdentityError("basis change does not reach the standard forms", "");

  KPElement el;
  el.n = n;
  el.i = i;
  el.X = *exact::inverse(PU) * X * PV;
  KPMaps maps = kp_maps(cfg, el.X);
  el.rho_type = liealg::jordan_type(maps.rho);
  el.pi_type = liealg::jordan_type(maps.pi);
  el.surjective = exact::rank(el.X) == du;
  auto want_rho = classify::make_partition({2 * n - i, i});
  auto want_pi = classify::make_partition(i > 1 ? std::vector<int>{2 * n - i - 1, i - 1} : std::vector<int>{2 * n - i - 1});
  if (!(el.rho_type.parts == want_rho.parts) || !(el.pi_type.parts == want_pi.parts) || !el.surjective)
    throw IdentityError("no element found", el.rho_type.to_string() + " " + el.pi_type.to_string());
  return el;
}

ScalarMatrix omega_matrix(const KPConfig& cfg) {
  const std::size_t du = cfg.dim_u(), dv = cfg.dim_v(), N = du * dv;
  // ω(E_a, E_b) = 2tr(E_a E_b*) with E_b* = G_V⁻¹ E_bᵀ G_U: for E_a = E_{rc}, E_b = E_{r'c'} this is
  // 2 (G_V⁻¹)_{c c'} (G_U)_{r' r}.
  ScalarMatrix om(N, N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      std::size_t r = a / dv, c = a % dv, r2 = b / dv, c2 = b % dv;
      om(a, b) = Scalar(2) * cfg.G_V_inv(c, c2) * cfg.G_U(r2, r);
    }
  return om;
}

PoissonStructure::PoissonStructure(const KPConfig& cfg) : cfg_(cfg) {
  ScalarMatrix om = omega_matrix(cfg);
  auto inv = exact::inverse(om);
  if (!inv) throw StructureError("omega is degenerate");
  exact::VarList names;
  for (std::size_t r = 0; r < cfg.dim_u(); ++r)
    for (std::size_t c = 0; c < cfg.dim_v(); ++c) names.push_back(entry_name(r, c));
  env_ = exact::make_env(names);
  inv_.resize(om.rows());
  for (std::size_t a = 0; a < om.rows(); ++a)
    for (std::size_t b = 0; b < om.cols(); ++b)
      if (!(*inv)(a, b).is_zero()) inv_[a].emplace_back(b, (*inv)(a, b));
}

PolyMatrix PoissonStructure::symbolic_X() const {
  PolyMatrix X(cfg_.dim_u(), cfg_.dim_v());
  for (std::size_t r = 0; r < X.rows(); ++r)
    for (std::size_t c = 0; c < X.cols(); ++c) X(r, c) = MPoly::variable(env_, r * X.cols() + c);
  return X;
}

MPoly PoissonStructure::bracket(const MPoly& f, const MPoly& g) const {
  const auto& names = *env_;
  std::vector<MPoly> dg(names.size());
  std::vector<bool> have(names.size(), false);
  MPoly out;
  for (std::size_t a = 0; a < names.size(); ++a) {
    MPoly dfa = f.derivative(names[a]);
    if (dfa.is_zero()) continue;
    for (const auto& [b, w] : inv_[a]) {
      if (!have[b]) {
        dg[b] = g.derivative(names[b]);
        have[b] = true;
      }
      if (!dg[b].is_zero()) out += dfa * dg[b] * w;
    }
  }
  return out;
}

CommutantReport commutant_check(const KPConfig& cfg) {
  PoissonStructure ps(cfg);
  PolyMatrix X = ps.symbolic_X();
  PolyMatrix Xs = adjoint(cfg, X);
  PolyMatrix pi = X * Xs, rho = Xs * X;
  CommutantReport rep;
  for (std::size_t i = 0; i < pi.rows(); ++i)
    for (std::size_t j = 0; j < pi.cols(); ++j)
      for (std::size_t k = 0; k < rho.rows(); ++k)
        for (std::size_t l = 0; l < rho.cols(); ++l) {
          ++rep.pairs_checked;
          MPoly b = ps.bracket(pi(i, j), rho(k, l));
          if (!b.is_zero()) {
            if (rep.violations == 0)
              rep.first_violation = "{pi" + std::to_string(i) + std::to_string(j) + ", rho" + std::to_string(k) +
                                    std::to_string(l) + "} = " + b.to_string();
            ++rep.violations;
          }
        }
  return rep;
}

MomentReport moment_identity_check(const KPConfig& cfg) {
  PoissonStructure ps(cfg);
  PolyMatrix X = ps.symbolic_X();
  PolyMatrix Xs = adjoint(cfg, X);
  auto sp = liealg::make_algebra_with_form(liealg::Kind::sp, cfg.G_U);
  MomentReport rep;
  for (const auto& xi_s : sp.basis) {
    PolyMatrix xi = exact::to_poly(xi_s);
    for (std::size_t r = 0; r < cfg.dim_u(); ++r)
      for (std::size_t c = 0; c < cfg.dim_v(); ++c) {
        ScalarMatrix Ys(cfg.dim_u(), cfg.dim_v());
        Ys(r, c) = 1;
        PolyMatrix Y = exact::to_poly(Ys);
        PolyMatrix Yst = exact::to_poly(adjoint(cfg, Ys));
        MPoly lhs = ((Y * Xs + X * Yst) * xi).trace();
        MPoly rhs = ((xi * X) * Yst).trace() * Scalar(2);
        ++rep.instances;
        if (!rep.constant) {
          if (rhs.is_zero()) {
            if (!lhs.is_zero()) ++rep.violations;
            continue;
          }
          // lhs = c·rhs: read c off a leading term.
          const auto& [e, coef] = *rhs.terms().begin();
          auto it = lhs.terms().find(e);
          if (it == lhs.terms().end()) {
            ++rep.violations;
            continue;
          }
          rep.constant = it->second * coef.inverse();
        }
        if (!(lhs == rhs * *rep.constant)) ++rep.violations;
      }
  }
  return rep;
}

ScalarMatrix random_integer_matrix(std::size_t rows, std::size_t cols, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  ScalarMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

ScalarMatrix random_unipotent(const ScalarMatrix& form, std::mt19937_64& rng) {
  const std::size_t m = form.rows();
  auto inv = exact::inverse(form);
  if (!inv) throw StructureError("form must be invertible");
  ScalarMatrix u = random_integer_matrix(m, m, 2, rng);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= i; ++j) u(i, j) = 0;
  // a = u − G⁻¹uᵀG lies in the algebra and stays strictly upper triangular for antidiagonal G.
  ScalarMatrix a = u - *inv * u.transpose() * form;
  ScalarMatrix out = ScalarMatrix::identity(m), term = ScalarMatrix::identity(m);
  for (std::size_t k = 1; k <= m; ++k) {
    term = term * a * Scalar::fraction(1, long(k));
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

}  // namespace slodowy::dualpair
