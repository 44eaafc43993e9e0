#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "slodowy/classify/partition.hpp"
#include "slodowy/exact/linalg.hpp"

namespace slodowy::dualpair {

using exact::MPoly;
using exact::PolyMatrix;
using exact::Scalar;
using exact::ScalarMatrix;

// V of dimension 2n with a symmetric form, U of dimension 2n−2 with a skew form.
struct KPConfig {
  int n = 0;
  ScalarMatrix G_V;
  ScalarMatrix G_U;
  ScalarMatrix G_V_inv;

  std::size_t dim_v() const { return G_V.rows(); }
  std::size_t dim_u() const { return G_U.rows(); }
};

// Antidiagonal ones on V, antidiagonal (+..+, −..−) on U.
KPConfig make_config(int n);
KPConfig make_config(const ScalarMatrix& G_V, const ScalarMatrix& G_U);

// X* = G_V⁻¹ Xᵀ G_U, so that (Xv, u)_U = (v, X*u)_V.
ScalarMatrix adjoint(const KPConfig& cfg, const ScalarMatrix& X);
PolyMatrix adjoint(const KPConfig& cfg, const PolyMatrix& X);
// X*, viewed as a map U → V, adjoint back to a map V → U.
ScalarMatrix adjoint_of_adjoint(const KPConfig& cfg, const ScalarMatrix& Xs);

struct KPMaps {
  ScalarMatrix pi;   // XX* on U
  ScalarMatrix rho;  // X*X on V
};

KPMaps kp_maps(const KPConfig& cfg, const ScalarMatrix& X);
bool in_sp_u(const KPConfig& cfg, const ScalarMatrix& m);
bool in_so_v(const KPConfig& cfg, const ScalarMatrix& m);

// pf(G_V ρ(X)) = 0.
Scalar pfaffian_of_rho(const KPConfig& cfg, const ScalarMatrix& X);
bool pfaffian_locus_check(const KPConfig& cfg, const ScalarMatrix& X);

struct KPElement {
  int n = 0, i = 0;
  ScalarMatrix X;
  classify::Partition rho_type;
  classify::Partition pi_type;
  bool surjective = false;
};

// X₀ with ρ(X₀) of type [2n−i, i] and π(X₀) of type [2n−i−1, i−1], built from Jordan strings.
KPElement kp_find_element(int n, int i);

// Coefficient matrix of ω(X, Y) = 2tr(XY*) on the entries of X (row-major).
ScalarMatrix omega_matrix(const KPConfig& cfg);
// Poisson bracket of polynomials in the entries x_r_c of X, from the inverse of omega_matrix.
class PoissonStructure {
 public:
  explicit PoissonStructure(const KPConfig& cfg);
  MPoly bracket(const MPoly& f, const MPoly& g) const;
  const exact::VarListPtr& env() const { return env_; }
  PolyMatrix symbolic_X() const;

 private:
  KPConfig cfg_;
  exact::VarListPtr env_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> inv_;  // sparse rows of Ω⁻¹
};

struct CommutantReport {
  std::size_t pairs_checked = 0;
  std::size_t violations = 0;
  std::string first_violation;
};

// {π_ij, ρ_kl} = 0 for all entries, symbolically.
CommutantReport commutant_check(const KPConfig& cfg);

struct MomentReport {
  std::optional<Scalar> constant;  // c with tr((YX* + XY*)ξ) = c·ω(ξX, Y)
  std::size_t instances = 0;
  std::size_t violations = 0;
};

MomentReport moment_identity_check(const KPConfig& cfg);

// exp of a random element of so(V) or sp(U) that is strictly upper triangular.
ScalarMatrix random_unipotent(const ScalarMatrix& form, std::mt19937_64& rng);
ScalarMatrix random_integer_matrix(std::size_t rows, std::size_t cols, int bound, std::mt19937_64& rng);

}  // namespace slodowy::dualpair
