#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slodowy/exact/scalar.hpp"

namespace slodowy::exact {

using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;
using Exponents = std::vector<std::uint32_t>;
using Weights = std::map<std::string, int>;

// Graded reverse lexicographic order, larger monomials first.
struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

VarListPtr make_env(VarList names);

class MPoly {
 public:
  using TermMap = std::map<Exponents, Scalar, GrevlexGreater>;

  MPoly();
  MPoly(Scalar c);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  MPoly(I c) : MPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly variable(const std::string& name);
  static MPoly variable(const VarListPtr& env, std::size_t index);
  static MPoly variable(const VarListPtr& env, const std::string& name);
  static MPoly constant(const VarListPtr& env, const Scalar& c);
  static MPoly from_terms(const VarListPtr& env, TermMap terms);

  const VarList& vars() const { return *env_; }
  const VarListPtr& env() const { return env_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  int var_index(std::string_view name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  std::optional<Scalar> as_constant() const;
  bool is_rational() const;

  unsigned total_degree() const;
  unsigned degree_in(std::string_view var) const;
  std::set<std::string> used_vars() const;

  // Coefficient of var^k, as a polynomial in the same environment with var absent.
  MPoly coefficient(std::string_view var, unsigned k) const;
  MPoly derivative(std::string_view var) const;
  MPoly substitute(const std::map<std::string, MPoly>& subs) const;
  MPoly evaluate(const std::map<std::string, Scalar>& values) const;

  // Re-expresses the polynomial over env; every used variable must be present there.
  MPoly with_vars(const VarListPtr& env) const;
  MPoly with_vars(const VarList& names) const { return with_vars(make_env(names)); }
  MPoly trimmed() const;

  // Weighted degree if every term has the same one; nullopt for mixed or zero input.
  std::optional<long> weighted_degree(const Weights& w) const;
  std::map<long, MPoly> weighted_components(const Weights& w) const;
  long term_weight(const Exponents& e, const Weights& w) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Scalar& c);

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Scalar& c, MPoly p) { return p *= c; }
  friend MPoly operator*(MPoly p, const Scalar& c) { return p *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  std::string to_string() const;

  // Declared variables come first, in order; other identifiers follow sorted by name.
  static MPoly parse(std::string_view text, const VarList& declared = {});

 private:
  MPoly(VarListPtr env, TermMap terms) : env_(std::move(env)), terms_(std::move(terms)) {}

  VarListPtr env_;
  TermMap terms_;
};

MPoly pow(const MPoly& p, unsigned e);
VarListPtr union_env(const VarListPtr& a, const VarListPtr& b);
bool same_vars(const VarListPtr& a, const VarListPtr& b);

std::string monomial_string(const VarList& vars, const Exponents& e);

}  // namespace slodowy::exact

namespace slodowy::exact {

struct DivisionResult {
  MPoly quotient;
  MPoly remainder;
};

// Division by d, treated as a polynomial in var whose leading coefficient must be 1.
DivisionResult divide_by_monic(const MPoly& p, const MPoly& d, std::string_view var);

}  // namespace slodowy::exact
