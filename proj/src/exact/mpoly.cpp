#include "slodowy/exact/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "slodowy/errors.hpp"

namespace slodowy::exact {

namespace {

const VarListPtr& empty_env() {
  static const VarListPtr env = std::make_shared<const VarList>();
  return env;
}

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0U); }

void add_term(MPoly::TermMap& terms, Exponents e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

template <class F>
MPoly binary(const MPoly& a, const MPoly& b, F f) {
  if (same_vars(a.env(), b.env())) return f(a, b);
  VarListPtr env = union_env(a.env(), b.env());
  if (env == a.env()) return f(a, b.with_vars(env));
  if (env == b.env()) return f(a.with_vars(env), b);
  return f(a.with_vars(env), b.with_vars(env));
}

}  // namespace

bool GrevlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = degree_of(a);
  unsigned db = degree_of(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

VarListPtr make_env(VarList names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InputError("empty variable name");
    if (!seen.insert(n).second) throw InputError("duplicate variable name: " + n);
  }
  return std::make_shared<const VarList>(std::move(names));
}

bool same_vars(const VarListPtr& a, const VarListPtr& b) { return a == b || *a == *b; }

VarListPtr union_env(const VarListPtr& a, const VarListPtr& b) {
  auto contains_all = [](const VarList& big, const VarList& small) {
    return std::all_of(small.begin(), small.end(),
                       [&](const std::string& v) { return std::find(big.begin(), big.end(), v) != big.end(); });
  };
  if (contains_all(*a, *b)) return a;
  if (contains_all(*b, *a)) return b;
  VarList merged = *a;
  for (const auto& v : *b) {
    if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
  }
  return std::make_shared<const VarList>(std::move(merged));
}

MPoly::MPoly() : env_(empty_env()) {}

MPoly::MPoly(Scalar c) : env_(empty_env()) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
}

MPoly MPoly::variable(const std::string& name) { return variable(make_env({name}), 0); }

MPoly MPoly::variable(const VarListPtr& env, std::size_t index) {
  if (index >= env->size()) throw DimensionError("variable index out of range");
  Exponents e(env->size(), 0);
  e[index] = 1;
  TermMap t;
  t.emplace(std::move(e), Scalar(1));
  return MPoly(env, std::move(t));
}

MPoly MPoly::variable(const VarListPtr& env, const std::string& name) {
  auto it = std::find(env->begin(), env->end(), name);
  if (it == env->end()) throw InputError("unknown variable: " + name);
  return variable(env, static_cast<std::size_t>(it - env->begin()));
}

MPoly MPoly::constant(const VarListPtr& env, const Scalar& c) {
  TermMap t;
  if (!c.is_zero()) t.emplace(Exponents(env->size(), 0), c);
  return MPoly(env, std::move(t));
}

MPoly MPoly::from_terms(const VarListPtr& env, TermMap terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.size() != env->size()) throw DimensionError("exponent vector length differs from variable count");
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  }
  return MPoly(env, std::move(terms));
}

int MPoly::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < env_->size(); ++i) {
    if ((*env_)[i] == name) return static_cast<int>(i);
  }
  return -1;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Scalar MPoly::constant_term() const {
  if (terms_.empty()) return Scalar(0);
  auto it = terms_.find(Exponents(env_->size(), 0));
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<Scalar> MPoly::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return constant_term();
}

bool MPoly::is_rational() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_rational(); });
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : degree_of(terms_.begin()->first); }

unsigned MPoly::degree_in(std::string_view var) const {
  int i = var_index(var);
  if (i < 0) return 0;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
  return d;
}

std::set<std::string> MPoly::used_vars() const {
  std::set<std::string> out;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) out.insert((*env_)[i]);
    }
  }
  return out;
}

MPoly MPoly::coefficient(std::string_view var, unsigned k) const {
  int i = var_index(var);
  if (i < 0) return k == 0 ? *this : MPoly::constant(env_, 0);
  auto idx = static_cast<std::size_t>(i);
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[idx] != k) continue;
    Exponents f = e;
    f[idx] = 0;
    out.emplace(std::move(f), c);
  }
  return MPoly(env_, std::move(out));
}

MPoly MPoly::derivative(std::string_view var) const {
  int i = var_index(var);
  if (i < 0) return MPoly::constant(env_, 0);
  auto idx = static_cast<std::size_t>(i);
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents f = e;
    f[idx] -= 1;
    add_term(out, std::move(f), c * Scalar(static_cast<long>(e[idx])));
  }
  return MPoly(env_, std::move(out));
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& subs) const {
  std::vector<std::pair<std::size_t, const MPoly*>> targets;
  for (const auto& [name, value] : subs) {
    int i = var_index(name);
    if (i >= 0) targets.emplace_back(static_cast<std::size_t>(i), &value);
  }
  if (targets.empty()) return *this;

  // Result environment: ours plus whatever the replacement polynomials use.
  VarListPtr env = env_;
  for (const auto& [i, p] : targets) env = union_env(env, p->env());
  std::vector<std::vector<MPoly>> powers(targets.size());
  for (std::size_t k = 0; k < targets.size(); ++k) powers[k].push_back(MPoly::constant(env, 1));

  MPoly base = with_vars(env);
  MPoly result = MPoly::constant(env, 0);
  for (const auto& [e, c] : base.terms_) {
    Exponents rest = e;
    MPoly factor = MPoly::constant(env, c);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      std::size_t idx = targets[k].first;
      unsigned d = rest[idx];
      rest[idx] = 0;
      if (d == 0) continue;
      while (powers[k].size() <= d) powers[k].push_back(powers[k].back() * targets[k].second->with_vars(env));
      factor *= powers[k][d];
    }
    TermMap mono;
    mono.emplace(std::move(rest), Scalar(1));
    result += factor * MPoly(env, std::move(mono));
  }
  return result;
}

MPoly MPoly::evaluate(const std::map<std::string, Scalar>& values) const {
  std::map<std::string, MPoly> subs;
  for (const auto& [k, v] : values) subs.emplace(k, MPoly::constant(env_, v));
  return substitute(subs);
}

MPoly MPoly::with_vars(const VarListPtr& env) const {
  if (env == env_) return *this;
  std::vector<std::size_t> map(env_->size(), SIZE_MAX);
  for (std::size_t i = 0; i < env_->size(); ++i) {
    auto it = std::find(env->begin(), env->end(), (*env_)[i]);
    if (it != env->end()) map[i] = static_cast<std::size_t>(it - env->begin());
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents f(env->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] == SIZE_MAX) throw InputError("variable " + (*env_)[i] + " missing from target environment");
      f[map[i]] = e[i];
    }
    out.emplace(std::move(f), c);
  }
  return MPoly(env, std::move(out));
}

MPoly MPoly::trimmed() const {
  auto used = used_vars();
  VarList names;
  for (const auto& v : *env_) {
    if (used.count(v)) names.push_back(v);
  }
  if (names.size() == env_->size()) return *this;
  return with_vars(make_env(std::move(names)));
}

long MPoly::term_weight(const Exponents& e, const Weights& w) const {
  long total = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    auto it = w.find((*env_)[i]);
    if (it == w.end()) throw InputError("no weight declared for variable " + (*env_)[i]);
    total += static_cast<long>(e[i]) * it->second;
  }
  return total;
}

std::optional<long> MPoly::weighted_degree(const Weights& w) const {
  std::optional<long> deg;
  for (const auto& [e, c] : terms_) {
    long d = term_weight(e, w);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

std::map<long, MPoly> MPoly::weighted_components(const Weights& w) const {
  std::map<long, TermMap> parts;
  for (const auto& [e, c] : terms_) parts[term_weight(e, w)].emplace(e, c);
  std::map<long, MPoly> out;
  for (auto& [d, t] : parts) out.emplace(d, MPoly(env_, std::move(t)));
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (!same_vars(env_, o.env_)) return *this = *this + o;
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (!same_vars(env_, o.env_)) return *this = *this - o;
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  return binary(a, b, [](const MPoly& x, const MPoly& y) {
    MPoly out = x;
    for (const auto& [e, c] : y.terms_) add_term(out.terms_, e, c);
    return out;
  });
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  return binary(a, b, [](const MPoly& x, const MPoly& y) {
    MPoly out = x;
    for (const auto& [e, c] : y.terms_) add_term(out.terms_, e, -c);
    return out;
  });
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  return binary(a, b, [](const MPoly& x, const MPoly& y) {
    MPoly::TermMap out;
    const std::size_t n = x.env_->size();
    Exponents sum(n);
    for (const auto& [ex, cx] : x.terms_) {
      for (const auto& [ey, cy] : y.terms_) {
        for (std::size_t i = 0; i < n; ++i) sum[i] = ex[i] + ey[i];
        auto [it, inserted] = out.try_emplace(sum, cx);
        if (inserted) {
          it->second *= cy;
        } else {
          it->second += cx * cy;
        }
      }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return MPoly(x.env_, std::move(out));
  });
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (same_vars(a.env_, b.env_)) return a.terms_ == b.terms_;
  return (a - b).is_zero();
}

MPoly pow(const MPoly& p, unsigned e) {
  MPoly result = MPoly::constant(p.env(), 1);
  MPoly base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::string monomial_string(const VarList& vars, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono = monomial_string(*env_, e);
    std::string term;
    if (mono.empty()) {
      term = c.to_string();
    } else if (c.is_one()) {
      term = mono;
    } else if (c == Scalar(-1)) {
      term = "-" + mono;
    } else {
      term = c.to_string() + "*" + mono;
    }
    if (first) {
      out = term;
      first = false;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace slodowy::exact

namespace slodowy::exact {

DivisionResult divide_by_monic(const MPoly& p, const MPoly& d, std::string_view var) {
  const unsigned dd = d.degree_in(var);
  auto lead = d.coefficient(var, dd).as_constant();
  if (!lead || !lead->is_one()) throw StructureError("divisor is not monic in " + std::string(var));
  VarListPtr env = union_env(p.env(), d.env());
  if (std::find(env->begin(), env->end(), std::string(var)) == env->end()) {
    VarList names = *env;
    names.emplace_back(var);
    env = make_env(std::move(names));
  }
  MPoly v = MPoly::variable(env, std::string(var));
  MPoly r = p.with_vars(env);
  MPoly dv = d.with_vars(env);
  MPoly q = MPoly::constant(env, 0);
  while (!r.is_zero() && r.degree_in(var) >= dd) {
    unsigned k = r.degree_in(var);
    MPoly t = r.coefficient(var, k) * pow(v, k - dd);
    q += t;
    r -= t * dv;
  }
  return {q, r};
}

}  // namespace slodowy::exact
