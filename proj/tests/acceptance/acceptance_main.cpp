// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "commands.hpp"
#include "oracles.hpp"
#include "slodowy/exact/linalg.hpp"
#include "slodowy/exact/mpoly.hpp"

using namespace slodowy;
using exact::MPoly;
using exact::Scalar;
using exact::ScalarMatrix;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
  void absorb(const cli::RunReport& r, const std::function<bool(const std::string&)>& keep) {
    for (const auto& c : r.checks) {
      if (!keep(c.name)) continue;
      if (!c.pass) require(false, c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
  }
};

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

std::string factorial_text(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f.get_str();
}

// Closed form written out as text and parsed, independent of the library's constructors.
MPoly hook_oracle(int n, const std::string& sign) {
  return MPoly::parse(factorial_text(2 * n - 3) + "*(a^2*x + 2*a*b*y + b^2*z) " + sign + " (x*z - y^2)^" +
                      std::to_string(n));
}

std::vector<cli::RunReport> hook_runs;

Outcome criterion1() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) {
    const auto& r = hook_runs[n - 2];
    const std::string tag = "n=" + std::to_string(n);
    o.absorb(r, [&](const std::string& name) {
      return !starts_with(name, "chi - ") && !starts_with(name, "f equals");
    });
    MPoly f = MPoly::parse(r.results[tag]["f"].get<std::string>());
    bool literal = (f - hook_oracle(n, "-")).is_zero();
    o.require(literal, "f = (2n-3)!(a^2x+2aby+b^2z) - (xz-y^2)^n at " + tag);
    if (!literal && (f - hook_oracle(n, "+")).is_zero())
      o.note(tag + ": derived f = " + factorial_text(2 * n - 3) + "(a^2x+2aby+b^2z) + (xz-y^2)^" + std::to_string(n) +
             " (opposite sign of the power term)");
    if (r.results[tag].contains("normalization"))
      o.note(tag + ": normalization " + r.results[tag]["normalization"].get<std::string>());
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const auto& r : hook_runs) o.absorb(r, [](const std::string& name) { return starts_with(name, "chi - "); });
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto r = cli::suite_g2(7);
  o.absorb(r, [](const std::string& name) {
    return !starts_with(name, "partials of f") && !starts_with(name, "S3 polarization");
  });
  std::string reading = r.results["chi6_reading"].get<std::string>();
  o.note("chi6 identity holds under reading " + reading);
  for (const auto& c : r.checks)
    if (starts_with(c.name, "chi6(xi)")) o.note("readings: " + c.detail);
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto r = cli::suite_g2(7);
  o.absorb(r, [](const std::string& name) { return starts_with(name, "partials of f"); });
  for (const auto& c : r.checks)
    if (starts_with(c.name, "partials of f")) o.note(c.detail);
  return o;
}

Outcome criterion5() {
  Outcome o;
  o.absorb(cli::suite_classify(), [](const std::string&) { return true; });
  return o;
}

Outcome criterion6() {
  Outcome o;
  o.absorb(cli::suite_f4(), [](const std::string&) { return true; });
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto r = cli::suite_dualpair(0);
  o.absorb(r, [](const std::string&) { return true; });
  for (const auto& c : r.checks)
    if (starts_with(c.name, "X0 Jordan") || starts_with(c.name, "moment")) o.note(c.name + ": " + c.detail);
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::size_t pf_bad = 0;
  for (std::size_t d = 2; d <= 8; d += 2)
    for (int k = 0; k < 20; ++k) {
      auto m = oracle::random_skew(d, 5, rng);
      Scalar pf = exact::pfaffian(m);
      if (!(pf * pf == oracle::cofactor_det(m))) ++pf_bad;
    }
  o.require(pf_bad == 0, "pf^2 = det on random skew matrices up to dim 8");
  std::size_t cp_bad = 0;
  for (std::size_t d = 1; d <= 4; ++d)
    for (int k = 0; k < 20; ++k) {
      auto m = oracle::random_matrix(d, d, 5, rng);
      auto c = exact::charpoly_coefficients(m);
      // A degree d polynomial is fixed by d+1 values.
      for (int t = 0; t <= static_cast<int>(d); ++t) {
        ScalarMatrix a = ScalarMatrix::identity(d) * Scalar(t) - m;
        Scalar v(0), tp(1);
        for (std::size_t j = 0; j <= d; ++j) {
          v += c[d - j] * tp;
          tp *= Scalar(t);
        }
        if (!(v == oracle::cofactor_det(a))) ++cp_bad;
      }
    }
  o.require(cp_bad == 0, "charpoly agrees with cofactor det(tI - M) for dim <= 4");
  std::size_t rt_bad = 0;
  std::vector<std::string> vars = {"a", "b", "x1", "y_2", "z"};
  for (int k = 0; k < 1000; ++k) {
    std::string s1 = MPoly::parse(oracle::random_poly_text(vars, rng)).to_string();
    std::string s2 = MPoly::parse(s1).to_string();
    if (s1 != s2) ++rt_bad;
  }
  o.require(rt_bad == 0, "serialize -> parse -> serialize identity on 1000 random polynomials");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria = {
      {"hook hypersurface f for sp_2n, orbit [2n-2,1,1], n=2..5, and normalization", criterion1},
      {"hook factorization of chi by (lambda^2 + xz - y^2)", criterion2},
      {"G2 suite: Jacobi, rho, G7, chi2, chi6, f, weighted degree 12", criterion3},
      {"G2 singular locus cofactor certificates", criterion4},
      {"classifier exception set, star rule, monotonicity", criterion5},
      {"F4 roots, grading, hyperplanes, b2", criterion6},
      {"dual pair witnesses, pfaffian locus, commutant, moment identity", criterion7},
      {"kernel properties: pfaffian, charpoly, serialization", criterion8},
  };
  for (int n = 2; n <= 5; ++n) hook_runs.push_back(cli::hook_instance(n));
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].title, secs);
    for (const auto& s : o.notes) std::printf("    %s\n", s.c_str());
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
