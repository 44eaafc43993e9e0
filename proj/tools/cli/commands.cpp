#include "commands.hpp"

#include <future>

#include "slodowy/classify/classify.hpp"
#include "slodowy/dualpair/dualpair.hpp"
#include "slodowy/errors.hpp"
#include "slodowy/exact/json_io.hpp"
#include "slodowy/f4/f4.hpp"
#include "slodowy/g2/slice.hpp"
#include "slodowy/liealg/slice.hpp"
#include "slodowy/liealg/triple.hpp"
#include "slodowy/slicegeom/invariants.hpp"

namespace slodowy::cli {

using exact::MPoly;

namespace {

liealg::Kind kind_for(const std::string& algebra) {
  if (algebra == "sl" || algebra == "A") return liealg::Kind::sl;
  if (algebra == "so" || algebra == "B" || algebra == "D") return liealg::Kind::so;
  if (algebra == "sp" || algebra == "C") return liealg::Kind::sp;
  throw InputError("unknown algebra: " + algebra + " (expected sl, so or sp)");
}

classify::Family family_for(const std::string& algebra, int rank, int dim) {
  if (algebra == "sl") return classify::Family::A;
  if (algebra == "sp") return classify::Family::C;
  if (algebra == "so") {
    if (dim == 2 * rank + 1) return classify::Family::B;
    if (dim == 2 * rank) return classify::Family::D;
    throw InputError("orbit size does not match so of rank " + std::to_string(rank));
  }
  return classify::parse_family(algebra);
}

}  // namespace

RunReport cmd_slice(const GlobalFlags&, const std::string& algebra, int rank, const std::string& orbit) {
  RunReport r;
  r.command = "slice";
  r.inputs = {{"algebra", algebra}, {"rank", rank}, {"orbit", orbit}};
  liealg::Kind kind = kind_for(algebra);
  auto d = classify::parse_partition(orbit);
  auto fam = family_for(algebra, rank, d.sum());
  if (!classify::valid_partition(fam, rank, d))
    throw InputError("orbit " + d.to_string() + " is not a nilpotent orbit of " + algebra + " rank " + std::to_string(rank));
  if (kind == liealg::Kind::sp && d.parts == std::vector<int>{2 * rank - 2, 1, 1} && rank >= 2) {
    RunReport h = hook_instance(rank);
    r.checks = h.checks;
    r.results = h.results.begin().value();
    r.results["chart"] = "hook";
    return r;
  }
  auto jm = liealg::jm_triple(kind, d);
  liealg::check_triple(jm.algebra, jm.triple);
  r.check("triple", true);
  auto chart = liealg::slodowy_slice(jm.algebra, jm.triple);
  auto inv = slicegeom::restrict_invariants(chart, jm.algebra);
  r.check("chi quasi-homogeneous", slicegeom::chi_quasi_homogeneous(inv));
  r.results["chart"] = "generic";
  r.results["coordinates"] = chart.coord_names;
  r.results["weights"] = chart.coord_weights;
  r.results["slice_dim"] = chart.dim();
  r.results["chi"] = inv.chi.to_string();
  if (inv.pfaff) r.results["pfaffian"] = inv.pfaff->to_string();
  return r;
}

RunReport cmd_classify(const GlobalFlags&, const std::string& algebra, int rank, const std::string& orbit,
                       bool enumerate) {
  RunReport r;
  r.command = "classify";
  r.inputs = {{"algebra", algebra}, {"rank", rank}, {"orbit", orbit}, {"enumerate", enumerate}};
  auto fam = classify::parse_family(algebra);
  int rk = classify::family_rank(fam, rank);
  auto verdict_json = [](const classify::OrbitLabel& l, const classify::ClassificationVerdict& v) {
    json j = {{"orbit", l.to_string()}, {"b2", v.b2}, {"star", v.star}, {"notes", v.notes}};
    if (v.subregular_singularity) j["subregular_singularity"] = *v.subregular_singularity;
    return j;
  };
  if (enumerate) {
    json table = json::array();
    for (const auto& l : classify::nonregular_orbits(fam, rk)) {
      auto v = classify::classify(l);
      table.push_back(verdict_json(l, v));
      r.check("star <=> b2 = rank for " + l.to_string(), v.star == (v.b2 == rk));
    }
    r.results["table"] = table;
  }
  if (!orbit.empty()) {
    auto l = classify::parse_orbit_label(fam, rk, orbit);
    auto v = classify::classify(l);
    r.results["verdict"] = verdict_json(l, v);
  }
  if (!enumerate && orbit.empty()) throw InputError("classify needs --orbit or --enumerate");
  return r;
}

RunReport cmd_g2(const GlobalFlags& g, const std::string& action) {
  RunReport r;
  r.command = "g2 " + action;
  r.inputs = {{"action", action}, {"degree_bound", g.degree_bound}};
  if (action == "verify") {
    RunReport s = suite_g2(g.degree_bound);
    r.checks = s.checks;
    r.results = s.results;
    return r;
  }
  if (action == "slice") {
    auto d = g2::g2_slice_minimal();
    json xi;
    xi["A"] = json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < 3; ++j) row.push_back(d.xi.A(i, j).to_string());
      xi["A"].push_back(row);
    }
    xi["v"] = json::array();
    xi["w"] = json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      xi["v"].push_back(d.xi.v(i, 0).to_string());
      xi["w"].push_back(d.xi.w(0, i).to_string());
    }
    r.results["xi"] = xi;
    r.results["weights"] = d.weights;
    for (auto [name, p] : std::vector<std::pair<const char*, const MPoly*>>{
             {"t1", &d.t1}, {"t2", &d.t2}, {"t3", &d.t3}, {"z1", &d.z1}, {"z2", &d.z2}, {"f", &d.f}, {"chi2", &d.chi2}})
      r.results[name] = p->to_string();
    r.results["chi6_reading"] = d.passing_reading.value_or("none");
    r.check("slice checks", true);
    MPoly f = g2::g2_hypersurface();
    r.check("hypersurface equals f", f == d.f.with_vars(f.env()));
    return r;
  }
  throw InputError("g2 action must be verify or slice");
}

RunReport cmd_f4(const GlobalFlags&, const std::string& action) {
  RunReport r;
  r.command = "f4 " + action;
  r.inputs = {{"action", action}};
  if (action == "grading") {
    auto g = f4::f4_grading();
    r.results["weights"] = g.weights;
    r.results["dims"] = json::object();
    for (const auto& [k, d] : g.dims) r.results["dims"][std::to_string(k)] = d;
    json roots = json::array();
    for (const auto& rt : g.roots_of_grade(2)) roots.push_back(std::to_string(rt[0]) + std::to_string(rt[1]) + std::to_string(rt[2]) + std::to_string(rt[3]));
    r.results["grade2_roots"] = roots;
    r.check("dim f4(2) = 8", g.dims[2] == 8);
    r.check("dim f4(0) = dim f4(2)", g.dims[0] == g.dims[2]);
    return r;
  }
  if (action == "hyperplanes") {
    json hs = json::array();
    auto hp = f4::f4_invariant_hyperplanes();
    for (const auto& h : hp) {
      json fn = json::array();
      for (const auto& c : h.functional) fn.push_back(c.to_string());
      hs.push_back({{"bidegree", {h.bidegree.first, h.bidegree.second}}, {"functional", fn}, {"invariant", h.invariant}});
      r.check("hyperplane of bidegree (" + std::to_string(h.bidegree.first) + "," + std::to_string(h.bidegree.second) +
                  ") invariant",
              h.invariant);
    }
    r.results["labels"] = f4::grade2_module().labels;
    r.results["hyperplanes"] = hs;
    r.check("exactly two invariant hyperplanes", hp.size() == 2);
    return r;
  }
  if (action == "betti") {
    auto b = f4::f4_betti_subsubregular();
    std::string dec = std::to_string(b.base);
    for (int c : b.component_counts) dec += "+" + std::to_string(c);
    r.results["b2"] = b.b2;
    r.results["decomposition"] = dec;
    r.check("b2 = 4", b.b2 == 4);
    return r;
  }
  throw InputError("f4 action must be grading, betti or hyperplanes");
}

RunReport cmd_dualpair(const GlobalFlags& g, int n, int i) {
  RunReport r;
  r.command = "dualpair";
  r.inputs = {{"n", n}, {"i", i}, {"seed", g.seed}};
  auto el = dualpair::kp_find_element(n, i);
  auto cfg = dualpair::make_config(n);
  r.results["X0"] = exact::to_json(el.X);
  r.results["rho_type"] = el.rho_type.to_string();
  r.results["pi_type"] = el.pi_type.to_string();
  r.check("X0 surjective with the expected Jordan types", el.surjective);
  auto maps = dualpair::kp_maps(cfg, el.X);
  r.check("pi(X0) in sp(U), rho(X0) in so(V)", dualpair::in_sp_u(cfg, maps.pi) && dualpair::in_so_v(cfg, maps.rho));
  auto Xs = dualpair::adjoint(cfg, el.X);
  r.check("(X*)* = -X", dualpair::adjoint_of_adjoint(cfg, Xs) == -el.X);
  std::mt19937_64 rng(g.seed);
  std::size_t bad = 0;
  for (int k = 0; k < 100; ++k)
    if (!dualpair::pfaffian_locus_check(cfg, dualpair::random_integer_matrix(cfg.dim_u(), cfg.dim_v(), 3, rng))) ++bad;
  r.check("pf(G_V rho(X)) = 0 on 100 random X", bad == 0);
  if (n <= 4) {
    auto c = dualpair::commutant_check(cfg);
    r.check("{pi_ij, rho_kl} = 0", c.violations == 0, std::to_string(c.pairs_checked) + " pairs");
    auto m = dualpair::moment_identity_check(cfg);
    r.check("moment identity", m.constant && m.violations == 0,
            "constant " + (m.constant ? m.constant->to_string() : std::string("none")));
  } else {
    r.results["symbolic_checks"] = "skipped for n > 4";
  }
  return r;
}

RunReport cmd_check_all(const GlobalFlags& g) {
  RunReport r;
  r.command = "check all";
  r.inputs = {{"seed", g.seed}, {"degree_bound", g.degree_bound}};
  // Suites run concurrently; results merge in name order.
  std::map<std::string, std::future<RunReport>> futures;
  futures["classify"] = std::async(std::launch::async, [] { return suite_classify(); });
  futures["dualpair"] = std::async(std::launch::async, [&g] { return suite_dualpair(g.seed); });
  futures["f4"] = std::async(std::launch::async, [] { return suite_f4(); });
  futures["g2"] = std::async(std::launch::async, [&g] { return suite_g2(g.degree_bound); });
  futures["hook"] = std::async(std::launch::async, [] { return suite_hook({2, 3, 4, 5}); });
  for (auto& [name, fut] : futures) r.append(fut.get(), name);
  return r;
}

}  // namespace slodowy::cli
