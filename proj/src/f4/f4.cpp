#include "slodowy/f4/f4.hpp"

#include <algorithm>

#include "slodowy/errors.hpp"
#include "slodowy/exact/linalg.hpp"

namespace slodowy::f4 {

namespace {

const std::array<Doubled, 4> kSimple = {{{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}}};

SimpleCoords to_simple(const Doubled& v) {
  exact::ScalarMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = kSimple[j][i];
  auto inv = exact::inverse(m);
  SimpleCoords out{};
  for (std::size_t i = 0; i < 4; ++i) {
    exact::Scalar s(0);
    for (std::size_t j = 0; j < 4; ++j) s += (*inv)(i, j) * exact::Scalar(v[j]);
    mpq_class q = s.rational_part();
    if (q.get_den() != 1) throw StructureError("root with non-integral simple coordinates");
    out[i] = int(q.get_num().get_si());
  }
  return out;
}

}  // namespace

int pairing(const Doubled& a, const Doubled& b) {
  int s = 0;
  for (std::size_t i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}

int norm2(const Doubled& v) { return pairing(v, v); }

int coroot_pairing(const Doubled& beta, const Doubled& alpha) {
  int num = 2 * pairing(beta, alpha);
  if (num % norm2(alpha) != 0) throw StructureError("non-integral Cartan integer");
  return num / norm2(alpha);
}

Doubled reflect(const Doubled& beta, const Doubled& alpha) {
  int k = coroot_pairing(beta, alpha);
  Doubled out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = beta[i] - k * alpha[i];
  return out;
}

std::size_t RootSystemF4::long_count() const {
  return std::count_if(euclidean.begin(), euclidean.end(), [](const Doubled& v) { return norm2(v) == 8; });
}

std::size_t RootSystemF4::short_count() const {
  return std::count_if(euclidean.begin(), euclidean.end(), [](const Doubled& v) { return norm2(v) == 4; });
}

std::size_t RootSystemF4::positive_count() const {
  return std::count_if(roots.begin(), roots.end(), [](const SimpleCoords& r) {
    return std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
  });
}

SimpleCoords RootSystemF4::highest_root() const {
  return *std::max_element(roots.begin(), roots.end(), [](const SimpleCoords& a, const SimpleCoords& b) {
    return a[0] + a[1] + a[2] + a[3] < b[0] + b[1] + b[2] + b[3];
  });
}

int RootSystemF4::index_of(const SimpleCoords& r) const {
  auto it = std::find(roots.begin(), roots.end(), r);
  return it == roots.end() ? -1 : int(it - roots.begin());
}

RootSystemF4 f4_roots() {
  std::vector<Doubled> e;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (int si : {2, -2})
        for (int sj : {2, -2}) {
          Doubled v{};
          v[i] = si;
          v[j] = sj;
          e.push_back(v);
        }
  for (std::size_t i = 0; i < 4; ++i)
    for (int s : {2, -2}) {
      Doubled v{};
      v[i] = s;
      e.push_back(v);
    }
  for (int mask = 0; mask < 16; ++mask) {
    Doubled v;
    for (std::size_t i = 0; i < 4; ++i) v[i] = (mask >> i & 1) ? -1 : 1;
    e.push_back(v);
  }
  RootSystemF4 rs;
  rs.simple_roots = kSimple;
  for (const auto& v : e) {
    rs.euclidean.push_back(v);
    rs.roots.push_back(to_simple(v));
  }
  return rs;
}

std::vector<SimpleCoords> GradedF4::roots_of_grade(int k) const {
  std::vector<SimpleCoords> out;
  for (const auto& [r, g] : grade_of_root)
    if (g == k) out.push_back(r);
  return out;
}

GradedF4 f4_grading() {
  GradedF4 g;
  g.dims[0] = 4;
  for (const auto& r : f4_roots().roots) {
    int k = 0;
    for (std::size_t i = 0; i < 4; ++i) k += g.weights[i] * r[i];
    g.grade_of_root[r] = k;
    ++g.dims[k];
  }
  return g;
}

std::vector<std::pair<int, int>> grade2_biweights() {
  RootSystemF4 rs = f4_roots();
  GradedF4 g = f4_grading();
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    if (g.grade_of_root.at(rs.roots[i]) == 2)
      out.emplace_back(coroot_pairing(rs.euclidean[i], kSimple[0]), coroot_pairing(rs.euclidean[i], kSimple[2]));
  std::sort(out.begin(), out.end());
  return out;
}

SL2SL2Module grade2_module() {
  SL2SL2Module m;
  // V3: w+ (0,1), w− (0,−1) with e3 w− = w+.
  m.labels = {"w+", "w-"};
  m.biweights = {{0, 1}, {0, -1}};
  // V1 ⊗ S²V3: v± ⊗ {w+², w+w−, w−²}.
  const char* v1[] = {"v+", "v-"};
  const char* s2[] = {"w+^2", "w+w-", "w-^2"};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      m.labels.push_back(std::string(v1[i]) + "*" + s2[j]);
      m.biweights.emplace_back(i == 0 ? 1 : -1, 2 - 2 * j);
    }
  m.e1 = exact::ScalarMatrix(8, 8);
  m.e3 = exact::ScalarMatrix(8, 8);
  m.e3(0, 1) = 1;
  for (int j = 0; j < 3; ++j) m.e1(2 + j, 5 + j) = 1;  // v− ↦ v+
  for (int i = 0; i < 2; ++i) {
    std::size_t base = 2 + 3 * i;
    m.e3(base + 0, base + 1) = 1;  // w+w− ↦ w+²
    m.e3(base + 1, base + 2) = 2;  // w−² ↦ 2w+w−
  }
  return m;
}

std::vector<std::pair<int, int>> module_biweights() {
  auto w = grade2_module().biweights;
  std::sort(w.begin(), w.end());
  return w;
}

std::vector<InvariantHyperplane> f4_invariant_hyperplanes() {
  SL2SL2Module m = grade2_module();
  const std::size_t n = m.dim();
  // φ with φ∘e1 = φ∘e3 = 0, i.e. φ in the kernel of [e1ᵀ; e3ᵀ].
  std::map<std::pair<int, int>, std::vector<std::size_t>> by_weight;
  for (std::size_t i = 0; i < n; ++i) by_weight[{-m.biweights[i].first, -m.biweights[i].second}].push_back(i);
  std::vector<InvariantHyperplane> out;
  for (const auto& [weight, idx] : by_weight) {
    // Restrict to one weight space of the dual.
    exact::ScalarMatrix sys(2 * n, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
      for (std::size_t j = 0; j < n; ++j) {
        sys(j, k) = m.e1(idx[k], j);
        sys(n + j, k) = m.e3(idx[k], j);
      }
    auto ker = exact::kernel_basis(sys);
    if (ker.size() > 1) throw StructureError("infinitely many invariant lines in one weight space");
    if (ker.empty()) continue;
    InvariantHyperplane h;
    h.functional.assign(n, exact::Scalar(0));
    for (std::size_t k = 0; k < idx.size(); ++k) h.functional[idx[k]] = ker[0][k];
    h.bidegree = weight;
    out.push_back(h);
  }
  for (auto& h : out) {
    // Kernel basis of φ, then check φ(e·u) = 0 for u in it.
    exact::ScalarMatrix row(1, n);
    for (std::size_t j = 0; j < n; ++j) row(0, j) = h.functional[j];
    bool ok = true;
    for (const auto& u : exact::kernel_basis(row))
      for (const auto* e : {&m.e1, &m.e3}) {
        exact::Scalar s(0);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) s += h.functional[i] * (*e)(i, j) * u[j];
        ok = ok && s.is_zero();
      }
    h.invariant = ok;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.bidegree < b.bidegree; });
  return out;
}

BettiReport f4_betti_subsubregular() {
  BettiReport r;
  for (const auto& h : f4_invariant_hyperplanes()) {
    r.bidegrees.push_back(h.bidegree);
    r.component_counts.push_back(1);
  }
  r.b2 = r.base;
  for (int c : r.component_counts) r.b2 += c;
  return r;
}

}  // namespace slodowy::f4
