#include "slodowy/g2/g2.hpp"

namespace slodowy::g2 {

namespace {

const Scalar kThreeQuarters = Scalar::fraction(3, 4);
const Scalar kThird = Scalar::fraction(1, 3);
const Scalar kHalf = Scalar::fraction(1, 2);

PolyMatrix cross(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix c(3, 1);
  c(0, 0) = a(1, 0) * b(2, 0) - a(2, 0) * b(1, 0);
  c(1, 0) = a(2, 0) * b(0, 0) - a(0, 0) * b(2, 0);
  c(2, 0) = a(0, 0) * b(1, 0) - a(1, 0) * b(0, 0);
  return c;
}

// vw − ⅓(wv)I for a column v and a row w.
PolyMatrix traceless_outer(const PolyMatrix& v, const PolyMatrix& w) {
  PolyMatrix o = v * w;
  MPoly s = (w * v)(0, 0) * kThird;
  for (std::size_t i = 0; i < 3; ++i) o(i, i) -= s;
  return o;
}

MPoly det3(const PolyMatrix& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

PolyMatrix columns(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c) {
  PolyMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    m(i, 0) = a(i, 0);
    m(i, 1) = b(i, 0);
    m(i, 2) = c(i, 0);
  }
  return m;
}

}  // namespace

G2Elt& G2Elt::operator+=(const G2Elt& o) {
  A += o.A;
  v += o.v;
  w += o.w;
  return *this;
}

G2Elt& G2Elt::operator-=(const G2Elt& o) {
  A -= o.A;
  v -= o.v;
  w -= o.w;
  return *this;
}

G2Elt& G2Elt::operator*=(const MPoly& c) {
  A *= c;
  v *= c;
  w *= c;
  return *this;
}

G2Elt operator+(G2Elt a, const G2Elt& b) { return a += b; }
G2Elt operator-(G2Elt a, const G2Elt& b) { return a -= b; }
G2Elt operator*(G2Elt a, const MPoly& c) { return a *= c; }

G2Elt from_coords(const std::vector<MPoly>& c) {
  if (c.size() != 14) throw DimensionError("g2 has dimension 14");
  G2Elt e;
  const std::size_t off[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  for (std::size_t k = 0; k < 6; ++k) e.A(off[k][0], off[k][1]) = c[k];
  e.A(0, 0) = c[6];
  e.A(1, 1) = c[7] - c[6];
  e.A(2, 2) = -c[7];
  for (std::size_t k = 0; k < 3; ++k) {
    e.v(k, 0) = c[8 + k];
    e.w(0, k) = c[11 + k];
  }
  return e;
}

std::vector<G2Elt> basis() {
  std::vector<G2Elt> out;
  for (std::size_t k = 0; k < 14; ++k) {
    std::vector<MPoly> c(14, MPoly(0));
    c[k] = MPoly(1);
    out.push_back(from_coords(c));
  }
  return out;
}

std::vector<Scalar> coords(const G2Elt& e) {
  auto val = [](const MPoly& p) {
    auto c = p.as_constant();
    if (!c) throw StructureError("g2 element is not constant");
    return *c;
  };
  if (!e.A.trace().is_zero()) throw MembershipError("g2 element with a non-traceless sl3 part");
  std::vector<Scalar> c;
  const std::size_t off[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  for (auto& o : off) c.push_back(val(e.A(o[0], o[1])));
  c.push_back(val(e.A(0, 0)));
  c.push_back(-val(e.A(2, 2)));
  for (std::size_t k = 0; k < 3; ++k) c.push_back(val(e.v(k, 0)));
  for (std::size_t k = 0; k < 3; ++k) c.push_back(val(e.w(0, k)));
  return c;
}

G2Elt generic_element() {
  auto env = exact::make_env({"h1", "h2", "a12", "a13", "a21", "a23", "a31", "a32", "v1", "v2", "v3", "w1", "w2", "w3"});
  std::vector<MPoly> c;
  for (std::size_t k = 0; k < 14; ++k) c.push_back(MPoly::variable(env, k));
  return from_coords(c);
}

G2Elt bracket(const G2Elt& e1, const G2Elt& e2) {
  const auto& [A, v, w] = e1;
  const auto& [B, u, x] = e2;
  G2Elt out;
  out.A = exact::commutator(A, B) - traceless_outer(v, x) * MPoly(kThreeQuarters) +
          traceless_outer(u, w) * MPoly(kThreeQuarters);
  out.v = A * u - B * v + cross(w.transpose(), x.transpose());
  out.w = -(x * A) + w * B + cross(v, u).transpose();
  return out;
}

PolyMatrix cross_matrix(const PolyMatrix& v) {
  PolyMatrix m(3, 3);
  m(0, 1) = -v(2, 0);
  m(0, 2) = v(1, 0);
  m(1, 0) = v(2, 0);
  m(1, 2) = -v(0, 0);
  m(2, 0) = -v(1, 0);
  m(2, 1) = v(0, 0);
  return m;
}

PolyMatrix embed_so7(const G2Elt& e) {
  const MPoly r(Scalar::sqrt2() * kHalf);  // 1/√2
  PolyMatrix z(7, 7);
  PolyMatrix mw = cross_matrix(e.w.transpose());
  PolyMatrix mv = cross_matrix(e.v);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      z(i, j) = e.A(i, j);
      z(i, 4 + j) = mw(i, j) * kHalf;
      z(4 + i, j) = mv(i, j) * kHalf;
      z(4 + i, 4 + j) = -e.A(j, i);
    }
    z(i, 3) = e.v(i, 0) * r;
    z(3, i) = -(e.w(0, i) * r);
    z(3, 4 + i) = -(e.v(i, 0) * r);
    z(4 + i, 3) = e.w(0, i) * r;
  }
  return z;
}

ScalarMatrix invariant_form_g7() {
  ScalarMatrix g(7, 7);
  for (std::size_t i = 0; i < 3; ++i) {
    g(i, 4 + i) = 1;
    g(4 + i, i) = 1;
  }
  g(3, 3) = 1;
  return g;
}

std::vector<ScalarMatrix> solve_invariant_forms() {
  std::vector<ScalarMatrix> sym;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i; j < 7; ++j) {
      ScalarMatrix s(7, 7);
      s(i, j) = 1;
      s(j, i) = 1;
      sym.push_back(s);
    }
  std::vector<ScalarMatrix> images;
  for (const auto& e : basis()) images.push_back(exact::to_scalar(embed_so7(e)));
  ScalarMatrix sys(images.size() * 49, sym.size());
  for (std::size_t k = 0; k < sym.size(); ++k) {
    for (std::size_t b = 0; b < images.size(); ++b) {
      ScalarMatrix c = images[b].transpose() * sym[k] + sym[k] * images[b];
      for (std::size_t t = 0; t < 49; ++t) sys(b * 49 + t, k) = c(t / 7, t % 7);
    }
  }
  std::vector<ScalarMatrix> out;
  for (const auto& v : exact::kernel_basis(sys)) {
    ScalarMatrix g(7, 7);
    for (std::size_t k = 0; k < sym.size(); ++k) g += sym[k] * v[k];
    out.push_back(g);
  }
  return out;
}

Invariants closed_form_invariants(const G2Elt& e) {
  const auto& A = e.A;
  const auto& v = e.v;
  const auto& w = e.w;
  MPoly wv = (w * v)(0, 0);
  PolyMatrix A2 = A * A;
  MPoly trA2 = A2.trace();
  MPoly dA = det3(A);
  MPoly wAv = (w * A * v)(0, 0);
  MPoly wA2v = (w * A2 * v)(0, 0);
  MPoly dv = det3(columns(v, A * v, A2 * v));
  PolyMatrix wt = w.transpose();
  MPoly dw = det3(columns(wt, (w * A).transpose(), (w * A2).transpose()));
  auto q = [](long n, long d) { return Scalar::fraction(n, d); };
  Invariants out;
  out.chi2 = wv * q(3, 2) - trA2;
  out.chi6 = -(dA * dA) + dA * wAv * q(3, 2) + wAv * wAv * q(3, 16) + trA2 * trA2 * wv * q(1, 4) +
             trA2 * wv * wv * q(1, 4) - wA2v * trA2 * q(1, 2) + wv * wv * wv * q(1, 16) - wA2v * wv * q(3, 4) +
             dv * q(1, 2) - dw * q(1, 2);
  return out;
}

Invariants charpoly_invariants(const G2Elt& e) {
  auto c = exact::charpoly_coefficients(exact::unify_env(embed_so7(e)));
  return {c[2], c[6]};
}

Invariants g2_invariants(const G2Elt& e) {
  Invariants closed = closed_form_invariants(e);
  Invariants cp = charpoly_invariants(e);
  if (!(closed.chi2 == cp.chi2)) throw IdentityError("chi2 closed form differs from charpoly", (closed.chi2 - cp.chi2).to_string());
  if (!(closed.chi6 == cp.chi6)) throw IdentityError("chi6 closed form differs from charpoly", (closed.chi6 - cp.chi6).to_string());
  if (!cp.chi2.is_rational() || !cp.chi6.is_rational()) throw IdentityError("invariants are not sqrt2-free", "");
  return closed;
}

}  // namespace slodowy::g2
