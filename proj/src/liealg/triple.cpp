#include "slodowy/liealg/triple.hpp"

#include <gmpxx.h>

namespace slodowy::liealg {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw StructureError("sl2 triple check failed: " + what);
}

void place(ScalarMatrix& dst, const ScalarMatrix& src, std::size_t r0, std::size_t c0) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) dst(r0 + i, c0 + j) = src(i, j);
}

}  // namespace

void check_triple(const AlgebraDescriptor& g, const SL2Triple& t) {
  require(g.contains(t.x), "x lies in the algebra");
  require(g.contains(t.h), "h lies in the algebra");
  require(g.contains(t.y), "y lies in the algebra");
  require(exact::commutator(t.h, t.x) == t.x * Scalar(2), "[h,x] = 2x");
  require(exact::commutator(t.h, t.y) == t.y * Scalar(-2), "[h,y] = -2y");
  require(exact::commutator(t.x, t.y) == t.h, "[x,y] = h");
  // h semisimple with integer eigenvalues: the product of (h - k) over |k| < dim vanishes.
  const auto m = static_cast<long>(t.h.rows());
  ScalarMatrix prod = ScalarMatrix::identity(t.h.rows());
  for (long k = -(m - 1); k <= m - 1; ++k) prod = prod * (t.h - ScalarMatrix::identity(t.h.rows()) * Scalar(k));
  require(prod.is_zero(), "h is semisimple with integer weights");
}

SL2Triple irreducible_block(int m) {
  const auto n = static_cast<std::size_t>(m);
  SL2Triple t{ScalarMatrix(n, n), ScalarMatrix(n, n), ScalarMatrix(n, n)};
  for (int i = 0; i + 1 < m; ++i) {
    t.x(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)) = i + 1;
    t.y(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(i)) = m - 1 - i;
  }
  for (int i = 0; i < m; ++i) t.h(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = m - 1 - 2 * i;
  return t;
}

ScalarMatrix block_form(int m) {
  const auto n = static_cast<std::size_t>(m);
  ScalarMatrix b(n, n);
  for (int i = 0; i < m; ++i) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m - 1), static_cast<unsigned long>(i));
    mpq_class v(1, 1);
    v /= binom;
    if (i % 2 == 0) v = -v;
    b(static_cast<std::size_t>(i), static_cast<std::size_t>(m - 1 - i)) = Scalar(v);
  }
  return b;
}

JMResult jm_triple(Kind k, const classify::Partition& d) {
  const int m = d.sum();
  classify::Family fam = k == Kind::sl ? classify::Family::A
                         : k == Kind::sp ? classify::Family::C
                         : (m % 2 == 1) ? classify::Family::B
                                        : classify::Family::D;
  int rank = k == Kind::sl ? m - 1 : m / 2;
  if (m < 1 || (k == Kind::sp && m % 2 != 0) || rank < 1 || !classify::valid_partition(fam, rank, d))
    throw InputError(d.to_string() + " is not a valid partition for " + kind_name(k) + std::to_string(m));

  const auto n = static_cast<std::size_t>(m);
  SL2Triple t{ScalarMatrix(n, n), ScalarMatrix(n, n), ScalarMatrix(n, n)};
  ScalarMatrix form(n, n);
  std::size_t off = 0;
  const auto& parts = d.parts;
  for (std::size_t idx = 0; idx < parts.size();) {
    int p = parts[idx];
    SL2Triple b = irreducible_block(p);
    ScalarMatrix s = block_form(p);
    const auto ps = static_cast<std::size_t>(p);
    bool paired = (k == Kind::sp && p % 2 == 1) || (k == Kind::so && p % 2 == 0);
    int copies = paired ? 2 : 1;
    for (int c = 0; c < copies; ++c) {
      place(t.x, b.x, off + ps * c, off + ps * c);
      place(t.h, b.h, off + ps * c, off + ps * c);
      place(t.y, b.y, off + ps * c, off + ps * c);
    }
    if (k != Kind::sl) {
      if (paired) {
        // [[0, S], [-S, 0]]: skew for sp (S symmetric), symmetric for so (S skew).
        place(form, s, off, off + ps);
        place(form, -s, off + ps, off);
      } else {
        place(form, s, off, off);
      }
    }
    off += ps * static_cast<std::size_t>(copies);
    idx += static_cast<std::size_t>(copies);
  }

  JMResult out{k == Kind::sl ? make_algebra(Kind::sl, m - 1) : make_algebra_with_form(k, form), std::move(t)};
  check_triple(out.algebra, out.triple);
  if (!(jordan_type(out.triple.x) == d)) throw StructureError("constructed x has the wrong Jordan type");
  return out;
}

}  // namespace slodowy::liealg
