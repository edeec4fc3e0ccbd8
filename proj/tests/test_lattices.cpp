#include "support.hpp"

#include <doctest.h>
#include <hksym/errors.hpp>
#include <hksym/lattice.hpp>
#include <hksym/normal_form.hpp>

using namespace hksym;

namespace {

Lattice lat(const char* expr) { return lattice_from_expression(expr); }

Lattice random_even_lattice() {
  // Direct sums of a few named pieces, then a random change of basis.
  static const char* pieces[] = {"U", "H5", "A2(-1)", "A4(-1)", "<-2>", "<4>", "U(3)", "<-10>", "A1", "U(5)"};
  Lattice l = Lattice::zero();
  const long count = testing::uniform(1, 3);
  for (long i = 0; i < count; ++i) l = direct_sum(l, make_standard(pieces[testing::uniform(0, 9)]));
  const IntMatrix v = testing::random_unimodular(l.rank());
  return Lattice(v.transpose() * l.gram() * v);
}

FiniteQuadraticForm random_form() {
  // Cyclic pieces with admissible values: q in (2/p)Z for odd p, q in (1/d)Z for d = 2, 4.
  FiniteQuadraticForm f = parse_fqf("0");
  const long count = testing::uniform(1, 3);
  for (long i = 0; i < count; ++i) {
    switch (testing::uniform(0, 3)) {
      case 0: f = orthogonal_sum(f, FiniteQuadraticForm::cyclic(5, make_rational(2 * testing::uniform(0, 4), 5))); break;
      case 1: f = orthogonal_sum(f, FiniteQuadraticForm::cyclic(3, make_rational(2 * testing::uniform(0, 2), 3))); break;
      case 2: f = orthogonal_sum(f, FiniteQuadraticForm::cyclic(2, make_rational(testing::uniform(0, 3), 2))); break;
      default: f = orthogonal_sum(f, FiniteQuadraticForm::cyclic(4, make_rational(testing::uniform(0, 7), 4))); break;
    }
  }
  return f;
}

// Same form presented on a different generating set: reverse the generators and
// scale each by a unit.
FiniteQuadraticForm disguise(const FiniteQuadraticForm& f) {
  const std::size_t n = f.generators();
  std::vector<Integer> orders(n);
  std::vector<Integer> scale(n);
  std::vector<Rational> q(n);
  RatMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t src = n - 1 - i;
    orders[i] = f.orders()[src];
    scale[i] = (orders[i] == 2 || orders[i] == 4) ? 1 : 2;
    if (orders[i] == 4) scale[i] = 3;
  }
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = Rational(scale[i] * scale[i]) * f.q_values()[n - 1 - i];
    for (std::size_t j = 0; j < n; ++j) b(i, j) = Rational(scale[i] * scale[j]) * f.bilinear()(n - 1 - i, n - 1 - j);
  }
  return FiniteQuadraticForm(orders, b, q);
}

}  // namespace

TEST_CASE("standard lattices") {
  CHECK(make_standard("H5").gram() == IntMatrix{{2, 1}, {1, -2}});
  CHECK(make_standard("U").gram() == IntMatrix{{0, 1}, {1, 0}});
  const Lattice a4s = make_standard("A4*(-5)");
  CHECK(a4s.disc() == 125);
  CHECK(make_standard("A4*(−5)") == a4s);
  CHECK(make_standard("E8(-1)").disc() == 1);
  CHECK(make_standard("⟨−2⟩").gram() == IntMatrix{{-2}});
  CHECK_THROWS_AS(make_standard("<3>"), InputError);
  CHECK_THROWS_AS(make_standard("D4"), InputError);
  CHECK_THROWS_AS(make_standard("A4*"), InputError);
}

TEST_CASE("direct sums and rescaling") {
  const Lattice uh = direct_sum(make_standard("U"), make_standard("H5"));
  CHECK(uh.rank() == 4);
  CHECK(uh.det() == 5);
  CHECK(direct_sum(make_standard("H5"), Lattice::zero()) == make_standard("H5"));
  CHECK(lat("<-2>+<-2>").gram() == IntMatrix{{-2, 0}, {0, -2}});
  CHECK(rescale(make_standard("U"), 5).gram() == IntMatrix{{0, 5}, {5, 0}});
  CHECK(rescale(make_standard("<-2>"), 5).gram() == IntMatrix{{-10}});
  CHECK(lat("U+H5+A4(-1)^2+<-2>").rank() == 13);
  CHECK_THROWS_AS(rescale_rational(dual_gram(make_standard("A4")), 2), InputError);
}

TEST_CASE("signatures") {
  CHECK(signature(make_standard("U")) == Signature{1, 1, 0});
  CHECK(signature(make_standard("E8(-1)")) == Signature{0, 8, 0});
  CHECK(signature(lat("U^3+E8(-1)^2+<-2>")) == Signature{3, 20, 0});
  CHECK(signature(RatMatrix{{0, 0}, {0, 0}}) == Signature{0, 0, 2});
}

TEST_CASE("discriminant groups and forms") {
  CHECK(discriminant_group(make_standard("U")).orders.empty());
  CHECK(discriminant_group(make_standard("H5")).orders == std::vector<Integer>{5});
  CHECK(discriminant_group(make_standard("<-2>")).orders == std::vector<Integer>{2});

  const auto d2 = discriminant_form(make_standard("<-2>"));
  CHECK(fqf_isomorphic(d2, parse_fqf("Z/2(-1/2)")));
  const auto d10 = discriminant_form(make_standard("<-10>"));
  REQUIRE(d10.orders() == std::vector<Integer>{10});
  CHECK(d10.q_values()[0] == mod2(make_rational(-1, 10)));

  const auto u5 = discriminant_form(make_standard("U(5)"));
  REQUIRE(u5.orders() == std::vector<Integer>{5, 5});
  // Dual basis of [[0,5],[5,0]] is e/5: q = 0 on both, b = 1/5.
  CHECK(u5.q(std::vector<Integer>{1, 0}) == 0);
  CHECK(u5.q(std::vector<Integer>{0, 1}) == 0);
  CHECK(abs(u5.bilinear()(0, 1)) != 0);
  CHECK_FALSE(fqf_isomorphic(u5, parse_fqf("Z/5(0)+Z/5(0)")));
}

TEST_CASE("p-elementary") {
  CHECK(is_p_elementary(make_standard("H5"), 5).flag);
  CHECK(is_p_elementary(make_standard("H5"), 5).a == 1);
  CHECK(is_p_elementary(make_standard("U"), 5).flag);
  CHECK(is_p_elementary(make_standard("U"), 5).a == 0);
  CHECK_FALSE(is_p_elementary(make_standard("<-10>"), 5).flag);
}

TEST_CASE("orthogonal complements") {
  const Lattice uu = lat("U+U");
  const Sublattice first(uu, IntMatrix{{1, 0}, {0, 1}, {0, 0}, {0, 0}});
  const Sublattice comp = orthogonal_complement(first);
  CHECK(comp.basis() == IntMatrix{{0, 0}, {0, 0}, {1, 0}, {0, 1}});

  const Sublattice diag(make_standard("U"), IntMatrix{{1}, {1}});
  const auto anti = orthogonal_complement(diag).basis();
  REQUIRE(anti.cols() == 1);
  CHECK(anti(0, 0) == -anti(1, 0));
  CHECK(abs(anti(0, 0)) == 1);

  const Lattice aa = lat("A4(-1)+A4(-1)");
  IntMatrix d(8, 4);
  for (std::size_t i = 0; i < 4; ++i) d(i, i) = d(i + 4, i) = 1;
  const auto ad = orthogonal_complement(Sublattice(aa, d));
  CHECK(ad.rank() == 4);
  // Brute-force oracle: x - sigma(x) for x in the first copy spans the antidiagonal.
  IntMatrix anti_expected(8, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    anti_expected(i, i) = 1;
    anti_expected(i + 4, i) = -1;
  }
  CHECK(ad.basis() == canonical_column_basis(anti_expected));
}

TEST_CASE("finite quadratic form isomorphism examples") {
  const auto target = parse_fqf("Z/5Z(−2/5) ⊕ Z/5Z(4/5) ⊕ Z/5Z(4/5) ⊕ Z/2Z(−1/2)");
  CHECK(fqf_isomorphic(discriminant_form(lat("U(5)+<-10>")), target));
  CHECK(fqf_isomorphic(target, target));
  CHECK_FALSE(fqf_isomorphic(parse_fqf("Z/5(2/5)"), parse_fqf("Z/5(4/5)")));
  // Exhaustive oracle for the line above: no unit u with u^2 * 2/5 = 4/5 mod 2.
  for (int u = 1; u < 5; ++u) CHECK(mod2(make_rational(2 * u * u, 5)) != make_rational(4, 5));
  CHECK_FALSE(fqf_isomorphic(discriminant_form(lat("U(5)+<-2>")), target));
  CHECK_THROWS_AS(fqf_isomorphic(parse_fqf("Z/101(0)+Z/101(0)"), parse_fqf("Z/101(0)+Z/101(0)")), InputError);
  CHECK_THROWS_AS(parse_fqf("Z/5(1/5)"), InputError);
}

TEST_CASE("lattice properties") {
  for (int iter = 0; iter < 220; ++iter) {
    const Lattice l = random_even_lattice();
    const auto dg = discriminant_group(l);
    Integer prod = 1;
    for (const auto& d : dg.orders) prod *= d;
    CHECK(prod == l.disc());

    // Dual generators pair integrally with L and have the stated orders.
    const RatMatrix pair = to_rational(l.gram()) * dg.generators;
    CHECK(is_integral(pair));
    for (std::size_t i = 0; i < dg.orders.size(); ++i) {
      RatMatrix col(l.rank(), 1);
      for (std::size_t r = 0; r < l.rank(); ++r) col(r, 0) = Rational(dg.orders[i]) * dg.generators(r, i);
      CHECK(is_integral(col));
    }

    const auto form = discriminant_form(l);
    const std::size_t n = form.generators();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Integer> x(n), y(n), xy(n);
        x[i] += 1;
        y[j] += 1;
        for (std::size_t k = 0; k < n; ++k) xy[k] = x[k] + y[k];
        CHECK(mod2(form.q(xy) - form.q(x) - form.q(y)) == mod2(2 * form.b(x, y)));
      }

    const IntMatrix v = testing::random_unimodular(l.rank());
    const Lattice moved(v.transpose() * l.gram() * v);
    CHECK(signature(moved) == signature(l));
    if (l.disc() <= 2000) CHECK(fqf_isomorphic(discriminant_form(moved), form));

    const Lattice other = random_even_lattice();
    const Signature s1 = signature(l), s2 = signature(other), s = signature(direct_sum(l, other));
    CHECK(s.plus == s1.plus + s2.plus);
    CHECK(s.minus == s1.minus + s2.minus);

    const long k = testing::uniform(-3, 3);
    if (k != 0) {
      const Lattice scaled = rescale(l, k);
      Integer expect = l.det();
      for (std::size_t i = 0; i < l.rank(); ++i) expect *= k;
      CHECK(scaled.det() == expect);
      const Signature ss = signature(scaled);
      CHECK(ss.plus == (k > 0 ? s1.plus : s1.minus));
      CHECK(ss.minus == (k > 0 ? s1.minus : s1.plus));
    }

    // Complement of a random primitive sublattice.
    const auto cols = static_cast<std::size_t>(testing::uniform(1, static_cast<long>(l.rank())));
    IntMatrix basis(l.rank(), cols);
    for (std::size_t c = 0; c < cols; ++c) basis(c, c) = 1;
    const Sublattice m(l, basis);
    const Sublattice perp = orthogonal_complement(m);
    CHECK((m.basis().transpose() * l.gram() * perp.basis()).is_zero());
    CHECK(perp.is_primitive());
    CHECK(m.rank() + perp.rank() >= l.rank());
    if (determinant(m.gram()) != 0) CHECK(m.rank() + perp.rank() == l.rank());
  }
}

TEST_CASE("form isomorphism is an equivalence") {
  for (int iter = 0; iter < 200; ++iter) {
    const auto a = random_form();
    const auto b = disguise(a);
    CHECK(fqf_isomorphic(a, a));
    CHECK(fqf_isomorphic(a, b));
    CHECK(fqf_isomorphic(b, a));
    const auto c = random_form();
    const bool ac = fqf_isomorphic(a, c);
    CHECK(ac == fqf_isomorphic(c, a));
    CHECK(ac == fqf_isomorphic(b, c));
    // Negation reverses q; -(-q) = q.
    CHECK(fqf_isomorphic(a.negated().negated(), a));
  }
}
