#include <doctest.h>

#include <random>

#include "cubicfm/lattice.hpp"

using namespace cubicfm;

TEST_CASE("standard lattices") {
  Lattice u = standard(LatticeName::U);
  CHECK(u.gram() == IntMatrix{{0, 1}, {1, 0}});
  CHECK(signature(u) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(u.det() == -1);

  Lattice e8m = standard(LatticeName::E8minus);
  CHECK(signature(e8m) == std::pair<std::size_t, std::size_t>{0, 8});
  CHECK(e8m.det() == 1);
  CHECK(e8m.is_even());

  Lattice l = standard(LatticeName::L);
  CHECK(l.rank() == 23);
  CHECK(signature(l) == std::pair<std::size_t, std::size_t>{2, 21});
  CHECK(abs(l.det()) == 1);
  CHECK_FALSE(l.is_even());

  Lattice l0 = standard(LatticeName::L0);
  CHECK(l0.rank() == 22);
  CHECK(signature(l0) == std::pair<std::size_t, std::size_t>{2, 20});
  CHECK(abs(l0.det()) == 3);
  CHECK(l0.is_even());

  Lattice mukai = standard(LatticeName::LambdaMukai);
  CHECK(mukai.rank() == 24);
  CHECK(abs(mukai.det()) == 1);
  CHECK(signature(mukai) == std::pair<std::size_t, std::size_t>{4, 20});

  CHECK(standard("LambdaK3").rank() == 22);
  CHECK_THROWS_AS(standard("Leech"), std::invalid_argument);
}

TEST_CASE("direct sum and rescale") {
  Lattice u = standard(LatticeName::U);
  Lattice uu = direct_sum(u, u);
  CHECK(uu.rank() == 4);
  CHECK(uu.det() == 1);

  Lattice a2m = standard(LatticeName::A2minus);
  CHECK(direct_sum(a2m, a2m).det() == 9);

  Lattice minus3(IntMatrix{{-3}});
  CHECK(direct_sum(u, minus3).rank() == 3);

  CHECK(rescale(standard(LatticeName::A2), -1).gram() == a2m.gram());
  CHECK(rescale(u, 1).gram() == u.gram());
  CHECK(rescale(Lattice(IntMatrix{{1}}), -3).gram() == IntMatrix{{-3}});
  CHECK_THROWS_AS(rescale(u, 0), std::invalid_argument);

  auto s1 = signature(u), s2 = signature(a2m);
  auto s = signature(direct_sum(u, a2m));
  CHECK(s.first == s1.first + s2.first);
  CHECK(s.second == s1.second + s2.second);
}

TEST_CASE("orthogonal complement of h in L matches L0 invariants") {
  Lattice l = standard(LatticeName::L);
  // characteristic vector of square -3: (3,3,1,...,1)
  std::vector<mpz_class> h(23, 1);
  h[0] = 3;
  h[1] = 3;
  CHECK(l.inner(h, h) == -3);
  auto [comp, emb] = orthogonal_complement(l, {h});
  CHECK(comp.rank() == 22);
  CHECK(signature(comp) == std::pair<std::size_t, std::size_t>{2, 20});
  CHECK(comp.is_even());
  CHECK(abs(comp.det()) == 3);
  CHECK(emb.preserves_gram());
  CHECK(forms_agree(discriminant_group(comp),
                    discriminant_group(standard(LatticeName::L0))));
}

TEST_CASE("complement of an isotropic vector is degenerate") {
  Lattice u = standard(LatticeName::U);
  CHECK_THROWS_AS(orthogonal_complement(u, {{mpz_class(1), mpz_class(0)}}),
                  std::invalid_argument);
}

TEST_CASE("complement of A2 in the Mukai lattice") {
  Lattice mukai = standard(LatticeName::LambdaMukai);
  std::vector<mpz_class> l1(24, 0), l2(24, 0);
  l1[18] = 1;
  l1[19] = 1;
  l2[16] = 1;
  l2[17] = 1;
  l2[18] = -1;
  auto [comp, emb] = orthogonal_complement(mukai, {l1, l2});
  CHECK(comp.rank() == 22);
  CHECK(signature(comp) == std::pair<std::size_t, std::size_t>{2, 20});
  CHECK(forms_agree(discriminant_group(comp),
                    discriminant_group(standard(LatticeName::A2minus))));
}

TEST_CASE("complement rejects dependent vectors") {
  Lattice uu = direct_sum(standard(LatticeName::U), standard(LatticeName::U));
  std::vector<mpz_class> v{1, 2, 0, 0}, w{2, 4, 0, 0};
  CHECK_THROWS_AS(orthogonal_complement(uu, {v, w}), std::invalid_argument);
}

TEST_CASE("discriminant groups") {
  CHECK(discriminant_group(standard(LatticeName::E8minus)).is_trivial());

  DiscForm a2m = discriminant_group(standard(LatticeName::A2minus));
  REQUIRE(a2m.elementary_divisors() == std::vector<mpz_class>{3});
  CHECK(a2m.q({1}) == mpq_class(4, 3));  // -2/3 mod 2Z
  CHECK(a2m.q({2}) == mpq_class(4, 3));

  CHECK_THROWS_AS(discriminant_group(standard(LatticeName::L)).q({}),
                  std::domain_error);
}

TEST_CASE("q is well defined and quadratic") {
  std::vector<Lattice> lats = {standard(LatticeName::A2minus),
                               rescale(standard(LatticeName::A2), 5),
                               Lattice(IntMatrix{{2, 1}, {1, -6}})};
  std::mt19937 rng(11);
  for (const Lattice& lat : lats) {
    DiscForm df = discriminant_group(lat);
    REQUIRE(df.even());
    mpz_class order = df.order();
    CHECK(order == abs(lat.det()));
    std::uniform_int_distribution<long> shift(-4, 4);
    for (const auto& x : df.elements()) {
      // q(-x) = q(x)
      std::vector<mpz_class> neg(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
      CHECK(df.q(neg) == df.q(x));
      // representative independence: shifting a coefficient by its divisor
      std::vector<mpz_class> y = x;
      for (std::size_t i = 0; i < y.size(); ++i)
        y[i] += shift(rng) * df.elementary_divisors()[i];
      CHECK(df.q(y) == df.q(x));
      // q(nx) = n^2 q(x)
      for (long n = 0; n <= 6; ++n) {
        std::vector<mpz_class> nx(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) nx[i] = n * x[i];
        CHECK(df.q(nx) == mod2(mpq_class(n * n) * df.q(x)));
      }
      // polarization identity: q(x+y') - q(x) - q(y') = 2 b(x,y') mod 2Z
      for (const auto& yy : df.elements()) {
        std::vector<mpz_class> sum(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + yy[i];
        CHECK(mod2(df.q(sum) - df.q(x) - df.q(yy)) ==
              mod2(2 * df.b(x, yy)));
      }
    }
  }
}

TEST_CASE("forms_agree") {
  DiscForm trivial = discriminant_group(standard(LatticeName::E8minus));
  CHECK(forms_agree(trivial, trivial));

  // Z/3 with q = 2/3 versus Z/3 with q = 4/3: no matching exists
  DiscForm a2 = discriminant_group(standard(LatticeName::A2));
  DiscForm a2m = discriminant_group(standard(LatticeName::A2minus));
  CHECK(a2.q({1}) == mpq_class(2, 3));
  CHECK_FALSE(forms_agree(a2, a2m));
  CHECK(forms_agree(a2m, a2m));
}

TEST_CASE("mod2 and mod1 canonical representatives") {
  CHECK(mod2(mpq_class(-2, 3)) == mpq_class(4, 3));
  CHECK(mod2(mpq_class(16, 3)) == mpq_class(4, 3));
  CHECK(mod2(mpq_class(2)) == 0);
  CHECK(mod1(mpq_class(-1, 4)) == mpq_class(3, 4));
}
