#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "superband/supermatrix.hpp"
#include "superband/verify.hpp"

using namespace superband;

namespace {

GrassmannElement gen(int n, int i) { return GrassmannElement::generator(n, i); }
GrassmannElement sc(int n, long c) { return GrassmannElement::scalar(n, c); }
GrassmannElement zero(int n) { return GrassmannElement::zero(n); }
GrassmannElement one(int n) { return GrassmannElement::one(n); }

Supermatrix m11(const GrassmannElement& a, const GrassmannElement& al,
                const GrassmannElement& be, const GrassmannElement& b) {
  return Supermatrix::from_rows(1, 1, {{a, al}, {be, b}});
}

// Independent inverse oracle: solve b*x = 1 as a rational linear system over
// the full monomial basis.
GrassmannElement inverse_oracle(const GrassmannElement& b) {
  const int n = b.generators();
  const std::size_t dim = std::size_t{1} << n;
  // columns: coefficients of x; rows: target coefficients of b*x
  std::vector<std::vector<Rat>> aug(dim, std::vector<Rat>(dim + 1, Rat(0)));
  for (Mask xm = 0; xm < dim; ++xm) {
    GrassmannElement img = b * GrassmannElement::monomial(n, xm, 1);
    for (const auto& [tm, c] : img.terms()) aug[tm][xm] = c;
  }
  aug[0][dim] = 1;  // b * x = 1
  // Gauss-Jordan
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < dim; ++col) {
    std::size_t pivot = dim;
    for (std::size_t r = rank; r < dim; ++r)
      if (aug[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == dim) continue;
    std::swap(aug[rank], aug[pivot]);
    Rat lead = aug[rank][col];
    for (auto& v : aug[rank]) v /= lead;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == rank || aug[r][col] == 0) continue;
      Rat f = aug[r][col];
      for (std::size_t cc = 0; cc <= dim; ++cc) aug[r][cc] -= f * aug[rank][cc];
    }
    ++rank;
  }
  REQUIRE(rank == dim);  // caller guarantees invertibility
  GrassmannElement::TermMap terms;
  for (std::size_t r = 0; r < dim; ++r) {
    std::size_t lead = dim;
    for (std::size_t cc = 0; cc < dim; ++cc)
      if (aug[r][cc] != 0) {
        lead = cc;
        break;
      }
    if (lead < dim && aug[r][dim] != 0)
      terms[static_cast<Mask>(lead)] = aug[r][dim];
  }
  return GrassmannElement::from_terms(n, std::move(terms));
}

}  // namespace

TEST_CASE("construction and grading") {
  CHECK_NOTHROW(m11(one(2), gen(2, 1), gen(2, 2), sc(2, 3)));
  // odd entry on the diagonal block
  CHECK_THROWS_AS(m11(gen(2, 1), zero(2), zero(2), one(2)), GradingError);
  // even entry on the antidiagonal block
  CHECK_THROWS_AS(m11(one(2), sc(2, 2), zero(2), one(2)), GradingError);
  // mixed entries are never allowed
  CHECK_THROWS_AS(m11(one(2) + gen(2, 1), zero(2), zero(2), one(2)),
                  GradingError);
  CHECK_THROWS_AS(Supermatrix::from_rows(1, 1, {{one(2), zero(2)}}),
                  DimensionError);
}

TEST_CASE("multiplication") {
  const int n = 2;
  Supermatrix m = m11(one(n), gen(n, 1), gen(n, 2), sc(n, 3));
  CHECK(Supermatrix::identity(1, 1, n) * m == m);

  Supermatrix modd = m11(zero(n), gen(n, 1), gen(n, 2), one(n));
  GrassmannElement t12 = gen(n, 1) * gen(n, 2);
  Supermatrix sq = m11(t12, gen(n, 1), gen(n, 2), one(n) - t12);
  CHECK(modd * modd == sq);

  const int n4 = 4;
  Supermatrix a = m11(zero(n4), gen(n4, 1), gen(n4, 2), sc(n4, 2));
  Supermatrix b = m11(zero(n4), gen(n4, 3), gen(n4, 4), one(n4));
  Supermatrix expected =
      m11(gen(n4, 1) * gen(n4, 4), gen(n4, 1), gen(n4, 4) * Rat(2),
          sc(n4, 2) + gen(n4, 2) * gen(n4, 3));
  CHECK(a * b == expected);

  CHECK_THROWS_AS(a * Supermatrix::identity(1, 2, n4), DimensionError);
  CHECK_THROWS_AS(a * m11(zero(2), gen(2, 1), gen(2, 2), one(2)),
                  DimensionError);
}

TEST_CASE("supertrace") {
  CHECK(m11(one(2), gen(2, 1), gen(2, 2), one(2)).supertrace().is_zero());
  CHECK(m11(sc(2, 2), zero(2), zero(2), one(2)).supertrace() == one(2));
  GrassmannElement t12 = gen(2, 1) * gen(2, 2);
  CHECK(m11(t12, zero(2), zero(2), zero(2)).supertrace() == t12);
  CHECK_THROWS_AS(Supermatrix::identity(1, 2, 2).supertrace(), DimensionError);
}

TEST_CASE("berezinian at (1|1)") {
  CHECK(Supermatrix::identity(1, 1, 2).berezinian() == one(2));
  GrassmannElement t12 = gen(2, 1) * gen(2, 2);
  CHECK(m11(one(2), gen(2, 1), gen(2, 2), one(2)).berezinian() ==
        one(2) - t12);
  Supermatrix modd = m11(zero(2), gen(2, 1), gen(2, 2), one(2));
  GrassmannElement ber = modd.berezinian();
  CHECK(ber == -t12);
  CHECK((ber * ber).is_zero());
  // the excluded set: body(b) = 0
  CHECK_THROWS_AS(m11(one(2), gen(2, 1), gen(2, 2), t12).berezinian(),
                  DomainError);
}

TEST_CASE("berezinian against the linear-solve oracle") {
  std::vector<Rat> pool = {Rat(-1), Rat(0), Rat(1), Rat(2)};
  Rng rng(31);
  int done = 0;
  while (done < 120) {
    GrassmannElement a = random_homogeneous(rng, 3, Parity::Even, pool);
    GrassmannElement al = random_homogeneous(rng, 3, Parity::Odd, pool);
    GrassmannElement be = random_homogeneous(rng, 3, Parity::Odd, pool);
    GrassmannElement b = random_homogeneous(rng, 3, Parity::Even, pool);
    if (b.body() == 0) continue;
    Supermatrix m = m11(a, al, be, b);
    GrassmannElement binv = inverse_oracle(b);
    CHECK(m.berezinian() == a * binv + be * al * binv * binv);
    ++done;
  }
}

TEST_CASE("berezinian on (1|2) shapes") {
  const int n = 4;
  // D = I, so Ber = det(A - B C)
  Supermatrix f = Supermatrix::from_rows(
      1, 2,
      {{zero(n), gen(n, 1), gen(n, 2)},
       {gen(n, 3), one(n), zero(n)},
       {gen(n, 4), zero(n), one(n)}});
  GrassmannElement expected =
      -(gen(n, 1) * gen(n, 3) + gen(n, 2) * gen(n, 4));
  CHECK(f.berezinian() == expected);
  // and with a unit upper-left entry
  Supermatrix g = Supermatrix::from_rows(
      1, 2,
      {{one(n), gen(n, 1), gen(n, 2)},
       {gen(n, 3), one(n), zero(n)},
       {gen(n, 4), zero(n), one(n)}});
  CHECK(g.berezinian() == one(n) + expected);
  // non-invertible lower block
  Supermatrix h = Supermatrix::from_rows(
      1, 2,
      {{one(n), gen(n, 1), gen(n, 2)},
       {gen(n, 3), one(n), zero(n)},
       {gen(n, 4), zero(n), gen(n, 1) * gen(n, 2)}});
  CHECK_THROWS_AS(h.berezinian(), DomainError);
}

TEST_CASE("berezinian multiplicativity") {
  std::vector<Rat> pool = {Rat(-1), Rat(0), Rat(1), Rat(2)};
  Rng rng(37);
  int done = 0;
  while (done < 100) {
    GrassmannElement a1 = random_homogeneous(rng, 4, Parity::Even, pool);
    GrassmannElement a2 = random_homogeneous(rng, 4, Parity::Even, pool);
    GrassmannElement b1 = random_homogeneous(rng, 4, Parity::Even, pool);
    GrassmannElement b2 = random_homogeneous(rng, 4, Parity::Even, pool);
    if (b1.body() == 0 || b2.body() == 0) continue;
    Supermatrix x = m11(a1, random_homogeneous(rng, 4, Parity::Odd, pool),
                        random_homogeneous(rng, 4, Parity::Odd, pool), b1);
    Supermatrix y = m11(a2, random_homogeneous(rng, 4, Parity::Odd, pool),
                        random_homogeneous(rng, 4, Parity::Odd, pool), b2);
    Supermatrix xy = x * y;
    if (xy.at(1, 1).body() == 0) continue;
    CHECK(xy.berezinian() == x.berezinian() * y.berezinian());
    ++done;
  }
}

TEST_CASE("berezinian addition formula") {
  std::vector<Rat> pool = {Rat(-1), Rat(0), Rat(1), Rat(2)};
  Rng rng(41);
  int done = 0;
  while (done < 200) {
    GrassmannElement a = random_homogeneous(rng, 4, Parity::Even, pool);
    GrassmannElement b = random_homogeneous(rng, 4, Parity::Even, pool);
    if (b.body() == 0) continue;
    Supermatrix m = m11(a, random_homogeneous(rng, 4, Parity::Odd, pool),
                        random_homogeneous(rng, 4, Parity::Odd, pool), b);
    CHECK(m.berezinian() ==
          m.reduce_even().berezinian() + m.reduce_odd().berezinian());
    ++done;
  }
}

TEST_CASE("reductions") {
  Supermatrix m = m11(one(2), gen(2, 1), gen(2, 2), sc(2, 3));
  Supermatrix me = m.reduce_even();
  CHECK(me.at(1, 0).is_zero());
  CHECK(me.at(0, 0) == one(2));
  CHECK(me.at(0, 1) == gen(2, 1));
  CHECK(me.at(1, 1) == sc(2, 3));
  Supermatrix mo = m.reduce_odd();
  CHECK(mo.at(0, 0).is_zero());
  CHECK(mo.at(1, 0) == gen(2, 2));
  CHECK_FALSE(m.is_odd_reduced());
  CHECK(mo.is_odd_reduced());
  CHECK_THROWS_AS(Supermatrix::identity(1, 2, 2).reduce_even(), DimensionError);
}

TEST_CASE("odd closure flag") {
  GrassmannElement a = gen(3, 1);
  // beta proportional to alpha: the product vanishes
  CHECK(m11(zero(3), a, a * (gen(3, 2) * gen(3, 3)), one(3)).is_odd_closed());
  CHECK_FALSE(m11(zero(3), gen(3, 1), gen(3, 2), one(3)).is_odd_closed());
  CHECK(m11(zero(3), gen(3, 1) * gen(3, 2) * gen(3, 3), gen(3, 1), one(3))
            .is_odd_closed());
  // not odd-reduced at all
  CHECK_FALSE(m11(one(3), gen(3, 1), gen(3, 2), one(3)).is_odd_closed());
}

TEST_CASE("odd-reduced closed-form powers") {
  Supermatrix m = m11(zero(2), gen(2, 1), gen(2, 2), one(2));
  GrassmannElement t12 = gen(2, 1) * gen(2, 2);
  CHECK(m.odd_power_closed_form(1) == m);
  CHECK(m.odd_power_closed_form(2) ==
        m11(t12, gen(2, 1), gen(2, 2), one(2) - t12));
  CHECK(m.odd_power_closed_form(3) ==
        m11(t12, gen(2, 1), gen(2, 2), one(2) - t12 * Rat(2)));

  std::vector<Rat> pool = {Rat(-1), Rat(0), Rat(1), Rat(2)};
  Rng rng(43);
  for (int i = 0; i < 150; ++i) {
    Supermatrix modd = m11(zero(4), random_homogeneous(rng, 4, Parity::Odd, pool),
                           random_homogeneous(rng, 4, Parity::Odd, pool),
                           random_homogeneous(rng, 4, Parity::Even, pool));
    Supermatrix acc = modd;
    for (unsigned p = 2; p <= 6; ++p) {
      acc = acc * modd;
      REQUIRE(modd.odd_power_closed_form(p) == acc);
      GrassmannElement expected_str =
          modd.at(1, 1).pow(p - 2) *
          (Rat(static_cast<long>(p)) * (modd.at(0, 1) * modd.at(1, 0)) -
           modd.at(1, 1) * modd.at(1, 1));
      REQUIRE(acc.supertrace() == expected_str);
    }
  }
  CHECK_THROWS_AS(m11(one(2), gen(2, 1), gen(2, 2), one(2))
                      .odd_power_closed_form(2),
                  DomainError);
  CHECK_THROWS_AS(m.odd_power_closed_form(0), DomainError);
}

TEST_CASE("fixed-alpha odd families: closure and ideals") {
  const int n = 4;
  GrassmannElement alpha = gen(n, 1);
  std::vector<GrassmannElement> ts = {zero(n), sc(n, 2),
                                      gen(n, 2) * gen(n, 3)};
  std::vector<GrassmannElement> bs = {zero(n), one(n), sc(n, 2)};
  std::vector<Supermatrix> fam;
  for (const auto& t : ts)
    for (const auto& u : ts)
      for (const auto& b : bs)
        fam.push_back(m11(zero(n), alpha * t, alpha * u, b));
  for (const auto& x : fam) {
    REQUIRE(x.is_odd_closed());
    for (const auto& y : fam) {
      Supermatrix prod = x * y;
      REQUIRE(prod.is_odd_closed());  // closure of the alpha-family
      if (y.at(1, 0).is_zero())       // beta = 0 is a left ideal
        CHECK(prod.at(1, 0).is_zero());
      if (x.at(0, 1).is_zero())       // alpha = 0 is a right ideal
        CHECK(prod.at(0, 1).is_zero());
      if (x.at(1, 1).is_zero() || y.at(1, 1).is_zero())  // b = 0 two-sided
        CHECK(prod.at(1, 1).is_zero());
    }
  }
}

TEST_CASE("grading survives products") {
  std::vector<Rat> pool = {Rat(-1), Rat(0), Rat(1), Rat(2)};
  Rng rng(47);
  for (int i = 0; i < 100; ++i) {
    Supermatrix x = m11(random_homogeneous(rng, 4, Parity::Even, pool),
                        random_homogeneous(rng, 4, Parity::Odd, pool),
                        random_homogeneous(rng, 4, Parity::Odd, pool),
                        random_homogeneous(rng, 4, Parity::Even, pool));
    Supermatrix y = m11(random_homogeneous(rng, 4, Parity::Even, pool),
                        random_homogeneous(rng, 4, Parity::Odd, pool),
                        random_homogeneous(rng, 4, Parity::Odd, pool),
                        random_homogeneous(rng, 4, Parity::Even, pool));
    Supermatrix prod = x * y;
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s) {
        const GrassmannElement& v = prod.at(r, s);
        CHECK((v.is_zero() || v.parity() == prod.slot_parity(r, s)));
      }
  }
}
