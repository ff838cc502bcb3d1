#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <vector>

#include "superband/grassmann.hpp"
#include "superband/verify.hpp"

using namespace superband;

namespace {

GrassmannElement gen(int n, int i) { return GrassmannElement::generator(n, i); }
GrassmannElement sc(int n, long c) { return GrassmannElement::scalar(n, c); }

// Independent product oracle: multiply term-by-term, computing the sign by
// bubble-sorting the concatenated index lists.
GrassmannElement mul_oracle(const GrassmannElement& x, const GrassmannElement& y) {
  const int n = x.generators();
  GrassmannElement out(n);
  for (const auto& [ma, ca] : x.terms()) {
    for (const auto& [mb, cb] : y.terms()) {
      std::vector<int> idx;
      for (int i = 0; i < n; ++i)
        if (ma & (Mask{1} << i)) idx.push_back(i);
      for (int i = 0; i < n; ++i)
        if (mb & (Mask{1} << i)) idx.push_back(i);
      // bubble sort, counting swaps; repeated indices annihilate
      int swaps = 0;
      bool dead = false;
      for (std::size_t a = 0; a + 1 < idx.size() && !dead; ++a)
        for (std::size_t b = 0; b + 1 < idx.size() - a; ++b) {
          if (idx[b] == idx[b + 1]) dead = true;
          if (idx[b] > idx[b + 1]) {
            std::swap(idx[b], idx[b + 1]);
            ++swaps;
          }
        }
      if (dead || (ma & mb)) continue;
      Rat c = ca * cb;
      if (swaps % 2) c = -c;
      out = out + GrassmannElement::monomial(n, ma | mb, c);
    }
  }
  return out;
}

// Test-local dense Gaussian elimination; returns the rank.
int rank_of(std::vector<std::vector<Rat>> m) {
  int rank = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot = m.size();
    for (std::size_t r = rank; r < m.size(); ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[rank][col];
      for (std::size_t cc = 0; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

std::vector<Rat> even_coords(const GrassmannElement& x) {
  auto masks = even_masks(x.generators());
  std::vector<Rat> v;
  for (Mask m : masks) v.push_back(x.coeff(m));
  return v;
}

// Is x a rational combination of the basis elements? (rank test)
bool in_span(const std::vector<GrassmannElement>& basis,
             const GrassmannElement& x) {
  std::vector<std::vector<Rat>> rows;
  for (const auto& b : basis) rows.push_back(even_coords(b));
  int r0 = rank_of(rows);
  rows.push_back(even_coords(x));
  return rank_of(rows) == r0;
}

}  // namespace

TEST_CASE("addition") {
  GrassmannElement t1 = gen(3, 1);
  CHECK((t1 + (-t1)).is_zero());
  GrassmannElement a = sc(3, 1) + gen(3, 1) * gen(3, 2);
  GrassmannElement b = sc(3, 2) - gen(3, 1) * gen(3, 2);
  CHECK(a + b == sc(3, 3));
  GrassmannElement s = gen(3, 1) + gen(3, 2);
  CHECK(s.parity() == Parity::Odd);
  CHECK_THROWS_AS(gen(3, 1) + gen(4, 1), DimensionError);
}

TEST_CASE("multiplication basics") {
  CHECK((gen(2, 1) * gen(2, 1)).is_zero());
  CHECK(gen(2, 2) * gen(2, 1) == -(gen(2, 1) * gen(2, 2)));
  GrassmannElement one = GrassmannElement::one(2);
  CHECK((one + gen(2, 1)) * (one - gen(2, 1)) == one);
  CHECK_THROWS_AS(gen(2, 1) * gen(3, 1), DimensionError);
}

TEST_CASE("multiplication agrees with the bubble-sort oracle") {
  std::vector<Rat> pool = {Rat(-2), Rat(-1), Rat(0), Rat(1), Rat(2),
                           Rat(1, 2)};
  Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    int n = 2 + static_cast<int>(rng.below(5));
    GrassmannElement x = random_element(rng, n, pool);
    GrassmannElement y = random_element(rng, n, pool);
    REQUIRE(x * y == mul_oracle(x, y));
  }
}

TEST_CASE("associativity, exhaustive monomials and random triples") {
  for (int n = 1; n <= 4; ++n) {
    const Mask top = Mask{1} << n;
    for (Mask a = 0; a < top; ++a)
      for (Mask b = 0; b < top; ++b)
        for (Mask c = 0; c < top; ++c) {
          GrassmannElement x = GrassmannElement::monomial(n, a, 1);
          GrassmannElement y = GrassmannElement::monomial(n, b, 1);
          GrassmannElement z = GrassmannElement::monomial(n, c, 1);
          REQUIRE((x * y) * z == x * (y * z));
        }
  }
  std::vector<Rat> pool = {Rat(-1), Rat(0), Rat(1), Rat(2)};
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    GrassmannElement x = random_element(rng, 8, pool);
    GrassmannElement y = random_element(rng, 8, pool);
    GrassmannElement z = random_element(rng, 8, pool);
    REQUIRE((x * y) * z == x * (y * z));
  }
}

TEST_CASE("supercommutativity and odd nilpotency") {
  std::vector<Rat> pool = {Rat(-1), Rat(0), Rat(1), Rat(3)};
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    GrassmannElement even = random_homogeneous(rng, 6, Parity::Even, pool);
    GrassmannElement odd1 = random_homogeneous(rng, 6, Parity::Odd, pool);
    GrassmannElement odd2 = random_homogeneous(rng, 6, Parity::Odd, pool);
    CHECK(even * odd1 == odd1 * even);
    CHECK(odd1 * odd2 == -(odd2 * odd1));
    CHECK((odd1 * odd1).is_zero());
  }
}

TEST_CASE("parity classification") {
  CHECK((sc(2, 1) + gen(2, 1) * gen(2, 2)).parity() == Parity::Even);
  CHECK(gen(2, 1).parity() == Parity::Odd);
  CHECK((sc(2, 1) + gen(2, 1)).parity() == Parity::Mixed);
  CHECK(GrassmannElement::zero(2).parity() == Parity::Even);
  CHECK(GrassmannElement::zero(2).is_even());
}

TEST_CASE("body and soul") {
  GrassmannElement x = sc(2, 3) + gen(2, 1) * gen(2, 2) * Rat(2);
  CHECK(x.body() == 3);
  CHECK(x.soul() == gen(2, 1) * gen(2, 2) * Rat(2));
  CHECK((gen(3, 1) * gen(3, 2) * gen(3, 3)).body() == 0);
  std::vector<Rat> pool = {Rat(-1), Rat(0), Rat(1), Rat(2)};
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    GrassmannElement a = random_element(rng, 5, pool);
    GrassmannElement b = random_element(rng, 5, pool);
    CHECK((a * b).body() == a.body() * b.body());
  }
}

TEST_CASE("inverse by the nilpotent series") {
  GrassmannElement one = GrassmannElement::one(3);
  CHECK((one + gen(3, 1)).inverse() == one - gen(3, 1));
  std::vector<Rat> pool = {Rat(-1), Rat(0), Rat(1), Rat(2), Rat(1, 3)};
  Rng rng(13);
  int done = 0;
  while (done < 100) {
    GrassmannElement x = random_element(rng, 5, pool);
    if (x.body() == 0) continue;
    REQUIRE(x * x.inverse() == GrassmannElement::one(5));
    ++done;
  }
  CHECK_THROWS_AS(gen(3, 1).inverse(), DomainError);
  CHECK_THROWS_AS((gen(3, 1) * gen(3, 2)).inverse(), DomainError);
}

TEST_CASE("annihilator basis: documented instances") {
  auto b3 = annihilator_even(gen(3, 1));
  REQUIRE(b3.basis.size() == 2);
  CHECK(b3.basis[0] == gen(3, 1) * gen(3, 2));
  CHECK(b3.basis[1] == gen(3, 1) * gen(3, 3));
  auto b2 = annihilator_even(gen(2, 1));
  REQUIRE(b2.basis.size() == 1);
  CHECK(b2.basis[0] == gen(2, 1) * gen(2, 2));
  CHECK(annihilator_even(gen(1, 1)).basis.empty());
  CHECK_THROWS_AS(annihilator_even(GrassmannElement::zero(3)), DomainError);
  CHECK_THROWS_AS(annihilator_even(sc(3, 1)), ParityError);
  CHECK_THROWS_AS(annihilator_even(sc(3, 1) + gen(3, 1)), ParityError);
}

TEST_CASE("annihilator basis against the enumeration oracle") {
  std::vector<GrassmannElement> alphas;
  for (int n = 1; n <= 4; ++n) {
    alphas.push_back(gen(n, 1));
    if (n >= 2) alphas.push_back(gen(n, 1) + gen(n, 2));
    if (n >= 3)
      alphas.push_back(gen(n, 1) + gen(n, 1) * gen(n, 2) * gen(n, 3));
  }
  std::vector<Rat> small = {Rat(-1), Rat(0), Rat(1)};
  for (const auto& alpha : alphas) {
    const int n = alpha.generators();
    auto ann = annihilator_even(alpha);
    for (const auto& e : ann.basis) {
      CHECK((alpha * e).is_zero());
      CHECK(e.is_even());
    }
    // basis is linearly independent
    std::vector<std::vector<Rat>> rows;
    for (const auto& e : ann.basis) rows.push_back(even_coords(e));
    CHECK(rank_of(rows) == static_cast<int>(ann.basis.size()));
    // dimension formula: dim Ann = even-dim - rank(mult-by-alpha)
    std::vector<std::vector<Rat>> op_rows;
    auto odd = odd_masks(n);
    for (Mask em : even_masks(n)) {
      GrassmannElement img = alpha * GrassmannElement::monomial(n, em, 1);
      std::vector<Rat> row;
      for (Mask om : odd) row.push_back(img.coeff(om));
      op_rows.push_back(std::move(row));
    }
    CHECK(static_cast<int>(ann.basis.size()) ==
          static_cast<int>(even_masks(n).size()) - rank_of(op_rows));
    // brute force membership over the +-1/0 grid
    std::vector<std::size_t> pick(even_masks(n).size(), 0);
    auto ev = even_masks(n);
    for (;;) {
      GrassmannElement::TermMap terms;
      for (std::size_t i = 0; i < ev.size(); ++i)
        if (small[pick[i]] != 0) terms[ev[i]] = small[pick[i]];
      GrassmannElement x = GrassmannElement::from_terms(n, std::move(terms));
      REQUIRE((alpha * x).is_zero() == in_span(ann.basis, x));
      std::size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < small.size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;
    }
  }
}

TEST_CASE("alpha equality") {
  GrassmannElement alpha = gen(3, 1);
  GrassmannElement zero = GrassmannElement::zero(3);
  CHECK(alpha_equal(alpha, zero, gen(3, 1) * gen(3, 2)));
  CHECK_FALSE(alpha_equal(alpha, zero, GrassmannElement::one(3)));
  CHECK(alpha_equal(alpha, gen(3, 2) * gen(3, 3), gen(3, 2) * gen(3, 3)));
  CHECK_THROWS_AS(alpha_equal(GrassmannElement::zero(3), zero, zero),
                  DomainError);
  CHECK_THROWS_AS(alpha_equal(alpha, gen(3, 2), zero), ParityError);
  CHECK_THROWS_AS(alpha_equal(sc(3, 2), zero, zero), ParityError);
}

TEST_CASE("alpha equality is an equivalence on sampled parameter sets") {
  AlphaContext ctx(gen(4, 1) + gen(4, 2));
  std::vector<GrassmannElement> pts;
  std::vector<Rat> pool = {Rat(-1), Rat(0), Rat(1), Rat(2)};
  Rng rng(5);
  for (int i = 0; i < 12; ++i)
    pts.push_back(random_homogeneous(rng, 4, Parity::Even, pool));
  for (const auto& t : pts) CHECK(ctx.equal(t, t));
  for (const auto& t : pts)
    for (const auto& u : pts) {
      CHECK(ctx.equal(t, u) == ctx.equal(u, t));
      CHECK(ctx.equal(t, u) == (ctx.reduce(t) == ctx.reduce(u)));
      for (const auto& v : pts)
        if (ctx.equal(t, u) && ctx.equal(u, v)) CHECK(ctx.equal(t, v));
    }
}

TEST_CASE("coset reduction is canonical") {
  AlphaContext ctx(gen(4, 1));
  std::vector<Rat> pool = {Rat(-1), Rat(0), Rat(1), Rat(2)};
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    GrassmannElement t = random_homogeneous(rng, 4, Parity::Even, pool);
    GrassmannElement r = ctx.reduce(t);
    CHECK(ctx.equal(t, r));
    CHECK(ctx.reduce(r) == r);
    if (!ctx.annihilator().basis.empty())
      CHECK(ctx.reduce(t + ctx.annihilator().basis[0]) == r);
  }
  // 1 reduces to itself: no annihilator member has a body part
  CHECK(ctx.reduce(GrassmannElement::one(4)) == GrassmannElement::one(4));
  CHECK_THROWS_AS(ctx.reduce(gen(4, 1)), ParityError);
}

TEST_CASE("element text rendering") {
  CHECK(to_string(GrassmannElement::zero(2)) == "0");
  GrassmannElement x = GrassmannElement::one(2) - gen(2, 1) * gen(2, 2);
  CHECK(to_string(x) == "1 - g1.g2");
  CHECK(to_string(x, GenStyle::Theta) == "1 - θ1.θ2");
  GrassmannElement y =
      sc(3, 3) + gen(3, 1) * gen(3, 2) * Rat(2) - gen(3, 3) * Rat(1, 2);
  CHECK(to_string(y) == "3 + 2*g1.g2 - 1/2*g3");
}
