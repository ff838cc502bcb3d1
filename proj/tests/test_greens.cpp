#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <set>
#include <vector>

#include "superband/family.hpp"

using namespace superband;

namespace {

GrassmannElement gen(int n, int i) { return GrassmannElement::generator(n, i); }
GrassmannElement zero(int n) { return GrassmannElement::zero(n); }
GrassmannElement one(int n) { return GrassmannElement::one(n); }

BandElement::Ctx theta1_ctx(int n) {
  return std::make_shared<AlphaContext>(gen(n, 1));
}

MulTable left_zero_table(int n) {
  MulTable t;
  t.n = n;
  t.cell.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.cell[i][j] = i;
  return t;
}

}  // namespace

TEST_CASE("partitions: construction, meet, join") {
  Partition a = Partition::from_block_of({0, 0, 1, 1, 2});
  Partition b = Partition::from_block_of({7, 3, 7, 3, 3});  // renumbered
  CHECK(a.num_blocks() == 3);
  CHECK(b.num_blocks() == 2);
  CHECK(b == Partition::from_block_of({0, 1, 0, 1, 1}));

  Partition m = meet(a, b);
  CHECK(m.num_blocks() == 5);  // all five (a-block, b-block) pairs differ
  CHECK(m.same_block(1, 3) == false);
  CHECK(m.same_block(0, 0));

  Partition j = join(a, b);
  CHECK(j.num_blocks() == 1);  // 0-2 linked via b, 2-3-4 via a and b

  CHECK(meet(a, Partition::universal(5)) == a);
  CHECK(join(a, Partition::equality(5)) == a);
  CHECK(meet(a, a) == a);
  CHECK(join(a, a) == a);
  CHECK(meet(a, b) == meet(b, a));
  CHECK(join(a, b) == join(b, a));
  Partition c = Partition::from_block_of({0, 1, 1, 2, 2});
  CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
  CHECK(join(join(a, b), c) == join(a, join(b, c)));
  CHECK(a.refines(j));
  CHECK(m.refines(a));
  CHECK_THROWS_AS(meet(a, Partition::universal(4)), DimensionError);
  CHECK_THROWS_AS(join(a, Partition::universal(4)), DimensionError);
}

TEST_CASE("greens on an abstract left zero semigroup") {
  GreensClasses g = greens_classes(left_zero_table(3));
  CHECK(g.r == Partition::equality(3));
  CHECK(g.l == Partition::universal(3));
  CHECK(g.h == Partition::equality(3));
  CHECK(g.d == Partition::universal(3));
  CHECK(g.j == Partition::universal(3));
}

TEST_CASE("greens rejects non-closed tables") {
  auto ctx = theta1_ctx(3);
  std::vector<BandElement> pq = {BandElement::p(ctx, zero(3)),
                                 BandElement::q(ctx, zero(3))};
  CayleyTable t = cayley_table(pq);
  CHECK_FALSE(t.closed);
  CHECK_THROWS_AS(to_multable(t), DomainError);
}

TEST_CASE("the documented P grid: R is the alpha-equality partition") {
  // alpha = theta1, n = 3, T = {0, t1.t2, t2.t3, 1 + t2.t3}
  auto ctx = theta1_ctx(3);
  const int n = 3;
  std::vector<GrassmannElement> t_list = {
      zero(n), gen(n, 1) * gen(n, 2), gen(n, 2) * gen(n, 3),
      one(n) + gen(n, 2) * gen(n, 3)};
  BandFamily fam = make_p_family(ctx, t_list, Canon::Raw);
  GreensClasses g = family_greens(fam);
  // 0 and t1.t2 collapse (alpha annihilates their difference)
  Partition expected = Partition::from_block_of({0, 0, 1, 2});
  CHECK(g.r == expected);
  CHECK(g.r == delta_partition(fam.elems, DeltaMode::Single));
  CHECK(g.l == Partition::universal(4));
}

TEST_CASE("delta partitions") {
  auto ctx = theta1_ctx(3);
  const int n = 3;
  GrassmannElement t23 = gen(n, 2) * gen(n, 3);

  std::vector<BandElement> ps = {
      BandElement::p(ctx, zero(n), Canon::Raw),
      BandElement::p(ctx, gen(n, 1) * gen(n, 2), Canon::Raw)};
  CHECK(delta_partition(ps, DeltaMode::Single).num_blocks() == 1);

  std::vector<BandElement> rs = {
      BandElement::r(ctx, zero(n), zero(n), Canon::Raw),
      BandElement::r(ctx, gen(n, 1) * gen(n, 2), zero(n), Canon::Raw),
      BandElement::r(ctx, GrassmannElement::scalar(n, 2), zero(n), Canon::Raw)};
  Partition d2 = delta_partition(rs, DeltaMode::Double);
  CHECK(d2.num_blocks() == 2);
  CHECK(d2.same_block(0, 1));
  CHECK_FALSE(d2.same_block(0, 2));

  CHECK_THROWS_AS(delta_partition(ps, DeltaMode::Double), DomainError);
  std::vector<BandElement> mixed = {ps[0], rs[0]};
  CHECK_THROWS_AS(delta_partition(mixed, DeltaMode::Single), DomainError);
}

TEST_CASE("fine relations on a (2|2) grid") {
  auto ctx = theta1_ctx(4);
  auto classes = sample_even_classes(*ctx, 2);
  REQUIRE(classes.reps.size() == 2);
  std::vector<std::vector<GrassmannElement>> lists(2, classes.reps);
  BandFamily fam = make_band_family(ctx, lists, lists);
  REQUIRE(fam.size() == 16);

  Partition r1 = fine_relation(fam.elems, Side::R, 1);
  Partition l2 = fine_relation(fam.elems, Side::L, 2);
  CHECK(r1.num_blocks() == 2);
  CHECK(l2.num_blocks() == 2);
  for (int i = 0; i < fam.size(); ++i)
    for (int j = 0; j < fam.size(); ++j) {
      CHECK(r1.same_block(i, j) ==
            ctx->equal(fam.elems[i].t_params()[0], fam.elems[j].t_params()[0]));
      CHECK(l2.same_block(i, j) ==
            ctx->equal(fam.elems[i].u_params()[1], fam.elems[j].u_params()[1]));
    }
  CHECK_THROWS_AS(fine_relation(fam.elems, Side::R, 3), DomainError);
  CHECK_THROWS_AS(fine_relation(fam.elems, Side::L, 0), DomainError);

  // lattice identities against the translate-computed relations
  GreensClasses g = family_greens(fam);
  Partition r2 = fine_relation(fam.elems, Side::R, 2);
  Partition l1 = fine_relation(fam.elems, Side::L, 1);
  CHECK(meet(r1, r2) == g.r);
  CHECK(meet(l1, l2) == g.l);
  CHECK(meet(meet(r1, r2), meet(l1, l2)) == g.h);
  CHECK(join(meet(r1, r2), meet(l1, l2)) == g.d);
  CHECK(g.d == Partition::universal(fam.size()));
  CHECK(g.h == delta_partition(fam.elems, DeltaMode::NPle));
}

TEST_CASE("rectangular band greens and the single-column eggbox") {
  auto ctx = theta1_ctx(3);
  auto classes = sample_even_classes(*ctx, 3);
  BandFamily fam = make_rect_family(ctx, classes.reps, classes.reps);
  GreensClasses g = family_greens(fam);
  CHECK(g.d == Partition::universal(fam.size()));
  CHECK(g.j == Partition::universal(fam.size()));
  CHECK(g.h == Partition::equality(fam.size()));  // canonical grid: singletons

  // left zero semigroup: eggbox is one column of singleton cells
  BandFamily pfam = make_p_family(ctx, classes.reps);
  GreensClasses pg = family_greens(pfam);
  EggboxDiagram box = make_eggbox({{"R", pg.r}, {"L", pg.l}});
  CHECK(box.classes_per_axis == std::vector<int>{3, 1});
  for (const auto& [tuple, members] : box.cells)
    CHECK(members.size() == 1);
}

TEST_CASE("eggbox structure on the (1|1) band grid") {
  auto ctx = theta1_ctx(3);
  auto classes = sample_even_classes(*ctx, 3);
  BandFamily fam = make_rect_family(ctx, classes.reps, classes.reps);
  GreensClasses g = family_greens(fam);
  EggboxDiagram box = make_eggbox({{"R", g.r}, {"L", g.l}});
  CHECK(box.classes_per_axis == std::vector<int>{3, 3});
  CHECK(box.cells.size() == 9);
  std::set<int> seen;
  for (const auto& [tuple, members] : box.cells) {
    CHECK(members.size() == 1);  // one canonical element per H-cell
    for (int e : members) {
      CHECK(seen.insert(e).second);
      CHECK(g.r.block_of(e) == tuple[0]);
      CHECK(g.l.block_of(e) == tuple[1]);
    }
  }
  CHECK(static_cast<int>(seen.size()) == fam.size());
  CHECK_THROWS_AS(make_eggbox({{"R", g.r}, {"R", g.l}}), DomainError);
}

TEST_CASE("psi: epimorphism, surjection, raw non-injectivity") {
  auto ctx = theta1_ctx(3);
  auto classes = sample_even_classes(*ctx, 3);
  BandFamily fam = make_rect_family(ctx, classes.reps, classes.reps);
  PsiReport rep = psi_map(fam);
  CHECK(rep.is_homomorphism);
  CHECK(rep.is_surjective);
  CHECK_FALSE(rep.non_injective_witness.has_value());
  // every (R-class, L-class) pair is hit exactly once on the canonical grid
  std::set<std::pair<int, int>> values(rep.psi.begin(), rep.psi.end());
  CHECK(values.size() == rep.psi.size());

  auto raw = with_alpha_collision(*ctx, classes.reps);
  REQUIRE(raw.has_value());
  BandFamily rawfam = make_rect_family(ctx, *raw, classes.reps, Canon::Raw);
  PsiReport rawrep = psi_map(rawfam);
  CHECK(rawrep.is_homomorphism);
  CHECK(rawrep.is_surjective);
  REQUIRE(rawrep.non_injective_witness.has_value());
  auto [i, j] = *rawrep.non_injective_witness;
  CHECK_FALSE(rawfam.elems[i] == rawfam.elems[j]);
  CHECK(rawfam.elems[i].rep() == rawfam.elems[j].rep());
}

TEST_CASE("j universality") {
  auto ctx = theta1_ctx(3);
  auto classes = sample_even_classes(*ctx, 2);
  BandFamily rect = make_rect_family(ctx, classes.reps, classes.reps);
  CHECK(j_universal_check(rect));
  std::vector<std::vector<GrassmannElement>> lists(2, classes.reps);
  BandFamily band2 = make_band_family(ctx, lists, lists);
  CHECK(j_universal_check(band2));
  // left zero semigroups are simple, hence J-universal too
  BandFamily pfam = make_p_family(ctx, classes.reps);
  CHECK(j_universal_check(pfam));
  // the null semigroup is not: {z} is a proper ideal
  BandFamily nullfam = make_null_family(ctx, classes.reps);
  CHECK_FALSE(j_universal_check(nullfam));
}

TEST_CASE("closed subsets") {
  MulTable t = left_zero_table(4);
  CHECK(is_closed_subset(t, {0, 1}));
  MulTable t2;  // x*y = max(x,y) on {0,1,2}
  t2.n = 3;
  t2.cell = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  CHECK(is_closed_subset(t2, {1, 2}));
  CHECK_FALSE(is_closed_subset(t2, {0, 1, 2}) == false);  // whole set closed
  CHECK(is_closed_subset(t2, {0}));
  CHECK_FALSE(is_closed_subset(MulTable{2, {{1, 1}, {1, 0}}}, {0}));
}

TEST_CASE("restriction theorem on (2|2) and (3|3) grids") {
  auto ctx = theta1_ctx(4);
  auto classes = sample_even_classes(*ctx, 2);
  REQUIRE(classes.reps.size() == 2);

  std::vector<std::vector<GrassmannElement>> lists2(2, classes.reps);
  BandFamily fam2 = make_band_family(ctx, lists2, lists2);
  for (int k = 1; k <= 2; ++k) {
    auto spec = SubsemigroupSpec::from_base(fam2.elems[0], k);
    auto rep = subsemigroup_restriction(fam2, spec);
    CHECK(rep.r_matches);
    CHECK(rep.l_matches);
    CHECK(rep.h_matches);
    CHECK(rep.d_matches);
    CHECK(rep.member_indices.size() == 4);  // free slot pair ranges over 2x2
  }

  std::vector<std::vector<GrassmannElement>> lists3(3, classes.reps);
  BandFamily fam3 = make_band_family(ctx, lists3, lists3);
  for (int k = 1; k <= 3; ++k) {
    auto spec = SubsemigroupSpec::from_base(fam3.elems[0], k);
    auto rep = subsemigroup_restriction(fam3, spec);
    CHECK(rep.all());
  }

  // free index out of range
  auto bad = SubsemigroupSpec::from_base(fam2.elems[0], 5);
  CHECK_THROWS_AS(subsemigroup_restriction(fam2, bad), DomainError);
}

TEST_CASE("fine relation degenerates to universal on a single class") {
  auto ctx = theta1_ctx(4);
  auto classes = sample_even_classes(*ctx, 2);
  // slot 1 fixed to one class, slot 2 varies
  std::vector<std::vector<GrassmannElement>> t_lists = {{classes.reps[0]},
                                                        classes.reps};
  std::vector<std::vector<GrassmannElement>> u_lists = {classes.reps,
                                                        classes.reps};
  BandFamily fam = make_band_family(ctx, t_lists, u_lists);
  CHECK(fine_relation(fam.elems, Side::R, 1) ==
        Partition::universal(fam.size()));
  CHECK(fine_relation(fam.elems, Side::R, 2).num_blocks() == 2);
}

TEST_CASE("restriction theorem at n=3 generators, 3 classes on the free index") {
  auto ctx = theta1_ctx(3);
  auto classes = sample_even_classes(*ctx, 3);
  REQUIRE(classes.reps.size() == 3);
  const int k = 2;
  // three classes on the free slot pair, one class elsewhere
  std::vector<std::vector<GrassmannElement>> t_lists(3, {classes.reps[0]});
  std::vector<std::vector<GrassmannElement>> u_lists(3, {classes.reps[0]});
  t_lists[k - 1] = classes.reps;
  u_lists[k - 1] = classes.reps;
  BandFamily fam = make_band_family(ctx, t_lists, u_lists);
  auto spec = SubsemigroupSpec::from_base(fam.elems[0], k);
  auto rep = subsemigroup_restriction(fam, spec);
  CHECK(rep.all());
  CHECK(rep.member_indices.size() == 9);
}

TEST_CASE("restriction theorem, degenerate single-class free slot") {
  auto ctx = theta1_ctx(4);
  auto classes = sample_even_classes(*ctx, 2);
  // slot 1 has a single class, slot 2 has two
  std::vector<std::vector<GrassmannElement>> t_lists = {
      {classes.reps[0]}, classes.reps};
  std::vector<std::vector<GrassmannElement>> u_lists = {
      {classes.reps[0]}, classes.reps};
  BandFamily fam = make_band_family(ctx, t_lists, u_lists);
  auto spec = SubsemigroupSpec::from_base(fam.elems[0], 1);
  auto rep = subsemigroup_restriction(fam, spec);
  CHECK(rep.all());
  CHECK(rep.member_indices.size() == 1);  // |U| = 1: everything trivially agrees
}

TEST_CASE("pullback and restriction of partitions") {
  Partition p = Partition::from_block_of({0, 1, 0, 2});
  CHECK(restrict_to(p, {0, 2}) == Partition::universal(2));
  CHECK(restrict_to(p, {1, 3}) == Partition::equality(2));
  CHECK(pullback(p, {3, 3, 0}) == Partition::from_block_of({0, 0, 1}));
}
