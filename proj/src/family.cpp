#include "superband/family.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace superband {

SampledClasses sample_even_classes(const AlphaContext& ctx, int count,
                                   bool exclude_unit) {
  SampledClasses out;
  const int n = ctx.generators();
  std::set<std::string> seen;
  auto consider = [&](const GrassmannElement& cand) {
    if (static_cast<int>(out.reps.size()) >= count) return;
    if (exclude_unit && ctx.is_unit_class(cand)) return;
    if (!seen.insert(ctx.class_key(cand)).second) return;
    out.reps.push_back(ctx.reduce(cand));
  };
  consider(GrassmannElement::zero(n));
  const auto ev = even_masks(n);
  for (long c : {1L, 2L, 3L, -1L}) {
    for (Mask m : ev) consider(GrassmannElement::monomial(n, m, Rat(c)));
    if (static_cast<int>(out.reps.size()) >= count) break;
  }
  // pairwise sums as a fallback for large requests
  for (std::size_t a = 0;
       a < ev.size() && static_cast<int>(out.reps.size()) < count; ++a)
    for (std::size_t b = a + 1; b < ev.size(); ++b)
      consider(GrassmannElement::monomial(n, ev[a], 1) +
               GrassmannElement::monomial(n, ev[b], 1));
  out.degenerate = static_cast<int>(out.reps.size()) < count;
  return out;
}

std::optional<std::vector<GrassmannElement>> with_alpha_collision(
    const AlphaContext& ctx, const std::vector<GrassmannElement>& reps) {
  if (ctx.annihilator().basis.empty() || reps.empty()) return std::nullopt;
  std::vector<GrassmannElement> out;
  out.push_back(reps[0] + ctx.annihilator().basis[0]);
  for (const auto& r : reps) out.push_back(r);
  return out;
}

BandFamily make_family(std::vector<BandElement> elems, Canon mode) {
  BandFamily fam;
  fam.elems = std::move(elems);
  fam.table = cayley_table(fam.elems, mode);

  std::unordered_map<std::string, int> canon_index;
  for (const auto& x : fam.elems) {
    BandElement c = x.canonical();
    auto [it, inserted] =
        canon_index.emplace(c.key(), static_cast<int>(fam.canon_elems.size()));
    if (inserted) fam.canon_elems.push_back(std::move(c));
    fam.canon_of.push_back(it->second);
  }
  fam.canon_table = cayley_table(fam.canon_elems, Canon::Canonical);
  return fam;
}

BandFamily make_p_family(const BandElement::Ctx& ctx,
                         const std::vector<GrassmannElement>& t, Canon mode) {
  std::vector<BandElement> elems;
  for (const auto& v : t) elems.push_back(BandElement::p(ctx, v, mode));
  return make_family(std::move(elems), mode);
}

BandFamily make_q_family(const BandElement::Ctx& ctx,
                         const std::vector<GrassmannElement>& u, Canon mode) {
  std::vector<BandElement> elems;
  for (const auto& v : u) elems.push_back(BandElement::q(ctx, v, mode));
  return make_family(std::move(elems), mode);
}

BandFamily make_rect_family(const BandElement::Ctx& ctx,
                            const std::vector<GrassmannElement>& t,
                            const std::vector<GrassmannElement>& u, Canon mode) {
  std::vector<BandElement> elems;
  for (const auto& a : t)
    for (const auto& b : u) elems.push_back(BandElement::r(ctx, a, b, mode));
  return make_family(std::move(elems), mode);
}

BandFamily make_wreath_family(const BandElement::Ctx& ctx,
                              const std::vector<GrassmannElement>& t,
                              const std::vector<GrassmannElement>& u,
                              Canon mode) {
  std::vector<BandElement> elems;
  elems.push_back(BandElement::e(ctx));
  for (const auto& a : t) elems.push_back(BandElement::p(ctx, a, mode));
  for (const auto& b : u) elems.push_back(BandElement::q(ctx, b, mode));
  for (const auto& a : t)
    for (const auto& b : u) elems.push_back(BandElement::r(ctx, a, b, mode));
  return make_family(std::move(elems), mode);
}

BandFamily make_null_family(const BandElement::Ctx& ctx,
                            const std::vector<GrassmannElement>& t, Canon mode) {
  std::vector<BandElement> elems;
  for (const auto& v : t) elems.push_back(BandElement::y(ctx, v, mode));
  elems.push_back(BandElement::zero_elem(ctx));
  return make_family(std::move(elems), mode);
}

BandFamily make_band_family(
    const BandElement::Ctx& ctx,
    const std::vector<std::vector<GrassmannElement>>& t_lists,
    const std::vector<std::vector<GrassmannElement>>& u_lists, Canon mode) {
  const std::size_t n = t_lists.size();
  if (n == 0 || u_lists.size() != n)
    throw DimensionError("band grid needs matching t and u slot lists");
  std::vector<std::vector<GrassmannElement>> all = t_lists;
  all.insert(all.end(), u_lists.begin(), u_lists.end());
  std::vector<std::size_t> pick(all.size(), 0);
  std::vector<BandElement> elems;
  for (;;) {
    std::vector<GrassmannElement> tv, uv;
    for (std::size_t i = 0; i < n; ++i) tv.push_back(all[i][pick[i]]);
    for (std::size_t i = 0; i < n; ++i) uv.push_back(all[n + i][pick[n + i]]);
    elems.push_back(BandElement::f(ctx, std::move(tv), std::move(uv), mode));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < all[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return make_family(std::move(elems), mode);
}

GreensClasses family_greens(const BandFamily& fam) {
  GreensClasses q = greens_classes(to_multable(fam.canon_table));
  GreensClasses out;
  out.r = pullback(q.r, fam.canon_of);
  out.l = pullback(q.l, fam.canon_of);
  out.h = pullback(q.h, fam.canon_of);
  out.d = pullback(q.d, fam.canon_of);
  out.j = pullback(q.j, fam.canon_of);
  return out;
}

PsiReport psi_map(const BandFamily& fam) {
  GreensClasses g = family_greens(fam);
  PsiReport rep;
  for (int i = 0; i < fam.size(); ++i)
    rep.psi.emplace_back(g.r.block_of(i), g.l.block_of(i));

  rep.is_homomorphism = true;
  const MulTable table = to_multable(fam.table);
  for (int i = 0; i < fam.size() && rep.is_homomorphism; ++i) {
    for (int j = 0; j < fam.size(); ++j) {
      // star product on class pairs: (R_x, L_x) * (R_y, L_y) = (R_x, L_y)
      auto expected = std::make_pair(rep.psi[i].first, rep.psi[j].second);
      if (rep.psi[table.cell[i][j]] != expected) {
        rep.is_homomorphism = false;
        break;
      }
    }
  }

  std::set<std::pair<int, int>> hit(rep.psi.begin(), rep.psi.end());
  rep.is_surjective =
      static_cast<int>(hit.size()) == g.r.num_blocks() * g.l.num_blocks();

  std::map<std::pair<int, int>, int> first_seen;
  for (int i = 0; i < fam.size(); ++i) {
    auto [it, inserted] = first_seen.emplace(rep.psi[i], i);
    if (!inserted && !(fam.elems[it->second] == fam.elems[i])) {
      rep.non_injective_witness = std::make_pair(it->second, i);
      break;
    }
  }
  return rep;
}

SubsemigroupSpec SubsemigroupSpec::from_base(const BandElement& base,
                                             int free_index) {
  auto [tv, uv] = base.normal_form();
  SubsemigroupSpec spec;
  spec.free_index = free_index;
  for (const auto& t : tv) spec.t_targets.push_back(base.ctx()->image(t));
  for (const auto& u : uv) spec.u_targets.push_back(base.ctx()->image(u));
  return spec;
}

bool is_closed_subset(const MulTable& table, const std::vector<int>& subset) {
  std::vector<char> in(table.n, 0);
  for (int i : subset) in[i] = 1;
  for (int i : subset)
    for (int j : subset)
      if (!in[table.cell[i][j]]) return false;
  return true;
}

RestrictionReport subsemigroup_restriction(const BandFamily& fam,
                                           const SubsemigroupSpec& spec) {
  RestrictionReport rep;
  rep.free_index = spec.free_index;
  const int k = spec.free_index;
  if (fam.elems.empty()) throw DomainError("empty family");
  const auto& ctx = *fam.elems[0].ctx();
  const int n = fam.elems[0].arity();
  if (k < 1 || k > n) throw DomainError("free index out of range");
  if (static_cast<int>(spec.t_targets.size()) != n ||
      static_cast<int>(spec.u_targets.size()) != n)
    throw DimensionError("constraint vectors must cover every slot");

  for (int i = 0; i < fam.size(); ++i) {
    auto [tv, uv] = fam.elems[i].normal_form();
    bool member = true;
    for (int s = 0; s < n && member; ++s) {
      if (s + 1 == k) continue;
      if (!(ctx.image(tv[s]) == spec.t_targets[s]) ||
          !(ctx.image(uv[s]) == spec.u_targets[s]))
        member = false;
    }
    if (member) rep.member_indices.push_back(i);
  }
  if (rep.member_indices.empty())
    throw DomainError("constraints select an empty subset");

  const MulTable full = to_multable(fam.table);
  if (!is_closed_subset(full, rep.member_indices))
    throw DomainError("constraints select a non-closed subset");

  // Green's relations inside U, computed by translates on U's own table
  // (quotiented by parameter equivalence first).
  std::vector<BandElement> sub_elems;
  for (int i : rep.member_indices) sub_elems.push_back(fam.elems[i]);
  BandFamily sub = make_family(std::move(sub_elems), Canon::Canonical);
  GreensClasses gu = family_greens(sub);

  // Fine relations on the full band, restricted to U.
  Partition rk = fine_relation(fam.elems, Side::R, k);
  Partition lk = fine_relation(fam.elems, Side::L, k);
  Partition hk = meet(rk, lk);
  Partition dk = join(rk, lk);
  rep.r_matches = gu.r == restrict_to(rk, rep.member_indices);
  rep.l_matches = gu.l == restrict_to(lk, rep.member_indices);
  rep.h_matches = gu.h == restrict_to(hk, rep.member_indices);
  rep.d_matches = gu.d == restrict_to(dk, rep.member_indices);
  return rep;
}

bool j_universal_check(const BandFamily& fam) {
  GreensClasses g = greens_classes(to_multable(fam.canon_table));
  if (g.j.num_blocks() != 1) return false;
  const MulTable table = to_multable(fam.table);
  for (int i = 0; i < table.n; ++i)
    for (int j = 0; j < table.n; ++j)
      if (table.cell[table.cell[i][j]][i] != i) return false;
  return true;
}

}  // namespace superband
