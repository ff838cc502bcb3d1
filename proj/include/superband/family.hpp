#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superband/greens.hpp"

namespace superband {

// Deduplicated even parameter lists over a fixed alpha; representatives are
// canonical and pairwise inequivalent modulo Ann alpha.
struct ParameterGrid {
  BandElement::Ctx ctx;
  std::vector<GrassmannElement> t, u;
};

struct SampledClasses {
  std::vector<GrassmannElement> reps;
  bool degenerate = false;  // fewer classes available than requested
};

// Deterministically enumerates simple even elements and keeps the first
// `count` pairwise alpha-inequivalent ones (skipping the class of 1 when
// exclude_unit is set).
SampledClasses sample_even_classes(const AlphaContext& ctx, int count,
                                   bool exclude_unit = true);

// Prepends a second, alpha-equal but distinct label for reps[0] (raw-mode
// collision). Returns nullopt when Ann alpha is trivial.
std::optional<std::vector<GrassmannElement>> with_alpha_collision(
    const AlphaContext& ctx, const std::vector<GrassmannElement>& reps);

// A finite closed band family together with its multiplication table and its
// quotient by parameter alpha-equality (the image of the representation).
struct BandFamily {
  std::vector<BandElement> elems;   // as constructed (raw or canonical)
  CayleyTable table;                // products matched on the given labels
  std::vector<int> canon_of;        // elems index -> canon_elems index
  std::vector<BandElement> canon_elems;
  CayleyTable canon_table;

  int size() const { return static_cast<int>(elems.size()); }
};

BandFamily make_family(std::vector<BandElement> elems, Canon mode);

BandFamily make_p_family(const BandElement::Ctx& ctx,
                         const std::vector<GrassmannElement>& t,
                         Canon mode = Canon::Canonical);
BandFamily make_q_family(const BandElement::Ctx& ctx,
                         const std::vector<GrassmannElement>& u,
                         Canon mode = Canon::Canonical);
// r_{tu} over the full grid T x U.
BandFamily make_rect_family(const BandElement::Ctx& ctx,
                            const std::vector<GrassmannElement>& t,
                            const std::vector<GrassmannElement>& u,
                            Canon mode = Canon::Canonical);
// e + p_t + q_u + r_{tu}.
BandFamily make_wreath_family(const BandElement::Ctx& ctx,
                              const std::vector<GrassmannElement>& t,
                              const std::vector<GrassmannElement>& u,
                              Canon mode = Canon::Canonical);
// y_t + z.
BandFamily make_null_family(const BandElement::Ctx& ctx,
                            const std::vector<GrassmannElement>& t,
                            Canon mode = Canon::Canonical);
// Full (n|n) grid: one parameter list per t-slot and per u-slot.
BandFamily make_band_family(const BandElement::Ctx& ctx,
                            const std::vector<std::vector<GrassmannElement>>& t_lists,
                            const std::vector<std::vector<GrassmannElement>>& u_lists,
                            Canon mode = Canon::Canonical);

// Green's relations of the family: computed on the canonical quotient table
// and pulled back to the family's own element list.
GreensClasses family_greens(const BandFamily& fam);

// psi(x) = (R-class of x, L-class of x) with the rectangular-band product on
// class pairs.
struct PsiReport {
  std::vector<std::pair<int, int>> psi;
  bool is_homomorphism = false;
  bool is_surjective = false;
  std::optional<std::pair<int, int>> non_injective_witness;
};

PsiReport psi_map(const BandFamily& fam);

// Fixed-index constraints for an (n-1)-index subsemigroup U: every slot
// except free_index is pinned to a target odd value (alpha * parameter).
struct SubsemigroupSpec {
  int free_index = 1;  // 1-based
  std::vector<GrassmannElement> t_targets, u_targets;  // odd values, size n

  static SubsemigroupSpec from_base(const BandElement& base, int free_index);
};

struct RestrictionReport {
  int free_index = 1;
  std::vector<int> member_indices;
  bool r_matches = false;  // R_U == R^(k) restricted to U x U
  bool l_matches = false;
  bool h_matches = false;  // H_U == (R^(k) meet L^(k)) restricted
  bool d_matches = false;  // D_U == (R^(k) join L^(k)) restricted
  bool all() const { return r_matches && l_matches && h_matches && d_matches; }
};

// Selects U from the family, verifies closure (DomainError otherwise),
// computes Green's relations inside U by translates, and compares them with
// the restrictions of the fine relations on the whole band.
RestrictionReport subsemigroup_restriction(const BandFamily& fam,
                                           const SubsemigroupSpec& spec);

// True iff J is universal on the family's quotient and the sandwich
// identities x*y*x = x hold for all pairs.
bool j_universal_check(const BandFamily& fam);

// Whether a subset of table indices is closed under the table product.
bool is_closed_subset(const MulTable& table, const std::vector<int>& subset);

}  // namespace superband
