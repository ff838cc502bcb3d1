#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "superband/supermatrix.hpp"

namespace superband {

enum class BandKind { Zero, Y, E, P, Q, R, F };

// Whether band-element parameters are reduced to canonical coset
// representatives modulo Ann alpha at construction. Raw mode keeps the
// labels as given; it exists to exhibit the non-faithfulness of the
// supermatrix representation.
enum class Canon { Raw, Canonical };

// Abstract band element: a kind plus even parameter vectors over a fixed
// odd alpha. P/Q/R parameters must avoid the coset 1 + Ann alpha (that
// region is reserved for e); F parameters are unrestricted so that padded
// degenerate bands stay representable.
class BandElement {
 public:
  using Ctx = std::shared_ptr<const AlphaContext>;

  static BandElement zero_elem(Ctx ctx);
  static BandElement y(Ctx ctx, GrassmannElement t, Canon mode = Canon::Canonical);
  static BandElement e(Ctx ctx);
  static BandElement p(Ctx ctx, GrassmannElement t, Canon mode = Canon::Canonical);
  static BandElement q(Ctx ctx, GrassmannElement u, Canon mode = Canon::Canonical);
  static BandElement r(Ctx ctx, GrassmannElement t, GrassmannElement u,
                       Canon mode = Canon::Canonical);
  static BandElement p_vec(Ctx ctx, std::vector<GrassmannElement> t,
                           Canon mode = Canon::Canonical);
  static BandElement q_vec(Ctx ctx, std::vector<GrassmannElement> u,
                           Canon mode = Canon::Canonical);
  static BandElement f(Ctx ctx, std::vector<GrassmannElement> t,
                       std::vector<GrassmannElement> u,
                       Canon mode = Canon::Canonical);

  BandKind kind() const { return kind_; }
  int arity() const;
  const Ctx& ctx() const { return ctx_; }
  const std::vector<GrassmannElement>& t_params() const { return t_; }
  const std::vector<GrassmannElement>& u_params() const { return u_; }

  // Parameter vectors padded with 1 to the element's arity: (t-vector,
  // u-vector) such that the element's matrix is the F-matrix of that pair.
  std::pair<std::vector<GrassmannElement>, std::vector<GrassmannElement>>
  normal_form() const;

  // The supermatrix representation (the map phi).
  Supermatrix rep() const;

  BandElement canonical() const;
  bool operator==(const BandElement& rhs) const;

  // Deterministic content key (kind + parameter keys), for table lookups.
  std::string key() const;

 private:
  BandElement(Ctx ctx, BandKind kind, std::vector<GrassmannElement> t,
              std::vector<GrassmannElement> u);

  Ctx ctx_;
  BandKind kind_;
  std::vector<GrassmannElement> t_, u_;
};

// Product in the wreath band (kinds E/P/Q/R, arity 1); the result is
// classified back into E/P/Q/R and returned with canonical parameters.
BandElement wreath_mul(const BandElement& x, const BandElement& y);

// Product in the null semigroup (kinds Y/Zero); always the zero element.
BandElement null_mul(const BandElement& x, const BandElement& y);

// Product of higher-band elements (kinds P/Q/F of equal arity).
BandElement higher_mul(const BandElement& x, const BandElement& y);

// Product dispatch used by table builders; `mode` controls whether the
// result's parameters are canonicalized.
BandElement band_mul(const BandElement& x, const BandElement& y, Canon mode);

// f = p * q: splits an F (or R) element into its left-zero and right-zero
// components. Rejects elements with parameters in the e-region.
std::pair<BandElement, BandElement> band_decompose(const BandElement& f);

// Stable display label: "e", "z", "y[t]", "p[t]", "q[u]", "r[t;u]",
// "f[t1,t2;u1,u2]" with ASCII parameter rendering.
std::string band_label(const BandElement& x);

struct CayleyTable {
  std::vector<BandElement> elems;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> cell;  // -1 when the product is not listed
  bool closed = false;
};

CayleyTable cayley_table(const std::vector<BandElement>& elems,
                         Canon mode = Canon::Canonical);

// Exhaustive (xy)z = x(yz) over a closed table.
bool associativity_check(const CayleyTable& table);

// The printed 9-symbol wreath table over formal parameters t, u, v, w.
struct SymbolicTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> cell;
};
SymbolicTable symbolic_wreath_table();

// Formal-symbol associativity of the wreath product over the given symbols
// (products computed on formal index pairs, not table lookups).
bool symbolic_wreath_associative();

// The (k|m) block-form matrix [[0, alpha*T], [alpha*U, I]] with T (k x m)
// and U (m x k) ordinary even-parameter matrices.
Supermatrix block_form_rep(const AlphaContext& ctx,
                           const std::vector<std::vector<GrassmannElement>>& t,
                           const std::vector<std::vector<GrassmannElement>>& u);

struct BlockIsomorphismReport {
  int n = 0, k = 0, m = 0;
  // slot i of the flat t-vector maps to T[t_row[i]][t_col[i]]; same for u.
  std::vector<int> t_row, t_col, u_row, u_col;
  bool product_compatible = false;
  std::string detail;
};

// Explicit parameter permutation between the flat (n|n) representation and
// the (k|m) block form, n = k*m, verified against supermatrix products on a
// grid sampled from `pool` (>= 2 parameters). Throws DomainError if n != k*m.
BlockIsomorphismReport block_isomorphism(const BandElement::Ctx& ctx, int n,
                                         int k, int m,
                                         const std::vector<GrassmannElement>& pool);

struct IrreducibilityReport {
  int k = 0, m = 0;
  bool chain_collapses = false;      // p_t1*...*p_tk*q_u1*...*q_um = r_{t1,um}
  bool middle_parameters_matter = false;  // distinct middle params, distinct matrices
  std::vector<std::string> lines;
};

// Witness that a (k|m)-band cannot be assembled from arity-1 left/right zero
// semigroups: the chained wreath product collapses to r_{t1,um} while the
// band matrices keep all parameters independent. Requires k + m >= 3.
IrreducibilityReport irreducibility_witness(const BandElement::Ctx& ctx, int k,
                                            int m,
                                            const std::vector<GrassmannElement>& pool);

}  // namespace superband
