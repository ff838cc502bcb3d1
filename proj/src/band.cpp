#include "superband/band.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace superband {

namespace {

GrassmannElement unit(const BandElement::Ctx& ctx) {
  return GrassmannElement::one(ctx->generators());
}

void require_even_params(const BandElement::Ctx& ctx,
                         const std::vector<GrassmannElement>& params) {
  for (const auto& t : params) {
    if (t.generators() != ctx->generators())
      throw DimensionError("parameter from a different Grassmann algebra");
    if (!t.is_even()) throw ParityError("band parameters must be even");
  }
}

std::vector<GrassmannElement> maybe_reduce(const BandElement::Ctx& ctx,
                                           std::vector<GrassmannElement> params,
                                           Canon mode) {
  if (mode == Canon::Canonical)
    for (auto& t : params) t = ctx->reduce(t);
  return params;
}

void reject_unit_region(const BandElement::Ctx& ctx,
                        const std::vector<GrassmannElement>& params,
                        const char* kind) {
  for (const auto& t : params) {
    if (ctx->is_unit_class(t))
      throw DomainError(std::string(kind) +
                        " parameter lies in 1 + Ann alpha (reserved for e)");
  }
}

std::string params_label(const std::vector<GrassmannElement>& params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += to_string(params[i]);
  }
  return out;
}

}  // namespace

BandElement::BandElement(Ctx ctx, BandKind kind, std::vector<GrassmannElement> t,
                         std::vector<GrassmannElement> u)
    : ctx_(std::move(ctx)), kind_(kind), t_(std::move(t)), u_(std::move(u)) {}

BandElement BandElement::zero_elem(Ctx ctx) {
  return BandElement(std::move(ctx), BandKind::Zero, {}, {});
}

BandElement BandElement::y(Ctx ctx, GrassmannElement t, Canon mode) {
  require_even_params(ctx, {t});
  auto params = maybe_reduce(ctx, {std::move(t)}, mode);
  return BandElement(std::move(ctx), BandKind::Y, std::move(params), {});
}

BandElement BandElement::e(Ctx ctx) {
  return BandElement(std::move(ctx), BandKind::E, {}, {});
}

BandElement BandElement::p(Ctx ctx, GrassmannElement t, Canon mode) {
  return p_vec(std::move(ctx), {std::move(t)}, mode);
}

BandElement BandElement::q(Ctx ctx, GrassmannElement u, Canon mode) {
  return q_vec(std::move(ctx), {std::move(u)}, mode);
}

BandElement BandElement::r(Ctx ctx, GrassmannElement t, GrassmannElement u,
                           Canon mode) {
  require_even_params(ctx, {t, u});
  reject_unit_region(ctx, {t}, "r");
  reject_unit_region(ctx, {u}, "r");
  auto tp = maybe_reduce(ctx, {std::move(t)}, mode);
  auto up = maybe_reduce(ctx, {std::move(u)}, mode);
  return BandElement(std::move(ctx), BandKind::R, std::move(tp), std::move(up));
}

BandElement BandElement::p_vec(Ctx ctx, std::vector<GrassmannElement> t,
                               Canon mode) {
  if (t.empty()) throw DimensionError("p requires at least one parameter");
  require_even_params(ctx, t);
  reject_unit_region(ctx, t, "p");
  auto params = maybe_reduce(ctx, std::move(t), mode);
  return BandElement(std::move(ctx), BandKind::P, std::move(params), {});
}

BandElement BandElement::q_vec(Ctx ctx, std::vector<GrassmannElement> u,
                               Canon mode) {
  if (u.empty()) throw DimensionError("q requires at least one parameter");
  require_even_params(ctx, u);
  reject_unit_region(ctx, u, "q");
  auto params = maybe_reduce(ctx, std::move(u), mode);
  return BandElement(std::move(ctx), BandKind::Q, {}, std::move(params));
}

BandElement BandElement::f(Ctx ctx, std::vector<GrassmannElement> t,
                           std::vector<GrassmannElement> u, Canon mode) {
  if (t.size() != u.size() || t.empty())
    throw DimensionError("f requires matching nonempty parameter vectors");
  require_even_params(ctx, t);
  require_even_params(ctx, u);
  auto tp = maybe_reduce(ctx, std::move(t), mode);
  auto up = maybe_reduce(ctx, std::move(u), mode);
  BandKind kind = tp.size() == 1 ? BandKind::R : BandKind::F;
  if (kind == BandKind::R) {
    reject_unit_region(ctx, tp, "r");
    reject_unit_region(ctx, up, "r");
  }
  return BandElement(std::move(ctx), kind, std::move(tp), std::move(up));
}

int BandElement::arity() const {
  switch (kind_) {
    case BandKind::Zero:
    case BandKind::E:
      return 1;
    case BandKind::Y:
    case BandKind::P:
      return static_cast<int>(t_.size());
    case BandKind::Q:
      return static_cast<int>(u_.size());
    case BandKind::R:
    case BandKind::F:
      return static_cast<int>(t_.size());
  }
  return 0;
}

std::pair<std::vector<GrassmannElement>, std::vector<GrassmannElement>>
BandElement::normal_form() const {
  const int n = arity();
  std::vector<GrassmannElement> ones(n, unit(ctx_));
  switch (kind_) {
    case BandKind::E:
      return {ones, ones};
    case BandKind::P:
      return {t_, ones};
    case BandKind::Q:
      return {ones, u_};
    case BandKind::R:
    case BandKind::F:
      return {t_, u_};
    default:
      throw DomainError("null-semigroup elements have no band normal form");
  }
}

Supermatrix BandElement::rep() const {
  const int N = ctx_->generators();
  const GrassmannElement& alpha = ctx_->alpha();
  if (kind_ == BandKind::Zero) return Supermatrix(1, 1, N);
  if (kind_ == BandKind::Y) {
    Supermatrix m(1, 1, N);
    m.set(0, 1, alpha * t_[0]);
    m.set(1, 0, alpha);
    return m;
  }
  auto [tv, uv] = normal_form();
  const int n = static_cast<int>(tv.size());
  Supermatrix m(1, n, N);
  for (int j = 0; j < n; ++j) {
    m.set(0, 1 + j, alpha * tv[j]);
    m.set(1 + j, 0, alpha * uv[j]);
    m.set(1 + j, 1 + j, GrassmannElement::one(N));
  }
  return m;
}

BandElement BandElement::canonical() const {
  BandElement x = *this;
  for (auto& t : x.t_) t = ctx_->reduce(t);
  for (auto& u : x.u_) u = ctx_->reduce(u);
  return x;
}

bool BandElement::operator==(const BandElement& rhs) const {
  return kind_ == rhs.kind_ && ctx_->alpha() == rhs.ctx_->alpha() &&
         t_ == rhs.t_ && u_ == rhs.u_;
}

std::string BandElement::key() const {
  std::ostringstream os;
  os << static_cast<int>(kind_) << '|';
  for (const auto& t : t_) os << internal_key(t) << '|';
  os << '/';
  for (const auto& u : u_) os << internal_key(u) << '|';
  return os.str();
}

namespace {

void require_same_family(const BandElement& x, const BandElement& y) {
  if (x.ctx()->alpha() != y.ctx()->alpha())
    throw DomainError("band elements over different alphas");
}

bool is_null_kind(const BandElement& x) {
  return x.kind() == BandKind::Zero || x.kind() == BandKind::Y;
}

// Classify an arity-1 product (t, u) into e / p / q / r by alpha-equality
// with 1.
BandElement classify_wreath(const BandElement::Ctx& ctx, GrassmannElement t,
                            GrassmannElement u, Canon mode) {
  const bool t_unit = ctx->is_unit_class(t);
  const bool u_unit = ctx->is_unit_class(u);
  if (t_unit && u_unit) return BandElement::e(ctx);
  if (u_unit) return BandElement::p(ctx, std::move(t), mode);
  if (t_unit) return BandElement::q(ctx, std::move(u), mode);
  return BandElement::r(ctx, std::move(t), std::move(u), mode);
}

}  // namespace

BandElement band_mul(const BandElement& x, const BandElement& y, Canon mode) {
  require_same_family(x, y);
  if (is_null_kind(x) || is_null_kind(y)) {
    if (is_null_kind(x) && is_null_kind(y))
      return BandElement::zero_elem(x.ctx());
    throw DomainError("cannot multiply null-semigroup and band elements");
  }
  if (x.arity() != y.arity()) throw DimensionError("band arity mismatch");
  auto [tx, ux] = x.normal_form();
  auto [ty, uy] = y.normal_form();
  (void)ux;
  (void)ty;
  if (x.arity() == 1)
    return classify_wreath(x.ctx(), std::move(tx[0]), std::move(uy[0]), mode);
  // Higher arity: the product keeps x's t-parameters and y's u-parameters;
  // the kind follows the factors (p*p = left zero, q*q = right zero,
  // anything else lands in F).
  if (x.kind() == BandKind::P && y.kind() == BandKind::P)
    return mode == Canon::Canonical ? x.canonical() : x;
  if (x.kind() == BandKind::Q && y.kind() == BandKind::Q)
    return mode == Canon::Canonical ? y.canonical() : y;
  return BandElement::f(x.ctx(), std::move(tx), std::move(uy), mode);
}

BandElement wreath_mul(const BandElement& x, const BandElement& y) {
  if (x.arity() != 1 || y.arity() != 1 || is_null_kind(x) || is_null_kind(y))
    throw DomainError("wreath product expects arity-1 band elements");
  return band_mul(x, y, Canon::Canonical);
}

BandElement null_mul(const BandElement& x, const BandElement& y) {
  require_same_family(x, y);
  if (!is_null_kind(x) || !is_null_kind(y))
    throw DomainError("null product expects Y/Z elements");
  return BandElement::zero_elem(x.ctx());
}

BandElement higher_mul(const BandElement& x, const BandElement& y) {
  if (is_null_kind(x) || is_null_kind(y))
    throw DomainError("higher product expects band elements");
  return band_mul(x, y, Canon::Canonical);
}

std::pair<BandElement, BandElement> band_decompose(const BandElement& f) {
  if (f.kind() != BandKind::F && f.kind() != BandKind::R)
    throw DomainError("decomposition expects an r or f element");
  // p/q constructors reject parameters in 1 + Ann alpha, so fully padded
  // (e-like) inputs and padded slots are rejected here.
  return {BandElement::p_vec(f.ctx(), f.t_params()),
          BandElement::q_vec(f.ctx(), f.u_params())};
}

std::string band_label(const BandElement& x) {
  switch (x.kind()) {
    case BandKind::Zero:
      return "z";
    case BandKind::E:
      return "e";
    case BandKind::Y:
      return "y[" + params_label(x.t_params()) + "]";
    case BandKind::P:
      return "p[" + params_label(x.t_params()) + "]";
    case BandKind::Q:
      return "q[" + params_label(x.u_params()) + "]";
    case BandKind::R:
    case BandKind::F: {
      const char* head = x.kind() == BandKind::R ? "r[" : "f[";
      return head + params_label(x.t_params()) + ";" +
             params_label(x.u_params()) + "]";
    }
  }
  return "?";
}

CayleyTable cayley_table(const std::vector<BandElement>& elems, Canon mode) {
  CayleyTable out;
  out.elems = elems;
  out.closed = true;
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    out.labels.push_back(band_label(elems[i]));
    index.emplace(elems[i].key(), static_cast<int>(i));
  }
  const bool null_family =
      !elems.empty() && std::all_of(elems.begin(), elems.end(),
                                    [](const BandElement& x) { return is_null_kind(x); });
  out.cell.assign(elems.size(), std::vector<int>(elems.size(), -1));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      BandElement prod = null_family ? null_mul(elems[i], elems[j])
                                     : band_mul(elems[i], elems[j], mode);
      auto it = index.find(prod.key());
      if (it == index.end()) {
        out.closed = false;
      } else {
        out.cell[i][j] = it->second;
      }
    }
  }
  return out;
}

bool associativity_check(const CayleyTable& table) {
  if (!table.closed)
    throw DomainError("associativity check requires a closed table");
  const int n = static_cast<int>(table.elems.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table.cell[table.cell[i][j]][k] != table.cell[i][table.cell[j][k]])
          return false;
  return true;
}

namespace {

// Formal wreath element: a pair of symbols with "1" marking the e-region.
struct FormalElement {
  std::string t, u;
  std::string name() const {
    if (t == "1" && u == "1") return "e";
    if (u == "1") return "p[" + t + "]";
    if (t == "1") return "q[" + u + "]";
    return "r[" + t + ";" + u + "]";
  }
};

FormalElement formal_mul(const FormalElement& x, const FormalElement& y) {
  return {x.t, y.u};
}

std::vector<FormalElement> formal_wreath_elements() {
  return {{"1", "1"}, {"t", "1"}, {"u", "1"}, {"1", "t"}, {"1", "u"},
          {"t", "u"}, {"u", "t"}, {"t", "w"}, {"v", "w"}};
}

}  // namespace

SymbolicTable symbolic_wreath_table() {
  SymbolicTable out;
  auto elems = formal_wreath_elements();
  for (const auto& x : elems) out.labels.push_back(x.name());
  for (const auto& x : elems) {
    std::vector<std::string> row;
    for (const auto& y : elems) row.push_back(formal_mul(x, y).name());
    out.cell.push_back(std::move(row));
  }
  return out;
}

bool symbolic_wreath_associative() {
  auto elems = formal_wreath_elements();
  for (const auto& x : elems)
    for (const auto& y : elems)
      for (const auto& z : elems) {
        FormalElement a = formal_mul(formal_mul(x, y), z);
        FormalElement b = formal_mul(x, formal_mul(y, z));
        if (a.t != b.t || a.u != b.u) return false;
      }
  return true;
}

Supermatrix block_form_rep(const AlphaContext& ctx,
                           const std::vector<std::vector<GrassmannElement>>& t,
                           const std::vector<std::vector<GrassmannElement>>& u) {
  const int k = static_cast<int>(t.size());
  if (k == 0 || t[0].empty()) throw DimensionError("empty block parameters");
  const int m = static_cast<int>(t[0].size());
  if (static_cast<int>(u.size()) != m ||
      static_cast<int>(u[0].size()) != k)
    throw DimensionError("block parameter shapes must be k x m and m x k");
  const int N = ctx.generators();
  Supermatrix out(k, m, N);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) out.set(i, k + j, ctx.alpha() * t[i][j]);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) out.set(k + i, j, ctx.alpha() * u[i][j]);
    out.set(k + i, k + i, GrassmannElement::one(N));
  }
  return out;
}

BlockIsomorphismReport block_isomorphism(const BandElement::Ctx& ctx, int n,
                                         int k, int m,
                                         const std::vector<GrassmannElement>& pool) {
  if (k <= 0 || m <= 0 || n != k * m)
    throw DomainError("block isomorphism requires n = k*m");
  if (pool.size() < 2)
    throw DomainError("need at least two sample parameters");
  BlockIsomorphismReport rep;
  rep.n = n;
  rep.k = k;
  rep.m = m;
  for (int i = 0; i < n; ++i) {
    rep.t_row.push_back(i / m);
    rep.t_col.push_back(i % m);
    rep.u_row.push_back(i / k);
    rep.u_col.push_back(i % k);
  }
  auto flat_vec = [&](int offset) {
    std::vector<GrassmannElement> v;
    for (int i = 0; i < n; ++i)
      v.push_back(pool[(offset + i) % pool.size()]);
    return v;
  };
  auto to_t_block = [&](const std::vector<GrassmannElement>& flat) {
    std::vector<std::vector<GrassmannElement>> b(
        k, std::vector<GrassmannElement>(m, GrassmannElement(ctx->generators())));
    for (int i = 0; i < n; ++i) b[rep.t_row[i]][rep.t_col[i]] = flat[i];
    return b;
  };
  auto to_u_block = [&](const std::vector<GrassmannElement>& flat) {
    std::vector<std::vector<GrassmannElement>> b(
        m, std::vector<GrassmannElement>(k, GrassmannElement(ctx->generators())));
    for (int i = 0; i < n; ++i) b[rep.u_row[i]][rep.u_col[i]] = flat[i];
    return b;
  };

  rep.product_compatible = true;
  const int samples = 3;
  for (int a = 0; a < samples && rep.product_compatible; ++a) {
    for (int b = 0; b < samples && rep.product_compatible; ++b) {
      for (int c = 0; c < samples && rep.product_compatible; ++c) {
        for (int d = 0; d < samples && rep.product_compatible; ++d) {
          auto t1 = flat_vec(a), u1 = flat_vec(b + 1);
          auto t2 = flat_vec(c + 2), u2 = flat_vec(d + 3);
          // flat (1|n) route
          Supermatrix f1 = BandElement::f(ctx, t1, u1).rep();
          Supermatrix f2 = BandElement::f(ctx, t2, u2).rep();
          Supermatrix fprod = BandElement::f(ctx, t1, u2).rep();
          if (!(f1 * f2 == fprod)) rep.product_compatible = false;
          // (k|m) block route through the parameter permutation
          Supermatrix g1 = block_form_rep(*ctx, to_t_block(t1), to_u_block(u1));
          Supermatrix g2 = block_form_rep(*ctx, to_t_block(t2), to_u_block(u2));
          Supermatrix gprod =
              block_form_rep(*ctx, to_t_block(t1), to_u_block(u2));
          if (!(g1 * g2 == gprod)) rep.product_compatible = false;
        }
      }
    }
  }
  std::ostringstream os;
  os << "flat (1|" << n << ") slots -> " << k << "x" << m
     << " blocks, row-major; products " << (rep.product_compatible ? "agree" : "disagree");
  rep.detail = os.str();
  return rep;
}

IrreducibilityReport irreducibility_witness(const BandElement::Ctx& ctx, int k,
                                            int m,
                                            const std::vector<GrassmannElement>& pool) {
  if (k < 1 || m < 1 || k + m < 3)
    throw DomainError("irreducibility witness requires k + m >= 3");
  if (pool.size() < 2)
    throw DomainError("need at least two sample parameters");
  IrreducibilityReport rep;
  rep.k = k;
  rep.m = m;
  auto param = [&](int i) { return pool[i % pool.size()]; };

  // Chained arity-1 product: every middle parameter is discarded.
  BandElement chain = BandElement::p(ctx, param(0));
  for (int i = 1; i < k; ++i)
    chain = band_mul(chain, BandElement::p(ctx, param(i)), Canon::Canonical);
  for (int j = 0; j < m; ++j)
    chain = band_mul(chain, BandElement::q(ctx, param(k + j)), Canon::Canonical);
  BandElement expected = BandElement::r(ctx, param(0), param(k + m - 1));
  rep.chain_collapses = chain == expected;
  rep.lines.push_back("chained arity-1 product collapses to r[first t; last u]: " +
                      std::string(rep.chain_collapses ? "yes" : "no"));

  // The (k|m)-band matrix keeps every slot: vary one middle slot and compare.
  const int nn = std::max(k, m);
  auto padded = [&](int genuine, int vary_slot, const GrassmannElement& value) {
    std::vector<GrassmannElement> v;
    for (int i = 0; i < nn; ++i) {
      if (i < genuine)
        v.push_back(i == vary_slot ? value : param(i));
      else
        v.push_back(unit(ctx));
    }
    return v;
  };
  int slot = k >= 2 ? k - 1 : -1;
  std::vector<GrassmannElement> t1, t2, u1, u2;
  if (slot >= 0) {
    t1 = padded(k, slot, param(slot));
    t2 = padded(k, slot, param(slot + 1));
    u1 = u2 = padded(m, -1, unit(ctx));
  } else {
    slot = m - 1;
    u1 = padded(m, slot, param(slot));
    u2 = padded(m, slot, param(slot + 1));
    t1 = t2 = padded(k, -1, unit(ctx));
  }
  Supermatrix m1 = BandElement::f(ctx, t1, u1).rep();
  Supermatrix m2 = BandElement::f(ctx, t2, u2).rep();
  rep.middle_parameters_matter = !(m1 == m2);
  rep.lines.push_back(
      "band matrices with differing middle parameter are distinct: " +
      std::string(rep.middle_parameters_matter ? "yes" : "no"));
  return rep;
}

}  // namespace superband
