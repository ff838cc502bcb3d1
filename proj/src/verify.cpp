#include "superband/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace superband {

std::uint64_t Rng::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint32_t Rng::below(std::uint32_t n) {
  return static_cast<std::uint32_t>(next() % n);
}

GrassmannElement random_element(Rng& rng, int n, const std::vector<Rat>& pool) {
  GrassmannElement::TermMap terms;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    const Rat& c = pool[rng.below(static_cast<std::uint32_t>(pool.size()))];
    if (c != 0) terms[m] = c;
  }
  return GrassmannElement::from_terms(n, std::move(terms));
}

GrassmannElement random_homogeneous(Rng& rng, int n, Parity parity,
                                    const std::vector<Rat>& pool) {
  if (parity == Parity::Mixed) return random_element(rng, n, pool);
  GrassmannElement::TermMap terms;
  const auto masks = parity == Parity::Even ? even_masks(n) : odd_masks(n);
  for (Mask m : masks) {
    const Rat& c = pool[rng.below(static_cast<std::uint32_t>(pool.size()))];
    if (c != 0) terms[m] = c;
  }
  return GrassmannElement::from_terms(n, std::move(terms));
}

namespace {

using Result = std::pair<CheckStatus, std::string>;

Result pass(const std::string& detail) { return {CheckStatus::Pass, detail}; }
Result fail(const std::string& detail) { return {CheckStatus::Fail, detail}; }
Result skip(const std::string& detail) { return {CheckStatus::Skip, detail}; }
Result verdict(bool ok, const std::string& detail) {
  return ok ? pass(detail) : fail(detail);
}

struct Checker {
  std::vector<CheckResult> out;

  void run(const std::string& id, const std::string& claim,
           const std::function<Result()>& fn) {
    CheckResult r;
    r.id = id;
    r.claim = claim;
    try {
      auto [status, detail] = fn();
      r.status = status;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
};

std::string matrix_key(const Supermatrix& m) {
  std::string key;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) key += internal_key(m.at(i, j)) + "#";
  return key;
}

// All elements of the even/odd sector with coefficients drawn from the pool.
std::vector<GrassmannElement> sector_grid(int n, Parity parity,
                                          const std::vector<Rat>& pool) {
  const auto masks = parity == Parity::Even ? even_masks(n) : odd_masks(n);
  std::vector<GrassmannElement> out;
  std::vector<std::size_t> pick(masks.size(), 0);
  for (;;) {
    GrassmannElement::TermMap terms;
    for (std::size_t i = 0; i < masks.size(); ++i)
      if (pool[pick[i]] != 0) terms[masks[i]] = pool[pick[i]];
    out.push_back(GrassmannElement::from_terms(n, std::move(terms)));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < pool.size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return out;
}

Supermatrix mat11(const GrassmannElement& a, const GrassmannElement& alpha,
                  const GrassmannElement& beta, const GrassmannElement& b) {
  Supermatrix m(1, 1, a.generators());
  m.set(0, 0, a);
  m.set(0, 1, alpha);
  m.set(1, 0, beta);
  m.set(1, 1, b);
  return m;
}

// Literal (1|1) Berezinian a/b + beta*alpha/b^2, with the inverse taken by
// the series route; used as the second leg of the dual-route check.
GrassmannElement ber_literal(const Supermatrix& m) {
  const GrassmannElement& b = m.at(1, 1);
  GrassmannElement binv = b.inverse();
  return m.at(0, 0) * binv + m.at(1, 0) * m.at(0, 1) * (binv * binv);
}

std::string plural(long n, const char* what) {
  std::ostringstream os;
  os << n << ' ' << what;
  return os.str();
}

// ---------------------------------------------------------------------------
// grassmann_core checks
// ---------------------------------------------------------------------------

void grassmann_checks(const VerifyOptions& o, Checker& c) {
  const auto& pool = o.config.pool;

  c.run("grassmann-associativity",
        "products of multivectors associate: (xy)z = x(yz)", [&] {
          long cases = 0;
          for (int n : {2, 3, 4}) {
            const Mask top = Mask{1} << n;
            for (Mask a = 0; a < top; ++a)
              for (Mask b = 0; b < top; ++b)
                for (Mask m = 0; m < top; ++m) {
                  GrassmannElement x = GrassmannElement::monomial(n, a, 1);
                  GrassmannElement y = GrassmannElement::monomial(n, b, 1);
                  GrassmannElement z = GrassmannElement::monomial(n, m, 1);
                  if (!((x * y) * z == x * (y * z)))
                    return fail("monomial triple failed at n=" +
                                std::to_string(n));
                  ++cases;
                }
          }
          Rng rng(o.config.seed ^ 0xa55a);
          const int rounds = o.full ? 1000 : 200;
          const int nr = o.full ? 8 : 5;
          for (int i = 0; i < rounds; ++i) {
            GrassmannElement x = random_element(rng, nr, pool);
            GrassmannElement y = random_element(rng, nr, pool);
            GrassmannElement z = random_element(rng, nr, pool);
            if (!((x * y) * z == x * (y * z)))
              return fail("random triple failed at n=" + std::to_string(nr));
            ++cases;
          }
          return pass(plural(cases, "triples, exhaustive monomials at n<=4"));
        });

  c.run("grassmann-supercommutativity",
        "xy = (-1)^(|x||y|) yx for homogeneous x, y", [&] {
          long cases = 0;
          for (int n : {2, 3, 4}) {
            const Mask top = Mask{1} << n;
            for (Mask a = 0; a < top; ++a)
              for (Mask b = 0; b < top; ++b) {
                GrassmannElement x = GrassmannElement::monomial(n, a, 1);
                GrassmannElement y = GrassmannElement::monomial(n, b, 1);
                bool both_odd = (std::popcount(a) & 1) && (std::popcount(b) & 1);
                GrassmannElement rhs = both_odd ? -(y * x) : y * x;
                if (!(x * y == rhs)) return fail("monomial pair failed");
                ++cases;
              }
          }
          Rng rng(o.config.seed ^ 0x5aa5);
          for (int i = 0; i < (o.full ? 500 : 100); ++i) {
            for (Parity px : {Parity::Even, Parity::Odd}) {
              for (Parity py : {Parity::Even, Parity::Odd}) {
                GrassmannElement x = random_homogeneous(rng, 5, px, pool);
                GrassmannElement y = random_homogeneous(rng, 5, py, pool);
                bool both_odd = px == Parity::Odd && py == Parity::Odd;
                GrassmannElement rhs = both_odd ? -(y * x) : y * x;
                if (!(x * y == rhs)) return fail("random homogeneous pair failed");
                ++cases;
              }
            }
          }
          return pass(plural(cases, "pairs"));
        });

  c.run("odd-nilpotency", "every odd element squares to zero", [&] {
        Rng rng(o.config.seed ^ 0x0dd);
        long cases = 0;
        for (int n : {1, 2, 3, 4, 6}) {
          for (int i = 0; i < (o.full ? 200 : 50); ++i) {
            GrassmannElement g = random_homogeneous(rng, n, Parity::Odd, pool);
            if (!(g * g).is_zero()) return fail("odd square nonzero");
            ++cases;
          }
        }
        return pass(plural(cases, "odd samples"));
      });

  c.run("body-soul-split",
        "body is a ring homomorphism and x = body(x) + soul(x)", [&] {
          Rng rng(o.config.seed ^ 0xb0d);
          long cases = 0;
          for (int i = 0; i < (o.full ? 500 : 150); ++i) {
            GrassmannElement x = random_element(rng, 5, pool);
            GrassmannElement y = random_element(rng, 5, pool);
            if (!((x * y).body() == x.body() * y.body()))
              return fail("body not multiplicative");
            if (!(GrassmannElement::scalar(5, x.body()) + x.soul() == x))
              return fail("body+soul does not reassemble");
            if (x.soul().body() != 0) return fail("soul has a body part");
            ++cases;
          }
          return pass(plural(cases, "pairs"));
        });

  c.run("parity-grading",
        "elements split into even and odd parts; parity is multiplicative", [&] {
          Rng rng(o.config.seed ^ 0x9a9);
          if (GrassmannElement::zero(3).parity() != Parity::Even)
            return fail("zero must report Even");
          if (GrassmannElement::generator(3, 1).parity() != Parity::Odd ||
              (GrassmannElement::one(3) + GrassmannElement::generator(3, 1))
                      .parity() != Parity::Mixed)
            return fail("parity classification broken");
          long cases = 0;
          for (int i = 0; i < (o.full ? 300 : 100); ++i) {
            GrassmannElement x = random_element(rng, 5, pool);
            GrassmannElement even_part(5), odd_part(5);
            for (const auto& [m, v] : x.terms()) {
              GrassmannElement t = GrassmannElement::monomial(5, m, v);
              if (std::popcount(m) & 1)
                odd_part = odd_part + t;
              else
                even_part = even_part + t;
            }
            if (!(even_part + odd_part == x) || !even_part.is_even() ||
                !(odd_part.is_zero() || odd_part.is_odd()))
              return fail("decomposition failed");
            GrassmannElement a = random_homogeneous(rng, 5, Parity::Odd, pool);
            GrassmannElement b = random_homogeneous(rng, 5, Parity::Even, pool);
            GrassmannElement ab = a * b;
            if (!ab.is_zero() && ab.parity() != Parity::Odd)
              return fail("odd*even must be odd");
            ++cases;
          }
          return pass(plural(cases, "samples"));
        });

  c.run("annihilator-basis",
        "Ann(alpha) basis annihilates alpha and spans every even solution", [&] {
          long checked = 0;
          for (int n : {1, 2, 3}) {
            for (int gen = 1; gen <= n; ++gen) {
              GrassmannElement alpha = GrassmannElement::generator(n, gen);
              AlphaContext ctx(alpha);
              for (const auto& e : ctx.annihilator().basis)
                if (!(alpha * e).is_zero()) return fail("basis member survives");
              // brute force: coefficients in {-1,0,1} over the even sector
              std::vector<Rat> small = {Rat(-1), Rat(0), Rat(1)};
              for (const auto& x : sector_grid(n, Parity::Even, small)) {
                bool annihilated = (alpha * x).is_zero();
                bool in_span = ctx.reduce(x).is_zero();
                if (annihilated != in_span)
                  return fail("membership mismatch at n=" + std::to_string(n));
                ++checked;
              }
            }
          }
          // the documented instances
          GrassmannElement a3 = GrassmannElement::generator(3, 1);
          auto basis3 = annihilator_even(a3).basis;
          if (basis3.size() != 2) return fail("Ann(theta1) at n=3 must be 2-dim");
          auto basis1 = annihilator_even(GrassmannElement::generator(1, 1)).basis;
          if (!basis1.empty()) return fail("Ann(theta1) at n=1 must be trivial");
          return pass(plural(checked, "grid memberships"));
        });

  c.run("alpha-equality",
        "alpha-equality is an equivalence and matches annihilator membership", [&] {
          RunConfig cfg = o.config;
          auto ctx = make_context(cfg);
          auto sample = sample_even_classes(*ctx, 4, false);
          std::vector<GrassmannElement> pts = sample.reps;
          if (!ctx->annihilator().basis.empty())
            pts.push_back(pts[0] + ctx->annihilator().basis[0]);
          long cases = 0;
          for (const auto& t : pts) {
            if (!ctx->equal(t, t)) return fail("not reflexive");
            for (const auto& u : pts) {
              if (ctx->equal(t, u) != ctx->equal(u, t))
                return fail("not symmetric");
              if (ctx->equal(t, u) !=
                  (ctx->image(t - u)).is_zero())
                return fail("disagrees with annihilator membership");
              if (ctx->equal(t, u) != (ctx->reduce(t) == ctx->reduce(u)))
                return fail("disagrees with canonical representatives");
              for (const auto& v : pts) {
                if (ctx->equal(t, u) && ctx->equal(u, v) && !ctx->equal(t, v))
                  return fail("not transitive");
                ++cases;
              }
            }
          }
          return pass(plural(cases, "triples"));
        });
}

// ---------------------------------------------------------------------------
// supermatrix checks
// ---------------------------------------------------------------------------

struct MatrixSweepTallies {
  long matrices = 0, invertible = 0, pairs = 0, nonclosure_witnesses = 0;
  // first failure per property, empty = healthy
  std::string str_err, ber_err, add_err, nilp_err, power_err, book_err,
      pair_err, grading_err, mult_err;
};

void sweep_one(MatrixSweepTallies& t, const Supermatrix& m) {
  ++t.matrices;
  const GrassmannElement &a = m.at(0, 0), &alpha = m.at(0, 1),
                         &beta = m.at(1, 0), &b = m.at(1, 1);
  if (t.str_err.empty() && !(m.supertrace() == a - b))
    t.str_err = "supertrace != a - b";

  // reductions: projections that jointly carry all four entries
  Supermatrix me = m.reduce_even(), mo = m.reduce_odd();
  if (t.book_err.empty()) {
    bool ok = me.at(1, 0).is_zero() && mo.at(0, 0).is_zero() &&
              me.at(0, 0) == a && me.at(0, 1) == alpha && me.at(1, 1) == b &&
              mo.at(1, 0) == beta && mo.at(0, 1) == alpha && mo.at(1, 1) == b &&
              me.reduce_even() == me && mo.reduce_odd() == mo;
    if (!ok) t.book_err = "reductions are not complementary projections";
  }

  if (b.body() != 0) {
    ++t.invertible;
    GrassmannElement ber = m.berezinian();
    if (t.ber_err.empty() && !(ber == ber_literal(m)))
      t.ber_err = "Schur route disagrees with a/b + beta*alpha/b^2";
    if (t.add_err.empty() && !(ber == me.berezinian() + mo.berezinian()))
      t.add_err = "Ber M != Ber M_even + Ber M_odd";
    if (t.nilp_err.empty()) {
      GrassmannElement bo = mo.berezinian();
      if (!(bo * bo).is_zero()) t.nilp_err = "(Ber M_odd)^2 != 0";
    }
  } else if (t.ber_err.empty()) {
    bool threw = false;
    try {
      (void)m.berezinian();
    } catch (const DomainError&) {
      threw = true;
    }
    if (!threw) t.ber_err = "zero body must raise a domain error";
  }

  if (a.is_zero() && t.power_err.empty()) {
    // odd-reduced powers: closed form vs iterated product
    Supermatrix powm = m;
    for (unsigned p = 2; p <= 6 && t.power_err.empty(); ++p) {
      powm = powm * m;
      if (!(m.odd_power_closed_form(p) == powm))
        t.power_err = "closed-form power != iterated product";
      GrassmannElement expected_str =
          b.pow(p - 2) * (Rat(static_cast<long>(p)) * (alpha * beta) - b * b);
      if (t.power_err.empty() && !(powm.supertrace() == expected_str))
        t.power_err = "power supertrace formula mismatch";
    }
  }
}

void sweep_pair(MatrixSweepTallies& t, const Supermatrix& x,
                const Supermatrix& y) {
  ++t.pairs;
  Supermatrix prod = x * y;
  const int n = x.generators();
  // the explicit product of two odd-reduced matrices
  if (x.at(0, 0).is_zero() && y.at(0, 0).is_zero()) {
    Supermatrix expected(1, 1, n);
    expected.set(0, 0, x.at(0, 1) * y.at(1, 0));
    expected.set(0, 1, x.at(0, 1) * y.at(1, 1));
    expected.set(1, 0, x.at(1, 1) * y.at(1, 0));
    expected.set(1, 1, x.at(1, 1) * y.at(1, 1) + x.at(1, 0) * y.at(0, 1));
    if (t.pair_err.empty() && !(prod == expected))
      t.pair_err = "odd-reduced product formula mismatch";
    if (!prod.at(0, 0).is_zero())
      ++t.nonclosure_witnesses;
    else if (t.pair_err.empty() && !(x.at(0, 1) * y.at(1, 0)).is_zero())
      t.pair_err = "product back in the odd set but alpha1*beta2 != 0";
  }
  if (t.grading_err.empty()) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const GrassmannElement& v = prod.at(i, j);
        if (!v.is_zero() && v.parity() != prod.slot_parity(i, j))
          t.grading_err = "product breaks the block grading";
      }
  }
  // multiplicativity on the invertible-body domain
  if (t.mult_err.empty() && x.at(1, 1).body() != 0 &&
      y.at(1, 1).body() != 0 && prod.at(1, 1).body() != 0) {
    if (!(prod.berezinian() == x.berezinian() * y.berezinian()))
      t.mult_err = "Ber(MN) != Ber(M) Ber(N)";
  }
}

void supermatrix_checks(const VerifyOptions& o, Checker& c) {
  const auto& pool = o.config.pool;

  MatrixSweepTallies t;
  {
    auto evens = sector_grid(2, Parity::Even, pool);
    auto odds = sector_grid(2, Parity::Odd, pool);
    std::vector<Supermatrix> sampled;
    long count = 0;
    for (const auto& a : evens)
      for (const auto& alpha : odds)
        for (const auto& beta : odds)
          for (const auto& b : evens) {
            Supermatrix m = mat11(a, alpha, beta, b);
            sweep_one(t, m);
            if (count++ % 61 == 0) sampled.push_back(std::move(m));
          }
    const std::size_t stride = std::max<std::size_t>(1, sampled.size() / 64);
    for (std::size_t i = 0; i < sampled.size(); i += stride)
      for (std::size_t j = 0; j < sampled.size(); j += stride)
        sweep_pair(t, sampled[i], sampled[j]);
  }
  // seeded random sweep at n = 4
  {
    Rng rng(o.config.seed ^ 0x4444);
    const int rounds = o.full ? 500 : 100;
    std::vector<Supermatrix> ms;
    for (int i = 0; i < rounds; ++i) {
      GrassmannElement a = random_homogeneous(rng, 4, Parity::Even, pool);
      GrassmannElement al = random_homogeneous(rng, 4, Parity::Odd, pool);
      GrassmannElement be = random_homogeneous(rng, 4, Parity::Odd, pool);
      GrassmannElement b = random_homogeneous(rng, 4, Parity::Even, pool);
      if (i % 3 == 0) a = GrassmannElement::zero(4);
      Supermatrix m = mat11(a, al, be, b);
      sweep_one(t, m);
      ms.push_back(std::move(m));
    }
    for (std::size_t i = 0; i + 1 < ms.size(); i += 7)
      sweep_pair(t, ms[i], ms[i + 1]);
  }

  const std::string scope = "exhaustive n=2 grid (" + plural(t.matrices, "matrices") +
                            ") + seeded n=4, " + plural(t.pairs, "pairs");
  auto slot = [&](const std::string& err) {
    return err.empty() ? pass(scope) : fail(err);
  };

  c.run("supertrace-formula", "str M = a - b on (1|1) supermatrices",
        [&] { return slot(t.str_err); });
  c.run("berezinian-formula",
        "Ber M = a/b + beta*alpha/b^2, defined only for invertible body", [&] {
          if (!t.ber_err.empty()) return fail(t.ber_err);
          // the documented instances
          Supermatrix m = mat11(GrassmannElement::one(2),
                                GrassmannElement::generator(2, 1),
                                GrassmannElement::generator(2, 2),
                                GrassmannElement::one(2));
          GrassmannElement expected =
              GrassmannElement::one(2) -
              GrassmannElement::monomial(2, 0b11, 1);
          if (!(m.berezinian() == expected))
            return fail("[[1,t1],[t2,1]] must give 1 - t1.t2");
          if (!(Supermatrix::identity(1, 1, 2).berezinian() ==
                GrassmannElement::one(2)))
            return fail("Ber(I) != 1");
          return pass("dual-route agreement on " +
                      plural(t.invertible, "matrices"));
        });
  c.run("berezinian-multiplicativity",
        "Ber(MN) = Ber(M) Ber(N) on the invertible-body domain",
        [&] { return slot(t.mult_err); });
  c.run("supermatrix-grading",
        "products of grading-valid matrices stay grading-valid",
        [&] { return slot(t.grading_err); });
  c.run("even-reduction",
        "even-reduced matrices form a subsemigroup; reductions are projections",
        [&] {
          // closure of the beta = 0 set under products
          auto odds = sector_grid(2, Parity::Odd, pool);
          auto evens = sector_grid(2, Parity::Even, pool);
          long cases = 0;
          for (std::size_t i = 0; i < evens.size(); i += 3)
            for (std::size_t j = 0; j < odds.size(); j += 3)
              for (std::size_t k = 0; k < evens.size(); k += 3) {
                Supermatrix x = mat11(evens[i], odds[j],
                                      GrassmannElement::zero(2), evens[k]);
                Supermatrix y = mat11(evens[k], odds[j],
                                      GrassmannElement::zero(2), evens[i]);
                if (!(x * y).at(1, 0).is_zero())
                  return fail("product left the even-reduced set");
                ++cases;
              }
          return pass(plural(cases, "products stayed even-reduced"));
        });
  c.run("odd-reduction-nonclosure",
        "odd-reduced products leave the set unless alpha1*beta2 = 0", [&] {
          if (!t.pair_err.empty()) return fail(t.pair_err);
          if (t.nonclosure_witnesses == 0)
            return fail("no nonclosure witness found");
          return pass(plural(t.nonclosure_witnesses, "escaping products seen"));
        });
  c.run("berezinian-nilpotent",
        "odd-reduced Berezinian is nilpotent: (Ber M_odd)^2 = 0",
        [&] { return slot(t.nilp_err); });
  c.run("odd-power-closed-form",
        "M_odd^n equals b^(n-2)[[ab, a b],[b b, b^2-(n-1)ab]] for n <= 6",
        [&] { return slot(t.power_err); });
  c.run("berezinian-addition", "Ber M = Ber M_even + Ber M_odd",
        [&] { return slot(t.add_err); });
  c.run("reduction-bookkeeping",
        "a matrix is recovered from its even- and odd-reductions",
        [&] { return slot(t.book_err); });

  c.run("odd-family-ideals",
        "fixed-alpha odd-reduced matrices close up; beta=0 left, alpha=0 "
        "right, b=0 two-sided ideals",
        [&] {
          RunConfig cfg = o.config;
          auto ctx = make_context(cfg);
          const int n = ctx->generators();
          auto cls = sample_even_classes(*ctx, 3, false);
          std::vector<GrassmannElement> bs = {
              GrassmannElement::zero(n), GrassmannElement::one(n),
              GrassmannElement::scalar(n, 2)};
          if (!cls.reps.empty()) bs.push_back(bs[1] + cls.reps[0]);
          struct Fam {
            GrassmannElement t, u, b;
          };
          std::vector<Fam> fams;
          for (const auto& tt : cls.reps)
            for (const auto& uu : cls.reps)
              for (const auto& bb : bs) fams.push_back({tt, uu, bb});
          auto fammat = [&](const Fam& f) {
            return mat11(GrassmannElement::zero(n), ctx->alpha() * f.t,
                         ctx->alpha() * f.u, f.b);
          };
          long cases = 0;
          for (const auto& f1 : fams) {
            Supermatrix m1 = fammat(f1);
            if (!m1.is_odd_closed()) return fail("family member not odd-closed");
            for (const auto& f2 : fams) {
              Supermatrix m2 = fammat(f2);
              Supermatrix prod = m1 * m2;
              if (!prod.is_odd_closed())
                return fail("family product left the odd-closed set");
              // beta = 0 left ideal
              if (f2.u.is_zero() && m2.at(1, 0).is_zero() &&
                  !prod.at(1, 0).is_zero())
                return fail("beta=0 set is not a left ideal");
              // alpha = 0 right ideal
              if (f1.t.is_zero() && m1.at(0, 1).is_zero() &&
                  !prod.at(0, 1).is_zero())
                return fail("alpha=0 set is not a right ideal");
              // b = 0 two-sided ideal
              if ((f1.b.is_zero() || f2.b.is_zero()) &&
                  !prod.at(1, 1).is_zero())
                return fail("b=0 set is not a two-sided ideal");
              ++cases;
            }
          }
          return pass(plural(cases, "pairs"));
        });
}

// ---------------------------------------------------------------------------
// band + Green's checks
// ---------------------------------------------------------------------------

struct BandData {
  BandElement::Ctx ctx;
  std::vector<GrassmannElement> classes1;  // arity-1 parameter classes
  bool degenerate1 = false;
};

BandData band_data(const VerifyOptions& o) {
  BandData d;
  d.ctx = make_context(o.config);
  auto s = sample_even_classes(*d.ctx, o.config.classes_arity1);
  d.classes1 = s.reps;
  d.degenerate1 = s.degenerate || s.reps.size() < 2;
  return d;
}

void null_checks([[maybe_unused]] const VerifyOptions& o, Checker& c,
                 const BandData& d) {
  c.run("null-semigroup", "antidiagonal nilpotents multiply to the zero matrix",
        [&] {
          auto sample = sample_even_classes(*d.ctx, 4, false);
          BandFamily fam = make_null_family(d.ctx, sample.reps);
          long cases = 0;
          for (const auto& x : fam.elems)
            for (const auto& y : fam.elems) {
              if (!(null_mul(x, y).kind() == BandKind::Zero))
                return fail("abstract product not Z");
              Supermatrix prod = x.rep() * y.rep();
              Supermatrix zero(1, 1, d.ctx->generators());
              if (x.kind() == BandKind::Y && y.kind() == BandKind::Y &&
                  !(prod == zero))
                return fail("matrix product of Y elements not zero");
              ++cases;
            }
          for (const auto& row : fam.table.cell)
            for (int v : row)
              if (fam.table.elems[v].kind() != BandKind::Zero)
                return fail("table cell is not z");
          return pass(plural(cases, "pairs, all products z"));
        });

  c.run("null-0-minimal-ideal",
        "{y_t, z} is a 0-minimal ideal of the null semigroup", [&] {
          auto sample = sample_even_classes(*d.ctx, 4, false);
          BandFamily fam = make_null_family(d.ctx, sample.reps);
          if (fam.size() < 3) return skip("family too small");
          // I = {y_t0, z}: products of S with I land in {z} (an ideal), and
          // the only proper sub-ideal is the zero ideal {z}.
          const BandElement& y0 = fam.elems[0];
          for (const auto& s : fam.elems) {
            if (null_mul(s, y0).kind() != BandKind::Zero ||
                null_mul(y0, s).kind() != BandKind::Zero)
              return fail("products leave the ideal");
          }
          // {y_t0} alone is not an ideal: y0*y0 = z is outside it
          if (null_mul(y0, y0) == y0) return fail("y*y unexpectedly equals y");
          return pass("ideal and minimality verified on " +
                      plural(fam.size(), "elements"));
        });
}

void p_q_checks([[maybe_unused]] const VerifyOptions& o, Checker& c,
                const BandData& d) {
  const auto& ctx = d.ctx;

  c.run("p-idempotent-law", "P(t) P(u) = P(t); every P(t) is idempotent", [&] {
        long cases = 0;
        for (const auto& t : d.classes1)
          for (const auto& u : d.classes1) {
            Supermatrix pt = BandElement::p(ctx, t).rep();
            Supermatrix pu = BandElement::p(ctx, u).rep();
            if (!(pt * pu == pt)) return fail("P(t)P(u) != P(t)");
            if (!(pt * pt == pt)) return fail("P(t) not idempotent");
            ++cases;
          }
        return pass(plural(cases, "pairs, matrix-exact"));
      });

  c.run("p-equality-criterion",
        "P(t) = P(u) exactly when alpha t = alpha u", [&] {
          std::vector<GrassmannElement> pts = d.classes1;
          if (!ctx->annihilator().basis.empty())
            pts.push_back(pts[0] + ctx->annihilator().basis[0]);
          long cases = 0;
          for (const auto& t : pts)
            for (const auto& u : pts) {
              bool same_matrix = BandElement::p(ctx, t, Canon::Raw).rep() ==
                                 BandElement::p(ctx, u, Canon::Raw).rep();
              if (same_matrix != ctx->equal(t, u))
                return fail("matrix equality and alpha-equality disagree");
              ++cases;
            }
          return pass(plural(cases, "pairs"));
        });

  c.run("q-law", "Q(t) Q(u) = Q(u)", [&] {
        long cases = 0;
        for (const auto& t : d.classes1)
          for (const auto& u : d.classes1) {
            Supermatrix qt = BandElement::q(ctx, t).rep();
            Supermatrix qu = BandElement::q(ctx, u).rep();
            if (!(qt * qu == qu)) return fail("Q(t)Q(u) != Q(u)");
            ++cases;
          }
        return pass(plural(cases, "pairs, matrix-exact"));
      });

  c.run("ef-products", "P(t) Q(u) = F_tu and Q(u) P(t) = E as matrices", [&] {
        long cases = 0;
        for (const auto& t : d.classes1)
          for (const auto& u : d.classes1) {
            Supermatrix pt = BandElement::p(ctx, t).rep();
            Supermatrix qu = BandElement::q(ctx, u).rep();
            Supermatrix ftu = BandElement::r(ctx, t, u).rep();
            Supermatrix e = BandElement::e(ctx).rep();
            if (!(pt * qu == ftu)) return fail("P(t)Q(u) != F_tu");
            if (!(qu * pt == e)) return fail("Q(u)P(t) != E");
            ++cases;
          }
        return pass(plural(cases, "pairs"));
      });

  c.run("no-zero-no-identity",
        "the P and Q families contain no two-sided zero or identity", [&] {
          if (d.degenerate1) return skip("fewer than two parameter classes");
          for (bool use_p : {true, false}) {
            BandFamily fam = use_p ? make_p_family(ctx, d.classes1)
                                   : make_q_family(ctx, d.classes1);
            MulTable tab = to_multable(fam.table);
            for (int z = 0; z < tab.n; ++z) {
              bool is_zero = true, is_identity = true;
              for (int x = 0; x < tab.n; ++x) {
                if (tab.cell[z][x] != z || tab.cell[x][z] != z) is_zero = false;
                if (tab.cell[z][x] != x || tab.cell[x][z] != x)
                  is_identity = false;
              }
              if (is_zero) return fail("found a two-sided zero");
              if (is_identity) return fail("found a two-sided identity");
            }
          }
          return pass("both families clean");
        });

  c.run("abstract-zero-laws",
        "sampled p/q families realize the left/right zero laws; phi is a "
        "homomorphism onto the matrix families",
        [&] {
          long cases = 0;
          for (bool use_p : {true, false}) {
            BandFamily fam = use_p ? make_p_family(ctx, d.classes1)
                                   : make_q_family(ctx, d.classes1);
            if (!fam.table.closed) return fail("family not closed");
            if (!associativity_check(fam.table))
              return fail("family table not associative");
            for (int i = 0; i < fam.size(); ++i)
              for (int j = 0; j < fam.size(); ++j) {
                const BandElement& prod =
                    fam.elems[fam.table.cell[i][j]];
                const BandElement& expect = use_p ? fam.elems[i] : fam.elems[j];
                if (!(prod == expect)) return fail("zero law violated");
                if (!(prod.rep() == fam.elems[i].rep() * fam.elems[j].rep()))
                  return fail("phi is not a homomorphism");
                ++cases;
              }
          }
          return pass(plural(cases, "pairs"));
        });

  c.run("phi-kernel",
        "phi identifies exactly alpha-equal labels; Ker phi is the "
        "annihilator-parameter family",
        [&] {
          auto raw = with_alpha_collision(*ctx, d.classes1);
          if (!raw) return skip("Ann alpha is trivial here");
          BandFamily fam = make_p_family(ctx, *raw, Canon::Raw);
          std::vector<std::string> keys;
          for (const auto& x : fam.elems) keys.push_back(matrix_key(x.rep()));
          Partition by_matrix = Partition::from_keys(keys);
          Partition by_delta = delta_partition(fam.elems, DeltaMode::Single);
          if (!(by_matrix == by_delta))
            return fail("matrix collisions differ from alpha-equality");
          // Ker phi: the class of the zero parameter collects exactly the
          // annihilator-valued labels
          int zero_idx = -1;
          for (int i = 0; i < fam.size(); ++i)
            if (fam.elems[i].t_params()[0].is_zero()) zero_idx = i;
          if (zero_idx < 0) return skip("zero parameter not sampled");
          for (int i = 0; i < fam.size(); ++i) {
            bool in_kernel = by_matrix.same_block(i, zero_idx);
            bool annihilated =
                ctx->image(fam.elems[i].t_params()[0]).is_zero();
            if (in_kernel != annihilated) return fail("kernel mismatch");
          }
          return pass("collision partition = alpha-equality on " +
                      plural(fam.size(), "labels"));
        });

  c.run("not-reductive",
        "distinct raw labels with equal alpha-image are indistinguishable by "
        "all translations (phi not faithful)",
        [&] {
          auto raw = with_alpha_collision(*ctx, d.classes1);
          if (!raw) return skip("Ann alpha is trivial here");
          BandFamily fam = make_p_family(ctx, *raw, Canon::Raw);
          // labels 0 and 1 are alpha-equal but distinct
          const BandElement &p0 = fam.elems[0], &p1 = fam.elems[1];
          if (p0 == p1) return fail("witness labels collapsed");
          for (const auto& x : fam.elems) {
            if (!(x.rep() * p0.rep() == x.rep() * p1.rep()))
              return fail("left translations separate the witnesses");
            if (!(band_mul(x, p0, Canon::Raw).rep() ==
                  band_mul(x, p1, Canon::Raw).rep()))
              return fail("abstract translations separate the witnesses");
          }
          return pass("witness pair found on raw labels");
        });

  c.run("regular-not-inverse",
        "x y x = x for all pairs; elements have many distinct inverses", [&] {
          if (d.degenerate1) return skip("fewer than two parameter classes");
          BandFamily fam = make_p_family(ctx, d.classes1);
          MulTable tab = to_multable(fam.table);
          for (int i = 0; i < tab.n; ++i)
            for (int j = 0; j < tab.n; ++j)
              if (tab.cell[tab.cell[i][j]][i] != i)
                return fail("x y x != x");
          // inverses of element 0: y with xyx = x and yxy = y
          int inverses = 0;
          for (int y = 0; y < tab.n; ++y) {
            if (tab.cell[tab.cell[0][y]][0] == 0 &&
                tab.cell[tab.cell[y][0]][y] == y)
              ++inverses;
          }
          if (inverses < 2) return fail("expected at least two inverses");
          return pass(plural(inverses, "inverses of a single element"));
        });

  c.run("principal-ideals",
        "each p_t is its own principal right ideal; the family is left simple",
        [&] {
          BandFamily fam = make_p_family(ctx, d.classes1);
          MulTable tab = to_multable(fam.canon_table);
          for (int i = 0; i < tab.n; ++i) {
            std::set<int> right, left;
            for (int x = 0; x < tab.n; ++x) {
              right.insert(tab.cell[i][x]);
              left.insert(tab.cell[x][i]);
            }
            if (right.size() != 1 || *right.begin() != i)
              return fail("p_t S != {p_t}");
            if (static_cast<int>(left.size()) != tab.n)
              return fail("S p_t != S");
          }
          return pass("on " + plural(tab.n, "classes"));
        });

  c.run("greens-zero-semigroups",
        "R is alpha-equality and L universal on P (dually on Q)", [&] {
          auto raw = with_alpha_collision(*ctx, d.classes1);
          std::vector<GrassmannElement> params =
              raw ? *raw : d.classes1;
          Canon mode = raw ? Canon::Raw : Canon::Canonical;
          BandFamily p_fam = make_p_family(ctx, params, mode);
          GreensClasses gp = family_greens(p_fam);
          Partition delta_p = delta_partition(p_fam.elems, DeltaMode::Single);
          if (!(gp.r == delta_p)) return fail("R != alpha-equality on P");
          if (!(gp.l == Partition::universal(p_fam.size())))
            return fail("L not universal on P");
          BandFamily q_fam = make_q_family(ctx, params, mode);
          GreensClasses gq = family_greens(q_fam);
          Partition delta_q = delta_partition(q_fam.elems, DeltaMode::Single);
          if (!(gq.l == delta_q)) return fail("L != alpha-equality on Q");
          if (!(gq.r == Partition::universal(q_fam.size())))
            return fail("R not universal on Q");
          return pass("P and Q families on " + plural(p_fam.size(), "labels"));
        });
}

void wreath_checks([[maybe_unused]] const VerifyOptions& o, Checker& c,
                   const BandData& d) {
  const auto& ctx = d.ctx;

  static const char* kExpected[9][9] = {
      {"e", "e", "e", "q[t]", "q[u]", "q[u]", "q[t]", "q[w]", "q[w]"},
      {"p[t]", "p[t]", "p[t]", "r[t;t]", "r[t;u]", "r[t;u]", "r[t;t]",
       "r[t;w]", "r[t;w]"},
      {"p[u]", "p[u]", "p[u]", "r[u;t]", "r[u;u]", "r[u;u]", "r[u;t]",
       "r[u;w]", "r[u;w]"},
      {"e", "e", "e", "q[t]", "q[u]", "q[u]", "q[t]", "q[w]", "q[w]"},
      {"e", "e", "e", "q[t]", "q[u]", "q[u]", "q[t]", "q[w]", "q[w]"},
      {"p[t]", "p[t]", "p[t]", "r[t;t]", "r[t;u]", "r[t;u]", "r[t;t]",
       "r[t;w]", "r[t;w]"},
      {"p[u]", "p[u]", "p[u]", "r[u;t]", "r[u;u]", "r[u;u]", "r[u;t]",
       "r[u;w]", "r[u;w]"},
      {"p[t]", "p[t]", "p[t]", "r[t;t]", "r[t;u]", "r[t;u]", "r[t;t]",
       "r[t;w]", "r[t;w]"},
      {"p[v]", "p[v]", "p[v]", "r[v;t]", "r[v;u]", "r[v;u]", "r[v;t]",
       "r[v;w]", "r[v;w]"}};

  c.run("wreath-cayley-table",
        "the symbolic 9x9 wreath table has the published cell values", [&] {
          SymbolicTable tab = symbolic_wreath_table();
          if (tab.labels.size() != 9) return fail("label count");
          for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j)
              if (tab.cell[i][j] != kExpected[i][j])
                return fail("cell (" + tab.labels[i] + ", " + tab.labels[j] +
                            ") = " + tab.cell[i][j]);
          return pass("81 cells match");
        });

  c.run("wreath-associativity",
        "the wreath product associates (symbolic and concrete tables)", [&] {
          if (!symbolic_wreath_associative())
            return fail("symbolic triples broke associativity");
          BandFamily fam = make_wreath_family(ctx, d.classes1, d.classes1);
          if (!fam.table.closed) return fail("concrete wreath family not closed");
          if (!associativity_check(fam.table))
            return fail("concrete table not associative");
          return pass("729 symbolic triples + " +
                      plural(fam.size(), "concrete elements"));
        });

  c.run("wreath-phi-homomorphism",
        "rep(x*y) = rep(x) rep(y) across the whole wreath family", [&] {
          BandFamily fam = make_wreath_family(ctx, d.classes1, d.classes1);
          long cases = 0;
          for (int i = 0; i < fam.size(); ++i)
            for (int j = 0; j < fam.size(); ++j) {
              const BandElement& prod = fam.elems[fam.table.cell[i][j]];
              if (!(prod.rep() == fam.elems[i].rep() * fam.elems[j].rep()))
                return fail("phi breaks at a pair");
              ++cases;
            }
          return pass(plural(cases, "pairs, matrix-exact"));
        });

  c.run("wreath-subsemigroups",
        "the advertised subsets close up (the full rectangular band only "
        "after e's products are adjoined)",
        [&] {
          BandFamily fam = make_wreath_family(ctx, d.classes1, d.classes1);
          MulTable tab = to_multable(fam.table);
          auto indices_of = [&](std::initializer_list<BandKind> kinds) {
            std::vector<int> out;
            for (int i = 0; i < fam.size(); ++i)
              for (BandKind k : kinds)
                if (fam.elems[i].kind() == k) out.push_back(i);
            return out;
          };
          struct Sub {
            const char* name;
            std::vector<int> members;
            bool expect_closed;
          };
          std::vector<Sub> subs = {
              {"{e}", indices_of({BandKind::E}), true},
              {"reduced-P", indices_of({BandKind::P}), true},
              {"full-P", indices_of({BandKind::P, BandKind::E}), true},
              {"reduced-Q", indices_of({BandKind::Q}), true},
              {"full-Q", indices_of({BandKind::Q, BandKind::E}), true},
              {"reduced-rect", indices_of({BandKind::R}), true},
              {"mixed-left", indices_of({BandKind::R, BandKind::P}), true},
              {"mixed-right", indices_of({BandKind::R, BandKind::Q}), true},
              // e*r = q and r*e = p land outside {r} + {e}: the printed
              // "full rectangular band" closes only inside the whole wreath
              {"rect-with-e", indices_of({BandKind::R, BandKind::E}), false},
          };
          for (const auto& s : subs) {
            if (is_closed_subset(tab, s.members) != s.expect_closed)
              return fail(std::string(s.name) + " closure unexpected");
          }
          // the escape products are exactly the table's own values
          const BandElement e = BandElement::e(ctx);
          for (const auto& t : d.classes1)
            for (const auto& u : d.classes1) {
              BandElement r = BandElement::r(ctx, t, u);
              if (!(wreath_mul(e, r) == BandElement::q(ctx, u)))
                return fail("e * r_tu != q_u");
              if (!(wreath_mul(r, e) == BandElement::p(ctx, t)))
                return fail("r_tu * e != p_t");
            }
          return pass("eight closed subsets + e-product pattern verified");
        });
}

void rect_checks([[maybe_unused]] const VerifyOptions& o, Checker& c,
                 const BandData& d) {
  const auto& ctx = d.ctx;

  c.run("rect-band-law", "r_tu r_vw = r_tw; sandwich products return the factor",
        [&] {
          BandFamily fam = make_rect_family(ctx, d.classes1, d.classes1);
          long cases = 0;
          for (const auto& x : fam.elems)
            for (const auto& y : fam.elems) {
              BandElement prod = wreath_mul(x, y);
              BandElement expect = BandElement::r(ctx, x.t_params()[0],
                                                  y.u_params()[0]);
              if (!(prod == expect)) return fail("product law broken");
              if (!(wreath_mul(wreath_mul(x, y), x) == x))
                return fail("x y x != x");
              ++cases;
            }
          return pass(plural(cases, "pairs"));
        });

  c.run("rect-DJ-universal",
        "all rectangular-band elements are D- and J-equivalent", [&] {
          BandFamily fam = make_rect_family(ctx, d.classes1, d.classes1);
          GreensClasses g = family_greens(fam);
          if (g.d.num_blocks() != 1) return fail("D not universal");
          if (g.j.num_blocks() != 1) return fail("J not universal");
          if (!j_universal_check(fam)) return fail("sandwich identities failed");
          return pass("on " + plural(fam.size(), "elements"));
        });

  c.run("rect-RL-by-index",
        "R fixes the first index's alpha-image, L the second", [&] {
          BandFamily fam = make_rect_family(ctx, d.classes1, d.classes1);
          GreensClasses g = family_greens(fam);
          if (!(g.r == fine_relation(fam.elems, Side::R, 1)))
            return fail("R mismatch");
          if (!(g.l == fine_relation(fam.elems, Side::L, 1)))
            return fail("L mismatch");
          return pass("partitions agree");
        });

  c.run("double-alpha-H", "H-classes are the double alpha-equality classes",
        [&] {
          auto raw = with_alpha_collision(*ctx, d.classes1);
          std::vector<GrassmannElement> t_params = raw ? *raw : d.classes1;
          BandFamily fam = make_rect_family(ctx, t_params, d.classes1,
                                            raw ? Canon::Raw : Canon::Canonical);
          GreensClasses g = family_greens(fam);
          if (!(g.h == delta_partition(fam.elems, DeltaMode::Double)))
            return fail("H != double alpha-equality");
          return pass("on " + plural(fam.size(), "labels"));
        });

  c.run("psi-epimorphism",
        "psi = (R-class, L-class) is a surjective homomorphism; raw labels "
        "make it non-injective",
        [&] {
          BandFamily fam = make_rect_family(ctx, d.classes1, d.classes1);
          PsiReport rep = psi_map(fam);
          if (!rep.is_homomorphism) return fail("psi not a homomorphism");
          if (!rep.is_surjective) return fail("psi not surjective");
          if (rep.non_injective_witness)
            return fail("canonical psi should be injective");
          auto raw = with_alpha_collision(*ctx, d.classes1);
          if (!raw) return skip("homomorphism/surjection pass; Ann alpha "
                                "trivial, no collision witness");
          BandFamily rawfam =
              make_rect_family(ctx, *raw, d.classes1, Canon::Raw);
          PsiReport rawrep = psi_map(rawfam);
          if (!rawrep.is_homomorphism || !rawrep.is_surjective)
            return fail("raw psi lost structure");
          if (!rawrep.non_injective_witness)
            return fail("raw psi missing a collision witness");
          return pass("canonical psi bijective; raw witness at labels " +
                      std::to_string(rawrep.non_injective_witness->first) +
                      "," + std::to_string(rawrep.non_injective_witness->second));
        });
}

struct Band22 {
  BandFamily fam;
  Partition r1, r2, l1, l2;
  GreensClasses g;
};

Band22 build_band22(const BandData& d, int classes_per_index) {
  auto s = sample_even_classes(*d.ctx, classes_per_index);
  std::vector<std::vector<GrassmannElement>> lists(4, s.reps);
  Band22 out{make_band_family(d.ctx, {lists[0], lists[1]},
                              {lists[2], lists[3]}),
             {}, {}, {}, {}, {}};
  out.r1 = fine_relation(out.fam.elems, Side::R, 1);
  out.r2 = fine_relation(out.fam.elems, Side::R, 2);
  out.l1 = fine_relation(out.fam.elems, Side::L, 1);
  out.l2 = fine_relation(out.fam.elems, Side::L, 2);
  out.g = family_greens(out.fam);
  return out;
}

void higher_checks([[maybe_unused]] const VerifyOptions& o, Checker& c,
                   const BandData& d) {
  const auto& ctx = d.ctx;
  const int N = ctx->generators();

  c.run("higher-band-shape",
        "the (1|n) band matrix has the antitriangle form with a unit block",
        [&] {
          auto s = sample_even_classes(*ctx, 2);
          if (s.reps.size() < 2) return skip("not enough classes");
          for (int n = 1; n <= 3; ++n) {
            std::vector<GrassmannElement> tv, uv;
            for (int i = 0; i < n; ++i) {
              tv.push_back(s.reps[i % s.reps.size()]);
              uv.push_back(s.reps[(i + 1) % s.reps.size()]);
            }
            Supermatrix m = BandElement::f(ctx, tv, uv).rep();
            if (!m.at(0, 0).is_zero()) return fail("corner not zero");
            for (int j = 0; j < n; ++j) {
              if (!(m.at(0, 1 + j) == ctx->alpha() * tv[j]))
                return fail("t-row mismatch");
              if (!(m.at(1 + j, 0) == ctx->alpha() * uv[j]))
                return fail("u-column mismatch");
              for (int i = 0; i < n; ++i) {
                GrassmannElement expect =
                    i == j ? GrassmannElement::one(N) : GrassmannElement(N);
                if (!(m.at(1 + i, 1 + j) == expect))
                  return fail("unit block mismatch");
              }
            }
          }
          return pass("n = 1..3");
        });

  c.run("higher-band-law",
        "F F' = F_{t of F, u of F'}; every element is idempotent (n <= 3)", [&] {
          auto s = sample_even_classes(*ctx, 2);
          if (s.reps.size() < 2) return skip("not enough classes");
          long cases = 0;
          for (int n = 2; n <= 3; ++n) {
            std::vector<std::vector<GrassmannElement>> lists(n, s.reps);
            BandFamily fam = make_band_family(ctx, lists, lists);
            if (!fam.table.closed) return fail("band family not closed");
            for (int i = 0; i < fam.size(); ++i) {
              if (fam.table.cell[i][i] != i) return fail("not idempotent");
              for (int j = 0; j < fam.size(); ++j) {
                const BandElement& prod = fam.elems[fam.table.cell[i][j]];
                BandElement expect = BandElement::f(ctx, fam.elems[i].t_params(),
                                                    fam.elems[j].u_params());
                if (!(prod == expect)) return fail("product law broken");
                if (!(prod.rep() ==
                      fam.elems[i].rep() * fam.elems[j].rep()))
                  return fail("matrix product disagrees");
                ++cases;
              }
            }
          }
          return pass(plural(cases, "pairs at n = 2, 3"));
        });

  c.run("n-ple-equality",
        "band matrices coincide exactly for componentwise alpha-equal "
        "parameters",
        [&] {
          if (ctx->annihilator().basis.empty())
            return skip("Ann alpha trivial, matrices all distinct");
          auto s = sample_even_classes(*ctx, 2);
          if (s.reps.size() < 2) return skip("not enough classes");
          std::vector<GrassmannElement> tv = {s.reps[0], s.reps[1]};
          std::vector<GrassmannElement> uv = {s.reps[1], s.reps[0]};
          BandElement f1 = BandElement::f(ctx, tv, uv, Canon::Raw);
          std::vector<GrassmannElement> tv2 = tv;
          tv2[1] = tv2[1] + ctx->annihilator().basis[0];
          BandElement f2 = BandElement::f(ctx, tv2, uv, Canon::Raw);
          if (!(f1.rep() == f2.rep()))
            return fail("alpha-equal parameters gave distinct matrices");
          std::vector<GrassmannElement> tv3 = tv;
          tv3[1] = tv3[1] + GrassmannElement::one(ctx->generators());
          BandElement f3 = BandElement::f(ctx, tv3, uv, Canon::Raw);
          if (f1.rep() == f3.rep())
            return fail("alpha-distinct parameters gave equal matrices");
          return pass("collision and separation witnesses");
        });

  c.run("block-isomorphism",
        "the flat (1|4) and block (2|2) forms are one permutation apart and "
        "product-compatible",
        [&] {
          auto s = sample_even_classes(*ctx, 3);
          if (s.reps.size() < 2) return skip("not enough classes");
          auto rep = block_isomorphism(ctx, 4, 2, 2, s.reps);
          if (!rep.product_compatible) return fail(rep.detail);
          bool threw = false;
          try {
            (void)block_isomorphism(ctx, 3, 2, 2, s.reps);
          } catch (const DomainError&) {
            threw = true;
          }
          if (!threw) return fail("n != k*m must be rejected");
          auto trivial = block_isomorphism(ctx, 1, 1, 1, s.reps);
          if (!trivial.product_compatible || trivial.t_row != std::vector<int>{0})
            return fail("trivial case broken");
          return pass(rep.detail);
        });

  c.run("km-padding",
        "degenerate (k|m)-bands embed as padded (n|n) elements and stay "
        "closed",
        [&] {
          auto s = sample_even_classes(*ctx, 2);
          if (s.reps.size() < 2) return skip("not enough classes");
          const GrassmannElement pad = GrassmannElement::one(N);
          // (1|2) band inside (2|2): t2 padded
          std::vector<BandElement> elems;
          for (const auto& t1 : s.reps)
            for (const auto& u1 : s.reps)
              for (const auto& u2 : s.reps)
                elems.push_back(BandElement::f(ctx, {t1, pad}, {u1, u2}));
          CayleyTable tab = cayley_table(elems);
          if (!tab.closed) return fail("padded family not closed");
          for (const auto& x : elems)
            for (const auto& y : elems) {
              BandElement prod = higher_mul(x, y);
              if (!ctx->is_unit_class(prod.t_params()[1]))
                return fail("padding slot escaped the unit class");
            }
          return pass(plural(static_cast<long>(elems.size()), "padded elements"));
        });

  c.run("km-zero-semigroups",
        "vector p and q elements give k-left and m-right zero semigroups", [&] {
          auto s = sample_even_classes(*ctx, 2);
          if (s.reps.size() < 2) return skip("not enough classes");
          long cases = 0;
          for (const auto& a : s.reps)
            for (const auto& b : s.reps) {
              BandElement p1 = BandElement::p_vec(ctx, {a, b});
              BandElement p2 = BandElement::p_vec(ctx, {b, a});
              if (!(higher_mul(p1, p2) == p1)) return fail("p law broken");
              BandElement q1 = BandElement::q_vec(ctx, {a, b});
              BandElement q2 = BandElement::q_vec(ctx, {b, a});
              if (!(higher_mul(q1, q2) == q2)) return fail("q law broken");
              if (!(higher_mul(q1, q2).rep() == q1.rep() * q2.rep()))
                return fail("matrix route disagrees");
              ++cases;
            }
          return pass(plural(cases, "pairs"));
        });

  c.run("km-irreducibility",
        "chained arity-1 products collapse to r_{t1,um}; band matrices keep "
        "middle parameters",
        [&] {
          auto s = sample_even_classes(*ctx, 3);
          if (s.reps.size() < 2) return skip("not enough classes");
          for (auto [k, m] : {std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
            auto rep = irreducibility_witness(ctx, k, m, s.reps);
            if (!rep.chain_collapses || !rep.middle_parameters_matter)
              return fail("witness failed at k=" + std::to_string(k) +
                          ", m=" + std::to_string(m));
          }
          return pass("k|m in {2|1, 1|2, 2|2}");
        });

  c.run("fpq-decomposition", "f = p_{t...} * q_{u...} recomposes exactly", [&] {
        auto s = sample_even_classes(*ctx, 2);
        if (s.reps.size() < 2) return skip("not enough classes");
        long cases = 0;
        for (const auto& a : s.reps)
          for (const auto& b : s.reps) {
            BandElement f = BandElement::f(ctx, {a, b}, {b, a});
            auto [p, q] = band_decompose(f);
            if (!(higher_mul(p, q) == f)) return fail("recomposition failed");
            BandElement r = BandElement::r(ctx, a, b);
            auto [pr, qr] = band_decompose(r);
            if (!(wreath_mul(pr, qr) == r)) return fail("arity-1 recomposition");
            ++cases;
          }
        return pass(plural(cases, "elements"));
      });
}

void fine_checks(const VerifyOptions& o, Checker& c, const BandData& d) {
  const int classes = o.full ? 3 : 2;
  Band22 b = build_band22(d, classes);
  const int n = b.fam.size();

  c.run("f22-shape", "the (2|2) band matrix is the documented 3x3 form", [&] {
        const BandElement& f = b.fam.elems[n - 1];
        Supermatrix m = f.rep();
        if (m.dim() != 3 || m.even_dim() != 1) return fail("wrong shape");
        const auto& ctx = *d.ctx;
        if (!m.at(0, 0).is_zero() ||
            !(m.at(0, 1) == ctx.image(f.t_params()[0])) ||
            !(m.at(0, 2) == ctx.image(f.t_params()[1])) ||
            !(m.at(1, 0) == ctx.image(f.u_params()[0])) ||
            !(m.at(2, 0) == ctx.image(f.u_params()[1])))
          return fail("border mismatch");
        return pass("entries match");
      });

  c.run("j-universal-22", "J is universal on the (2|2) band", [&] {
        if (!j_universal_check(b.fam)) return fail("J not universal");
        return verdict(b.g.j.num_blocks() == 1,
                       "on " + plural(n, "elements"));
      });

  c.run("standard-relations-22",
        "R/L/H/D classes match the fixed-alpha-image predictions", [&] {
          if (!(b.g.r == meet(b.r1, b.r2))) return fail("R mismatch");
          if (!(b.g.l == meet(b.l1, b.l2))) return fail("L mismatch");
          if (!(b.g.h == delta_partition(b.fam.elems, DeltaMode::NPle)))
            return fail("H != 2|2-ple alpha-equality");
          if (b.g.d.num_blocks() != 1) return fail("D not universal");
          return pass("on " + plural(n, "elements"));
        });

  c.run("fine-relations",
        "fine relations partition by a single parameter's alpha-image", [&] {
          const auto& ctx = *d.ctx;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
              const auto &x = b.fam.elems[i], &y = b.fam.elems[j];
              if (b.r1.same_block(i, j) !=
                  ctx.equal(x.t_params()[0], y.t_params()[0]))
                return fail("R1 mismatch");
              if (b.r2.same_block(i, j) !=
                  ctx.equal(x.t_params()[1], y.t_params()[1]))
                return fail("R2 mismatch");
              if (b.l1.same_block(i, j) !=
                  ctx.equal(x.u_params()[0], y.u_params()[0]))
                return fail("L1 mismatch");
              if (b.l2.same_block(i, j) !=
                  ctx.equal(x.u_params()[1], y.u_params()[1]))
                return fail("L2 mismatch");
            }
          return pass("all pairs, four relations");
        });

  c.run("fine-lattice",
        "R = R1^R2, L = L1^L2, H = R^L, D = R v L from the fine relations",
        [&] {
          if (!(meet(b.r1, b.r2) == b.g.r)) return fail("R identity");
          if (!(meet(b.l1, b.l2) == b.g.l)) return fail("L identity");
          if (!(meet(meet(b.r1, b.r2), meet(b.l1, b.l2)) == b.g.h))
            return fail("H identity");
          if (!(join(meet(b.r1, b.r2), meet(b.l1, b.l2)) == b.g.d))
            return fail("D identity");
          return pass("four lattice identities");
        });

  c.run("mixed-relations",
        "all mixed H/D families compute by meet/join; H^(12|12) = H", [&] {
          std::vector<Partition> rs = {b.r1, b.r2}, ls = {b.l1, b.l2};
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
              Partition hij = meet(rs[i], ls[j]);
              Partition dij = join(rs[i], ls[j]);
              if (!b.g.h.refines(hij)) return fail("H does not refine H^(i|j)");
              if (dij.num_blocks() != 1)
                return fail("D^(i|j) not universal on the full grid");
              for (int k = 0; k < 2; ++k) {
                Partition hijk = meet(meet(rs[i], rs[j]), ls[k]);
                Partition hikl = meet(rs[i], meet(ls[j], ls[k]));
                Partition dijk = join(meet(rs[i], rs[j]), ls[k]);
                Partition dikl = join(rs[i], meet(ls[j], ls[k]));
                if (!b.g.h.refines(hijk) || !b.g.h.refines(hikl))
                  return fail("H must refine the mixed meets");
                if (dijk.num_blocks() != 1 || dikl.num_blocks() != 1)
                  return fail("mixed joins must be universal here");
              }
            }
          Partition h1212 = meet(meet(b.r1, b.r2), meet(b.l1, b.l2));
          if (!(h1212 == b.g.h)) return fail("H^(12|12) != H");
          // refinement chains pictured in the relation diagram
          Partition h12_1 = meet(meet(b.r1, b.r2), b.l1);
          Partition h2_1 = meet(b.r2, b.l1);
          if (!b.g.h.refines(h12_1) || !h12_1.refines(h2_1) ||
              !h2_1.refines(b.r2) || !h2_1.refines(b.l1))
            return fail("refinement chain broken");
          if (!b.g.r.refines(b.r1) || !b.g.l.refines(b.l2))
            return fail("standard relations must refine fine ones");
          return pass("six mixed families + diagram refinements");
        });

  c.run("eggbox-diagrams",
        "2-D eggbox cells are the H-classes; mixed 3-D boxes are well-formed",
        [&] {
          EggboxDiagram box2 = make_eggbox({{"R", b.g.r}, {"L", b.g.l}});
          long placed = 0;
          for (const auto& [tuple, members] : box2.cells) {
            for (std::size_t a = 0; a < members.size(); ++a)
              for (std::size_t bb = a + 1; bb < members.size(); ++bb)
                if (!b.g.h.same_block(members[a], members[bb]))
                  return fail("cell members not H-equivalent");
            if (!members.empty()) ++placed;
            for (int e : members) {
              if (b.g.r.block_of(e) != tuple[0] ||
                  b.g.l.block_of(e) != tuple[1])
                return fail("cell indexing broken");
            }
          }
          if (placed != static_cast<long>(b.g.h.num_blocks()))
            return fail("nonempty 2-D cells must biject with H-classes");
          EggboxDiagram box3 =
              make_eggbox({{"R1", b.r1}, {"R2", b.r2}, {"L1", b.l1}});
          long members3 = 0;
          for (const auto& [tuple, members] : box3.cells)
            members3 += static_cast<long>(members.size());
          if (members3 != n) return fail("3-D box loses elements");
          bool threw = false;
          try {
            (void)make_eggbox({{"R", b.g.r}, {"R", b.g.r}});
          } catch (const DomainError&) {
            threw = true;
          }
          if (!threw) return fail("duplicate axes must be rejected");
          return pass("grid of " + plural(n, "elements"));
        });

  c.run("m-index-subsemigroups",
        "fixing any set of alpha-images yields a closed subsemigroup", [&] {
          MulTable tab = to_multable(b.fam.table);
          const BandElement& base = b.fam.elems[0];
          const auto& ctx = *d.ctx;
          long checked = 0;
          for (int mask = 1; mask < 15; ++mask) {  // constraint patterns
            std::vector<int> members;
            for (int i = 0; i < n; ++i) {
              const auto& x = b.fam.elems[i];
              bool ok = true;
              if (mask & 1)
                ok = ok && ctx.equal(x.t_params()[0], base.t_params()[0]);
              if (mask & 2)
                ok = ok && ctx.equal(x.t_params()[1], base.t_params()[1]);
              if (mask & 4)
                ok = ok && ctx.equal(x.u_params()[0], base.u_params()[0]);
              if (mask & 8)
                ok = ok && ctx.equal(x.u_params()[1], base.u_params()[1]);
              if (ok) members.push_back(i);
            }
            if (!is_closed_subset(tab, members))
              return fail("constrained subset not closed, mask " +
                          std::to_string(mask));
            ++checked;
          }
          return pass(plural(checked, "constraint patterns"));
        });

  c.run("restriction-theorem",
        "Green's relations on one-free-index subsemigroups are the "
        "restrictions of the fine relations ((2|2) and (3|3), all k)",
        [&] {
          for (int k = 1; k <= 2; ++k) {
            auto spec = SubsemigroupSpec::from_base(b.fam.elems[0], k);
            auto rep = subsemigroup_restriction(b.fam, spec);
            if (!rep.all())
              return fail("(2|2) failed at free index " + std::to_string(k));
          }
          auto s3 = sample_even_classes(*d.ctx, o.config.classes_arity3);
          if (s3.reps.size() < 2) return skip("not enough classes for (3|3)");
          std::vector<std::vector<GrassmannElement>> lists(3, s3.reps);
          BandFamily fam3 = make_band_family(d.ctx, lists, lists);
          for (int k = 1; k <= 3; ++k) {
            auto spec = SubsemigroupSpec::from_base(fam3.elems[0], k);
            auto rep = subsemigroup_restriction(fam3, spec);
            if (!rep.all())
              return fail("(3|3) failed at free index " + std::to_string(k));
          }
          return pass("(2|2) k=1,2 and (3|3) k=1,2,3, four equalities each");
        });
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  Checker c;
  grassmann_checks(opts, c);
  supermatrix_checks(opts, c);
  BandData d = band_data(opts);
  null_checks(opts, c, d);
  p_q_checks(opts, c, d);
  wreath_checks(opts, c, d);
  rect_checks(opts, c, d);
  higher_checks(opts, c, d);
  fine_checks(opts, c, d);
  return c.out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) {
    return r.status == CheckStatus::Fail;
  });
}

namespace {

const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skip:
      return "SKIP";
  }
  return "?";
}

std::string pool_str(const std::vector<Rat>& pool) {
  std::string out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (i) out += ",";
    out += rat_str(pool[i]);
  }
  return out;
}

}  // namespace

std::string render_report_text(const VerifyOptions& opts,
                               const std::vector<CheckResult>& results) {
  std::ostringstream os;
  os << "superband verification report\n";
  os << "tier: " << (opts.full ? "full" : "quick") << "\n";
  os << "n_generators: " << opts.config.n_generators << "\n";
  os << "alpha: " << opts.config.alpha_expr << "\n";
  os << "seed: " << opts.config.seed << "\n";
  os << "pool: " << pool_str(opts.config.pool) << "\n\n";
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& r : results) {
    os << "[" << status_str(r.status) << "] " << r.id << " — " << r.claim;
    if (!r.detail.empty()) os << " (" << r.detail << ")";
    os << "\n";
    (r.status == CheckStatus::Pass
         ? passed
         : r.status == CheckStatus::Fail ? failed : skipped)++;
  }
  os << "\nresult: " << results.size() << " checks, " << passed << " passed, "
     << failed << " failed, " << skipped << " skipped\n";
  return os.str();
}

Json render_report_json(const VerifyOptions& opts,
                        const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  int failed = 0;
  for (const auto& r : results) {
    checks.push_back(Json{{"id", r.id},
                          {"claim", r.claim},
                          {"status", status_str(r.status)},
                          {"detail", r.detail}});
    if (r.status == CheckStatus::Fail) ++failed;
  }
  return Json{{"tier", opts.full ? "full" : "quick"},
              {"n_generators", opts.config.n_generators},
              {"alpha", opts.config.alpha_expr},
              {"seed", opts.config.seed},
              {"pool", pool_str(opts.config.pool)},
              {"checks", checks},
              {"failed", failed}};
}

}  // namespace superband
