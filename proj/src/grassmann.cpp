#include "superband/grassmann.hpp"

#include <bit>
#include <sstream>
#include <utility>

#include "linalg.hpp"

namespace superband {

int merge_sign(Mask a, Mask b) {
  int inversions = 0;
  Mask bb = b;
  while (bb) {
    int j = std::countr_zero(bb);
    bb &= bb - 1;
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

GrassmannElement::GrassmannElement(int n_generators) : n_(n_generators) {
  if (n_generators < 0 || n_generators > kMaxGenerators)
    throw DimensionError("generator count out of range");
}

GrassmannElement GrassmannElement::zero(int n) { return GrassmannElement(n); }

GrassmannElement GrassmannElement::scalar(int n, const Rat& c) {
  GrassmannElement x(n);
  if (c != 0) x.t_.emplace(Mask{0}, c);
  return x;
}

GrassmannElement GrassmannElement::one(int n) { return scalar(n, 1); }

GrassmannElement GrassmannElement::generator(int n, int index) {
  if (index < 1 || index > n)
    throw DimensionError("generator index out of range");
  GrassmannElement x(n);
  x.t_.emplace(Mask{1} << (index - 1), Rat(1));
  return x;
}

GrassmannElement GrassmannElement::monomial(int n, Mask m, const Rat& c) {
  GrassmannElement x(n);
  if (m >> n) throw DimensionError("monomial mask uses unknown generators");
  if (c != 0) x.t_.emplace(m, c);
  return x;
}

GrassmannElement GrassmannElement::from_terms(int n, TermMap terms) {
  GrassmannElement x(n);
  for (auto& [m, c] : terms) {
    if (m >> n) throw DimensionError("monomial mask uses unknown generators");
    if (c != 0) x.t_.emplace(m, c);
  }
  return x;
}

Rat GrassmannElement::coeff(Mask m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rat(0) : it->second;
}

Parity GrassmannElement::parity() const {
  bool even_seen = false, odd_seen = false;
  for (const auto& [m, c] : t_) {
    (std::popcount(m) & 1 ? odd_seen : even_seen) = true;
  }
  if (odd_seen && even_seen) return Parity::Mixed;
  if (odd_seen) return Parity::Odd;
  return Parity::Even;  // includes zero
}

Rat GrassmannElement::body() const { return coeff(0); }

GrassmannElement GrassmannElement::soul() const {
  GrassmannElement x = *this;
  x.t_.erase(Mask{0});
  return x;
}

void GrassmannElement::check_same_algebra(const GrassmannElement& rhs) const {
  if (n_ != rhs.n_)
    throw DimensionError("elements live in different Grassmann algebras");
}

void GrassmannElement::insert_term(Mask m, const Rat& c) {
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement x(n_);
  for (const auto& [m, c] : t_) x.t_.emplace(m, -c);
  return x;
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& rhs) const {
  check_same_algebra(rhs);
  GrassmannElement x = *this;
  for (const auto& [m, c] : rhs.t_) x.insert_term(m, c);
  return x;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& rhs) const {
  check_same_algebra(rhs);
  GrassmannElement x = *this;
  for (const auto& [m, c] : rhs.t_) x.insert_term(m, -c);
  return x;
}

GrassmannElement GrassmannElement::operator*(const GrassmannElement& rhs) const {
  check_same_algebra(rhs);
  GrassmannElement x(n_);
  for (const auto& [ma, ca] : t_) {
    for (const auto& [mb, cb] : rhs.t_) {
      if (ma & mb) continue;  // repeated generator annihilates the term
      Rat c = ca * cb;
      if (merge_sign(ma, mb) < 0) c = -c;
      x.insert_term(ma | mb, c);
    }
  }
  return x;
}

GrassmannElement GrassmannElement::operator*(const Rat& c) const {
  GrassmannElement x(n_);
  if (c == 0) return x;
  for (const auto& [m, v] : t_) x.t_.emplace(m, v * c);
  return x;
}

GrassmannElement GrassmannElement::pow(unsigned k) const {
  GrassmannElement acc = one(n_);
  for (unsigned i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

GrassmannElement GrassmannElement::inverse() const {
  Rat c = body();
  if (c == 0) throw DomainError("inverse: body is zero");
  Rat cinv = Rat(1) / c;
  GrassmannElement s = soul();
  // (c + s)^-1 = c^-1 * sum_k (-s/c)^k; the series terminates because the
  // soul is nilpotent.
  GrassmannElement acc = one(n_);
  GrassmannElement term = one(n_);
  for (int k = 0; k < n_ && !term.is_zero(); ++k) {
    term = (term * s) * (-cinv);
    acc = acc + term;
  }
  return acc * cinv;
}

std::vector<Mask> even_masks(int n) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (!(std::popcount(m) & 1)) out.push_back(m);
  return out;
}

std::vector<Mask> odd_masks(int n) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (std::popcount(m) & 1) out.push_back(m);
  return out;
}

std::string internal_key(const GrassmannElement& x) {
  std::ostringstream os;
  for (const auto& [m, c] : x.terms()) os << m << ':' << rat_str(c) << ';';
  return os.str();
}

std::string to_string(const GrassmannElement& x, GenStyle style) {
  if (x.is_zero()) return "0";
  const char* gen = style == GenStyle::Theta ? "θ" : "g";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (m == 0) {
      os << rat_str(a);
    } else {
      if (a != 1) os << rat_str(a) << '*';
      bool dot = false;
      Mask mm = m;
      while (mm) {
        int i = std::countr_zero(mm);
        mm &= mm - 1;
        if (dot) os << '.';
        os << gen << (i + 1);
        dot = true;
      }
    }
  }
  return os.str();
}

namespace {

void require_odd_nonzero(const GrassmannElement& alpha) {
  if (alpha.is_zero())
    throw DomainError("alpha is zero: annihilator degenerates to the whole even sector");
  if (alpha.parity() != Parity::Odd)
    throw ParityError("alpha must be homogeneous odd");
}

}  // namespace

AnnihilatorBasis annihilator_even(const GrassmannElement& alpha) {
  require_odd_nonzero(alpha);
  const int n = alpha.generators();
  const std::vector<Mask> ev = even_masks(n);
  std::map<Mask, std::size_t> col_of;
  for (std::size_t j = 0; j < ev.size(); ++j) col_of[ev[j]] = j;

  // Rows of the multiplication-by-alpha map, indexed by the odd target mask.
  std::map<Mask, linalg::SparseRow> rows_by_target;
  for (std::size_t j = 0; j < ev.size(); ++j) {
    GrassmannElement img = alpha * GrassmannElement::monomial(n, ev[j], 1);
    for (const auto& [m, c] : img.terms()) rows_by_target[m][j] = c;
  }
  std::vector<linalg::SparseRow> rows;
  rows.reserve(rows_by_target.size());
  for (auto& [m, r] : rows_by_target) rows.push_back(std::move(r));

  AnnihilatorBasis out;
  out.n_generators = n;
  for (const auto& vec : linalg::kernel_basis(std::move(rows), ev.size())) {
    GrassmannElement::TermMap terms;
    for (const auto& [j, c] : vec) terms[ev[j]] = c;
    out.basis.push_back(GrassmannElement::from_terms(n, std::move(terms)));
  }
  return out;
}

bool alpha_equal(const GrassmannElement& alpha, const GrassmannElement& t,
                 const GrassmannElement& u) {
  require_odd_nonzero(alpha);
  if (!t.is_even() || !u.is_even())
    throw ParityError("alpha-equality compares even parameters");
  return (alpha * (t - u)).is_zero();
}

AlphaContext::AlphaContext(GrassmannElement alpha) : alpha_(std::move(alpha)) {
  require_odd_nonzero(alpha_);
  ann_ = annihilator_even(alpha_);
  even_masks_ = even_masks(alpha_.generators());
  for (std::size_t j = 0; j < even_masks_.size(); ++j)
    even_index_[even_masks_[j]] = j;

  std::vector<linalg::SparseRow> rows;
  rows.reserve(ann_.basis.size());
  for (const auto& e : ann_.basis) {
    linalg::SparseRow r;
    for (const auto& [m, c] : e.terms()) r[even_index_.at(m)] = c;
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> pivots;
  linalg::rref(rows, pivots);
  for (std::size_t i = 0; i < rows.size(); ++i)
    reducer_.emplace_back(pivots[i], std::move(rows[i]));
}

GrassmannElement AlphaContext::image(const GrassmannElement& t) const {
  return alpha_ * t;
}

bool AlphaContext::equal(const GrassmannElement& t,
                         const GrassmannElement& u) const {
  return alpha_equal(alpha_, t, u);
}

GrassmannElement AlphaContext::reduce(const GrassmannElement& t) const {
  if (!t.is_even()) throw ParityError("coset reduction expects an even element");
  if (t.generators() != generators())
    throw DimensionError("parameter from a different Grassmann algebra");
  linalg::SparseRow vec;
  for (const auto& [m, c] : t.terms()) vec[even_index_.at(m)] = c;
  for (const auto& [pivot, row] : reducer_) {
    auto it = vec.find(pivot);
    if (it == vec.end()) continue;
    Rat c = it->second;
    for (const auto& [col, v] : row) {
      auto jt = vec.find(col);
      if (jt == vec.end()) {
        Rat nv = -c * v;
        if (nv != 0) vec.emplace(col, nv);
      } else {
        jt->second -= c * v;
        if (jt->second == 0) vec.erase(jt);
      }
    }
  }
  GrassmannElement::TermMap terms;
  for (const auto& [j, c] : vec) terms[even_masks_[j]] = c;
  return GrassmannElement::from_terms(generators(), std::move(terms));
}

bool AlphaContext::is_unit_class(const GrassmannElement& t) const {
  return equal(t, GrassmannElement::one(generators()));
}

std::string AlphaContext::class_key(const GrassmannElement& t) const {
  return internal_key(image(t));
}

}  // namespace superband
