#include "superband/supermatrix.hpp"

#include <utility>

namespace superband {

Supermatrix::Supermatrix(int even_dim, int odd_dim, int n_generators)
    : p_(even_dim), q_(odd_dim), n_(n_generators) {
  if (p_ < 0 || q_ < 0 || p_ + q_ <= 0)
    throw DimensionError("invalid supermatrix shape");
  e_.assign(static_cast<std::size_t>(dim()) * dim(), GrassmannElement(n_));
}

Supermatrix Supermatrix::identity(int even_dim, int odd_dim, int n_generators) {
  Supermatrix m(even_dim, odd_dim, n_generators);
  for (int i = 0; i < m.dim(); ++i)
    m.e_[static_cast<std::size_t>(i) * m.dim() + i] =
        GrassmannElement::one(n_generators);
  return m;
}

Supermatrix Supermatrix::from_rows(
    int even_dim, int odd_dim, std::vector<std::vector<GrassmannElement>> rows) {
  if (rows.empty() || static_cast<int>(rows.size()) != even_dim + odd_dim)
    throw DimensionError("row count does not match shape");
  int n = rows[0].empty() ? 0 : rows[0][0].generators();
  Supermatrix m(even_dim, odd_dim, n);
  for (int i = 0; i < m.dim(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.dim())
      throw DimensionError("column count does not match shape");
    for (int j = 0; j < m.dim(); ++j) m.set(i, j, std::move(rows[i][j]));
  }
  return m;
}

const GrassmannElement& Supermatrix::at(int i, int j) const {
  return e_[static_cast<std::size_t>(i) * dim() + j];
}

Parity Supermatrix::slot_parity(int i, int j) const {
  return ((i < p_) == (j < p_)) ? Parity::Even : Parity::Odd;
}

void Supermatrix::check_entry(int i, int j, const GrassmannElement& v) const {
  if (v.generators() != n_)
    throw DimensionError("entry from a different Grassmann algebra");
  if (v.is_zero()) return;
  if (v.parity() != slot_parity(i, j))
    throw GradingError("entry parity violates the block grading");
}

void Supermatrix::set(int i, int j, GrassmannElement v) {
  check_entry(i, j, v);
  e_[static_cast<std::size_t>(i) * dim() + j] = std::move(v);
}

Supermatrix Supermatrix::operator*(const Supermatrix& rhs) const {
  if (p_ != rhs.p_ || q_ != rhs.q_)
    throw DimensionError("supermatrix shape mismatch");
  if (n_ != rhs.n_)
    throw DimensionError("supermatrices over different Grassmann algebras");
  Supermatrix out(p_, q_, n_);
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      GrassmannElement acc(n_);
      for (int k = 0; k < dim(); ++k) acc = acc + at(i, k) * rhs.at(k, j);
      out.e_[static_cast<std::size_t>(i) * dim() + j] = std::move(acc);
    }
  }
  return out;
}

void Supermatrix::require_shape_1_1(const char* op) const {
  if (p_ != 1 || q_ != 1)
    throw DimensionError(std::string(op) + " requires shape (1|1)");
}

GrassmannElement Supermatrix::supertrace() const {
  require_shape_1_1("supertrace");
  return at(0, 0) - at(1, 1);
}

GrassmannElement even_det(const std::vector<std::vector<GrassmannElement>>& m) {
  const std::size_t k = m.size();
  if (k == 0) throw DimensionError("determinant of an empty matrix");
  const int n = m[0][0].generators();
  // Laplace expansion along the first remaining row; entries commute.
  std::vector<int> cols(k);
  for (std::size_t j = 0; j < k; ++j) cols[j] = static_cast<int>(j);
  struct Rec {
    const std::vector<std::vector<GrassmannElement>>& m;
    int n;
    GrassmannElement run(std::size_t row, std::vector<int>& cols) {
      if (cols.size() == 1) return m[row][cols[0]];
      GrassmannElement acc(n);
      for (std::size_t j = 0; j < cols.size(); ++j) {
        int c = cols[j];
        if (m[row][c].is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t jj = 0; jj < cols.size(); ++jj)
          if (jj != j) rest.push_back(cols[jj]);
        GrassmannElement sub = run(row + 1, rest);
        GrassmannElement term = m[row][c] * sub;
        acc = (j % 2 == 0) ? acc + term : acc - term;
      }
      return acc;
    }
  } rec{m, n};
  return rec.run(0, cols);
}

std::vector<std::vector<GrassmannElement>> even_inverse(
    std::vector<std::vector<GrassmannElement>> m, int n_generators) {
  const std::size_t k = m.size();
  std::vector<std::vector<GrassmannElement>> inv(
      k, std::vector<GrassmannElement>(k, GrassmannElement(n_generators)));
  for (std::size_t i = 0; i < k; ++i)
    inv[i][i] = GrassmannElement::one(n_generators);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = k;
    for (std::size_t r = col; r < k; ++r) {
      if (m[r][col].body() != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == k) throw DomainError("non-invertible body");
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    GrassmannElement scale = m[col][col].inverse();
    for (std::size_t j = 0; j < k; ++j) {
      m[col][j] = m[col][j] * scale;
      inv[col][j] = inv[col][j] * scale;
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      GrassmannElement f = m[r][col];
      for (std::size_t j = 0; j < k; ++j) {
        m[r][j] = m[r][j] - f * m[col][j];
        inv[r][j] = inv[r][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

GrassmannElement Supermatrix::berezinian() const {
  if (q_ == 0) throw DimensionError("Berezinian requires a nonempty odd block");
  // blocks: A (p x p), B (p x q), C (q x p), D (q x q)
  std::vector<std::vector<GrassmannElement>> d(
      q_, std::vector<GrassmannElement>(q_, GrassmannElement(n_)));
  for (int i = 0; i < q_; ++i)
    for (int j = 0; j < q_; ++j) d[i][j] = at(p_ + i, p_ + j);
  auto dinv = even_inverse(d, n_);

  if (p_ == 0) return even_det(dinv);

  std::vector<std::vector<GrassmannElement>> schur(
      p_, std::vector<GrassmannElement>(p_, GrassmannElement(n_)));
  for (int i = 0; i < p_; ++i) {
    for (int j = 0; j < p_; ++j) {
      GrassmannElement acc = at(i, j);
      for (int r = 0; r < q_; ++r) {
        for (int s = 0; s < q_; ++s) {
          acc = acc - at(i, p_ + r) * dinv[r][s] * at(p_ + s, j);
        }
      }
      schur[i][j] = std::move(acc);
    }
  }
  return even_det(schur) * even_det(d).inverse();
}

Supermatrix Supermatrix::reduce_even() const {
  require_shape_1_1("even reduction");
  Supermatrix m = *this;
  m.e_[2] = GrassmannElement(n_);  // beta
  return m;
}

Supermatrix Supermatrix::reduce_odd() const {
  require_shape_1_1("odd reduction");
  Supermatrix m = *this;
  m.e_[0] = GrassmannElement(n_);  // a
  return m;
}

bool Supermatrix::is_odd_reduced() const {
  return p_ == 1 && q_ == 1 && at(0, 0).is_zero();
}

bool Supermatrix::is_odd_closed() const {
  require_shape_1_1("odd closure test");
  if (!is_odd_reduced()) return false;
  return (at(0, 1) * at(1, 0)).is_zero();
}

Supermatrix Supermatrix::odd_power_closed_form(unsigned n) const {
  if (!is_odd_reduced())
    throw DomainError("closed-form powers require an odd-reduced matrix");
  if (n == 0) throw DomainError("power must be >= 1");
  if (n == 1) return *this;
  const GrassmannElement& alpha = at(0, 1);
  const GrassmannElement& beta = at(1, 0);
  const GrassmannElement& b = at(1, 1);
  GrassmannElement bp = b.pow(n - 2);
  GrassmannElement ab = alpha * beta;
  Supermatrix m(1, 1, n_);
  m.set(0, 0, bp * ab);
  m.set(0, 1, bp * (alpha * b));
  m.set(1, 0, bp * (beta * b));
  m.set(1, 1, bp * (b * b - Rat(static_cast<long>(n) - 1) * ab));
  return m;
}

}  // namespace superband
