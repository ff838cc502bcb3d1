#pragma once

#include <vector>

#include "superband/grassmann.hpp"

namespace superband {

// Square block-graded matrix over the Grassmann algebra, shape (p|q):
// entries in the p x p and q x q diagonal blocks are even (or zero), entries
// in the off-diagonal blocks are odd (or zero). Violations are
// construction-time errors.
class Supermatrix {
 public:
  Supermatrix(int even_dim, int odd_dim, int n_generators);  // zero matrix
  static Supermatrix identity(int even_dim, int odd_dim, int n_generators);
  static Supermatrix from_rows(int even_dim, int odd_dim,
                               std::vector<std::vector<GrassmannElement>> rows);

  int even_dim() const { return p_; }
  int odd_dim() const { return q_; }
  int dim() const { return p_ + q_; }
  int generators() const { return n_; }

  const GrassmannElement& at(int i, int j) const;
  void set(int i, int j, GrassmannElement v);  // grading-checked

  bool operator==(const Supermatrix& rhs) const = default;

  Supermatrix operator*(const Supermatrix& rhs) const;

  // str M = a - b. Shape (1|1) only.
  GrassmannElement supertrace() const;

  // Ber M = det(A - B D^-1 C) * det(D)^-1; requires the lower-right block to
  // have an invertible body (throws DomainError "non-invertible body").
  // Reduces to a/b + beta*alpha/b^2 at shape (1|1).
  GrassmannElement berezinian() const;

  Supermatrix reduce_even() const;  // zero out beta; shape (1|1)
  Supermatrix reduce_odd() const;   // zero out a;    shape (1|1)
  bool is_odd_reduced() const;      // shape (1|1) and a = 0
  bool is_odd_closed() const;       // odd-reduced and alpha*beta = 0

  // Closed form of M^n for an odd-reduced matrix:
  //   b^(n-2) * [[alpha*beta, alpha*b], [beta*b, b^2 - (n-1)*alpha*beta]]
  // for n >= 2; n = 1 returns the matrix itself.
  Supermatrix odd_power_closed_form(unsigned n) const;

  // Expected parity of position (i, j); entries must be zero or homogeneous
  // of this parity.
  Parity slot_parity(int i, int j) const;

 private:
  void require_shape_1_1(const char* op) const;
  void check_entry(int i, int j, const GrassmannElement& v) const;

  int p_ = 0, q_ = 0, n_ = 0;
  std::vector<GrassmannElement> e_;  // row-major, (p+q)^2 entries
};

// Determinant of a square matrix of even (commuting) entries.
GrassmannElement even_det(const std::vector<std::vector<GrassmannElement>>& m);

// Inverse of a square matrix of even entries whose body-matrix is invertible;
// throws DomainError("non-invertible body") otherwise.
std::vector<std::vector<GrassmannElement>> even_inverse(
    std::vector<std::vector<GrassmannElement>> m, int n_generators);

}  // namespace superband
