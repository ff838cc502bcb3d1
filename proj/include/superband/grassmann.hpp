#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superband/errors.hpp"
#include "superband/rational.hpp"

namespace superband {

// A basis monomial of the algebra on N anticommuting generators is a subset
// of the generators, stored as a bit mask (bit i set = generator i+1 present).
using Mask = std::uint32_t;

constexpr int kMaxGenerators = 12;

enum class Parity { Even, Odd, Mixed };

// Sign of merging two disjoint ascending monomials: (-1)^inversions.
int merge_sign(Mask a, Mask b);

// Exact multivector over the rationals, kept in canonical form: no stored
// coefficient is zero and every mask uses only bits < n_generators.
class GrassmannElement {
 public:
  using TermMap = std::map<Mask, Rat>;

  GrassmannElement() : n_(0) {}
  explicit GrassmannElement(int n_generators);

  static GrassmannElement zero(int n_generators);
  static GrassmannElement scalar(int n_generators, const Rat& c);
  static GrassmannElement one(int n_generators);
  // theta_i, 1-based index.
  static GrassmannElement generator(int n_generators, int index);
  static GrassmannElement monomial(int n_generators, Mask m, const Rat& c);
  static GrassmannElement from_terms(int n_generators, TermMap terms);

  int generators() const { return n_; }
  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rat coeff(Mask m) const;

  Parity parity() const;
  bool is_even() const { return parity() == Parity::Even; }  // zero is Even
  bool is_odd() const { return parity() == Parity::Odd; }
  Rat body() const;
  GrassmannElement soul() const;

  GrassmannElement operator-() const;
  GrassmannElement operator+(const GrassmannElement& rhs) const;
  GrassmannElement operator-(const GrassmannElement& rhs) const;
  GrassmannElement operator*(const GrassmannElement& rhs) const;
  GrassmannElement operator*(const Rat& c) const;
  friend GrassmannElement operator*(const Rat& c, const GrassmannElement& x) {
    return x * c;
  }

  GrassmannElement pow(unsigned k) const;
  // Exact inverse via the finite geometric series in the nilpotent soul.
  // Requires body() != 0.
  GrassmannElement inverse() const;

  bool operator==(const GrassmannElement& rhs) const = default;

 private:
  void check_same_algebra(const GrassmannElement& rhs) const;
  void insert_term(Mask m, const Rat& c);

  int n_ = 0;
  TermMap t_;
};

// Ascending list of masks with even (resp. odd) popcount.
std::vector<Mask> even_masks(int n_generators);
std::vector<Mask> odd_masks(int n_generators);

// Compact unambiguous key of an element ("m12:3/2;m3:1;"), used for
// hashing and deterministic class keys. Not the display form.
std::string internal_key(const GrassmannElement& x);

enum class GenStyle { Ascii, Theta };

// Display form: sum of terms "c*g1.g2" (or theta-style "c*θ1.θ2"), the empty
// product written as a bare rational, unit coefficients folded into the sign.
// Examples: "0", "3 + 2*g1.g2", "1 - g1.g2", "-1/2*g3".
std::string to_string(const GrassmannElement& x, GenStyle style = GenStyle::Ascii);

struct AnnihilatorBasis {
  int n_generators = 0;
  std::vector<GrassmannElement> basis;  // spans {x in even sector : alpha*x = 0}
};

// Basis of the even-sector annihilator of a nonzero homogeneous odd alpha,
// via an exact rational kernel computation. Throws DomainError when alpha is
// zero (the annihilator would be the whole even sector) and ParityError when
// alpha is not homogeneous odd.
AnnihilatorBasis annihilator_even(const GrassmannElement& alpha);

// True iff alpha*(t - u) = 0. Preconditions: alpha odd nonzero, t and u even.
bool alpha_equal(const GrassmannElement& alpha, const GrassmannElement& t,
                 const GrassmannElement& u);

// A fixed nonzero odd alpha together with its precomputed annihilator and a
// reduction map picking one canonical representative per coset t + Ann alpha.
class AlphaContext {
 public:
  explicit AlphaContext(GrassmannElement alpha);

  int generators() const { return alpha_.generators(); }
  const GrassmannElement& alpha() const { return alpha_; }
  const AnnihilatorBasis& annihilator() const { return ann_; }

  GrassmannElement image(const GrassmannElement& t) const;  // alpha * t
  bool equal(const GrassmannElement& t, const GrassmannElement& u) const;
  // Unique representative of t + Ann alpha with zeros at the annihilator's
  // pivot coordinates. Requires t even.
  GrassmannElement reduce(const GrassmannElement& t) const;
  bool is_unit_class(const GrassmannElement& t) const;  // t = 1 + Ann alpha
  // Deterministic key identifying the coset of t (the key of alpha*t).
  std::string class_key(const GrassmannElement& t) const;

 private:
  GrassmannElement alpha_;
  AnnihilatorBasis ann_;
  std::vector<Mask> even_masks_;
  std::map<Mask, std::size_t> even_index_;
  // RREF rows spanning the annihilator coordinate space, keyed by pivot.
  std::vector<std::pair<std::size_t, std::map<std::size_t, Rat>>> reducer_;
};

}  // namespace superband
