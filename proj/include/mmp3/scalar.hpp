#pragma once
#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "mmp3/error.hpp"

namespace mmp3 {

using Rat = mpq_class;

// an explicit number field Q(gen), gen a root of the monic irreducible
// minpoly t^d + c[d-1]*t^{d-1} + ... + c[0].  `minpoly` stores c[0..d-1].
// irreducibility is certified by make_number_field (factor.hpp); the raw
// struct trusts its caller.  one field per session: mixing two distinct
// extensions in one computation is rejected, never silently merged.
struct NumberField {
  std::string gen;
  std::vector<Rat> minpoly;
  int degree() const { return static_cast<int>(minpoly.size()); }
};

using FieldPtr = std::shared_ptr<const NumberField>;  // nullptr = rationals

// element of Q or of the declared number field, represented as the residue
// polynomial in the generator with rational coefficients.  exact, canonical
// (mpq normalization), and deterministic.
class Scalar {
 public:
  Scalar() : c_(1, Rat(0)) {}
  explicit Scalar(const Rat& r, FieldPtr f = nullptr);
  Scalar(long n) : c_(1, Rat(n)) {}

  static Scalar zero(FieldPtr f = nullptr);
  static Scalar one(FieldPtr f = nullptr);
  static Scalar generator(FieldPtr f);

  const FieldPtr& field() const { return fld_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;     // lies in the prime field
  Rat rational_part() const;    // value when is_rational()

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // total order used only for canonical output and deterministic tie-breaks
  int cmp(const Scalar& o) const;

  // height = max of numerator/denominator magnitudes over all coordinates;
  // used by enumeration streams for deterministic ordering.
  mpz_class height() const;

  const std::vector<Rat>& coords() const { return c_; }

  // canonical text; `atomic` tells the caller whether the result needs
  // parentheses when multiplied into a monomial.
  std::string str(bool* atomic = nullptr) const;

 private:
  FieldPtr fld_;        // nullptr = Q
  std::vector<Rat> c_;  // size 1 over Q, size deg over Q(gen)

  static void align(Scalar& a, Scalar& b);  // lift rationals into a common field
  void reduce();                            // currently only asserts shape
};

}  // namespace mmp3
