#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <string_view>

#include "elemop/errors.hpp"

namespace elemop {

/// A Gaussian rational p/q + (r/s)i.
///
/// Both parts are GMP rationals kept in canonical (reduced, positive
/// denominator) form, so equality is structural and no operation rounds.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(int v) : re_(v) {}  // NOLINT: Eigen builds literals from int
  GaussRational(long v) : re_(v) {}  // NOLINT
  // gmpxx does not reduce p/q built from two integers; we always do.
  GaussRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {Canonical{}, re_, -im_}; }
  /// |z|^2, always a nonnegative rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussRational inverse() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator-(const GaussRational& z) { return {Canonical{}, -z.re_, -z.im_}; }
  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b);
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  /// Human-readable form: "3", "-1/2", "1/3+2i", "-i".
  std::string str() const;

 private:
  // Parts already in lowest terms (results of mpq arithmetic).
  struct Canonical {};
  GaussRational(Canonical, mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  mpq_class re_{0};
  mpq_class im_{0};
};

inline bool is_zero(const GaussRational& z) { return z.is_zero(); }

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

/// Parses a rational literal "p" or "p/q" (optional leading '-').
/// Decimal points, exponents, whitespace and zero denominators are rejected.
mpq_class parse_rational(std::string_view text);

/// Canonical reduced-fraction string ("3", "-7/2").
std::string rational_string(const mpq_class& q);

}  // namespace elemop

namespace Eigen {

template <>
struct NumTraits<elemop::GaussRational> : GenericNumTraits<elemop::GaussRational> {
  using Real = elemop::GaussRational;
  using NonInteger = elemop::GaussRational;
  using Nested = elemop::GaussRational;
  using Literal = elemop::GaussRational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32
  };

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
