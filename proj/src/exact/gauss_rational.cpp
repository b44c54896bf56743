#include "elemop/exact/gauss_rational.hpp"

#include <cctype>
#include <ostream>

namespace elemop {

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (is_real()) return GaussRational(mpq_class(1) / re_);
  mpq_class n = norm();
  return {Canonical{}, re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  if (!o.is_real()) im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  if (!o.is_real()) im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  *this = *this * o;
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (!is_real()) im_ /= o.re_;
    return *this;
  }
  *this = *this * o.inverse();
  return *this;
}

GaussRational operator*(const GaussRational& a, const GaussRational& b) {
  // Almost every value in practice is real; skip the cross terms then.
  if (a.is_real() && b.is_real()) return {GaussRational::Canonical{}, a.re_ * b.re_, mpq_class(0)};
  if (a.is_real()) return {GaussRational::Canonical{}, a.re_ * b.re_, a.re_ * b.im_};
  if (b.is_real()) return {GaussRational::Canonical{}, a.re_ * b.re_, a.im_ * b.re_};
  return {GaussRational::Canonical{}, a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

std::string GaussRational::str() const {
  if (is_real()) return rational_string(re_);
  std::string im_part;
  if (im_ == 1) {
    im_part = "i";
  } else if (im_ == -1) {
    im_part = "-i";
  } else {
    im_part = rational_string(im_) + "i";
  }
  if (sgn(re_) == 0) return im_part;
  if (im_part.front() != '-') im_part.insert(im_part.begin(), '+');
  return rational_string(re_) + im_part;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.str(); }

std::string rational_string(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return c.get_str(10);
}

mpq_class parse_rational(std::string_view text) {
  auto fail = [&](const char* why) -> ParseError {
    return ParseError("invalid rational \"" + std::string(text) + "\": " + why);
  };
  if (text.empty()) throw fail("empty");
  std::size_t pos = 0;
  if (text[0] == '-') pos = 1;
  std::size_t slash = text.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
  };
  if (text.find_first_of(".eE") != std::string_view::npos) throw fail("decimal literals are not exact");
  if (slash == std::string_view::npos) {
    if (!digits(pos, text.size())) throw fail("expected p or p/q");
  } else {
    if (!digits(pos, slash) || !digits(slash + 1, text.size())) throw fail("expected p or p/q");
  }
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) throw fail("unparsable");
  if (sgn(q.get_den()) == 0) throw fail("zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace elemop
