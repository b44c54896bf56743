#pragma once

#include <string>
#include <utility>
#include <vector>

#include "elemop/exact/linalg.hpp"

namespace elemop {

namespace detail {
template <typename T>
bool scalar_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial, coefficients lowest degree first. The zero
/// polynomial is the empty list; otherwise the leading coefficient is nonzero.
template <ExactField T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// x^k with unit coefficient.
  static Polynomial monomial(int k) {
    std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
    c.back() = T(1);
    return Polynomial(std::move(c));
  }

  const std::vector<T>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const T& leading() const { return coeffs_.back(); }
  T coefficient(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : T(0);
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> d(coeffs_.size() - 1, T(0));
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = T(static_cast<long>(k)) * coeffs_[k];
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    std::vector<T> c = coeffs_;
    const T lead = c.back();
    for (auto& x : c) x = x / lead;
    return Polynomial(std::move(c));
  }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] - b.coeffs_[i];
    return Polynomial(std::move(c));
  }

  /// Euclidean division; returns (quotient, remainder).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<T> rem = a.coeffs_;
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<T> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), T(0));
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const T q = rem[static_cast<std::size_t>(k + b.degree())] / b.leading();
      quot[static_cast<std::size_t>(k)] = q;
      if (detail::scalar_is_zero(q)) continue;
      for (int j = 0; j <= b.degree(); ++j) {
        auto& r = rem[static_cast<std::size_t>(k + j)];
        r = r - q * b.coeffs_[static_cast<std::size_t>(j)];
      }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const T& c = coeffs_[static_cast<std::size_t>(k)];
      if (detail::scalar_is_zero(c)) continue;
      if (!out.empty()) out += " + ";
      const bool unit = c == T(1) && k > 0;
      if (!unit) out += (k > 0 ? "(" + c.str() + ")" : c.str());
      if (k > 0) out += var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::scalar_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/// Monic greatest common divisor.
template <ExactField T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// det(lambda I - m) by the Faddeev-LeVerrier recurrence; every division is
/// by an integer k, which is exact over a field of characteristic zero.
template <ExactField T>
Polynomial<T> char_poly(const MatrixX<T>& m) {
  if (m.rows() != m.cols()) throw ShapeError("char_poly: matrix is not square");
  const Index n = m.rows();
  if (n == 0) throw ShapeError("char_poly: empty matrix");
  std::vector<T> c(static_cast<std::size_t>(n) + 1, T(0));
  c[static_cast<std::size_t>(n)] = T(1);
  MatrixX<T> mk = zero_matrix<T>(n, n);
  for (Index k = 1; k <= n; ++k) {
    mk = (m * mk).eval();
    for (Index i = 0; i < n; ++i) mk(i, i) = mk(i, i) + c[static_cast<std::size_t>(n - k + 1)];
    const T t = trace_of_product(m, mk);
    c[static_cast<std::size_t>(n - k)] = -t / T(static_cast<long>(k));
  }
  return Polynomial<T>(std::move(c));
}

/// Number of distinct complex roots: deg p - deg gcd(p, p').
template <ExactField T>
int distinct_eigenvalue_count(const Polynomial<T>& p) {
  if (p.is_zero()) throw DomainError("distinct_eigenvalue_count: zero polynomial");
  return p.degree() - gcd(p, p.derivative()).degree();
}

/// True iff the polynomial is exactly lambda^d with d = its degree.
template <ExactField T>
bool is_pure_power(const Polynomial<T>& p) {
  if (p.is_zero() || !(p.leading() == T(1))) return false;
  for (int k = 0; k < p.degree(); ++k) {
    if (!is_zero(p.coefficient(k))) return false;
  }
  return true;
}

}  // namespace elemop
