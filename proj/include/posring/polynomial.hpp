#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "posring/errors.hpp"
#include "posring/numeric.hpp"

namespace posring {

/// Dense univariate polynomial with coefficients stored in ascending degree.
///
/// The representation is canonical: the zero polynomial has no coefficients
/// and every other polynomial has a nonzero leading coefficient, so value
/// equality coincides with representation equality.
template <class Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }

  static Polynomial monomial(const Scalar& c, std::size_t k) {
    std::vector<Scalar> v(k + 1, Scalar(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }

  static Polynomial x() { return monomial(Scalar(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  /// Degree, with -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  const Scalar& operator[](std::size_t k) const { return coeffs_[k]; }

  Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
  const Scalar& leading() const { return coeffs_.back(); }
  Scalar constant_term() const { return coeff(0); }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
  }

  Polynomial& operator*=(const Scalar& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Scalar& s) { return lhs *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial rhs) { return rhs *= s; }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Scalar> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<BigRat>;

template <class Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  if (p.degree() < 1) return {};
  std::vector<Scalar> out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p[k] * Scalar(static_cast<unsigned long>(k));
  return Polynomial<Scalar>(std::move(out));
}

/// p * X^k.
template <class Scalar>
Polynomial<Scalar> shift_up(const Polynomial<Scalar>& p, std::size_t k) {
  if (p.is_zero() || k == 0) return p;
  std::vector<Scalar> out(k, Scalar(0));
  out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
  return Polynomial<Scalar>(std::move(out));
}

/// p / X^k; the k lowest coefficients must vanish.
template <class Scalar>
Polynomial<Scalar> shift_down(const Polynomial<Scalar>& p, std::size_t k) {
  if (k == 0 || p.is_zero()) return p;
  for (std::size_t i = 0; i < k && i < p.size(); ++i) {
    if (p[i] != 0) throw Error(Errc::not_divisible, "shift_down: polynomial not divisible by X^k");
  }
  if (k >= p.size()) return {};
  return Polynomial<Scalar>(std::vector<Scalar>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(k), p.coeffs().end()));
}

/// Largest k such that X^k divides p.
template <class Scalar>
std::size_t order_at_zero(const Polynomial<Scalar>& p) {
  if (p.is_zero()) throw Error(Errc::zero_input, "order_at_zero of the zero polynomial");
  std::size_t k = 0;
  while (p[k] == 0) ++k;
  return k;
}

/// Horner evaluation in the coefficient ring.
template <class Scalar>
Scalar evaluate(const Polynomial<Scalar>& p, const Scalar& t) {
  Scalar acc(0);
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * t + p[k];
  return acc;
}

RatPoly to_rational(const IntPoly& p);

/// Exact value of p at a rational point.
BigRat eval_at_rational(const IntPoly& p, const BigRat& t);

/// Sign of p(t) computed without fractions: sign of sum c_k num^k den^(d-k).
int sign_at(const IntPoly& p, const BigRat& t);

/// Human-readable rendering, highest degree first, e.g. "X^2 - 3*X + 2".
std::string to_string(const IntPoly& p, const std::string& var = "X");
std::string to_string(const RatPoly& p, const std::string& var = "X");

std::ostream& operator<<(std::ostream& os, const IntPoly& p);
std::ostream& operator<<(std::ostream& os, const RatPoly& p);

}  // namespace posring
