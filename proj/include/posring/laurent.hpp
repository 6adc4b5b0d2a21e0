#pragma once

#include <utility>
#include <vector>

#include "posring/polynomial.hpp"

namespace posring {

/// Integer Laurent polynomial X^lowest * body.
///
/// Kept tight: a nonzero body has nonzero constant term, and zero is stored
/// as (lowest = 0, body = 0).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(IntPoly body, long lowest = 0) : lowest_(lowest), body_(std::move(body)) { tighten(); }

  /// Builds sum_k coeffs[k] X^(lowest + k).
  static LaurentPoly from_coeffs(std::vector<BigInt> coeffs, long lowest) {
    return LaurentPoly(IntPoly(std::move(coeffs)), lowest);
  }

  static LaurentPoly monomial(const BigInt& c, long exponent) { return LaurentPoly(IntPoly::constant(c), exponent); }

  bool is_zero() const noexcept { return body_.is_zero(); }
  long lowest() const noexcept { return lowest_; }
  /// Highest exponent; meaningless for zero.
  long highest() const noexcept { return lowest_ + body_.degree(); }
  const IntPoly& body() const noexcept { return body_; }

  BigInt coeff(long exponent) const {
    if (exponent < lowest_) return BigInt(0);
    return body_.coeff(static_cast<std::size_t>(exponent - lowest_));
  }

  /// this * X^k.
  LaurentPoly shifted(long k) const { return is_zero() ? *this : LaurentPoly(body_, lowest_ + k); }

  LaurentPoly operator-() const { return LaurentPoly(-body_, lowest_); }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long low = std::min(a.lowest_, b.lowest_);
    return LaurentPoly(shift_up(a.body_, static_cast<std::size_t>(a.lowest_ - low)) +
                           shift_up(b.body_, static_cast<std::size_t>(b.lowest_ - low)),
                       low);
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    return LaurentPoly(a.body_ * b.body_, a.lowest_ + b.lowest_);
  }
  LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lowest_ == b.lowest_ && a.body_ == b.body_;
  }

 private:
  void tighten() {
    if (body_.is_zero()) {
      lowest_ = 0;
      return;
    }
    std::size_t k = order_at_zero(body_);
    if (k > 0) {
      body_ = shift_down(body_, k);
      lowest_ += static_cast<long>(k);
    }
  }

  long lowest_ = 0;
  IntPoly body_;
};

/// Clears negative exponents by a common power of X: returns (h_i X^shift) with
/// shift = max(0, -min lowest). Zero entries map to zero polynomials.
std::pair<std::vector<IntPoly>, long> laurent_normalize(const std::vector<LaurentPoly>& hs);

/// The Laurent polynomial as an ordinary polynomial; requires lowest >= 0.
IntPoly to_polynomial(const LaurentPoly& p);

std::string to_string(const LaurentPoly& p, const std::string& var = "X");

}  // namespace posring
