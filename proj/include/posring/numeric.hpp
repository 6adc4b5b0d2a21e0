#pragma once

#include <gmpxx.h>

#include <string>

namespace posring {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline int sign(const BigInt& v) { return sgn(v); }
inline int sign(const BigRat& v) { return sgn(v); }

inline BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

/// a / b where b is known to divide a.
inline BigInt divexact(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRat& v) { return v.get_str(); }

}  // namespace posring
