#pragma once

#include <span>
#include <utility>
#include <vector>

#include "posring/polynomial.hpp"

namespace posring {

/// Non-negative gcd of the coefficients; zero for the zero polynomial.
BigInt content(const IntPoly& p);

/// p divided by its (positive) content; keeps the sign of p.
IntPoly primitive_part(const IntPoly& p);

/// Primitive associate with positive leading coefficient.
IntPoly canonical_associate(const IntPoly& p);

/// Quotient and remainder over a field.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// r with |lc(b)|^(deg a - deg b + 1) * a = q * b + r and deg r < deg b.
/// Using the absolute value keeps r a positive multiple of rem(a, b).
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// p / q in Z[X]; throws Errc::not_divisible if q does not divide p.
IntPoly exact_div(const IntPoly& p, const IntPoly& q);

/// Subresultant remainder sequence with Sturm signs.
///
/// polys[0] = a, polys[1] = b and polys[k+1] = -prem(polys[k-1], polys[k]) /
/// divisors[k+1], where prem is pseudo_remainder above. Every entry is a
/// positive multiple of the classical negated-remainder sequence, and the
/// coefficients stay bounded by subresultant determinants. The sequence ends
/// with the last nonzero entry (an associate of gcd(a, b)).
struct RemainderSequence {
  std::vector<IntPoly> polys;
  std::vector<BigInt> divisors;  // divisors[0], divisors[1] are 1
};

RemainderSequence subresultant_sequence(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// gcd of a list; throws Errc::all_zero when every entry is zero.
IntPoly gcd_many(std::span<const IntPoly> hs);

/// p / gcd(p, p'), as a canonical associate. Throws Errc::zero_input for p = 0.
IntPoly squarefree_part(const IntPoly& p);

/// Cheap certificate of coprimality: true means gcd(a, b) is constant.
/// False is inconclusive.
bool coprime_modular(const IntPoly& a, const IntPoly& b);

}  // namespace posring
