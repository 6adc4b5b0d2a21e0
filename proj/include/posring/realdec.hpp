#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "posring/polynomial.hpp"

namespace posring {

/// Sturm chain of a nonzero integer polynomial.
///
/// Internally each entry is stored as an integer polynomial that is a
/// positive multiple of the classical entry (polys[0] = p, polys[1] = p',
/// polys[k+1] = -rem(polys[k-1], polys[k])); `at(k)` recovers the classical
/// rational entry exactly. Sign variations only depend on the integer form.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);

  std::size_t size() const noexcept { return polys_.size(); }
  const IntPoly& base() const noexcept { return polys_.front(); }
  const std::vector<IntPoly>& scaled() const noexcept { return polys_; }

  /// Classical chain entry as a rational polynomial.
  RatPoly at(std::size_t k) const;

  /// Number of sign changes at t, zeros skipped.
  int variations(const BigRat& t) const;

 private:
  std::vector<IntPoly> polys_;
  std::vector<BigRat> scale_;
};

SturmChain sturm_chain(const IntPoly& p);

/// Distinct real roots of chain.base() in the open interval (a, b).
/// Throws Errc::endpoint_is_root if a or b is a root; Errc::invalid_input if a >= b.
int count_roots(const SturmChain& chain, const BigRat& a, const BigRat& b);

/// Distinct real roots in the half-open interval (a, b]; no restriction on endpoints.
int count_roots_half_open(const SturmChain& chain, const BigRat& a, const BigRat& b);

/// Cauchy bound 1 + max |a_i| / |a_lead|: every root has absolute value below it.
/// Constants (no roots) get 1.
BigRat cauchy_bound(const IntPoly& p);

/// One real root shared by the polynomials listed in `owners`.
///
/// Either an exact rational root (lo == hi) or an open interval (lo, hi) that
/// contains exactly one root of the squarefree part of each owner, with hi
/// never a root of any tracked polynomial.
struct IsolatingInterval {
  BigRat lo;
  BigRat hi;
  std::vector<std::size_t> owners;
  bool multiplicity_free = true;  // simple root of every owner

  bool is_exact() const { return lo == hi; }
  std::size_t poly_index() const { return owners.front(); }
  BigRat midpoint() const { return (lo + hi) / 2; }
};

/// All roots in [0, infinity) of the given polynomials, sorted, pairwise
/// disjoint, within [0, B] with B = 1 + max cauchy_bound. Shared roots are
/// reported once with every owner. Found by Descartes bisection on each
/// squarefree part, so no Sturm chain is built. Throws Errc::zero_polynomial.
std::vector<IsolatingInterval> isolate_nonneg_roots(std::span<const IntPoly> hs);

/// Exact sign of q at the root described by `root` of the polynomial `owner`.
int sign_at_root(const IntPoly& q, const IntPoly& owner, const IsolatingInterval& root);

/// Sample point of a sign vector.
using Sample = std::variant<BigRat, IsolatingInterval>;

struct SignVector {
  Sample sample;
  std::vector<int> signs;

  bool uniform_nonneg() const;
  bool uniform_nonpos() const;
  bool uniform() const { return uniform_nonneg() || uniform_nonpos(); }
  bool at_rational() const { return std::holds_alternative<BigRat>(sample); }
};

/// First point t >= 0 (scanning left to right) where all h_i(t) >= 0 or all
/// h_i(t) <= 0, or nothing if no such point exists. Throws Errc::zero_polynomial.
std::optional<SignVector> uniform_sign_exists(std::span<const IntPoly> hs);

/// Re-derives every sign of `v` from scratch against `hs`.
bool verify_sign_vector(std::span<const IntPoly> hs, const SignVector& v);

}  // namespace posring
