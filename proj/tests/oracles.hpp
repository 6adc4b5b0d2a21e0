// Independent reference computations used only by the tests. Nothing here
// calls into the library's algorithms beyond plain data types.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "posring/laurent.hpp"
#include "posring/polynomial.hpp"
#include "posring/wreath.hpp"

namespace oracle {

using posring::BigInt;
using posring::BigRat;
using posring::IntPoly;
using posring::LaurentPoly;

inline IntPoly P(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

inline LaurentPoly L(std::initializer_list<long> c, long lowest) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return LaurentPoly::from_coeffs(std::move(v), lowest);
}

/// Schoolbook product on raw coefficient vectors.
inline std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// Value at a rational point via exponent-by-exponent summation.
inline BigRat value_at(const IntPoly& p, const BigRat& t) {
  BigRat acc = 0, power = 1;
  for (std::size_t k = 0; k < p.size(); ++k) {
    acc += BigRat(p[k]) * power;
    power *= t;
  }
  return acc;
}

/// Exponent -> coefficient map, zero coefficients dropped.
using Sparse = std::map<long, BigInt>;

inline Sparse sparse(const LaurentPoly& p) {
  Sparse s;
  for (std::size_t k = 0; k < p.body().size(); ++k) {
    if (p.body()[k] != 0) s[p.lowest() + static_cast<long>(k)] = p.body()[k];
  }
  return s;
}

inline void add_into(Sparse& s, const Sparse& t, long shift, const BigInt& scale = 1) {
  for (const auto& [e, c] : t) {
    BigInt& slot = s[e + shift];
    slot += c * scale;
    if (slot == 0) s.erase(e + shift);
  }
}

/// Upper-right entry of a word's product: sum_k H_k X^(sum of b after k).
inline Sparse word_u(const posring::GeneratorSet& g, const posring::Word& w) {
  Sparse u;
  long suffix = 0;
  for (std::size_t k = w.letters.size(); k-- > 0;) {
    const auto& l = w.letters[k];
    const auto& H = l.side == posring::Side::plus ? g.plus.at(l.index) : g.minus.at(l.index);
    add_into(u, sparse(H), suffix);
    suffix += l.side == posring::Side::plus ? 1 : -1;
  }
  return u;
}

/// Nonempty words of length <= max_len with product equal to the identity;
/// stops at the first. Only height-0 words can qualify, so odd lengths are skipped.
inline std::optional<posring::Word> find_identity_word(const posring::GeneratorSet& g, std::size_t max_len) {
  std::vector<posring::Letter> alphabet;
  for (std::size_t i = 0; i < g.plus.size(); ++i) alphabet.push_back({posring::Side::plus, i});
  for (std::size_t j = 0; j < g.minus.size(); ++j) alphabet.push_back({posring::Side::minus, j});
  if (alphabet.empty()) return std::nullopt;
  for (std::size_t len = 2; len <= max_len; len += 2) {
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      posring::Word w;
      long h = 0;
      for (auto k : idx) {
        w.letters.push_back(alphabet[k]);
        h += alphabet[k].side == posring::Side::plus ? 1 : -1;
      }
      if (h == 0 && word_u(g, w).empty()) return w;
      std::size_t k = len;
      while (k > 0 && idx[k - 1] + 1 == alphabet.size()) idx[--k] = 0;
      if (k == 0) break;
      ++idx[k - 1];
    }
  }
  return std::nullopt;
}

/// Signs of h(k / 1000) for k = 0..limit*1000, using scaled int64 values.
inline bool grid_has_uniform_point(const std::vector<std::vector<long>>& hs, long limit) {
  for (long k = 0; k <= limit * 1000; ++k) {
    bool nonneg = true, nonpos = true;
    for (const auto& h : hs) {
      // 1000^d * h(k/1000) = sum c_i k^i 1000^(d-i)
      __int128 acc = 0;
      const long d = static_cast<long>(h.size()) - 1;
      for (long i = d; i >= 0; --i) {
        __int128 term = h[static_cast<std::size_t>(i)];
        for (long r = 0; r < i; ++r) term *= k;
        for (long r = 0; r < d - i; ++r) term *= 1000;
        acc += term;
      }
      if (acc < 0) nonneg = false;
      if (acc > 0) nonpos = false;
    }
    if (nonneg || nonpos) return true;
  }
  return false;
}

inline IntPoly random_poly(std::mt19937_64& rng, int max_deg, long bound, bool allow_zero = false) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-bound, bound);
  while (true) {
    int d = deg(rng);
    std::vector<BigInt> c;
    for (int k = 0; k <= d; ++k) c.emplace_back(coef(rng));
    IntPoly p(std::move(c));
    if (allow_zero || !p.is_zero()) return p;
  }
}

}  // namespace oracle
