#include <algorithm>
#include <stdexcept>

#include "posring/wreath.hpp"

namespace posring {

namespace {

constexpr int kMaxScaleExponent = 100000;

bool positive_between(const IntPoly& p, std::size_t from) {
  for (std::size_t k = from; k < p.size(); ++k) {
    if (p[k] <= 0) return false;
  }
  return true;
}

IntPoly one_plus_x_pow(int m) {
  std::vector<BigInt> c(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) mpz_bin_uiui(c[static_cast<std::size_t>(k)].get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return IntPoly(std::move(c));
}

bool scale_ok(const IntPoly& uv, const IntPoly& yz, int m) {
  IntPoly s = one_plus_x_pow(m);
  IntPoly a = uv * s;
  IntPoly b = yz * s;
  std::size_t v0 = order_at_zero(b);
  return positive_between(a, 0) && positive_between(b, v0) && static_cast<std::size_t>(a.degree()) >= v0;
}

Letter plus(std::size_t i) { return {Side::plus, i}; }
Letter minus(std::size_t j) { return {Side::minus, j}; }

}  // namespace

SynthesisTrace synthesize_word(const GeneratorSet& gens, const CoverSubset& cover, const std::vector<IntPoly>& fs,
                               const SynthesisOptions& opts) {
  if (cover.pairs.empty() || fs.size() != cover.pairs.size()) {
    throw Error(Errc::invalid_witness, "synthesize_word: witness does not match the cover");
  }
  for (const auto& f : fs) {
    if (f.is_zero()) throw Error(Errc::invalid_witness, "synthesize_word: zero f_ij");
    for (const auto& c : f.coeffs()) {
      if (c < 0) throw Error(Errc::invalid_witness, "synthesize_word: negative coefficient");
    }
  }
  for (const auto& [i, j] : cover.pairs) {
    if (i >= gens.plus.size() || j >= gens.minus.size()) throw Error(Errc::bad_index, "cover pair out of range");
  }

  SynthesisTrace tr;
  const auto hij = build_hij(gens);
  bool all_zero = std::all_of(cover.pairs.begin(), cover.pairs.end(), [&](const IndexPair& p) { return hij.at(p).is_zero(); });
  if (all_zero) {
    tr.degenerate = true;
    tr.scaled = fs;
    for (const auto& [i, j] : cover.pairs) {
      tr.word.letters.push_back(plus(i));
      tr.word.letters.push_back(minus(j));
      tr.loops.push_back({{i, j}, 0});
    }
    return tr;
  }

  // (1) Common power of X.
  std::size_t shift = order_at_zero(fs[0]);
  for (const auto& f : fs) shift = std::min(shift, order_at_zero(f));
  tr.x_shift = static_cast<long>(shift);
  std::vector<IntPoly> base;
  for (const auto& f : fs) base.push_back(shift_down(f, shift));

  // (2) Pivots, smallest pair first.
  std::size_t u = cover.pairs.size(), y = 0;
  for (std::size_t k = 0; k < base.size(); ++k) {
    if (u == cover.pairs.size() && base[k][0] != 0) u = k;
    if (base[k].degree() > base[y].degree()) y = k;
  }
  tr.uv = cover.pairs[u];
  tr.yz = cover.pairs[y];

  // (3) Smallest m meeting the three conditions; each is monotone in m.
  int m = 0;
  while (!scale_ok(base[u], base[y], m)) {
    if (++m > kMaxScaleExponent) throw std::logic_error("synthesize_word: no scale exponent found");
  }
  if (opts.m) {
    if (*opts.m < m) throw Error(Errc::invalid_input, "synthesize_word: scale exponent below the minimum");
    m = *opts.m;
  }
  tr.m = m;
  IntPoly scale = one_plus_x_pow(m);
  for (const auto& f : base) tr.scaled.push_back(f * scale);

  const long a = tr.scaled[u].degree();
  const long D = tr.scaled[y].degree();

  // (4) Base word.
  for (long k = 0; k < a; ++k) tr.w0.letters.push_back(plus(tr.uv.first));
  for (long k = a; k < D; ++k) tr.w0.letters.push_back(plus(tr.yz.first));
  for (long k = a; k < D; ++k) tr.w0.letters.push_back(minus(tr.yz.second));
  for (long k = 0; k < a; ++k) tr.w0.letters.push_back(minus(tr.uv.second));

  // (5) Corrections.
  std::vector<IntPoly> hat = tr.scaled;
  {
    std::vector<BigInt> c(hat[u].coeffs());
    for (long k = 0; k < a; ++k) c[static_cast<std::size_t>(k)] -= 1;
    hat[u] = IntPoly(std::move(c));
    std::vector<BigInt> d(hat[y].coeffs());
    for (long k = a; k < D; ++k) d[static_cast<std::size_t>(k)] -= 1;
    hat[y] = IntPoly(std::move(d));
  }

  // (6) Loops after the last prefix of height k, which has length 2D - k.
  std::vector<std::vector<Letter>> at_anchor(static_cast<std::size_t>(2 * D + 1));
  for (long k = 0; k <= D; ++k) {
    for (std::size_t p = 0; p < cover.pairs.size(); ++p) {
      BigInt c = hat[p].coeff(static_cast<std::size_t>(k));
      if (c < 0) throw std::logic_error("synthesize_word: negative correction");
      if (!c.fits_ulong_p()) throw Error(Errc::too_large, "synthesize_word: loop count too large");
      for (unsigned long r = 0; r < c.get_ui(); ++r) {
        auto& slot = at_anchor[static_cast<std::size_t>(2 * D - k)];
        slot.push_back(plus(cover.pairs[p].first));
        slot.push_back(minus(cover.pairs[p].second));
        tr.loops.push_back({cover.pairs[p], k});
      }
    }
  }
  std::vector<Letter> w;
  for (std::size_t pos = 0; pos <= tr.w0.letters.size(); ++pos) {
    w.insert(w.end(), at_anchor[pos].begin(), at_anchor[pos].end());
    if (pos < tr.w0.letters.size()) w.push_back(tr.w0.letters[pos]);
  }

  // Emit w[0] followed by the rest reversed: reversing turns prefix heights
  // into exponents under (f, b)(g, c) = (g + f X^c, b + c), and moving the
  // leading plus letter to the front divides the product by X.
  tr.word.letters.push_back(w.front());
  tr.word.letters.insert(tr.word.letters.end(), w.rbegin(), w.rend() - 1);
  return tr;
}

Word synthesize_identity_word(const GeneratorSet& gens, const CoverSubset& cover, const std::vector<IntPoly>& fs,
                              const SynthesisOptions& opts) {
  std::vector<IntPoly> hs = cover_instance(gens, cover);
  if (fs.size() != hs.size() || !verify_witness(hs, fs)) {
    throw Error(Errc::invalid_witness, "synthesize_identity_word: witness does not verify");
  }
  SynthesisTrace tr = synthesize_word(gens, cover, fs, opts);
  if (!word_product(gens, tr.word).is_identity()) {
    throw std::logic_error("synthesize_identity_word: product is not the identity");
  }
  return tr.word;
}

}  // namespace posring
