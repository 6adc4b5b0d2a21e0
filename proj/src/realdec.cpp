#include "posring/realdec.hpp"

#include <algorithm>
#include <map>

#include "posring/gcd.hpp"

namespace posring {

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) throw Error(Errc::zero_input, "sturm_chain of the zero polynomial");
  RemainderSequence seq = subresultant_sequence(p, derivative(p));
  polys_ = std::move(seq.polys);
  scale_.assign(polys_.size(), BigRat(1));
  for (std::size_t k = 2; k < polys_.size(); ++k) {
    const IntPoly& prev = polys_[k - 2];
    const IntPoly& cur = polys_[k - 1];
    unsigned long e = static_cast<unsigned long>(prev.degree() - cur.degree() + 1);
    BigInt lead_pow = pow(abs(cur.leading()), e);
    scale_[k] = scale_[k - 2] * make_rat(seq.divisors[k], lead_pow);
  }
}

RatPoly SturmChain::at(std::size_t k) const { return to_rational(polys_.at(k)) * scale_.at(k); }

int SturmChain::variations(const BigRat& t) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : polys_) {
    int s = sign_at(p, t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

SturmChain sturm_chain(const IntPoly& p) { return SturmChain(p); }

int count_roots(const SturmChain& chain, const BigRat& a, const BigRat& b) {
  if (!(a < b)) throw Error(Errc::invalid_input, "count_roots: need a < b");
  if (sign_at(chain.base(), a) == 0 || sign_at(chain.base(), b) == 0) {
    throw Error(Errc::endpoint_is_root, "count_roots: endpoint is a root");
  }
  return chain.variations(a) - chain.variations(b);
}

int count_roots_half_open(const SturmChain& chain, const BigRat& a, const BigRat& b) {
  return chain.variations(a) - chain.variations(b);
}

BigRat cauchy_bound(const IntPoly& p) {
  if (p.degree() < 1) return BigRat(1);
  BigInt m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    BigInt a = abs(p[static_cast<std::size_t>(k)]);
    if (a > m) m = a;
  }
  return BigRat(1) + make_rat(m, abs(p.leading()));
}

bool SignVector::uniform_nonneg() const {
  return std::none_of(signs.begin(), signs.end(), [](int s) { return s < 0; });
}

bool SignVector::uniform_nonpos() const {
  return std::none_of(signs.begin(), signs.end(), [](int s) { return s > 0; });
}

namespace {

void add_owners(IsolatingInterval& into, const IsolatingInterval& from) {
  for (std::size_t o : from.owners) {
    if (std::find(into.owners.begin(), into.owners.end(), o) == into.owners.end()) into.owners.push_back(o);
  }
  std::sort(into.owners.begin(), into.owners.end());
}

// Sign of a squarefree s just left of t (just right of t when `right_of`).
int side_sign(const IntPoly& s, const BigRat& t, bool right_of) {
  int v = sign_at(s, t);
  if (v != 0) return v;
  int d = sign_at(derivative(s), t);
  return right_of ? d : -d;
}

// Whether a squarefree g with at most one root in (lo, hi) has one there.
bool root_between(const IntPoly& g, const BigRat& lo, const BigRat& hi) {
  return side_sign(g, lo, true) != side_sign(g, hi, false);
}

// e with every complex root of p below 2^e in absolute value:
// |z| <= 2 max_k |a_(d-k) / a_d|^(1/k).
unsigned long root_exponent(const IntPoly& p) {
  const std::size_t d = p.size() - 1;
  const long lead_bits = static_cast<long>(mpz_sizeinbase(p.leading().get_mpz_t(), 2));
  long best = 0;
  for (std::size_t k = 1; k <= d; ++k) {
    const BigInt& a = p[d - k];
    if (a == 0) continue;
    long excess = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) - lead_bits + 1;
    if (excess <= 0) continue;
    long kk = static_cast<long>(k);
    best = std::max(best, (excess + kk - 1) / kk);
  }
  return static_cast<unsigned long>(best + 1);
}

using Coeffs = std::vector<BigInt>;

void strip_low_zeros(Coeffs& c) {
  std::size_t k = 0;
  while (k + 1 < c.size() && c[k] == 0) ++k;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
}

void drop_common_twos(Coeffs& c) {
  mp_bitcnt_t low = ~mp_bitcnt_t(0);
  for (const auto& v : c) {
    if (v != 0) low = std::min(low, mpz_scan1(v.get_mpz_t(), 0));
  }
  if (low == 0 || low == ~mp_bitcnt_t(0)) return;
  for (auto& v : c) mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), low);
}

// c(x) <- c(x + 1)
void taylor_shift_one(Coeffs& c) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) c[j] += c[j + 1];
  }
}

// Descartes bound for roots in (0, 1): variations of (x+1)^d c(1/(x+1)).
int descartes_unit(const Coeffs& c) {
  Coeffs t(c.rbegin(), c.rend());
  taylor_shift_one(t);
  int changes = 0, last = 0;
  for (const auto& v : t) {
    int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Caches squarefree parts and pairwise gcds for one root scan.
class RootContext {
 public:
  explicit RootContext(std::span<const IntPoly> hs) : hs_(hs.begin(), hs.end()) {
    bound_ = BigRat(1);
    for (std::size_t i = 0; i < hs_.size(); ++i) {
      if (hs_[i].is_zero()) throw Error(Errc::zero_polynomial, "root isolation of the zero polynomial");
      sqf_.push_back(squarefree_part(hs_[i]));
      BigRat b = cauchy_bound(hs_[i]);
      if (b > bound_) bound_ = b;
    }
    bound_ += 1;
  }

  const BigRat& bound() const { return bound_; }
  const IntPoly& sqf(std::size_t i) const { return sqf_[i]; }

  const IntPoly& pair_gcd(std::size_t i, std::size_t j) {
    auto key = std::minmax(i, j);
    auto it = gcds_.find(key);
    if (it == gcds_.end()) it = gcds_.emplace(key, gcd(sqf_[i], sqf_[j])).first;
    return it->second;
  }

  /// Halves an open interval around the root of its representative owner.
  void refine(IsolatingInterval& iv) {
    const IntPoly& s = sqf_[iv.poly_index()];
    BigRat mid = iv.midpoint();
    int sm = sign_at(s, mid);
    if (sm == 0) {
      iv.lo = mid;
      iv.hi = mid;
    } else if (sm != side_sign(s, iv.hi, false)) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }

  /// Moves one endpoint of an open interval toward its root, onto a point
  /// that is not a root of any tracked polynomial (or lands on the root).
  void pull_in(IsolatingInterval& iv, bool low_end) {
    const IntPoly& s = sqf_[iv.poly_index()];
    const BigRat end = low_end ? iv.lo : iv.hi;
    const int outer = side_sign(s, end, low_end);
    BigRat step = (iv.hi - iv.lo) / 2;
    while (true) {
      BigRat t = low_end ? BigRat(end + step) : BigRat(end - step);
      int st = sign_at(s, t);
      if (st == 0) {
        iv.lo = t;
        iv.hi = t;
        return;
      }
      if (st == outer) {
        if (!touches_root(t)) {
          (low_end ? iv.lo : iv.hi) = t;
          return;
        }
      } else if (!touches_root(t)) {
        (low_end ? iv.hi : iv.lo) = t;
      }
      step /= 2;
    }
  }

  std::vector<IsolatingInterval> isolate() {
    std::vector<IsolatingInterval> all;
    for (std::size_t i = 0; i < hs_.size(); ++i) isolate_one(i, all);
    merge(all);
    for (auto& iv : all) {
      if (!iv.is_exact() && touches_root(iv.hi)) pull_in(iv, false);
      iv.multiplicity_free = simple_for_all_owners(iv);
    }
    return all;
  }

 private:
  bool touches_root(const BigRat& t) const {
    return std::any_of(sqf_.begin(), sqf_.end(), [&](const IntPoly& s) { return sign_at(s, t) == 0; });
  }

  // Bisection of (0, B] in the scaled variable x = t / B, each cell (c, c+1) / 2^k
  // carrying an integer polynomial whose roots in (0, 1) are the cell's roots.
  void isolate_one(std::size_t i, std::vector<IsolatingInterval>& out) {
    const IntPoly& s = sqf_[i];
    if (s.degree() < 1) return;
    if (s.degree() == 1) {
      BigRat root = make_rat(-s[0], s[1]);
      if (root >= 0) out.push_back({root, root, {i}, true});
      return;
    }
    if (s[0] == 0) out.push_back({BigRat(0), BigRat(0), {i}, true});
    const unsigned long e = root_exponent(s);
    const std::size_t d = s.size() - 1;
    Coeffs top(s.coeffs());
    for (std::size_t k = 1; k <= d; ++k) mpz_mul_2exp(top[k].get_mpz_t(), top[k].get_mpz_t(), k * e);
    strip_low_zeros(top);

    struct Cell {
      Coeffs q;
      BigInt c;
      unsigned long k;
    };
    // c * 2^(e - k), clipped to the global bound
    auto point = [&](const BigInt& c, unsigned long k) -> BigRat {
      BigRat t(c);
      if (k > e) {
        mpq_div_2exp(t.get_mpq_t(), t.get_mpq_t(), k - e);
      } else {
        mpq_mul_2exp(t.get_mpq_t(), t.get_mpq_t(), e - k);
      }
      return t < bound_ ? t : bound_;
    };
    std::vector<Cell> work;
    work.push_back({std::move(top), BigInt(0), 0});
    while (!work.empty()) {
      Cell cell = std::move(work.back());
      work.pop_back();
      if (cell.q.size() < 2) continue;
      int v = descartes_unit(cell.q);
      if (v == 0) continue;
      if (v == 1) {
        out.push_back({point(cell.c, cell.k), point(cell.c + 1, cell.k), {i}, true});
        continue;
      }
      // left(x) = 2^deg q(x/2), right(x) = left(x + 1)
      const std::size_t deg = cell.q.size() - 1;
      Coeffs left(cell.q);
      for (std::size_t j = 0; j < deg; ++j) mpz_mul_2exp(left[j].get_mpz_t(), left[j].get_mpz_t(), deg - j);
      drop_common_twos(left);
      Coeffs right(left);
      taylor_shift_one(right);
      BigInt c2 = cell.c * 2;
      if (right[0] == 0) {
        out.push_back({point(c2 + 1, cell.k + 1), point(c2 + 1, cell.k + 1), {i}, true});
        strip_low_zeros(right);
      }
      work.push_back({std::move(right), c2 + 1, cell.k + 1});
      work.push_back({std::move(left), c2, cell.k + 1});
    }
  }

  static bool overlaps(const IsolatingInterval& a, const IsolatingInterval& b) {
    if (a.is_exact() && b.is_exact()) return a.lo == b.lo;
    if (a.is_exact()) return b.lo < a.lo && a.lo < b.hi;
    if (b.is_exact()) return a.lo < b.lo && b.lo < a.hi;
    return std::max(a.lo, b.lo) < std::min(a.hi, b.hi);
  }

  // Returns true if b was absorbed into a.
  bool resolve(IsolatingInterval& a, IsolatingInterval& b) {
    if (a.is_exact() && b.is_exact()) {
      add_owners(a, b);
      return true;
    }
    if (a.is_exact() || b.is_exact()) {
      IsolatingInterval& point = a.is_exact() ? a : b;
      IsolatingInterval& open = a.is_exact() ? b : a;
      if (sign_at(sqf_[open.poly_index()], point.lo) == 0) {
        open.lo = point.lo;
        open.hi = point.lo;
        add_owners(a, b);
        return true;
      }
      refine(open);
      return false;
    }
    const IntPoly& g = pair_gcd(a.poly_index(), b.poly_index());
    if (g.degree() >= 1) {
      BigRat lo = std::max(a.lo, b.lo);
      BigRat hi = std::min(a.hi, b.hi);
      if (root_between(g, lo, hi)) {
        a.lo = lo;
        a.hi = hi;
        add_owners(a, b);
        return true;
      }
    }
    refine(a);
    refine(b);
    return false;
  }

  void merge(std::vector<IsolatingInterval>& all) {
    auto less = [](const IsolatingInterval& x, const IsolatingInterval& y) {
      if (x.lo != y.lo) return x.lo < y.lo;
      return x.hi < y.hi;
    };
    bool changed = true;
    while (changed) {
      changed = false;
      std::sort(all.begin(), all.end(), less);
      for (std::size_t a = 0; a < all.size() && !changed; ++a) {
        for (std::size_t b = a + 1; b < all.size(); ++b) {
          if (all[b].lo > all[a].hi) break;
          if (!overlaps(all[a], all[b])) continue;
          if (resolve(all[a], all[b])) all.erase(all.begin() + static_cast<std::ptrdiff_t>(b));
          changed = true;
          break;
        }
      }
    }
  }

  bool simple_for_all_owners(const IsolatingInterval& iv) {
    for (std::size_t o : iv.owners) {
      if (sqf_[o].degree() == hs_[o].degree()) continue;
      IntPoly repeated = squarefree_part(exact_div(hs_[o], sqf_[o]));
      if (repeated.degree() < 1) continue;
      bool vanishes = iv.is_exact() ? sign_at(repeated, iv.lo) == 0 : root_between(repeated, iv.lo, iv.hi);
      if (vanishes) return false;
    }
    return true;
  }

  std::vector<IntPoly> hs_;
  std::vector<IntPoly> sqf_;
  BigRat bound_;
  std::map<std::pair<std::size_t, std::size_t>, IntPoly> gcds_;
};

}  // namespace

std::vector<IsolatingInterval> isolate_nonneg_roots(std::span<const IntPoly> hs) {
  RootContext ctx(hs);
  return ctx.isolate();
}

int sign_at_root(const IntPoly& q, const IntPoly& owner, const IsolatingInterval& root) {
  if (root.is_exact()) return sign_at(q, root.lo);
  if (q.is_zero()) return 0;
  if (q.is_constant()) return sign(q[0]);
  IntPoly s = squarefree_part(owner);
  IntPoly g = gcd(s, q);
  if (g.degree() >= 1 && count_roots_half_open(SturmChain(g), root.lo, root.hi) == 1) return 0;
  SturmChain qchain(squarefree_part(q));
  BigRat lo = root.lo;
  BigRat hi = root.hi;
  while (true) {
    int inside = count_roots_half_open(qchain, lo, hi) - (sign_at(q, hi) == 0 ? 1 : 0);
    if (inside == 0) return sign_at(q, (lo + hi) / 2);
    BigRat mid = (lo + hi) / 2;
    int sm = sign_at(s, mid);
    if (sm == 0) return sign_at(q, mid);
    if (sm != sign_at(s, hi)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

namespace {

std::vector<int> signs_at_rational(std::span<const IntPoly> hs, const BigRat& t) {
  std::vector<int> out;
  out.reserve(hs.size());
  for (const auto& h : hs) out.push_back(sign_at(h, t));
  return out;
}

}  // namespace

std::optional<SignVector> uniform_sign_exists(std::span<const IntPoly> hs) {
  RootContext ctx(hs);
  std::vector<IsolatingInterval> roots = ctx.isolate();

  auto at_rational = [&](const BigRat& t) -> std::optional<SignVector> {
    SignVector v{t, signs_at_rational(hs, t)};
    if (v.uniform()) return v;
    return std::nullopt;
  };
  auto at_root = [&](const IsolatingInterval& iv) -> std::optional<SignVector> {
    BigRat probe = iv.is_exact() ? iv.lo : iv.midpoint();
    std::vector<int> signs(hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) {
      bool owner = std::find(iv.owners.begin(), iv.owners.end(), i) != iv.owners.end();
      signs[i] = owner ? 0 : sign_at(hs[i], probe);
    }
    SignVector v{iv, std::move(signs)};
    if (v.uniform()) return v;
    return std::nullopt;
  };

  std::size_t first = 0;
  if (!roots.empty() && roots[0].is_exact() && roots[0].lo == 0) {
    if (auto v = at_root(roots[0])) return v;
    first = 1;
  } else if (auto v = at_rational(BigRat(0))) {
    // 0 is not a root, so this also covers the cell [0, first root).
    return v;
  }

  for (std::size_t k = first; k < roots.size(); ++k) {
    if (k > 0) {
      IsolatingInterval& prev = roots[k - 1];
      IsolatingInterval& cur = roots[k];
      if (prev.hi == cur.lo && prev.is_exact() && !cur.is_exact()) ctx.pull_in(cur, true);
      if (prev.hi == cur.lo && cur.is_exact() && !prev.is_exact()) ctx.pull_in(prev, false);
      BigRat t = prev.hi == cur.lo ? cur.lo : (prev.hi + cur.lo) / 2;
      if (auto v = at_rational(t)) return v;
    }
    if (auto v = at_root(roots[k])) return v;
  }
  return at_rational(ctx.bound() + 1);
}

bool verify_sign_vector(std::span<const IntPoly> hs, const SignVector& v) {
  if (v.signs.size() != hs.size()) return false;
  if (const auto* t = std::get_if<BigRat>(&v.sample)) {
    return signs_at_rational(hs, *t) == v.signs;
  }
  const auto& iv = std::get<IsolatingInterval>(v.sample);
  if (iv.owners.empty() || iv.owners.front() >= hs.size()) return false;
  const IntPoly& owner = hs[iv.poly_index()];
  if (owner.is_zero()) return false;
  if (iv.is_exact()) {
    if (sign_at(owner, iv.lo) != 0) return false;
  } else {
    if (!(iv.lo < iv.hi)) return false;
    IntPoly s = squarefree_part(owner);
    if (sign_at(s, iv.hi) == 0) return false;
    if (count_roots_half_open(SturmChain(s), iv.lo, iv.hi) != 1) return false;
  }
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (sign_at_root(hs[i], owner, iv) != v.signs[i]) return false;
  }
  return true;
}

}  // namespace posring
