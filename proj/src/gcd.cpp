#include "posring/gcd.hpp"

#include <array>
#include <cstdint>

namespace posring {

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt c = content(p);
  if (c == 1) return p;
  std::vector<BigInt> out(p.coeffs());
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly canonical_associate(const IntPoly& p) {
  IntPoly q = primitive_part(p);
  if (!q.is_zero() && q.leading() < 0) q = -q;
  return q;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(Errc::zero_input, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<BigRat> r(a.coeffs());
  std::vector<BigRat> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const std::size_t db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = q.size(); k-- > 0;) {
    BigRat c = r[k + db] / b.leading();
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= c * b[j];
  }
  r.resize(db);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(Errc::zero_input, "pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const int lead_sign = sgn(b.leading());
  BigInt l = abs(b.leading());
  std::vector<BigInt> r(a.coeffs());
  long steps = a.degree() - b.degree() + 1;
  BigInt t;
  for (std::size_t top = r.size(); top-- > db;) {
    // r <- l*r - sign(lc b) * r[top] * X^(top-db) * b
    t = r[top];
    if (lead_sign < 0) t = -t;
    for (std::size_t j = 0; j < top; ++j) mpz_mul(r[j].get_mpz_t(), r[j].get_mpz_t(), l.get_mpz_t());
    const std::size_t off = top - db;
    if (t != 0) {
      for (std::size_t j = 0; j < db; ++j) mpz_submul(r[off + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
    }
    r[top] = 0;
    --steps;
  }
  r.resize(db);
  if (steps > 0) {
    BigInt f = pow(l, static_cast<unsigned long>(steps));
    for (auto& v : r) v *= f;
  }
  return IntPoly(std::move(r));
}

IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw Error(Errc::zero_input, "exact_div by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < q.degree()) throw Error(Errc::not_divisible, "exact_div: divisor has larger degree");
  const std::size_t dq = static_cast<std::size_t>(q.degree());
  std::vector<BigInt> r(p.coeffs());
  std::vector<BigInt> out(static_cast<std::size_t>(p.degree() - q.degree() + 1));
  for (std::size_t k = out.size(); k-- > 0;) {
    BigInt& top = r[k + dq];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), q.leading().get_mpz_t())) {
      throw Error(Errc::not_divisible, "exact_div: nonzero remainder");
    }
    mpz_divexact(out[k].get_mpz_t(), top.get_mpz_t(), q.leading().get_mpz_t());
    for (std::size_t j = 0; j <= dq; ++j) mpz_submul(r[k + j].get_mpz_t(), out[k].get_mpz_t(), q[j].get_mpz_t());
  }
  for (const auto& v : r) {
    if (v != 0) throw Error(Errc::not_divisible, "exact_div: nonzero remainder");
  }
  return IntPoly(std::move(out));
}

RemainderSequence subresultant_sequence(const IntPoly& a, const IntPoly& b) {
  RemainderSequence seq;
  seq.polys.push_back(a);
  seq.divisors.emplace_back(1);
  if (b.is_zero()) return seq;
  if (a.degree() < b.degree()) throw Error(Errc::invalid_input, "subresultant_sequence: deg a < deg b");
  seq.polys.push_back(b);
  seq.divisors.emplace_back(1);
  BigInt g = 1;
  BigInt h = 1;
  while (true) {
    const IntPoly& prev = seq.polys[seq.polys.size() - 2];
    const IntPoly& cur = seq.polys.back();
    if (cur.degree() == 0) break;
    const unsigned long delta = static_cast<unsigned long>(prev.degree() - cur.degree());
    IntPoly r = pseudo_remainder(prev, cur);
    if (r.is_zero()) break;
    BigInt div = g * pow(h, delta);
    std::vector<BigInt> next(r.coeffs());
    for (auto& v : next) {
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
      v = -v;
    }
    g = abs(cur.leading());
    if (delta != 1) {
      // h <- g^delta / h^(delta - 1); delta = 0 leaves h unchanged.
      if (delta > 1) h = divexact(pow(g, delta), pow(h, delta - 1));
    } else {
      h = g;
    }
    seq.polys.emplace_back(std::move(next));
    seq.divisors.push_back(std::move(div));
  }
  return seq;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::array<u64, 3> kPrimes = {2305843009213693951ULL, 4294967291ULL, 998244353ULL};

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::vector<u64> reduce(const IntPoly& p, u64 prime) {
  std::vector<u64> out(p.size());
  static_assert(sizeof(unsigned long) == sizeof(u64));
  BigInt m;
  mpz_set_ui(m.get_mpz_t(), prime);
  BigInt t;
  for (std::size_t k = 0; k < p.size(); ++k) {
    mpz_fdiv_r(t.get_mpz_t(), p[k].get_mpz_t(), m.get_mpz_t());
    out[k] = mpz_get_ui(t.get_mpz_t());
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Degree of gcd over F_p.
long gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    u64 inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size() && !a.empty()) {
      u64 c = mulmod(a.back(), inv, p);
      std::size_t off = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        u64 s = mulmod(c, b[j], p);
        a[off + j] = a[off + j] >= s ? a[off + j] - s : a[off + j] + p - s;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return static_cast<long>(a.size()) - 1;
}

}  // namespace

bool coprime_modular(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  for (u64 prime : kPrimes) {
    std::vector<u64> ra = reduce(a, prime);
    std::vector<u64> rb = reduce(b, prime);
    // A prime dividing a leading coefficient can fake a degree drop.
    if (ra.size() != a.size() || rb.size() != b.size()) continue;
    return gcd_degree_mod(std::move(ra), std::move(rb), prime) == 0;
  }
  return false;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return canonical_associate(b);
  if (b.is_zero()) return canonical_associate(a);
  if (a.is_constant() || b.is_constant()) return IntPoly{1};
  if (coprime_modular(a, b)) return IntPoly{1};
  IntPoly pa = primitive_part(a);
  IntPoly pb = primitive_part(b);
  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  RemainderSequence seq = subresultant_sequence(pa, pb);
  return canonical_associate(seq.polys.back());
}

IntPoly gcd_many(std::span<const IntPoly> hs) {
  IntPoly g;
  for (const auto& h : hs) {
    if (h.is_zero()) continue;
    g = g.is_zero() ? canonical_associate(h) : gcd(g, h);
    if (g.is_constant()) return IntPoly{1};
  }
  if (g.is_zero()) throw Error(Errc::all_zero, "gcd of an all-zero list");
  return g;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw Error(Errc::zero_input, "squarefree_part of the zero polynomial");
  if (p.is_constant()) return IntPoly{1};
  IntPoly g = gcd(p, derivative(p));
  return canonical_associate(g.is_constant() ? p : exact_div(p, g));
}

}  // namespace posring
