#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "posring/gcd.hpp"
#include "posring/laurent.hpp"

using namespace posring;
using oracle::L;
using oracle::P;

namespace {

BigInt random_big(gmp_randclass& r, unsigned bits) {
  BigInt v = r.get_z_bits(bits);
  if (r.get_z_bits(1) == 1) v = -v;
  return v;
}

IntPoly random_big_poly(gmp_randclass& r, std::mt19937_64& rng, int max_deg, unsigned bits) {
  int d = std::uniform_int_distribution<int>(-1, max_deg)(rng);
  std::vector<BigInt> c;
  for (int k = 0; k <= d; ++k) c.push_back(random_big(r, bits));
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("ring operations") {
  CHECK(P({1, 1}) * P({2, 1}) == P({2, 3, 1}));
  IntPoly p = P({5, -3, 0, 7});
  CHECK(p + IntPoly{} == p);
  CHECK(p * P({1}) == p);
  CHECK(p - p == IntPoly{});
  CHECK((p - p).coeffs().empty());
  CHECK(P({0, 0, 0}).is_zero());
  CHECK(P({1, 2, 0}).degree() == 1);
  CHECK(IntPoly{}.degree() == -1);

  LaurentPoly a = L({1}, -1);
  LaurentPoly z = a + (-a);
  CHECK(z.is_zero());
  CHECK(z.lowest() == 0);
  CHECK(L({0, 0, 3}, -4).lowest() == -2);
  CHECK(L({1, 2}, -1) * L({1}, 1) == L({1, 2}, 0));
}

TEST_CASE("exact_div") {
  CHECK(exact_div(P({-1, 0, 1}), P({-1, 1})) == P({1, 1}));
  CHECK(exact_div(P({4, 0, 9}), P({1})) == P({4, 0, 9}));
  CHECK(exact_div(P({0, 1, 1}), P({0, 1})) == P({1, 1}));
  CHECK_THROWS_AS(exact_div(P({1, 0, 1}), P({-1, 1})), Error);
  try {
    exact_div(P({1, 1}), P({0, 2}));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_divisible);
  }
}

TEST_CASE("gcd_many") {
  std::vector<IntPoly> a{P({-1, 0, 1}), P({2, -3, 1})};
  CHECK(gcd_many(a) == P({-1, 1}));
  std::vector<IntPoly> b{P({-4, 0, -2}), IntPoly{}};
  CHECK(gcd_many(b) == P({2, 0, 1}));
  std::vector<IntPoly> c{P({2, 2}), P({4, 4})};
  CHECK(gcd_many(c) == P({1, 1}));
  std::vector<IntPoly> zeros{IntPoly{}, IntPoly{}};
  try {
    gcd_many(zeros);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::all_zero);
  }
  // coprime inputs
  std::vector<IntPoly> d{P({1, 1}), P({2, 1})};
  CHECK(gcd_many(d) == P({1}));
}

TEST_CASE("eval_at_rational") {
  CHECK(eval_at_rational(P({-2, 0, 1}), BigRat(3, 2)) == BigRat(1, 4));
  CHECK(eval_at_rational(P({7, 1, 1}), BigRat(0)) == 7);
  CHECK(eval_at_rational(P({-1, 2, -1}), BigRat(1)) == 0);
  CHECK(sign_at(P({-2, 0, 1}), BigRat(3, 2)) == 1);
  CHECK(sign_at(P({-2, 0, 1}), BigRat(-7, 5)) == -1);
  CHECK(sign_at(IntPoly{}, BigRat(5)) == 0);
}

TEST_CASE("derivative and squarefree_part") {
  CHECK(squarefree_part(P({1, -2, 1})) == P({-1, 1}));
  CHECK(derivative(P({9})) == IntPoly{});
  CHECK(squarefree_part(P({0, -1, 0, 1})) == P({0, -1, 0, 1}));
  CHECK(squarefree_part(P({-4, 0, -2})) == P({2, 0, 1}));
  // (X-1)^3 (X+2)^2 X
  IntPoly q = P({-1, 1}) * P({-1, 1}) * P({-1, 1}) * P({2, 1}) * P({2, 1}) * P({0, 1});
  CHECK(squarefree_part(q) == P({-1, 1}) * P({2, 1}) * P({0, 1}));
  CHECK_THROWS_AS(squarefree_part(IntPoly{}), Error);
}

TEST_CASE("order_at_zero") {
  CHECK(order_at_zero(P({0, 0, 0, 1, 1})) == 3);
  CHECK(order_at_zero(P({1, 1})) == 0);
  CHECK(order_at_zero(P({0, 1}) * P({1, 1}) * P({1, 1})) == 1);
  CHECK_THROWS_AS(order_at_zero(IntPoly{}), Error);
}

TEST_CASE("laurent_normalize") {
  auto [a, s1] = laurent_normalize({L({1, 1}, -1)});
  CHECK(s1 == 1);
  CHECK(a == std::vector<IntPoly>{P({1, 1})});
  auto [b, s2] = laurent_normalize({L({2, 1}, 0)});
  CHECK(s2 == 0);
  CHECK(b == std::vector<IntPoly>{P({2, 1})});
  auto [c, s3] = laurent_normalize({L({1}, -2), L({1}, -1)});
  CHECK(s3 == 2);
  CHECK(c == std::vector<IntPoly>{P({1}), P({0, 1})});
  auto [d, s4] = laurent_normalize({LaurentPoly{}, L({3}, 2)});
  CHECK(s4 == 0);
  CHECK(d[0].is_zero());
  CHECK(d[1] == P({0, 0, 3}));
}

TEST_CASE("rendering") {
  CHECK(to_string(P({2, -3, 1})) == "X^2 - 3*X + 2");
  CHECK(to_string(IntPoly{}) == "0");
  CHECK(to_string(P({0, -1})) == "-X");
}

TEST_CASE("subresultant chain entries match the classical remainder sequence") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly a = oracle::random_poly(rng, 7, 9);
    IntPoly b = oracle::random_poly(rng, 6, 9);
    if (a.degree() < b.degree()) std::swap(a, b);
    if (b.is_zero()) continue;
    RemainderSequence seq = subresultant_sequence(a, b);
    // classical: r_{k+1} = -rem(r_{k-1}, r_k)
    std::vector<RatPoly> classical{to_rational(a), to_rational(b)};
    while (classical.back().degree() > 0) {
      RatPoly r = -divmod(classical[classical.size() - 2], classical.back()).second;
      if (r.is_zero()) break;
      classical.push_back(r);
    }
    REQUIRE(classical.size() == seq.polys.size());
    for (std::size_t k = 0; k < classical.size(); ++k) {
      const RatPoly& c = classical[k];
      RatPoly s = to_rational(seq.polys[k]);
      REQUIRE(c.degree() == s.degree());
      BigRat ratio = s.leading() / c.leading();
      CHECK(ratio > 0);
      CHECK(s == c * ratio);
    }
  }
}

TEST_CASE("property: canonical form and ring axioms with 256-bit coefficients") {
  gmp_randclass r(gmp_randinit_default);
  r.seed(20240521);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    IntPoly a = random_big_poly(r, rng, 6, 256);
    IntPoly b = random_big_poly(r, rng, 6, 256);
    IntPoly c = random_big_poly(r, rng, 6, 256);
    for (const IntPoly* p : {&a, &b, &c}) {
      CHECK((p->is_zero() || p->leading() != 0));
    }
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b).coeffs() == oracle::convolve(a.coeffs(), b.coeffs()));
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    CHECK((a + b).degree() <= std::max(a.degree(), b.degree()));
    IntPoly sum = a + b - b;
    CHECK(sum == a);
    CHECK(sum.coeffs() == a.coeffs());
  }
}

TEST_CASE("property: gcd divides every input and the quotients are coprime") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    IntPoly common = oracle::random_poly(rng, 3, 4);
    std::vector<IntPoly> hs;
    int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) hs.push_back(common * oracle::random_poly(rng, 4, 6));
    IntPoly g = gcd_many(hs);
    CHECK(g.leading() > 0);
    CHECK(content(g) == 1);
    std::vector<IntPoly> q;
    for (const auto& h : hs) {
      IntPoly d;
      CHECK_NOTHROW(d = exact_div(h, g));
      q.push_back(d);
    }
    CHECK(gcd_many(q) == P({1}));
    // the planted factor's primitive part divides the gcd
    if (!common.is_constant()) CHECK_NOTHROW(exact_div(g, primitive_part(common)));
  }
}

TEST_CASE("property: evaluation is multiplicative; order_at_zero shifts") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly p = oracle::random_poly(rng, 6, 20);
    IntPoly q = oracle::random_poly(rng, 6, 20);
    BigRat t(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
    t.canonicalize();
    CHECK(eval_at_rational(p * q, t) == eval_at_rational(p, t) * eval_at_rational(q, t));
    CHECK(eval_at_rational(p, t) == oracle::value_at(p, t));
    CHECK(sign_at(p, t) == sgn(oracle::value_at(p, t)));
    std::size_t k = rng() % 5;
    CHECK(order_at_zero(shift_up(p, k)) == order_at_zero(p) + k);
  }
}
