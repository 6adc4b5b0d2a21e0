#include "posring/polynomial.hpp"

#include <sstream>

#include "posring/laurent.hpp"

namespace posring {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::not_divisible: return "NotDivisible";
    case Errc::all_zero: return "AllZero";
    case Errc::zero_input: return "ZeroInput";
    case Errc::zero_entry: return "ZeroEntry";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::endpoint_is_root: return "EndpointIsRoot";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::search_space_too_large: return "SearchSpaceTooLarge";
    case Errc::bad_index: return "BadIndex";
    case Errc::too_large: return "TooLarge";
    case Errc::invalid_witness: return "InvalidWitness";
    case Errc::invalid_input: return "InvalidInput";
    case Errc::schema: return "SchemaError";
  }
  return "Unknown";
}

RatPoly to_rational(const IntPoly& p) {
  std::vector<BigRat> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return RatPoly(std::move(out));
}

BigRat eval_at_rational(const IntPoly& p, const BigRat& t) {
  BigRat acc(0);
  for (std::size_t k = p.size(); k-- > 0;) {
    acc *= t;
    acc += p[k];
  }
  return acc;
}

int sign_at(const IntPoly& p, const BigRat& t) {
  if (p.is_zero()) return 0;
  const BigInt& num = t.get_num();
  const BigInt& den = t.get_den();
  if (den == 1) {
    BigInt acc = p.leading();
    for (std::size_t k = p.size() - 1; k-- > 0;) {
      acc *= num;
      acc += p[k];
    }
    return sgn(acc);
  }
  // acc_k = sum_{i >= k} c_i num^(i-k) den^(d-i), built by Horner with a running den power.
  BigInt acc = p.leading();
  BigInt den_pow = 1;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    den_pow *= den;
    acc *= num;
    if (p[k] != 0) acc += p[k] * den_pow;
  }
  return sgn(acc);
}

namespace {

template <class Scalar>
std::string render(const Polynomial<Scalar>& p, const std::string& var, long offset) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Scalar& c = p[k];
    if (c == 0) continue;
    long e = static_cast<long>(k) + offset;
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (e == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPoly& p, const std::string& var) { return render(p, var, 0); }
std::string to_string(const RatPoly& p, const std::string& var) { return render(p, var, 0); }

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << to_string(p); }

std::pair<std::vector<IntPoly>, long> laurent_normalize(const std::vector<LaurentPoly>& hs) {
  long min_low = 0;
  for (const auto& h : hs) {
    if (!h.is_zero()) min_low = std::min(min_low, h.lowest());
  }
  long shift = -min_low;
  std::vector<IntPoly> out;
  out.reserve(hs.size());
  for (const auto& h : hs) {
    if (h.is_zero()) {
      out.emplace_back();
    } else {
      out.push_back(shift_up(h.body(), static_cast<std::size_t>(h.lowest() + shift)));
    }
  }
  return {std::move(out), shift};
}

IntPoly to_polynomial(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  if (p.lowest() < 0) throw Error(Errc::invalid_input, "Laurent polynomial has negative exponents");
  return shift_up(p.body(), static_cast<std::size_t>(p.lowest()));
}

std::string to_string(const LaurentPoly& p, const std::string& var) {
  return render(p.body(), var, p.lowest());
}

}  // namespace posring
