#include "posring/nxsolve.hpp"

#include <algorithm>

#include "posring/gcd.hpp"

namespace posring {

const char* to_string(Status s) noexcept { return s == Status::solvable ? "solvable" : "unsolvable"; }

const char* to_string(UnsolvableReason r) noexcept {
  switch (r) {
    case UnsolvableReason::none: return "none";
    case UnsolvableReason::uniform_sign_at_zero: return "uniform_sign_at_zero";
    case UnsolvableReason::uniform_sign_witness: return "uniform_sign_witness";
  }
  return "?";
}

const char* to_string(WitnessStatus w) noexcept {
  switch (w) {
    case WitnessStatus::not_requested: return "not_requested";
    case WitnessStatus::found: return "found";
    case WitnessStatus::not_found_within_cap: return "not_found_within_cap";
  }
  return "?";
}

NormalizedInstance normalize(std::span<const IntPoly> hs) {
  if (hs.empty()) throw Error(Errc::invalid_input, "normalize: empty list");
  std::size_t zeros = static_cast<std::size_t>(std::count_if(hs.begin(), hs.end(), [](const IntPoly& h) { return h.is_zero(); }));
  if (zeros == hs.size()) throw Error(Errc::all_zero, "normalize: every entry is zero");
  if (zeros > 0) throw Error(Errc::zero_entry, "normalize: zero entry");

  NormalizedInstance out;
  out.gcd_removed = gcd_many(hs);
  out.hs.reserve(hs.size());
  for (const auto& h : hs) out.hs.push_back(out.gcd_removed.is_constant() ? h : exact_div(h, out.gcd_removed));
  out.x_powers.assign(hs.size(), 0);

  while (true) {
    bool any_pos = false, any_neg = false, any_zero = false;
    for (const auto& h : out.hs) {
      int s = sign(h[0]);
      any_pos |= s > 0;
      any_neg |= s < 0;
      any_zero |= s == 0;
    }
    if (!any_zero && (!any_pos || !any_neg)) {
      out.early_unsolvable = true;
      return out;
    }
    if (any_pos && any_neg) return out;
    for (std::size_t i = 0; i < out.hs.size(); ++i) {
      if (out.hs[i][0] == 0) {
        out.hs[i] = shift_down(out.hs[i], 1);
        ++out.x_powers[i];
      }
    }
    ++out.x_divisions;
  }
}

Decision decide(std::span<const IntPoly> hs, bool want_witness, int degree_cap) {
  if (hs.empty()) throw Error(Errc::invalid_input, "decide: empty list");
  Decision dec;
  std::vector<IntPoly> nonzero;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (hs[i].is_zero()) {
      dec.zero_entries.push_back(i);
    } else {
      kept.push_back(i);
      nonzero.push_back(hs[i]);
    }
  }

  if (nonzero.empty()) {
    dec.status = Status::solvable;
    if (want_witness) {
      dec.witness = WitnessTuple{std::vector<IntPoly>(hs.size(), IntPoly{1}), 0};
      dec.witness_status = WitnessStatus::found;
    }
    return dec;
  }

  NormalizedInstance norm = normalize(nonzero);
  dec.normalization = norm;
  if (norm.early_unsolvable) {
    SignVector at_zero{BigRat(0), {}};
    for (const auto& h : norm.hs) at_zero.signs.push_back(sign(h[0]));
    dec.status = Status::unsolvable;
    dec.reason = UnsolvableReason::uniform_sign_at_zero;
    dec.certificate = SignCertificate{std::move(at_zero), std::move(norm), std::move(kept)};
    return dec;
  }
  if (auto v = uniform_sign_exists(norm.hs)) {
    dec.status = Status::unsolvable;
    dec.reason = UnsolvableReason::uniform_sign_witness;
    dec.certificate = SignCertificate{std::move(*v), std::move(norm), std::move(kept)};
    return dec;
  }

  dec.status = Status::solvable;
  if (!want_witness) return dec;
  std::optional<WitnessTuple> sub = find_witness(nonzero, degree_cap);
  if (!sub) {
    dec.witness_status = WitnessStatus::not_found_within_cap;
    return dec;
  }
  WitnessTuple full{std::vector<IntPoly>(hs.size(), IntPoly{1}), sub->degree};
  for (std::size_t k = 0; k < kept.size(); ++k) full.fs[kept[k]] = std::move(sub->fs[k]);
  dec.witness = std::move(full);
  dec.witness_status = WitnessStatus::found;
  return dec;
}

FeasibilitySystem build_feasibility(std::span<const IntPoly> hs, int d) {
  if (d < 0) throw Error(Errc::invalid_input, "build_feasibility: negative degree");
  FeasibilitySystem fs;
  fs.n = hs.size();
  fs.d = d;
  fs.system = LinearSystem(fs.n * static_cast<std::size_t>(d + 1));
  int max_e = 0;
  for (const auto& h : hs) max_e = std::max(max_e, h.degree());

  const std::size_t nv = fs.system.num_vars();
  for (int k = 0; k <= d + max_e; ++k) {
    std::vector<BigRat> row(nv, BigRat(0));
    bool any = false;
    for (std::size_t i = 0; i < fs.n; ++i) {
      for (int j = 0; j <= d; ++j) {
        int e = k - j;
        if (e < 0 || e > hs[i].degree()) continue;
        const BigInt& b = hs[i][static_cast<std::size_t>(e)];
        if (b == 0) continue;
        row[fs.var(i, j)] = BigRat(b);
        any = true;
      }
    }
    if (any) fs.system.add_row(std::move(row), Relation::eq, BigRat(0));
  }
  for (std::size_t i = 0; i < fs.n; ++i) {
    std::vector<BigRat> row(nv, BigRat(0));
    for (int j = 0; j <= d; ++j) row[fs.var(i, j)] = 1;
    fs.system.add_row(std::move(row), Relation::ge, BigRat(1));
  }
  return fs;
}

std::optional<std::vector<BigRat>> rational_feasibility(const FeasibilitySystem& sys) {
  return rational_feasibility(sys.system);
}

std::optional<WitnessTuple> find_witness(std::span<const IntPoly> hs, int degree_cap) {
  for (int d = 0; d <= degree_cap; ++d) {
    FeasibilitySystem sys = build_feasibility(hs, d);
    std::optional<std::vector<BigRat>> x = rational_feasibility(sys);
    if (!x) continue;

    BigInt den = 1;
    for (const auto& v : *x) den = lcm(den, v.get_den());
    std::vector<BigInt> ints;
    ints.reserve(x->size());
    BigInt g = 0;
    for (const auto& v : *x) {
      ints.push_back(divexact(den, v.get_den()) * v.get_num());
      g = gcd(g, ints.back());
    }
    WitnessTuple w{{}, d};
    for (std::size_t i = 0; i < sys.n; ++i) {
      std::vector<BigInt> c;
      for (int j = 0; j <= d; ++j) c.push_back(divexact(ints[sys.var(i, j)], g));
      w.fs.emplace_back(std::move(c));
    }
    if (!verify_witness(hs, w.fs)) throw Error(Errc::invalid_witness, "find_witness: LP point failed verification");
    return w;
  }
  return std::nullopt;
}

bool verify_witness(std::span<const IntPoly> hs, std::span<const IntPoly> fs) {
  if (hs.size() != fs.size()) throw Error(Errc::length_mismatch, "verify_witness: length mismatch");
  IntPoly sum;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (fs[i].is_zero()) return false;
    for (const auto& c : fs[i].coeffs()) {
      if (c < 0) return false;
    }
    sum += fs[i] * hs[i];
  }
  return sum.is_zero();
}

bool verify_sign_certificate(std::span<const IntPoly> hs, const SignCertificate& cert) {
  std::vector<IntPoly> nonzero;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (!hs[i].is_zero()) {
      nonzero.push_back(hs[i]);
      kept.push_back(i);
    }
  }
  if (nonzero.empty() || kept != cert.kept) return false;
  NormalizedInstance norm = normalize(nonzero);
  if (norm.hs != cert.normalization.hs) return false;
  if (!cert.vector.uniform()) return false;
  return verify_sign_vector(norm.hs, cert.vector);
}

}  // namespace posring
