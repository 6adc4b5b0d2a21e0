#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "posring/polynomial.hpp"
#include "posring/realdec.hpp"
#include "posring/simplex.hpp"

namespace posring {

inline constexpr int kDefaultDegreeCap = 40;

/// Result of gcd removal followed by the X-division loop.
struct NormalizedInstance {
  std::vector<IntPoly> hs;
  IntPoly gcd_removed;
  long x_divisions = 0;         // loop iterations
  std::vector<long> x_powers;   // total power of X divided out of each entry
  bool early_unsolvable = false;  // all h_i(0) > 0 or all h_i(0) < 0
};

/// Requires every entry nonzero. Throws Errc::invalid_input for an empty
/// list, Errc::all_zero / Errc::zero_entry for zero entries.
NormalizedInstance normalize(std::span<const IntPoly> hs);

enum class Status { solvable, unsolvable };
enum class UnsolvableReason { none, uniform_sign_at_zero, uniform_sign_witness };
enum class WitnessStatus { not_requested, found, not_found_within_cap };

const char* to_string(Status s) noexcept;
const char* to_string(UnsolvableReason r) noexcept;
const char* to_string(WitnessStatus w) noexcept;

/// Sign vector of the reduced instance, with the reduction that produced it.
struct SignCertificate {
  SignVector vector;
  NormalizedInstance normalization;
  std::vector<std::size_t> kept;  // indices of the nonzero input entries
};

struct WitnessTuple {
  std::vector<IntPoly> fs;
  int degree = 0;  // LP degree cap at which it was found
};

struct Decision {
  Status status = Status::solvable;
  UnsolvableReason reason = UnsolvableReason::none;
  std::optional<NormalizedInstance> normalization;  // of the nonzero entries
  std::optional<SignCertificate> certificate;
  std::optional<WitnessTuple> witness;
  WitnessStatus witness_status = WitnessStatus::not_requested;
  std::vector<std::size_t> zero_entries;
};

/// Decides whether sum f_i h_i = 0 has a solution with every f_i in N[X] \ {0}.
/// Throws Errc::invalid_input for an empty list.
Decision decide(std::span<const IntPoly> hs, bool want_witness = false, int degree_cap = kDefaultDegreeCap);

/// Coefficient system for witnesses with deg f_i <= d: variable a_ij is
/// coefficient j of f_i, at index var(i, j).
struct FeasibilitySystem {
  std::size_t n = 0;
  int d = 0;
  LinearSystem system;

  std::size_t var(std::size_t i, int j) const { return i * static_cast<std::size_t>(d + 1) + static_cast<std::size_t>(j); }
};

FeasibilitySystem build_feasibility(std::span<const IntPoly> hs, int d);

std::optional<std::vector<BigRat>> rational_feasibility(const FeasibilitySystem& sys);

/// Integer witness from the lowest feasible degree in 0..degree_cap.
std::optional<WitnessTuple> find_witness(std::span<const IntPoly> hs, int degree_cap = kDefaultDegreeCap);

/// Throws Errc::length_mismatch when the lists differ in length.
bool verify_witness(std::span<const IntPoly> hs, std::span<const IntPoly> fs);

/// Re-runs normalization on the original hs and re-derives every sign.
bool verify_sign_certificate(std::span<const IntPoly> hs, const SignCertificate& cert);

inline constexpr std::size_t kOracleHalfLimit = 10'000'000;

/// Exhaustive search over deg f_i <= deg_bound, coefficients in 0..coeff_bound,
/// every f_i nonzero. Returns the lexicographically first solution, where
/// tuples compare entry by entry and each f_i by (c_0, c_1, ...).
/// Throws Errc::search_space_too_large when either half of the
/// meet-in-the-middle split exceeds kOracleHalfLimit tuples.
std::optional<WitnessTuple> brute_force_oracle(std::span<const IntPoly> hs, int deg_bound, int coeff_bound);

}  // namespace posring
