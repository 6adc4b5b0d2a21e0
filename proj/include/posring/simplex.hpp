#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "posring/numeric.hpp"

namespace posring {

enum class Relation { eq, ge, le };

/// sum_j coeffs[j] * x_j  (rel)  rhs
struct LinearRow {
  std::vector<BigRat> coeffs;
  Relation rel = Relation::eq;
  BigRat rhs;
};

/// Linear constraints over variables that are all implicitly >= 0.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<LinearRow>& rows() const noexcept { return rows_; }

  /// Adds a row; coeffs shorter than num_vars are zero-padded.
  void add_row(std::vector<BigRat> coeffs, Relation rel, BigRat rhs);

  /// True if x >= 0 satisfies every row.
  bool satisfied_by(const std::vector<BigRat>& x) const;

 private:
  std::size_t num_vars_;
  std::vector<LinearRow> rows_;
};

/// Phase-1 simplex over exact rationals with Bland's rule.
/// Returns a feasible point, or nothing if the system is infeasible.
std::optional<std::vector<BigRat>> rational_feasibility(const LinearSystem& sys);

}  // namespace posring
