#include "posring/simplex.hpp"

#include "posring/errors.hpp"

namespace posring {

void LinearSystem::add_row(std::vector<BigRat> coeffs, Relation rel, BigRat rhs) {
  if (coeffs.size() > num_vars_) throw Error(Errc::invalid_input, "add_row: too many coefficients");
  coeffs.resize(num_vars_, BigRat(0));
  rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

bool LinearSystem::satisfied_by(const std::vector<BigRat>& x) const {
  if (x.size() != num_vars_) return false;
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (const auto& row : rows_) {
    BigRat lhs = 0;
    for (std::size_t j = 0; j < num_vars_; ++j) {
      if (row.coeffs[j] != 0) lhs += row.coeffs[j] * x[j];
    }
    bool ok = row.rel == Relation::eq ? lhs == row.rhs : row.rel == Relation::ge ? lhs >= row.rhs : lhs <= row.rhs;
    if (!ok) return false;
  }
  return true;
}

std::optional<std::vector<BigRat>> rational_feasibility(const LinearSystem& sys) {
  const std::size_t n = sys.num_vars();
  const std::size_t m = sys.rows().size();

  // Column layout: originals, then one slack/surplus per inequality, then artificials.
  std::vector<LinearRow> rows = sys.rows();
  std::size_t slack_count = 0;
  std::size_t art_count = 0;
  for (auto& row : rows) {
    if (row.rhs < 0) {
      for (auto& c : row.coeffs) c = -c;
      row.rhs = -row.rhs;
      if (row.rel == Relation::ge) {
        row.rel = Relation::le;
      } else if (row.rel == Relation::le) {
        row.rel = Relation::ge;
      }
    }
    if (row.rel != Relation::eq) ++slack_count;
    if (row.rel != Relation::le) ++art_count;
  }
  const std::size_t cols = n + slack_count + art_count;
  const std::size_t first_art = n + slack_count;

  std::vector<std::vector<BigRat>> t(m, std::vector<BigRat>(cols + 1, BigRat(0)));
  std::vector<std::size_t> basis(m);
  std::size_t next_slack = n;
  std::size_t next_art = first_art;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) t[r][j] = rows[r].coeffs[j];
    t[r][cols] = rows[r].rhs;
    switch (rows[r].rel) {
      case Relation::le:
        t[r][next_slack] = 1;
        basis[r] = next_slack++;
        break;
      case Relation::ge:
        t[r][next_slack++] = -1;
        t[r][next_art] = 1;
        basis[r] = next_art++;
        break;
      case Relation::eq:
        t[r][next_art] = 1;
        basis[r] = next_art++;
        break;
    }
  }

  // Reduced costs of "minimise the sum of artificials"; obj[cols] is minus the objective value.
  std::vector<BigRat> obj(cols + 1, BigRat(0));
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < first_art) continue;
    for (std::size_t j = 0; j <= cols; ++j) {
      if (j < first_art || j == cols) obj[j] -= t[r][j];
    }
  }

  BigRat ratio, best;
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      ratio = t[r][cols] / t[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for a phase-1 objective

    std::vector<BigRat>& prow = t[leave];
    BigRat piv = prow[enter];
    for (auto& v : prow) {
      if (v != 0) v /= piv;
    }
    BigRat factor;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      factor = t[r][enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (prow[j] != 0) t[r][j] -= factor * prow[j];
      }
    }
    if (obj[enter] != 0) {
      factor = obj[enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (prow[j] != 0) obj[j] -= factor * prow[j];
      }
    }
    basis[leave] = enter;
  }

  if (obj[cols] != 0) return std::nullopt;
  std::vector<BigRat> x(n, BigRat(0));
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) x[basis[r]] = t[r][cols];
  }
  return x;
}

}  // namespace posring
