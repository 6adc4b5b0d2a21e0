#include <cstdint>
#include <limits>
#include <unordered_map>

#include "posring/nxsolve.hpp"

namespace posring {

namespace {

using Vec = std::vector<std::int64_t>;

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// All nonzero coefficient vectors in lexicographic order of (c_0, c_1, ...).
std::vector<Vec> candidate_fs(int deg_bound, int coeff_bound) {
  std::vector<Vec> out;
  Vec c(static_cast<std::size_t>(deg_bound + 1), 0);
  while (true) {
    if (std::any_of(c.begin(), c.end(), [](std::int64_t v) { return v != 0; })) out.push_back(c);
    std::size_t k = c.size();
    while (k > 0 && c[k - 1] == coeff_bound) c[--k] = 0;
    if (k == 0) break;
    ++c[k - 1];
  }
  return out;
}

// Enumerates tuples over `slots` in lex order and calls visit(choice, sum).
template <class Visit>
void for_each_tuple(const std::vector<std::vector<Vec>>& products, std::size_t first, std::size_t last,
                    std::size_t width, Visit&& visit) {
  std::vector<std::size_t> idx(last - first, 0);
  while (true) {
    Vec sum(width, 0);
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const Vec& p = products[first + s][idx[s]];
      for (std::size_t k = 0; k < p.size(); ++k) sum[k] += p[k];
    }
    if (!visit(idx, sum)) return;
    std::size_t k = idx.size();
    while (k > 0 && idx[k - 1] + 1 == products[first + k - 1].size()) idx[--k] = 0;
    if (k == 0) return;
    ++idx[k - 1];
  }
}

}  // namespace

std::optional<WitnessTuple> brute_force_oracle(std::span<const IntPoly> hs, int deg_bound, int coeff_bound) {
  if (hs.empty() || deg_bound < 0 || coeff_bound < 1) return std::nullopt;
  const std::size_t n = hs.size();
  const std::size_t left = n / 2;

  std::vector<Vec> fs = candidate_fs(deg_bound, coeff_bound);
  auto half_size = [&](std::size_t count) {
    double s = 1;
    for (std::size_t i = 0; i < count; ++i) s *= static_cast<double>(fs.size());
    return s;
  };
  if (half_size(left) > static_cast<double>(kOracleHalfLimit) ||
      half_size(n - left) > static_cast<double>(kOracleHalfLimit)) {
    throw Error(Errc::search_space_too_large, "brute_force_oracle: search space too large");
  }

  // Keep every partial sum comfortably inside int64.
  const BigInt limit = BigInt(1) << 40;
  int max_e = 0;
  for (const auto& h : hs) {
    for (const auto& c : h.coeffs()) {
      if (abs(c) > limit) throw Error(Errc::too_large, "brute_force_oracle: coefficient too large");
    }
    max_e = std::max(max_e, h.degree());
  }
  const std::size_t width = static_cast<std::size_t>(deg_bound + std::max(max_e, 0) + 1);

  std::vector<std::vector<Vec>> products(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& f : fs) {
      Vec p(width, 0);
      for (std::size_t a = 0; a < f.size(); ++a) {
        if (f[a] == 0) continue;
        for (std::size_t b = 0; b < hs[i].size(); ++b) p[a + b] += f[a] * hs[i][b].get_si();
      }
      products[i].push_back(std::move(p));
    }
  }

  std::unordered_map<Vec, std::vector<std::size_t>, VecHash> right;
  for_each_tuple(products, left, n, width, [&](const std::vector<std::size_t>& idx, const Vec& sum) {
    right.try_emplace(sum, idx);
    return true;
  });

  std::optional<WitnessTuple> found;
  for_each_tuple(products, 0, left, width, [&](const std::vector<std::size_t>& idx, const Vec& sum) {
    Vec need(sum.size());
    for (std::size_t k = 0; k < sum.size(); ++k) need[k] = -sum[k];
    auto it = right.find(need);
    if (it == right.end()) return true;
    WitnessTuple w{{}, deg_bound};
    for (std::size_t s : idx) w.fs.emplace_back(std::vector<BigInt>(fs[s].begin(), fs[s].end()));
    for (std::size_t s : it->second) w.fs.emplace_back(std::vector<BigInt>(fs[s].begin(), fs[s].end()));
    found = std::move(w);
    return false;
  });
  return found;
}

}  // namespace posring
