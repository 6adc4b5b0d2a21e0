#include "posring/wreath.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace posring {

WreathElement mul(const WreathElement& a, const WreathElement& b) {
  return {b.f + a.f.shifted(b.b), a.b + b.b};
}

long Word::height() const {
  long h = 0;
  for (const auto& l : letters) h += l.side == Side::plus ? 1 : -1;
  return h;
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k) os << ' ';
    os << (w.letters[k].side == Side::plus ? 'A' : 'B') << w.letters[k].index + 1;
  }
  return os.str();
}

WreathElement GeneratorSet::element(const Letter& l) const {
  const auto& list = l.side == Side::plus ? plus : minus;
  if (l.index >= list.size()) throw Error(Errc::bad_index, "generator index out of range");
  return {list[l.index], l.side == Side::plus ? 1L : -1L};
}

WreathElement word_product(const GeneratorSet& gens, const Word& w) {
  WreathElement acc;
  for (const auto& l : w.letters) acc = mul(acc, gens.element(l));
  return acc;
}

std::map<IndexPair, LaurentPoly> build_hij(const GeneratorSet& gens) {
  std::map<IndexPair, LaurentPoly> out;
  for (std::size_t i = 0; i < gens.plus.size(); ++i) {
    for (std::size_t j = 0; j < gens.minus.size(); ++j) out[{i, j}] = gens.plus[i].shifted(-1) + gens.minus[j];
  }
  return out;
}

std::vector<IntPoly> cover_instance(const GeneratorSet& gens, const CoverSubset& cover) {
  std::vector<LaurentPoly> hs;
  hs.reserve(cover.pairs.size());
  for (const auto& [i, j] : cover.pairs) {
    if (i >= gens.plus.size() || j >= gens.minus.size()) throw Error(Errc::bad_index, "cover pair out of range");
    hs.push_back(gens.plus[i].shifted(-1) + gens.minus[j]);
  }
  return laurent_normalize(hs).first;
}

CoverEnumerator::CoverEnumerator(std::size_t ni, std::size_t nj, std::size_t cap) : ni_(ni), nj_(nj), total_(ni * nj) {
  if (total_ > cap || total_ > 62) throw Error(Errc::too_large, "cover enumeration exceeds the pair cap");
  size_ = std::max(ni, nj);
}

bool CoverEnumerator::full(unsigned long long mask) const {
  for (std::size_t i = 0; i < ni_; ++i) {
    bool hit = false;
    for (std::size_t j = 0; j < nj_ && !hit; ++j) hit = (mask >> (i * nj_ + j)) & 1ULL;
    if (!hit) return false;
  }
  for (std::size_t j = 0; j < nj_; ++j) {
    bool hit = false;
    for (std::size_t i = 0; i < ni_ && !hit; ++i) hit = (mask >> (i * nj_ + j)) & 1ULL;
    if (!hit) return false;
  }
  return true;
}

std::optional<CoverSubset> CoverEnumerator::next() {
  if (ni_ == 0 || nj_ == 0) return std::nullopt;
  const unsigned long long end = 1ULL << total_;
  while (size_ <= total_) {
    if (!started_) {
      mask_ = (1ULL << size_) - 1;
      started_ = true;
    } else {
      // Gosper's hack: next mask with the same popcount.
      unsigned long long c = mask_ & (~mask_ + 1);
      unsigned long long r = mask_ + c;
      mask_ = (((r ^ mask_) >> 2) / c) | r;
    }
    if (mask_ >= end) {
      ++size_;
      started_ = false;
      continue;
    }
    if (!full(mask_)) continue;
    CoverSubset s;
    for (std::size_t b = 0; b < total_; ++b) {
      if ((mask_ >> b) & 1ULL) s.pairs.emplace_back(b / nj_, b % nj_);
    }
    return s;
  }
  return std::nullopt;
}

std::vector<CoverSubset> enumerate_covers(std::size_t ni, std::size_t nj, std::size_t cap) {
  CoverEnumerator e(ni, nj, cap);
  std::vector<CoverSubset> out;
  while (auto s = e.next()) out.push_back(std::move(*s));
  return out;
}

GroupResult is_group(const GeneratorSet& gens, const GroupOptions& opts) {
  GroupResult res;
  if (gens.plus.empty() || gens.minus.empty()) return res;
  CoverEnumerator covers(gens.plus.size(), gens.minus.size(), opts.cover_cap);

  auto run = [&](const CoverSubset& s) { return decide(cover_instance(gens, s), false); };
  auto accept = [&](const CoverSubset& s) -> bool {
    std::vector<IntPoly> hs = cover_instance(gens, s);
    Decision d = decide(hs, true, opts.degree_cap);
    if (!res.is_group) {
      res.is_group = true;
      res.cover = s;
      res.witness_status = d.witness_status;
    }
    if (d.witness_status == WitnessStatus::found) {
      res.cover = s;
      res.witness = std::move(d.witness);
      res.witness_status = WitnessStatus::found;
      return true;
    }
    return false;
  };

  const std::size_t batch = std::max(1u, opts.jobs);
  std::vector<CoverSubset> pending;
  bool exhausted = false;
  while (!exhausted) {
    pending.clear();
    while (pending.size() < batch) {
      auto s = covers.next();
      if (!s) {
        exhausted = true;
        break;
      }
      pending.push_back(std::move(*s));
    }
    std::vector<Status> verdicts(pending.size());
    if (batch == 1) {
      for (std::size_t k = 0; k < pending.size(); ++k) verdicts[k] = run(pending[k]).status;
    } else {
      std::vector<std::future<Decision>> futs;
      for (const auto& s : pending) futs.push_back(std::async(std::launch::async, run, std::cref(s)));
      for (std::size_t k = 0; k < futs.size(); ++k) verdicts[k] = futs[k].get().status;
    }
    res.covers_tried += pending.size();
    for (std::size_t k = 0; k < pending.size(); ++k) {
      if (verdicts[k] == Status::solvable && accept(pending[k])) return res;
    }
  }
  return res;
}

GeneratorSet subset(const GeneratorSet& gens, const std::vector<std::size_t>& plus, const std::vector<std::size_t>& minus) {
  GeneratorSet out;
  for (std::size_t i : plus) {
    if (i >= gens.plus.size()) throw Error(Errc::bad_index, "subset: plus index out of range");
    out.plus.push_back(gens.plus[i]);
  }
  for (std::size_t j : minus) {
    if (j >= gens.minus.size()) throw Error(Errc::bad_index, "subset: minus index out of range");
    out.minus.push_back(gens.minus[j]);
  }
  return out;
}

IdentityResult identity_in_semigroup(const GeneratorSet& gens, const GroupOptions& opts) {
  IdentityResult res;
  const std::size_t np = gens.plus.size();
  const std::size_t total = gens.size();
  if (total > opts.subset_cap || total > 62) throw Error(Errc::too_large, "generator count exceeds the subset cap");
  if (gens.plus.empty() || gens.minus.empty()) return res;

  for (std::size_t k = 2; k <= total; ++k) {
    // Combinations of size k in lexicographic order of the global index list.
    std::vector<std::size_t> comb(k);
    for (std::size_t t = 0; t < k; ++t) comb[t] = t;
    while (true) {
      std::vector<std::size_t> plus, minus;
      for (std::size_t g : comb) (g < np ? plus : minus).push_back(g < np ? g : g - np);
      if (!plus.empty() && !minus.empty()) {
        GroupResult gr = is_group(subset(gens, plus, minus), opts);
        if (gr.is_group) {
          res.found = true;
          res.plus_used = std::move(plus);
          res.minus_used = std::move(minus);
          res.group = std::move(gr);
          return res;
        }
      }
      std::size_t t = k;
      while (t > 0 && comb[t - 1] == total - k + t - 1) --t;
      if (t == 0) break;
      ++comb[t - 1];
      for (std::size_t u = t; u < k; ++u) comb[u] = comb[u - 1] + 1;
    }
  }
  return res;
}

}  // namespace posring
