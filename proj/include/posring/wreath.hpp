#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posring/laurent.hpp"
#include "posring/nxsolve.hpp"

namespace posring {

/// (f, b) standing for the matrix [[1, f], [0, X^b]].
struct WreathElement {
  LaurentPoly f;
  long b = 0;

  static WreathElement identity() { return {}; }
  bool is_identity() const { return f.is_zero() && b == 0; }
  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// (f, b) * (g, c) = (g + f X^c, b + c).
WreathElement mul(const WreathElement& a, const WreathElement& b);

enum class Side { plus, minus };

/// Generator reference: A_index for Side::plus, B_index for Side::minus (0-based).
struct Letter {
  Side side = Side::plus;
  std::size_t index = 0;
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct Word {
  std::vector<Letter> letters;

  /// Number of plus letters minus number of minus letters.
  long height() const;
  std::size_t size() const noexcept { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

/// Renders as "A1 B2 ..." with 1-based indices.
std::string to_string(const Word& w);

/// Generators (H, +1) in `plus` and (H, -1) in `minus`.
struct GeneratorSet {
  std::vector<LaurentPoly> plus;
  std::vector<LaurentPoly> minus;

  std::size_t size() const noexcept { return plus.size() + minus.size(); }
  /// Throws Errc::bad_index.
  WreathElement element(const Letter& l) const;
};

/// Throws Errc::bad_index for a letter outside the generator set.
WreathElement word_product(const GeneratorSet& gens, const Word& w);

using IndexPair = std::pair<std::size_t, std::size_t>;

/// h_ij = X^-1 H_i + H_j, the upper-right entry of A_i B_j.
std::map<IndexPair, LaurentPoly> build_hij(const GeneratorSet& gens);

/// Pairs (i in plus, j in minus), sorted.
struct CoverSubset {
  std::vector<IndexPair> pairs;
  friend bool operator==(const CoverSubset&, const CoverSubset&) = default;
};

inline constexpr std::size_t kDefaultCoverCap = 20;
inline constexpr std::size_t kDefaultSubsetCap = 12;

/// Yields every S subset of I x J with full projections exactly once, by
/// ascending cardinality. Throws Errc::too_large when |I|*|J| > cap.
class CoverEnumerator {
 public:
  CoverEnumerator(std::size_t ni, std::size_t nj, std::size_t cap = kDefaultCoverCap);
  std::optional<CoverSubset> next();

 private:
  bool full(unsigned long long mask) const;

  std::size_t ni_, nj_, total_;
  std::size_t size_ = 0;
  unsigned long long mask_ = 0;
  bool started_ = false;
};

std::vector<CoverSubset> enumerate_covers(std::size_t ni, std::size_t nj, std::size_t cap = kDefaultCoverCap);

struct GroupOptions {
  int degree_cap = kDefaultDegreeCap;
  std::size_t cover_cap = kDefaultCoverCap;
  std::size_t subset_cap = kDefaultSubsetCap;
  unsigned jobs = 1;
};

struct GroupResult {
  bool is_group = false;
  std::optional<CoverSubset> cover;
  std::optional<WitnessTuple> witness;  // aligned with cover->pairs
  WitnessStatus witness_status = WitnessStatus::not_requested;
  std::size_t covers_tried = 0;
};

/// Whether the generated semigroup is a group, with the first solvable cover.
GroupResult is_group(const GeneratorSet& gens, const GroupOptions& opts = {});

struct IdentityResult {
  bool found = false;
  std::vector<std::size_t> plus_used;   // indices into gens.plus
  std::vector<std::size_t> minus_used;  // indices into gens.minus
  GroupResult group;                    // relative to the chosen subset
};

/// Whether the semigroup contains the identity. Throws Errc::too_large when
/// the generator count exceeds opts.subset_cap.
IdentityResult identity_in_semigroup(const GeneratorSet& gens, const GroupOptions& opts = {});

/// Restriction of gens to the listed indices, in the listed order.
GeneratorSet subset(const GeneratorSet& gens, const std::vector<std::size_t>& plus, const std::vector<std::size_t>& minus);

struct LoopRecord {
  IndexPair pair;
  long height = 0;
  friend bool operator==(const LoopRecord&, const LoopRecord&) = default;
};

struct SynthesisTrace {
  bool degenerate = false;  // every h_ij is zero
  IndexPair uv{};
  IndexPair yz{};
  long x_shift = 0;   // common power of X divided out of the f_ij
  int m = 0;          // exponent of (1 + X)
  std::vector<IntPoly> scaled;  // (1 + X)^m X^-x_shift f_ij, aligned with the cover
  Word w0;
  std::vector<LoopRecord> loops;
  Word word;
};

struct SynthesisOptions {
  std::optional<int> m;  // must be at least the minimal valid exponent
};

/// Builds a height-0 word w with U(w) = sum scaled_ij h_ij for any nonzero
/// f_ij over N[X] (aligned with cover.pairs). Throws Errc::invalid_witness
/// for zero or negative f_ij, Errc::invalid_input for a bad m override.
SynthesisTrace synthesize_word(const GeneratorSet& gens, const CoverSubset& cover, const std::vector<IntPoly>& fs,
                               const SynthesisOptions& opts = {});

/// Identity word from a verified witness; throws Errc::invalid_witness if
/// sum f_ij h_ij != 0 or some f_ij is not in N[X] \ {0}.
Word synthesize_identity_word(const GeneratorSet& gens, const CoverSubset& cover, const std::vector<IntPoly>& fs,
                              const SynthesisOptions& opts = {});

/// The h_ij of a cover, cleared to ordinary polynomials by a common power of X.
std::vector<IntPoly> cover_instance(const GeneratorSet& gens, const CoverSubset& cover);

}  // namespace posring
