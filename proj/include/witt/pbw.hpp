#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "witt/rational.hpp"
#include "witt/terms.hpp"

/// PBW normal ordering for the Witt-type bracket [e_i, e_j] = (j - i) e_{i+j},
/// optionally truncated so that letters of index >= cap vanish (the quotient
/// g_n = W_{>=0} / W_{>=n}).
namespace witt::pbw {

using Word = std::vector<int>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

bool is_sorted(const Word& w);

/// One application of e_i e_j -> e_j e_i + (j - i) e_{i+j} at the leftmost
/// position where i > j.
struct Rewrite {
  std::size_t position;
  Word swapped;
  Rational coefficient;
  /// Empty when e_{i+j} is truncated away.
  std::optional<Word> contracted;
};

/// Returns nullopt when w is already non-decreasing. cap < 0 means no cap.
std::optional<Rewrite> rewrite_leftmost(const Word& w, int cap);

/// Memoizing normal-form engine. Not thread-safe; use one per thread.
class NormalOrderer {
 public:
  explicit NormalOrderer(int cap = -1) : cap_(cap) {}

  /// Normal-ordered expansion of an arbitrary word. Words containing a
  /// letter at or above the cap expand to zero.
  Terms<Word> normal_form(const Word& w);

  int cap() const { return cap_; }
  /// Total rewrites performed since construction (memo hits cost nothing).
  std::size_t rewrite_steps() const { return steps_; }
  std::size_t cache_size() const { return memo_.size(); }

 private:
  const Terms<Word>& expand(const Word& w);

  int cap_;
  std::size_t steps_ = 0;
  std::unordered_map<Word, Terms<Word>, WordHash> memo_;
};

/// Per-thread engine for the given cap, shared by all ring multiplications.
NormalOrderer& thread_orderer(int cap);

}  // namespace witt::pbw
