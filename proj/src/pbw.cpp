#include "witt/pbw.hpp"

#include <algorithm>
#include <map>

namespace witt::pbw {

namespace {
constexpr std::size_t kMemoLimit = 1u << 20;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = w.size();
  for (int x : w)
    h ^= static_cast<std::size_t>(x + 0x9e3779b9) + (h << 6) + (h >> 2);
  return h;
}

bool is_sorted(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

std::optional<Rewrite> rewrite_leftmost(const Word& w, int cap) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    int i = w[p];
    int j = w[p + 1];
    if (i <= j) continue;
    Rewrite r;
    r.position = p;
    r.swapped = w;
    std::swap(r.swapped[p], r.swapped[p + 1]);
    r.coefficient = Rational(j - i);
    if (cap < 0 || i + j < cap) {
      Word c;
      c.reserve(w.size() - 1);
      c.insert(c.end(), w.begin(), w.begin() + static_cast<long>(p));
      c.push_back(i + j);
      c.insert(c.end(), w.begin() + static_cast<long>(p) + 2, w.end());
      r.contracted = std::move(c);
    }
    return r;
  }
  return std::nullopt;
}

Terms<Word> NormalOrderer::normal_form(const Word& w) {
  if (cap_ >= 0 &&
      std::any_of(w.begin(), w.end(), [&](int x) { return x >= cap_; }))
    return {};
  if (memo_.size() > kMemoLimit) memo_.clear();
  return expand(w);
}

const Terms<Word>& NormalOrderer::expand(const Word& w) {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  Terms<Word> out;
  if (auto r = rewrite_leftmost(w, cap_)) {
    ++steps_;
    out.add(expand(r->swapped));
    if (r->contracted) out.add(expand(*r->contracted), r->coefficient);
  } else {
    out.add(w, Rational(1));
  }
  // unordered_map keeps references stable across inserts.
  return memo_.emplace(w, std::move(out)).first->second;
}

NormalOrderer& thread_orderer(int cap) {
  thread_local std::map<int, NormalOrderer> engines;
  auto it = engines.find(cap);
  if (it == engines.end()) it = engines.emplace(cap, NormalOrderer(cap)).first;
  return it->second;
}

}  // namespace witt::pbw
