#pragma once

#include <map>
#include <utility>

#include "witt/rational.hpp"

namespace witt {

/// Sparse Q-linear combination of monomials. Zero coefficients are never
/// stored; iteration follows Monomial's operator<, which is the canonical
/// print order.
template <class Monomial>
class Terms {
 public:
  using Map = std::map<Monomial, Rational>;
  using const_iterator = typename Map::const_iterator;

  Terms() = default;

  void add(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = map_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) map_.erase(it);
    }
  }

  void add(const Terms& other, const Rational& scale = Rational(1)) {
    if (scale.is_zero()) return;
    for (const auto& [m, c] : other.map_) add(m, c * scale);
  }

  Rational coefficient(const Monomial& m) const {
    auto it = map_.find(m);
    return it == map_.end() ? Rational(0) : it->second;
  }

  Terms scaled(const Rational& c) const {
    Terms out;
    if (c.is_zero()) return out;
    for (const auto& [m, k] : map_) out.map_.emplace_hint(out.map_.end(), m, k * c);
    return out;
  }

  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const_iterator begin() const { return map_.begin(); }
  const_iterator end() const { return map_.end(); }
  const Map& map() const { return map_; }

  friend bool operator==(const Terms& a, const Terms& b) {
    return a.map_ == b.map_;
  }

 private:
  Map map_;
};

}  // namespace witt
