#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "witt/errors.hpp"
#include "witt/rational.hpp"
#include "witt/terms.hpp"

namespace witt {

/// Sparse vector: coordinate -> nonzero coefficient.
using SparseVector = std::map<std::size_t, Rational>;

/// Incremental exact elimination over Q. Each stored row is monic at its
/// pivot, the pivot being the row's smallest coordinate, and no two rows
/// share a pivot. Rows remember which inserted vectors they combine, so
/// membership comes with a certificate.
class EchelonBasis {
 public:
  /// Adds a vector and returns its id (ids count every insert, dependent or
  /// not). Returns true in *independent when the rank grew.
  std::size_t insert(const SparseVector& v, bool* independent = nullptr);

  /// Coefficients c_id with x = sum c_id * inserted[id], or nullopt when x is
  /// outside the span.
  std::optional<SparseVector> member(const SparseVector& x) const;
  bool contains(const SparseVector& x) const { return member(x).has_value(); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  /// Reduced row echelon form, rows ordered by pivot.
  std::vector<SparseVector> reduced() const;

 private:
  struct Row {
    SparseVector v;
    SparseVector certificate;
  };
  std::map<std::size_t, Row> rows_;  // keyed by pivot
  std::size_t inserted_ = 0;
};

/// Dense row helpers. All rows must have the same length (DomainError
/// otherwise).
std::vector<std::vector<Rational>> rref(const std::vector<std::vector<Rational>>& rows);
std::size_t rank(const std::vector<std::vector<Rational>>& rows);
bool member(const std::vector<Rational>& x, const std::vector<std::vector<Rational>>& rows);

/// Span of ring elements with monomial coordinates assigned on first sight.
template <class Monomial>
class MonomialSpan {
 public:
  std::size_t insert(const Terms<Monomial>& x, bool* independent = nullptr) {
    return basis_.insert(coordinates(x, true), independent);
  }
  /// Certificate over the inserted elements, or nullopt.
  std::optional<SparseVector> member(const Terms<Monomial>& x) const {
    SparseVector v;
    for (const auto& [m, c] : x) {
      auto it = index_.find(m);
      if (it == index_.end()) return std::nullopt;  // unseen coordinate
      v.emplace(it->second, c);
    }
    return basis_.member(v);
  }
  std::size_t rank() const { return basis_.rank(); }
  std::size_t dimension() const { return index_.size(); }

 private:
  SparseVector coordinates(const Terms<Monomial>& x, bool extend) {
    SparseVector v;
    for (const auto& [m, c] : x) {
      auto it = index_.find(m);
      if (it == index_.end()) {
        if (!extend) throw DomainError("unknown coordinate");
        it = index_.emplace(m, index_.size()).first;
      }
      v.emplace(it->second, c);
    }
    return v;
  }

  std::map<Monomial, std::size_t> index_;
  EchelonBasis basis_;
};

}  // namespace witt
