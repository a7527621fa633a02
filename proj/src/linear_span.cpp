#include "witt/linear_span.hpp"

namespace witt {

namespace {

// a += c * b, dropping cancelled entries.
void axpy(SparseVector& a, const Rational& c, const SparseVector& b) {
  for (const auto& [i, x] : b) {
    auto [it, inserted] = a.try_emplace(i, c * x);
    if (!inserted) {
      it->second += c * x;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

SparseVector to_sparse(const std::vector<Rational>& row) {
  SparseVector v;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (!row[i].is_zero()) v.emplace(i, row[i]);
  return v;
}

std::size_t common_width(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  std::size_t w = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != w) throw DomainError("rows have different lengths");
  return w;
}

}  // namespace

std::size_t EchelonBasis::insert(const SparseVector& x, bool* independent) {
  std::size_t id = inserted_++;
  SparseVector v = x;
  SparseVector cert{{id, Rational(1)}};
  // Only the leading entry matters for the echelon property, so stop at the
  // first coordinate without a pivot row.
  while (!v.empty()) {
    auto row = rows_.find(v.begin()->first);
    if (row == rows_.end()) break;
    Rational c = -v.begin()->second;
    axpy(v, c, row->second.v);
    axpy(cert, c, row->second.certificate);
  }
  if (independent) *independent = !v.empty();
  if (v.empty()) return id;
  Rational inv = v.begin()->second.inverse();
  for (auto& [i, c] : v) c *= inv;
  for (auto& [i, c] : cert) c *= inv;
  std::size_t pivot = v.begin()->first;
  rows_.emplace(pivot, Row{std::move(v), std::move(cert)});
  return id;
}

std::optional<SparseVector> EchelonBasis::member(const SparseVector& x) const {
  SparseVector v = x;
  SparseVector cert;
  while (!v.empty()) {
    auto row = rows_.find(v.begin()->first);
    if (row == rows_.end()) return std::nullopt;
    Rational c = -v.begin()->second;
    axpy(v, c, row->second.v);
    axpy(cert, c, row->second.certificate);
  }
  // v - sum(cert) = 0, so x = -cert.
  for (auto& [i, c] : cert) c = -c;
  return cert;
}

std::vector<SparseVector> EchelonBasis::reduced() const {
  std::map<std::size_t, SparseVector> out;
  // Back substitution from the largest pivot down.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVector v = it->second.v;
    auto pos = std::next(v.begin());
    while (pos != v.end()) {
      auto done = out.find(pos->first);
      if (done == out.end()) {
        ++pos;
        continue;
      }
      std::size_t col = pos->first;
      Rational c = -pos->second;
      axpy(v, c, done->second);
      pos = v.upper_bound(col);
    }
    out.emplace(it->first, std::move(v));
  }
  std::vector<SparseVector> rows;
  for (auto& [p, v] : out) rows.push_back(std::move(v));
  return rows;
}

std::vector<std::vector<Rational>> rref(const std::vector<std::vector<Rational>>& rows) {
  std::size_t width = common_width(rows);
  EchelonBasis basis;
  for (const auto& r : rows) basis.insert(to_sparse(r));
  std::vector<std::vector<Rational>> out;
  for (const auto& v : basis.reduced()) {
    std::vector<Rational> dense(width);
    for (const auto& [i, c] : v) dense[i] = c;
    out.push_back(std::move(dense));
  }
  return out;
}

std::size_t rank(const std::vector<std::vector<Rational>>& rows) {
  common_width(rows);
  EchelonBasis basis;
  for (const auto& r : rows) basis.insert(to_sparse(r));
  return basis.rank();
}

bool member(const std::vector<Rational>& x, const std::vector<std::vector<Rational>>& rows) {
  std::size_t width = common_width(rows);
  if (!rows.empty() && x.size() != width)
    throw DomainError("vector length does not match the rows");
  EchelonBasis basis;
  for (const auto& r : rows) basis.insert(to_sparse(r));
  return basis.contains(to_sparse(x));
}

}  // namespace witt
