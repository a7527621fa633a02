#include "witt/witt_algebra.hpp"

#include <algorithm>

#include "witt/errors.hpp"

namespace witt {

namespace {

void check_index(int i) {
  if (i < -1)
    throw IndexError("Witt generator e_" + std::to_string(i) +
                     " does not exist (need index >= -1)");
}

BigInt factorial(long m) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

}  // namespace

WittMonomial::WittMonomial(std::vector<Run> runs) : runs_(std::move(runs)) {
  for (std::size_t k = 0; k < runs_.size(); ++k) {
    auto [i, mult] = runs_[k];
    check_index(i);
    if (mult < 1) throw DomainError("PBW run multiplicity must be positive");
    if (k > 0 && runs_[k - 1].first >= i)
      throw DomainError("PBW run indices must be strictly increasing");
    order_ += mult;
    degree_ += static_cast<long>(i) * mult;
  }
}

WittMonomial WittMonomial::from_word(std::span<const int> word) {
  std::vector<Run> runs;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0 && word[k] < word[k - 1])
      throw DomainError("PBW word must be non-decreasing");
    if (!runs.empty() && runs.back().first == word[k])
      ++runs.back().second;
    else
      runs.emplace_back(word[k], 1);
  }
  return WittMonomial(std::move(runs));
}

pbw::Word WittMonomial::word() const {
  pbw::Word w;
  w.reserve(static_cast<std::size_t>(order_));
  for (auto [i, mult] : runs_) w.insert(w.end(), static_cast<std::size_t>(mult), i);
  return w;
}

bool operator<(const WittMonomial& a, const WittMonomial& b) {
  if (a.order_ != b.order_) return a.order_ > b.order_;
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  // Lexicographic on the expanded words, computed run by run.
  std::size_t ia = 0, ib = 0;
  int ra = 0, rb = 0;  // letters already consumed from the current runs
  while (ia < a.runs_.size() && ib < b.runs_.size()) {
    int la = a.runs_[ia].first, lb = b.runs_[ib].first;
    if (la != lb) return la < lb;
    int take = std::min(a.runs_[ia].second - ra, b.runs_[ib].second - rb);
    ra += take;
    rb += take;
    if (ra == a.runs_[ia].second) ++ia, ra = 0;
    if (rb == b.runs_[ib].second) ++ib, rb = 0;
  }
  return ia == a.runs_.size() && ib < b.runs_.size();
}

WittElement WittElement::scalar(const Rational& c) {
  WittElement x;
  x.terms_.add(WittMonomial(), c);
  return x;
}

WittElement WittElement::generator(int i) {
  check_index(i);
  return monomial(WittMonomial({{i, 1}}));
}

WittElement WittElement::monomial(const WittMonomial& m, const Rational& c) {
  WittElement x;
  x.terms_.add(m, c);
  return x;
}

WittElement WittElement::from_word(const pbw::Word& word, const Rational& c) {
  for (int i : word) check_index(i);
  WittElement x;
  if (c.is_zero()) return x;
  for (const auto& [w, k] : pbw::thread_orderer(-1).normal_form(word))
    x.terms_.add(WittMonomial::from_word(w), k * c);
  return x;
}

WittElement operator*(const WittElement& a, const WittElement& b) {
  WittElement out;
  auto& engine = pbw::thread_orderer(-1);
  for (const auto& [ma, ca] : a.terms_) {
    pbw::Word wa = ma.word();
    for (const auto& [mb, cb] : b.terms_) {
      pbw::Word w = wa;
      pbw::Word wb = mb.word();
      w.insert(w.end(), wb.begin(), wb.end());
      Rational c = ca * cb;
      for (const auto& [nw, k] : engine.normal_form(w))
        out.terms_.add(WittMonomial::from_word(nw), k * c);
    }
  }
  return out;
}

WittElement bracket(int i, int j) {
  check_index(i);
  check_index(j);
  if (i == j) return WittElement();
  return WittElement::generator(i + j) * Rational(j - i);
}

WittElement multiply(const WittElement& a, const WittElement& b) {
  return a * b;
}

WittElement commutator(const WittElement& a, const WittElement& b) {
  return a * b - b * a;
}

int order(const WittElement& a) {
  if (a.is_zero()) throw ZeroElementError("order of zero element");
  // Canonical order puts the highest order first.
  return a.terms().begin()->first.order();
}

std::optional<long> degree(const WittElement& a) {
  if (a.is_zero()) throw ZeroElementError("degree of zero element");
  std::optional<long> d;
  for (const auto& [m, c] : a.terms()) {
    if (d && *d != m.degree()) return std::nullopt;
    d = m.degree();
  }
  return d;
}

CommutativeElement gr(const WittElement& a) {
  int top = order(a);
  CommutativeElement out(Alphabet::symmetric());
  for (const auto& [m, c] : a.terms()) {
    if (m.order() != top) continue;
    std::vector<CommutativeMonomial::Power> powers;
    for (auto [i, mult] : m.runs()) powers.emplace_back(Variable::e(i), mult);
    out.add_term(CommutativeMonomial(std::move(powers)), c);
  }
  return out;
}

WittElement sym(const CommutativeElement& x) {
  if (!x.alphabet().is_symmetric())
    throw ContextError("sym expects an element of S(W)");
  WittElement out;
  for (const auto& [m, c] : x.terms()) {
    pbw::Word word;
    BigInt repeats = 1;
    for (const auto& [v, k] : m.powers()) {
      word.insert(word.end(), static_cast<std::size_t>(k), v.index);
      repeats *= factorial(k);
    }
    std::sort(word.begin(), word.end());
    // Summing over distinct arrangements counts each one prod(k!) times in S_m.
    Rational weight = c * Rational(repeats, factorial(static_cast<long>(word.size())));
    do {
      out += WittElement::from_word(word, weight);
    } while (std::next_permutation(word.begin(), word.end()));
  }
  return out;
}

DensityPolynomial density_action(const Rational& lambda, int index,
                                 const DensityPolynomial& g) {
  check_index(index);
  DensityPolynomial out;
  for (const auto& [b, c] : g) {
    Rational k = (Rational(b) + lambda * Rational(index + 1)) * c;
    if (k.is_zero()) continue;
    // e_{-1} . 1 = 0 is covered by k == 0 above, so exponents stay >= 0.
    Rational& slot = out[index + b];
    slot += k;
    if (slot.is_zero()) out.erase(index + b);
  }
  return out;
}

DensityPolynomial density_action(const Rational& lambda, const WittElement& x,
                                 const DensityPolynomial& g) {
  DensityPolynomial out;
  for (const auto& [m, c] : x.terms()) {
    DensityPolynomial h = g;
    pbw::Word w = m.word();
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      h = density_action(lambda, *it, h);
    for (const auto& [e, k] : h) {
      Rational& slot = out[e];
      slot += k * c;
      if (slot.is_zero()) out.erase(e);
    }
  }
  return out;
}

}  // namespace witt
