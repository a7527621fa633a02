#include "witt/differentiators.hpp"

#include <map>
#include <optional>

#include "witt/errors.hpp"
#include "witt/expr_io.hpp"
#include "witt/parallel.hpp"

namespace witt {

namespace {

// c with x = c * y, or nullopt; y must be nonzero.
std::optional<Rational> ratio(const WittElement& x, const WittElement& y) {
  if (y.is_zero()) return std::nullopt;
  const auto& [m, c] = *y.terms().begin();
  Rational r = x.coefficient(m) / c;
  if (!(x == y * r)) return std::nullopt;
  return r;
}

struct Summand {
  Rational coeff;
  DifferentiatorKey key;
};

CaseResult check_formula(const std::string& label, const WittElement& lhs,
                         const std::vector<Summand>& rhs_terms) {
  WittElement rhs;
  for (const auto& [c, key] : rhs_terms) {
    if (key.in_domain()) {
      rhs += omega(key) * c;
    } else if (!c.is_zero()) {
      return CaseResult::fail(label + ": out-of-domain key " + key.to_string() +
                                  " with nonzero coefficient",
                              print_canonical(lhs), c.to_string() + "*" + key.to_string());
    }
  }
  if (lhs == rhs) return CaseResult::pass(label);
  return CaseResult::fail(label, print_canonical(lhs), print_canonical(rhs));
}

}  // namespace

void DifferentiatorKey::validate() const {
  if (!in_domain())
    throw DomainError(to_string() + " is outside the domain m >= 0, s >= -1, k >= m-1");
}

std::string DifferentiatorKey::to_string() const {
  return "Omega^" + std::to_string(m) + "_{" + std::to_string(k) + "," +
         std::to_string(s) + "}";
}

WittElement omega(const DifferentiatorKey& key) {
  key.validate();
  WittElement out;
  for (int i = 0; i <= key.m; ++i)
    out += WittElement::from_word({key.k - i, key.s + i},
                                  Rational(sign_power(i)) * Rational(binomial(key.m, i)));
  return out;
}

WittElement omega_recursive(const DifferentiatorKey& key) {
  key.validate();
  thread_local std::map<DifferentiatorKey, WittElement> memo;
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  WittElement out =
      key.m == 0 ? WittElement::from_word({key.k, key.s})
                 : omega_recursive({key.m - 1, key.k, key.s}) -
                       omega_recursive({key.m - 1, key.k - 1, key.s + 1});
  memo.emplace(key, out);
  return out;
}

VerificationReport check_commutator_formulas(int m_max, int k_max, int s_max,
                                             unsigned jobs) {
  std::vector<DifferentiatorKey> keys;
  for (int m = 0; m <= m_max; ++m)
    for (int k = m - 1; k <= k_max; ++k)
      for (int s = -1; s <= s_max; ++s) keys.push_back({m, k, s});

  auto results = parallel_map<std::vector<CaseResult>>(
      keys.size(), jobs, [&](std::size_t idx) {
        const auto [m, k, s] = keys[idx];
        WittElement w = omega(m, k, s);
        std::string name = keys[idx].to_string();
        auto ad = [&](int j) { return commutator(WittElement::generator(j), w); };
        auto R = [](long c) { return Rational(c); };
        std::vector<CaseResult> out;
        out.push_back(check_formula("[e[-1], " + name + "]", ad(-1),
                                    {{R(k + 1 - m), {m, k - 1, s}},
                                     {R(s + 1), {m, k, s - 1}}}));
        out.push_back(check_formula("[e[0], " + name + "]", ad(0),
                                    {{R(k + s), {m, k, s}}}));
        out.push_back(check_formula("[e[1], " + name + "]", ad(1),
                                    {{R(k - 1), {m, k + 1, s}},
                                     {R(s - 1 + m), {m, k, s + 1}}}));
        out.push_back(check_formula("[e[2], " + name + "]", ad(2),
                                    {{R(k - 2), {m, k + 2, s}},
                                     {R(m), {m, k + 1, s + 1}},
                                     {R(s - 2 + m), {m, k, s + 2}}}));
        return out;
      });

  VerificationReport report;
  report.suite = "commutators";
  for (const auto& cases : results)
    for (const auto& c : cases) report.record(c);
  return report;
}

VerificationReport check_linear_relations(int n, int s_max) {
  if (n < 1) throw DomainError("linear relations need n >= 1");
  VerificationReport report;
  report.suite = "relations";
  const WittElement half_top = omega(2 * n + 2, 2 * n + 1, -1) * Rational(1, 2);
  const std::string top = DifferentiatorKey{2 * n + 2, 2 * n + 1, -1}.to_string();

  auto equal = [&](const std::string& label, const WittElement& a, const WittElement& b) {
    report.record(a == b ? CaseResult::pass(label)
                         : CaseResult::fail(label, print_canonical(a), print_canonical(b)));
  };
  DifferentiatorKey odd_a{2 * n + 1, 2 * n + 1, -1};
  DifferentiatorKey odd_b{2 * n + 1, 2 * n, 0};
  equal(odd_a.to_string() + " = 1/2*" + top, omega(odd_a), half_top);
  equal("-" + odd_b.to_string() + " = 1/2*" + top, -omega(odd_b), half_top);
  for (int s = -1; s <= s_max; ++s) {
    DifferentiatorKey diag{2 * n + 1, 2 * n + 1 + s, s};
    equal(diag.to_string() + " = 0", omega(diag), WittElement());
  }
  return report;
}

LoweringResult lowering_reduce(const DifferentiatorKey& key, int n) {
  if (n < 1) throw DomainError("lowering needs n >= 1");
  key.validate();
  if (key.m != 2 * n + 1 && key.m != 2 * n + 2)
    throw DomainError(key.to_string() + ": m must be 2n+1 or 2n+2 for n = " +
                      std::to_string(n));
  if (key.m == 2 * n + 1 && key.k - key.s == 2 * n + 1)
    throw DomainError(key.to_string() + " lies on the vanishing diagonal");

  LoweringResult r;
  r.lowerings = key.k + key.s - 2 * n;
  if (r.lowerings < 0) throw std::logic_error("off-diagonal key below degree 2n");
  if (key.m == 2 * n + 2)
    r.terminal = {2 * n + 2, 2 * n + 1, -1};
  else if (key.k - key.s > 2 * n + 1)
    r.terminal = {2 * n + 1, 2 * n + 1, -1};
  else
    r.terminal = {2 * n + 1, 2 * n, 0};

  const WittElement lower = WittElement::generator(-1);
  r.lowered = omega(key);
  for (int i = 0; i < r.lowerings; ++i) r.lowered = commutator(lower, r.lowered);
  r.multiplicity = ratio(r.lowered, omega(r.terminal));
  r.relative = ratio(r.lowered, omega(2 * n + 2, 2 * n + 1, -1));
  return r;
}

std::vector<DifferentiatorKey> lowering_keys(int n, int extra) {
  std::vector<DifferentiatorKey> keys;
  for (int m : {2 * n + 1, 2 * n + 2})
    for (int s = -1; s <= 2 * n + extra + 1; ++s)
      for (int k = m - 1; k + s <= 2 * n + extra; ++k) {
        if (m == 2 * n + 1 && k - s == 2 * n + 1) continue;
        keys.push_back({m, k, s});
      }
  return keys;
}

}  // namespace witt
