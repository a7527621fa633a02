#include "witt/membership.hpp"

#include <map>
#include <set>

#include "witt/differentiators.hpp"
#include "witt/errors.hpp"
#include "witt/expr_io.hpp"
#include "witt/linear_span.hpp"
#include "witt/morphisms.hpp"
#include "witt/parallel.hpp"

namespace witt {

namespace {

void extend_words(pbw::Word& word, int remaining, int lo, int hi,
                  std::vector<WittMonomial>& out) {
  out.push_back(WittMonomial::from_word(word));
  if (remaining == 0) return;
  int start = word.empty() ? lo : word.back();
  for (int i = start; i <= hi; ++i) {
    word.push_back(i);
    extend_words(word, remaining - 1, lo, hi, out);
    word.pop_back();
  }
}

WittElement recombine(const SparseVector& certificate,
                      const std::vector<WittElement>& generators) {
  WittElement out;
  for (const auto& [id, c] : certificate) out += generators[id] * c;
  return out;
}

struct Product {
  WittMonomial x, y;
  WittElement z;
};

}  // namespace

std::vector<WittMonomial> pbw_monomials(int max_order, int lo, int hi) {
  if (lo < -1) throw IndexError("PBW monomials need indices >= -1");
  std::vector<WittMonomial> out;
  pbw::Word word;
  if (max_order >= 0) extend_words(word, max_order, lo, hi, out);
  return out;
}

VerificationReport one_sided_generation_check(int n, int order_bound, int index_bound,
                                              unsigned jobs) {
  if (n < 1) throw DomainError("one-sided generation needs n >= 1");
  if (order_bound < 0) throw DomainError("order bound must be >= 0");
  const WittElement G = omega(2 * n + 2, 2 * n + 1, -1);
  const long G_degree = 2L * n;

  std::vector<WittMonomial> factors = pbw_monomials(order_bound, -1, index_bound);
  std::map<long, std::vector<Product>> by_degree;
  for (const auto& x : factors)
    for (const auto& y : factors) {
      if (x.order() + y.order() > order_bound) continue;
      WittElement z = WittElement::monomial(x) * G * WittElement::monomial(y);
      by_degree[x.degree() + y.degree() + G_degree].push_back({x, y, std::move(z)});
    }

  std::vector<long> degrees;
  for (const auto& [d, products] : by_degree) degrees.push_back(d);

  struct DegreeOutcome {
    std::vector<CaseResult> cases;
    std::set<DifferentiatorKey> keys;
    std::size_t span_size = 0;
    std::size_t rank = 0;
  };

  auto outcomes = parallel_map<DegreeOutcome>(degrees.size(), jobs, [&](std::size_t idx) {
    const long D = degrees[idx];
    DegreeOutcome out;
    // deg(u) <= D - 2n because every nonzero differentiator used has k + s >= 2n.
    const long max_u_degree = D - G_degree;
    const int hi = static_cast<int>(max_u_degree + order_bound - 1);
    MonomialSpan<WittMonomial> span;
    std::vector<WittElement> generators;
    if (max_u_degree >= -order_bound) {
      for (const auto& u : pbw_monomials(order_bound, -1, std::max(hi, -1))) {
        if (u.degree() > max_u_degree) continue;
        const long e = D - u.degree();
        const WittElement uel = WittElement::monomial(u);
        for (int m : {2 * n + 1, 2 * n + 2})
          for (long s = -1; e - s >= m - 1; ++s) {
            DifferentiatorKey key{m, static_cast<int>(e - s), static_cast<int>(s)};
            WittElement w = omega(key);
            if (w.is_zero()) continue;
            out.keys.insert(key);
            generators.push_back(uel * w);
            span.insert(generators.back().terms());
          }
      }
    }
    out.span_size = generators.size();
    out.rank = span.rank();
    for (const auto& p : by_degree.at(D)) {
      std::string label = "(" + print_canonical(WittElement::monomial(p.x)) + ")*G*(" +
                          print_canonical(WittElement::monomial(p.y)) + ")";
      auto cert = span.member(p.z.terms());
      if (!cert) {
        out.cases.push_back(CaseResult::fail(label + " not found at order bound " +
                                                 std::to_string(order_bound),
                                             print_canonical(p.z), "left span"));
        continue;
      }
      WittElement back = recombine(*cert, generators);
      out.cases.push_back(back == p.z ? CaseResult::pass(label)
                                      : CaseResult::fail(label + " certificate mismatch",
                                                         print_canonical(p.z),
                                                         print_canonical(back)));
    }
    return out;
  });

  VerificationReport report;
  report.suite = "one-sided";
  std::set<DifferentiatorKey> keys;
  std::size_t span_total = 0, rank_total = 0;
  for (const auto& o : outcomes) {
    for (const auto& c : o.cases) report.record(c);
    keys.insert(o.keys.begin(), o.keys.end());
    span_total += o.span_size;
    rank_total += o.rank;
  }

  std::vector<DifferentiatorKey> key_list(keys.begin(), keys.end());
  const auto ctx = MorphismContext::psi(n);
  auto kernel = parallel_map<CaseResult>(key_list.size(), jobs, [&](std::size_t i) {
    TargetElement image = psi(ctx, omega(key_list[i]));
    std::string label = "Psi_" + std::to_string(n) + "(" + key_list[i].to_string() + ") = 0";
    return image.is_zero() ? CaseResult::pass(label)
                           : CaseResult::fail(label, print_canonical(image), "0");
  });
  for (const auto& c : kernel) report.record(c);

  report.notes.push_back("n = " + std::to_string(n) + ", order bound " +
                         std::to_string(order_bound) + ", index bound " +
                         std::to_string(index_bound) + ": " +
                         std::to_string(report.run - key_list.size()) + " products over " +
                         std::to_string(degrees.size()) + " degrees, " +
                         std::to_string(span_total) + " spanning products of rank " +
                         std::to_string(rank_total) + ", " +
                         std::to_string(key_list.size()) + " differentiators");
  return report;
}

VerificationReport degree_zero_generation_check(int k_max, int order_bound) {
  if (k_max < 1) throw DomainError("degree-zero check needs k_max >= 1");
  const WittElement em1 = WittElement::generator(-1);
  const std::vector<std::pair<WittElement, int>> gens = {
      {WittElement::generator(0), 1},
      {em1 * WittElement::generator(1), 2},
      {em1 * em1 * WittElement::generator(2), 3},
  };

  std::vector<WittElement> targets;
  for (int k = 1; k <= k_max; ++k) {
    WittElement x = WittElement::generator(k);
    for (int r = 0; r < k; ++r) x = em1 * x;
    targets.push_back(x);
  }
  std::vector<std::optional<int>> found_at(targets.size());
  std::vector<std::optional<SparseVector>> certificates(targets.size());

  MonomialSpan<WittMonomial> span;
  std::vector<WittElement> generators;
  // words[b] holds every product of generators with total order exactly b.
  std::vector<std::vector<WittElement>> words(static_cast<std::size_t>(order_bound) + 1);
  words[0].push_back(WittElement::scalar(Rational(1)));
  for (int b = 1; b <= order_bound; ++b) {
    for (const auto& [g, ord] : gens) {
      if (ord > b) continue;
      for (const auto& w : words[static_cast<std::size_t>(b - ord)]) {
        words[static_cast<std::size_t>(b)].push_back(w * g);
        generators.push_back(words[static_cast<std::size_t>(b)].back());
        span.insert(generators.back().terms());
      }
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (found_at[i]) continue;
      if (auto cert = span.member(targets[i].terms())) {
        found_at[i] = b;
        certificates[i] = std::move(cert);
      }
    }
  }

  VerificationReport report;
  report.suite = "degree-zero";
  for (std::size_t i = 0; i < targets.size(); ++i) {
    int k = static_cast<int>(i) + 1;
    std::string name = print_canonical(targets[i]);
    if (!found_at[i]) {
      report.record(CaseResult::fail(name + " not found at order bound " +
                                         std::to_string(order_bound),
                                     name, "span of generator words"));
      report.notes.push_back("k = " + std::to_string(k) + ": not found at order bound " +
                             std::to_string(order_bound));
      continue;
    }
    WittElement back = recombine(*certificates[i], generators);
    report.record(back == targets[i]
                      ? CaseResult::pass(name + " in span")
                      : CaseResult::fail(name + " certificate mismatch", name,
                                         print_canonical(back)));
    report.notes.push_back("k = " + std::to_string(k) + ": " + name +
                           " first found at order bound " + std::to_string(*found_at[i]));
  }
  report.notes.push_back(std::to_string(generators.size()) + " generator words, rank " +
                         std::to_string(span.rank()));
  return report;
}

}  // namespace witt
