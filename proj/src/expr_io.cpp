#include "witt/expr_io.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "witt/errors.hpp"

namespace witt {

namespace {

struct Factor {
  char atom;  // 'e', 'E', 'v', 't' or 'd'
  int index = 0;
  int exp = 1;
  std::size_t position = 0;
};

struct Term {
  Rational coeff{1};
  std::vector<Factor> factors;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<Term> parse_expr() {
    std::vector<Term> terms;
    skip();
    if (at_end()) throw ParseError("empty expression", pos_);
    terms.push_back(parse_term());
    for (;;) {
      skip();
      if (at_end()) break;
      char c = text_[pos_];
      if (c != '+' && c != '-')
        throw ParseError(std::string("expected '+' or '-', found '") + c + "'", pos_);
      ++pos_;
      Term t = parse_term();
      if (c == '-') t.coeff = -t.coeff;
      terms.push_back(std::move(t));
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return !at_end() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (at_end())
        throw ParseError(std::string("expected '") + c + "', found end of input", pos_);
      throw ParseError(std::string("expected '") + c + "', found '" + text_[pos_] + "'",
                       pos_);
    }
    ++pos_;
  }

  bool peek_digit() {
    skip();
    return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string_view digits() {
    skip();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", start);
    return text_.substr(start, pos_ - start);
  }

  int small_int(bool allow_sign) {
    skip();
    std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && peek('-')) {
      negative = true;
      ++pos_;
    }
    std::string_view d = digits();
    int value = 0;
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), value);
    if (ec != std::errc() || ptr != d.data() + d.size())
      throw ParseError("integer out of range", start);
    return negative ? -value : value;
  }

  Term parse_term() {
    Term term;
    skip();
    if (peek('-')) {
      ++pos_;
      term.coeff = Rational(-1);
    } else if (peek('+')) {
      ++pos_;
    }
    if (peek_digit()) {
      std::size_t start = pos_;
      std::string num(digits());
      if (peek('/')) {
        ++pos_;
        std::size_t den_pos = pos_;
        std::string den(digits());
        if (BigInt(den) == 0) throw ParseError("zero denominator", den_pos);
        num += "/" + den;
      }
      try {
        term.coeff = term.coeff * Rational::parse(num);
      } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational", start);
      }
      if (!peek('*')) return term;
      ++pos_;
    }
    term.factors.push_back(parse_factor());
    while (peek('*')) {
      ++pos_;
      term.factors.push_back(parse_factor());
    }
    return term;
  }

  Factor parse_factor() {
    skip();
    if (at_end()) throw ParseError("expected an atom, found end of input", pos_);
    Factor f;
    f.position = pos_;
    constexpr std::string_view partial = "∂";
    if (text_.substr(pos_, partial.size()) == partial) {
      f.atom = 'd';
      pos_ += partial.size();
    } else {
      char c = text_[pos_];
      switch (c) {
        case 't':
        case 'd':
          f.atom = c;
          ++pos_;
          break;
        case 'e':
        case 'E':
        case 'v':
          f.atom = c;
          ++pos_;
          expect('[');
          f.index = small_int(true);
          expect(']');
          break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      }
    }
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t exp_pos = pos_;
      f.exp = small_int(false);
      if (f.exp < 1) throw ParseError("exponent must be a positive integer", exp_pos);
    }
    return f;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string atom_text(const Factor& f) {
  if (f.atom == 't' || f.atom == 'd') return std::string(1, f.atom);
  return std::string(1, f.atom) + "[" + std::to_string(f.index) + "]";
}

[[noreturn]] void reject(const Factor& f, const std::string& ring) {
  throw ContextError("atom " + atom_text(f) + " (position " +
                     std::to_string(f.position) + ") is not available in " + ring);
}

char indexed_atom(const TargetRing& ring) { return ring.is_infinite() ? 'E' : 'v'; }

WittElement eval_witt(const std::vector<Term>& terms) {
  WittElement out;
  for (const Term& term : terms) {
    WittElement x = WittElement::scalar(term.coeff);
    for (const Factor& f : term.factors) {
      if (f.atom != 'e') reject(f, "U(W)");
      WittElement g = WittElement::generator(f.index);
      for (int r = 0; r < f.exp; ++r) x = x * g;
    }
    out += x;
  }
  return out;
}

TargetElement eval_target(const std::vector<Term>& terms, TargetRing ring) {
  TargetElement out(ring);
  for (const Term& term : terms) {
    TargetElement x = TargetElement::scalar(ring, term.coeff);
    for (const Factor& f : term.factors) {
      TargetElement g(ring);
      if (f.atom == 't') {
        g = TargetElement::t(ring);
      } else if (f.atom == 'd') {
        g = TargetElement::d(ring);
      } else if (f.atom == indexed_atom(ring)) {
        g = TargetElement::letter(ring, f.index);
      } else {
        reject(f, ring.name());
      }
      for (int r = 0; r < f.exp; ++r) x = x * g;
    }
    out += x;
  }
  return out;
}

CommutativeElement eval_commutative(const std::vector<Term>& terms,
                                    Alphabet alphabet) {
  CommutativeElement out(alphabet);
  for (const Term& term : terms) {
    std::vector<CommutativeMonomial::Power> powers;
    for (const Factor& f : term.factors) {
      Variable v{};
      if (alphabet.is_symmetric()) {
        if (f.atom != 'e') reject(f, alphabet.name());
        v = Variable::e(f.index);
      } else if (f.atom == 't') {
        v = Variable::t();
      } else if (f.atom == 'd') {
        v = Variable::d();
      } else if (f.atom == indexed_atom(alphabet.ring())) {
        v = f.atom == 'E' ? Variable::E(f.index) : Variable::v(f.index);
      } else {
        reject(f, alphabet.name());
      }
      if (!alphabet.admits(v))
        throw IndexError(atom_text(f) + " is outside the index range of " +
                         alphabet.name());
      powers.emplace_back(v, f.exp);
    }
    out.add_term(CommutativeMonomial(std::move(powers)), term.coeff);
  }
  return out;
}

std::string power_text(const std::string& atom, int exp) {
  return exp == 1 ? atom : atom + "^" + std::to_string(exp);
}

std::string indexed_text(char atom, int index) {
  return std::string(1, atom) + "[" + std::to_string(index) + "]";
}

std::string monomial_text(const WittMonomial& m) {
  std::string out;
  for (auto [i, mult] : m.runs()) {
    if (!out.empty()) out += "*";
    out += power_text(indexed_text('e', i), mult);
  }
  return out;
}

std::string monomial_text(const TargetMonomial& m, const TargetRing& ring) {
  std::vector<std::string> parts;
  if (m.t_exp() > 0) parts.push_back(power_text("t", m.t_exp()));
  if (m.d_exp() > 0) parts.push_back(power_text("d", m.d_exp()));
  for (auto [j, mult] : m.runs())
    parts.push_back(power_text(indexed_text(indexed_atom(ring), j), mult));
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  return out;
}

char letter_atom(Letter l) {
  switch (l) {
    case Letter::e:
      return 'e';
    case Letter::t:
      return 't';
    case Letter::d:
      return 'd';
    case Letter::v:
      return 'v';
    case Letter::E:
      return 'E';
  }
  return '?';
}

std::string monomial_text(const CommutativeMonomial& m) {
  std::string out;
  for (const auto& [v, k] : m.powers()) {
    if (!out.empty()) out += "*";
    char a = letter_atom(v.letter);
    out += power_text(a == 't' || a == 'd' ? std::string(1, a) : indexed_text(a, v.index),
                      k);
  }
  return out;
}

template <class Range, class Text>
std::string join_terms(const Range& terms, Text&& text) {
  std::string out;
  for (const auto& [m, c] : terms) {
    std::string mono = text(m);
    Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    if (mono.empty())
      out += mag.to_string();
    else if (mag.is_one())
      out += mono;
    else
      out += mag.to_string() + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

using nlohmann::json;

json atom_json(char atom, std::optional<int> index, int exp) {
  return json::array({std::string(1, atom), index ? json(*index) : json(nullptr), exp});
}

}  // namespace

RingSpec RingSpec::parse(std::string_view tag) {
  auto finite_or_inf = [&](std::string_view rest) -> TargetRing {
    if (rest == "inf") return TargetRing::infinite();
    int n = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size() || n < 0)
      throw std::invalid_argument("bad ring index in tag '" + std::string(tag) + "'");
    return TargetRing::finite(n);
  };
  if (tag == "uw") return witt();
  if (tag == "s") return symmetric();
  if (tag.starts_with("t:")) return target(finite_or_inf(tag.substr(2)));
  if (tag.starts_with("grt:")) return graded(finite_or_inf(tag.substr(4)));
  throw std::invalid_argument("unknown ring tag '" + std::string(tag) + "'");
}

std::string RingSpec::tag() const {
  std::string suffix = ring_.is_infinite() ? "inf" : std::to_string(ring_.n());
  switch (kind_) {
    case Kind::witt:
      return "uw";
    case Kind::target:
      return "t:" + suffix;
    case Kind::symmetric:
      return "s";
    case Kind::graded:
      return "grt:" + suffix;
  }
  return {};
}

AnyElement parse(std::string_view text, const RingSpec& ring) {
  std::vector<Term> terms = Parser(text).parse_expr();
  switch (ring.kind()) {
    case RingSpec::Kind::witt:
      return eval_witt(terms);
    case RingSpec::Kind::target:
      return eval_target(terms, ring.ring());
    case RingSpec::Kind::symmetric:
      return eval_commutative(terms, Alphabet::symmetric());
    case RingSpec::Kind::graded:
      return eval_commutative(terms, Alphabet::graded(ring.ring()));
  }
  throw std::logic_error("unhandled ring kind");
}

WittElement parse_witt(std::string_view text) {
  return eval_witt(Parser(text).parse_expr());
}

TargetElement parse_target(std::string_view text, TargetRing ring) {
  return eval_target(Parser(text).parse_expr(), ring);
}

CommutativeElement parse_commutative(std::string_view text, Alphabet alphabet) {
  return eval_commutative(Parser(text).parse_expr(), alphabet);
}

std::string print_canonical(const WittElement& x) {
  return join_terms(x.terms(), [](const WittMonomial& m) { return monomial_text(m); });
}

std::string print_canonical(const TargetElement& x) {
  return join_terms(x.terms(), [&](const TargetMonomial& m) {
    return monomial_text(m, x.ring());
  });
}

std::string print_canonical(const CommutativeElement& x) {
  return join_terms(x.terms(),
                    [](const CommutativeMonomial& m) { return monomial_text(m); });
}

std::string print_canonical(const AnyElement& x) {
  return std::visit([](const auto& y) { return print_canonical(y); }, x);
}

std::string export_json(const AnyElement& x, int indent) {
  json terms = json::array();
  std::string ring;
  if (const auto* w = std::get_if<WittElement>(&x)) {
    ring = RingSpec::witt().tag();
    for (const auto& [m, c] : w->terms()) {
      json mono = json::array();
      for (auto [i, mult] : m.runs()) mono.push_back(atom_json('e', i, mult));
      terms.push_back({{"coeff", c.to_string()}, {"monomial", mono}});
    }
  } else if (const auto* t = std::get_if<TargetElement>(&x)) {
    ring = RingSpec::target(t->ring()).tag();
    for (const auto& [m, c] : t->terms()) {
      json mono = json::array();
      if (m.t_exp() > 0) mono.push_back(atom_json('t', std::nullopt, m.t_exp()));
      if (m.d_exp() > 0) mono.push_back(atom_json('d', std::nullopt, m.d_exp()));
      for (auto [j, mult] : m.runs())
        mono.push_back(atom_json(indexed_atom(t->ring()), j, mult));
      terms.push_back({{"coeff", c.to_string()}, {"monomial", mono}});
    }
  } else {
    const auto& p = std::get<CommutativeElement>(x);
    ring = p.alphabet().is_symmetric() ? RingSpec::symmetric().tag()
                                       : RingSpec::graded(p.alphabet().ring()).tag();
    for (const auto& [m, c] : p.terms()) {
      json mono = json::array();
      for (const auto& [v, k] : m.powers()) {
        char a = letter_atom(v.letter);
        bool plain = a == 't' || a == 'd';
        mono.push_back(atom_json(a, plain ? std::nullopt : std::optional<int>(v.index), k));
      }
      terms.push_back({{"coeff", c.to_string()}, {"monomial", mono}});
    }
  }
  json out = {{"ring", ring}, {"terms", terms}};
  return out.dump(indent);
}

}  // namespace witt
