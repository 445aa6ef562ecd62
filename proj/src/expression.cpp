#include "phv/expression.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "phv/error.hpp"

namespace phv {

namespace {

struct RepTerm {
  std::uint64_t index;  // 1-based
  std::uint64_t coeff;
  std::size_t pos;
};

struct Rep {
  std::vector<RepTerm> terms;  // empty: trivial representation
  bool dual = false;
  std::size_t pos = 0;
};

struct ParsedSummand {
  std::vector<Rep> reps;
  std::optional<std::vector<std::uint64_t>> tags;
  std::size_t pos = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Module parse() {
    Module module;
    parse_group(module.group);
    expect(':');
    std::vector<ParsedSummand> summands{parse_summand()};
    while (accept('+')) summands.push_back(parse_summand());
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    build_summands(module, summands);
    validate(module);
    return module;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t pos) const {
    throw ParseError(what, pos);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::uint64_t nat() {
    if (!at_digit()) fail("expected a natural number");
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) {
        fail("number too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  std::string word() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void parse_group(GroupShape& group) {
    do {
      parse_group_item(group);
    } while (accept('x'));
  }

  void parse_group_item(GroupShape& group) {
    const auto start = (skip_ws(), pos_);
    const auto name = word();
    if (name.empty()) fail("expected a group factor");
    const auto n = nat();
    auto push = [&](Family family, std::uint64_t rank) {
      group.factors.push_back(SimpleFactor{family, static_cast<std::uint32_t>(rank)});
    };
    if (name == "GL") {
      if (n == 0) fail_at("invalid group size GL0", start);
      if (accept('^')) {
        if (n != 1) fail_at("only GL1 takes an exponent", start);
        group.torus_dim += static_cast<std::uint32_t>(nat());
        return;
      }
      group.torus_dim += 1;
      if (n >= 2) push(Family::A, n - 1);
    } else if (name == "SL") {
      if (n < 2) fail_at("invalid group size SL" + std::to_string(n), start);
      push(Family::A, n - 1);
    } else if (name == "Sp") {
      if (n < 1) fail_at("invalid group size Sp0", start);
      push(Family::C, n);
    } else if (name == "SO" || name == "Spin") {
      if (n % 2 == 1 && n >= 5) {
        push(Family::B, (n - 1) / 2);
      } else if (n % 2 == 0 && n >= 6) {
        push(Family::D, n / 2);
      } else {
        fail_at("invalid group size " + name + std::to_string(n), start);
      }
    } else if (name == "E" && n >= 6 && n <= 8) {
      push(n == 6 ? Family::E6 : n == 7 ? Family::E7 : Family::E8, n);
    } else if (name == "F" && n == 4) {
      push(Family::F4, 4);
    } else if (name == "G" && n == 2) {
      push(Family::G2, 2);
    } else {
      fail_at("unknown group factor " + name + std::to_string(n), start);
    }
  }

  ParsedSummand parse_summand() {
    ParsedSummand s;
    s.pos = (skip_ws(), pos_);
    const bool paren = accept('(');
    s.reps.push_back(parse_rep());
    while (accept('#')) s.reps.push_back(parse_rep());
    if (paren) expect(')');
    if (accept('@')) {
      std::vector<std::uint64_t> tags{nat()};
      while (accept(',')) tags.push_back(nat());
      s.tags = std::move(tags);
    }
    return s;
  }

  Rep parse_rep() {
    Rep rep;
    rep.pos = (skip_ws(), pos_);
    auto wterm = [&](std::uint64_t coeff) {
      const auto at = pos_;
      expect('w');
      rep.terms.push_back({nat(), coeff, at});
    };
    if (at_digit()) {
      const auto coeff = nat();
      if (peek() == 'w') {
        wterm(coeff);
      } else if (coeff == 1) {
        accept('*');
        return rep;
      } else {
        fail("expected 'w' after coefficient");
      }
    } else if (peek() == 'w') {
      wterm(1);
    } else {
      fail("expected a representation ('1' or a weight such as 2w1)");
    }
    while (true) {
      const auto save = pos_;
      if (!accept(',')) break;
      if (at_digit() || peek() == 'w') {
        wterm(at_digit() ? nat() : 1);
      } else {
        pos_ = save;
        break;
      }
    }
    rep.dual = accept('*');
    return rep;
  }

  HighestWeight build_weight(const SimpleFactor& f, const Rep& rep) const {
    HighestWeight w(f.rank);
    for (const auto& t : rep.terms) {
      if (t.index < 1 || t.index > f.rank) {
        fail_at("fundamental weight w" + std::to_string(t.index) + " out of range for " +
                    factor_name(f),
                t.pos);
      }
      const auto i = static_cast<std::uint32_t>(t.index - 1);
      const std::uint64_t sum = std::uint64_t{w[i]} + t.coeff;
      if (sum > std::numeric_limits<std::uint32_t>::max()) fail_at("coefficient too large", t.pos);
      w.set(i, static_cast<std::uint32_t>(sum));
    }
    return rep.dual ? dual_weight(f, w) : w;
  }

  void build_summands(Module& module, const std::vector<ParsedSummand>& parsed) const {
    const auto& factors = module.group.factors;
    for (const auto& f : factors) {
      try {
        validate(f);
      } catch (const Error& e) {
        fail_at(e.what(), 0);
      }
    }
    const bool tagged = std::any_of(parsed.begin(), parsed.end(),
                                    [](const ParsedSummand& s) { return s.tags.has_value(); });
    const std::uint32_t k = module.group.torus_dim;
    const std::size_t ns = parsed.size();
    for (std::size_t idx = 0; idx < ns; ++idx) {
      const auto& p = parsed[idx];
      Summand summand;
      if (factors.empty()) {
        if (p.reps.size() != 1 || !p.reps.front().terms.empty()) {
          fail_at("a group without simple factors only admits the trivial representation '1'",
                  p.pos);
        }
      } else {
        if (p.reps.size() != factors.size()) {
          fail_at("arity mismatch: " + std::to_string(p.reps.size()) + " representations for " +
                      std::to_string(factors.size()) + " simple factors",
                  p.pos);
        }
        for (std::size_t j = 0; j < factors.size(); ++j) {
          summand.weights.push_back(build_weight(factors[j], p.reps[j]));
        }
      }
      if (tagged) {
        if (p.tags) {
          const bool none = p.tags->size() == 1 && p.tags->front() == 0;
          if (!none) {
            for (auto t : *p.tags) {
              if (t < 1 || t > k) {
                fail_at("scalar slot @" + std::to_string(t) + " out of range for GL1^" +
                            std::to_string(k),
                        p.pos);
              }
              summand.scalar_slots.push_back(static_cast<std::uint32_t>(t - 1));
            }
          }
        }
        std::sort(summand.scalar_slots.begin(), summand.scalar_slots.end());
        summand.scalar_slots.erase(
            std::unique(summand.scalar_slots.begin(), summand.scalar_slots.end()),
            summand.scalar_slots.end());
      } else if (k == 1) {
        summand.scalar_slots = {0};
      } else if (idx < k) {
        summand.scalar_slots = {static_cast<std::uint32_t>(idx)};
      }
      module.summands.push_back(std::move(summand));
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::uint32_t> default_slots(std::uint32_t k, std::size_t idx) {
  if (k == 1) return {0};
  if (idx < k) return {static_cast<std::uint32_t>(idx)};
  return {};
}

}  // namespace

Module parse_module(std::string_view text) { return Parser(text).parse(); }

std::string factor_name(const SimpleFactor& f) {
  switch (f.family) {
    case Family::A: return "SL" + std::to_string(std::uint64_t{f.rank} + 1);
    case Family::B: return "SO" + std::to_string(2 * std::uint64_t{f.rank} + 1);
    case Family::C: return "Sp" + std::to_string(f.rank);
    case Family::D: return "SO" + std::to_string(2 * std::uint64_t{f.rank});
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

std::string format_weight(const HighestWeight& w) {
  if (w.is_zero()) return "1";
  std::string out;
  for (const auto& t : w.terms()) {
    if (!out.empty()) out += ',';
    if (t.coeff != 1) out += std::to_string(t.coeff);
    out += 'w';
    out += std::to_string(std::uint64_t{t.index} + 1);
  }
  return out;
}

std::string format_module(const Module& module) {
  const auto& group = module.group;
  std::vector<std::string> items;
  if (group.torus_dim == 1) items.emplace_back("GL1");
  if (group.torus_dim > 1) items.push_back("GL1^" + std::to_string(group.torus_dim));
  for (const auto& f : group.factors) items.push_back(factor_name(f));
  if (items.empty()) items.emplace_back("GL1^0");

  bool tags = group.factors.empty();
  for (std::size_t s = 0; s < module.summands.size() && !tags; ++s) {
    tags = module.summands[s].scalar_slots != default_slots(group.torus_dim, s);
  }

  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) os << (i ? " x " : "") << items[i];
  os << " : ";
  for (std::size_t s = 0; s < module.summands.size(); ++s) {
    const auto& summand = module.summands[s];
    if (s) os << " + ";
    if (group.factors.empty()) {
      os << '1';
    } else if (group.factors.size() == 1) {
      os << format_weight(summand.weights.front());
    } else {
      os << '(';
      for (std::size_t j = 0; j < summand.weights.size(); ++j) {
        os << (j ? " # " : "") << format_weight(summand.weights[j]);
      }
      os << ')';
    }
    if (tags) {
      os << '@';
      if (summand.scalar_slots.empty()) os << '0';
      for (std::size_t i = 0; i < summand.scalar_slots.size(); ++i) {
        os << (i ? "," : "") << summand.scalar_slots[i] + 1;
      }
    }
  }
  return os.str();
}

}  // namespace phv
