#include "finembed/dsl.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace finembed::dsl {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SetExpr parse_all() {
    SetExpr e = parse_union();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }

  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(pos_ < text_.size() ? "expected '" + std::string(1, c) + "' but found '" + std::string(1, text_[pos_]) + "'"
                               : "expected '" + std::string(1, c) + "' at end of input");
    }
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Nat number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    Nat value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) fail_at("number out of range", start);
    return value;
  }

  std::vector<Nat> number_list() {
    std::vector<Nat> out{number()};
    while (accept(',')) out.push_back(number());
    return out;
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  SetExpr parse_union() {
    SetExpr e = parse_intersect();
    while (accept('|')) e = SetExpr{Union{std::move(e), parse_intersect()}};
    return e;
  }

  SetExpr parse_intersect() {
    SetExpr e = parse_term();
    while (accept('&')) e = SetExpr{Intersect{std::move(e), parse_term()}};
    return e;
  }

  SetExpr parse_term() {
    SetExpr e = parse_atom();
    while (accept('+')) e = SetExpr{Translate{std::move(e), number()}};
    return e;
  }

  SetExpr parse_periodic() {
    skip_space();
    std::vector<bool> bits;
    while (pos_ < text_.size() && text_[pos_] != ';') {
      const char c = text_[pos_];
      if (c == '0' || c == '1') {
        bits.push_back(c == '1');
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        fail("malformed preperiod bits: expected 0 or 1");
      }
      ++pos_;
    }
    expect(';');
    skip_space();
    const std::size_t period_at = pos_;
    const Nat period = number();
    if (period == 0) fail_at("period must be positive", period_at);
    expect(';');
    std::vector<Nat> residues;
    if (!peek(')')) {
      for (;;) {
        skip_space();
        const std::size_t at = pos_;
        const Nat r = number();
        if (r >= period) fail_at("residue " + std::to_string(r) + " >= period " + std::to_string(period), at);
        residues.push_back(r);
        if (!accept(',')) break;
      }
    }
    expect(')');
    return SetExpr{Periodic{std::move(bits), period, std::move(residues)}};
  }

  SetExpr parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      if (accept('}')) return SetExpr{Literal{}};
      auto xs = number_list();
      expect('}');
      return SetExpr{Literal{std::move(xs)}};
    }
    if (c == '(') {
      ++pos_;
      SetExpr e = parse_union();
      expect(')');
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected a set expression");
    const std::size_t at = pos_;
    const std::string name = word();
    if (name == "evens") return SetExpr{Named{Name::Evens}};
    if (name == "odds") return SetExpr{Named{Name::Odds}};
    if (name == "nat") return SetExpr{Named{Name::Nat}};
    if (name == "up") {
      expect('(');
      return parse_periodic();
    }
    if (name == "diff") {
      expect('(');
      SetExpr e = parse_union();
      expect(')');
      return SetExpr{DiffSet{std::move(e)}};
    }
    if (name == "shift") {
      expect('(');
      SetExpr e = parse_union();
      expect(';');
      auto shifts = number_list();
      expect(')');
      return SetExpr{ShiftIntersect{std::move(e), std::move(shifts)}};
    }
    fail_at("unknown name '" + name + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Binding strength: union 0, intersect 1, translate 2, atoms 3.
int strength(const SetExpr& e) {
  if (std::holds_alternative<Union>(e.node)) return 0;
  if (std::holds_alternative<Intersect>(e.node)) return 1;
  if (std::holds_alternative<Translate>(e.node)) return 2;
  return 3;
}

std::string join(const std::vector<Nat>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string print(const SetExpr& e);

std::string print_at_least(const SetExpr& e, int min_strength) {
  return strength(e) >= min_strength ? print(e) : "(" + print(e) + ")";
}

std::string print(const SetExpr& e) {
  struct Visitor {
    std::string operator()(const Literal& x) const { return "{" + join(x.elements) + "}"; }
    std::string operator()(const Periodic& x) const {
      std::string bits;
      for (bool b : x.preperiod) bits += b ? '1' : '0';
      return "up(" + bits + ";" + std::to_string(x.period) + ";" + join(x.residues) + ")";
    }
    std::string operator()(const Named& x) const {
      switch (x.name) {
        case Name::Evens: return "evens";
        case Name::Odds: return "odds";
        case Name::Nat: return "nat";
      }
      return "nat";
    }
    std::string operator()(const Translate& x) const {
      return print_at_least(*x.expr, 2) + " + " + std::to_string(x.offset);
    }
    std::string operator()(const Union& x) const {
      return print_at_least(*x.left, 0) + " | " + print_at_least(*x.right, 1);
    }
    std::string operator()(const Intersect& x) const {
      return print_at_least(*x.left, 1) + " & " + print_at_least(*x.right, 2);
    }
    std::string operator()(const ShiftIntersect& x) const {
      return "shift(" + print(*x.expr) + "; " + join(x.shifts) + ")";
    }
    std::string operator()(const DiffSet& x) const { return "diff(" + print(*x.expr) + ")"; }
  };
  return std::visit(Visitor{}, e.node);
}

}  // namespace

SetExpr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const SetExpr& e) { return print(e); }

GroundSet eval(const SetExpr& e, Nat horizon) {
  if (horizon == 0) throw std::invalid_argument("evaluation horizon must be positive");
  struct Visitor {
    Nat horizon;
    GroundSet operator()(const Literal& x) const { return FiniteSet(x.elements); }
    GroundSet operator()(const Periodic& x) const {
      return normalize(UltimatelyPeriodic(x.preperiod, x.period, x.residues));
    }
    GroundSet operator()(const Named& x) const {
      switch (x.name) {
        case Name::Evens: return UltimatelyPeriodic::evens();
        case Name::Odds: return UltimatelyPeriodic::odds();
        case Name::Nat: return UltimatelyPeriodic::naturals();
      }
      return UltimatelyPeriodic::naturals();
    }
    GroundSet operator()(const Translate& x) const { return translate(eval(*x.expr, horizon), x.offset); }
    GroundSet operator()(const Union& x) const { return unite(eval(*x.left, horizon), eval(*x.right, horizon)); }
    GroundSet operator()(const Intersect& x) const {
      return intersect(eval(*x.left, horizon), eval(*x.right, horizon));
    }
    GroundSet operator()(const ShiftIntersect& x) const {
      return shift_down_intersect(eval(*x.expr, horizon), FiniteSet(x.shifts));
    }
    GroundSet operator()(const DiffSet& x) const { return difference_set(eval(*x.expr, horizon), horizon); }
  };
  return std::visit(Visitor{horizon}, e.node);
}

}  // namespace finembed::dsl
