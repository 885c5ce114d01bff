#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "finembed/setrep.hpp"

namespace finembed::dsl {

/// Owning pointer with value semantics: copies deeply, compares pointees.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

struct SetExpr;

struct Literal {
  std::vector<Nat> elements;  // as written
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Periodic {
  std::vector<bool> preperiod;
  Nat period = 1;
  std::vector<Nat> residues;
  friend bool operator==(const Periodic&, const Periodic&) = default;
};

enum class Name : std::uint8_t { Evens, Odds, Nat };

struct Named {
  Name name = Name::Nat;
  friend bool operator==(const Named&, const Named&) = default;
};

struct Translate {
  Box<SetExpr> expr;
  Nat offset = 0;
  friend bool operator==(const Translate&, const Translate&) = default;
};

struct Union {
  Box<SetExpr> left;
  Box<SetExpr> right;
  friend bool operator==(const Union&, const Union&) = default;
};

struct Intersect {
  Box<SetExpr> left;
  Box<SetExpr> right;
  friend bool operator==(const Intersect&, const Intersect&) = default;
};

/// shift(e; g1, ..., gk): {x : x + g in e for every g}.
struct ShiftIntersect {
  Box<SetExpr> expr;
  std::vector<Nat> shifts;
  friend bool operator==(const ShiftIntersect&, const ShiftIntersect&) = default;
};

struct DiffSet {
  Box<SetExpr> expr;
  friend bool operator==(const DiffSet&, const DiffSet&) = default;
};

struct SetExpr {
  std::variant<Literal, Periodic, Named, Translate, Union, Intersect, ShiftIntersect, DiffSet> node;
  friend bool operator==(const SetExpr&, const SetExpr&) = default;
};

/// Syntax or validation error at a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Grammar, whitespace-insensitive; "&" binds tighter than "|", both
/// left-associative:
///   union := inter ("|" inter)*
///   inter := term ("&" term)*
///   term  := atom ("+" NAT)*
///   atom  := "{" [NAT ("," NAT)*] "}" | "up(" BITS ";" NAT ";" [NAT ("," NAT)*] ")"
///          | "evens" | "odds" | "nat" | "diff(" union ")"
///          | "shift(" union ";" NAT ("," NAT)* ")" | "(" union ")"
SetExpr parse(std::string_view text);

/// Minimal-parenthesis text that parses back to an equal tree.
std::string to_string(const SetExpr& e);

/// Exact result whenever every leaf is exact; `horizon` bounds difference
/// sets of sampled intermediates. Throws std::invalid_argument on H = 0.
GroundSet eval(const SetExpr& e, Nat horizon);

}  // namespace finembed::dsl
