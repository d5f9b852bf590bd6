#pragma once

// Core syntax of the simply typed lambda calculus with unit and binary
// products: types, snoc-list contexts, de Bruijn terms and renamings.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "nbe/errors.hpp"

namespace nbe {

/// Maximum constructor nesting accepted by the parser and by `nf`.
/// Evaluation is recursive, so deeper inputs are rejected with
/// DepthLimitExceeded (ParseError in the parser) instead of risking the
/// stack. Normalizing near the limit needs a generous stack; the CLI runs
/// on a 512 MiB thread stack.
inline constexpr std::size_t kMaxNesting = 10'000;

namespace detail {
struct TypeNode;
struct TermNode;
}  // namespace detail

struct BaseType;
struct UnitType;
struct ProdType;
struct ArrowType;

/// Immutable, shared simple type. Equality is structural.
class Type {
 public:
  using Node = std::variant<BaseType, UnitType, ProdType, ArrowType>;

  static Type base(std::size_t index);
  static Type unit();
  static Type prod(Type left, Type right);
  static Type arrow(Type domain, Type codomain);

  const Node& node() const;

  template <class T>
  const T* as() const;
  template <class T>
  bool is() const {
    return as<T>() != nullptr;
  }

  // Nesting depth: atoms have depth 1.
  std::size_t depth() const;
  std::size_t size() const;

  friend bool operator==(const Type& a, const Type& b);

 private:
  explicit Type(std::shared_ptr<const detail::TypeNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::TypeNode> node_;
};

struct BaseType {
  std::size_t index;
};
struct UnitType {};
struct ProdType {
  Type left;
  Type right;
};
struct ArrowType {
  Type domain;
  Type codomain;
};

namespace detail {
struct TypeNode {
  Type::Node value;
};
}  // namespace detail

inline const Type::Node& Type::node() const { return node_->value; }

template <class T>
const T* Type::as() const {
  return std::get_if<T>(&node());
}

/// Concrete syntax: `b0`, `Unit`, `A * B`, `A -> B`, minimal parentheses.
std::string to_string(const Type& type);
std::ostream& operator<<(std::ostream& os, const Type& type);

/// Typing context as a snoc list. Index 0 is the most recent binding.
class Ctx {
 public:
  Ctx() = default;
  /// Entries listed outermost first.
  Ctx(std::initializer_list<Type> outermost_first) : entries_(outermost_first) {}
  explicit Ctx(std::vector<Type> outermost_first) : entries_(std::move(outermost_first)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Type of de Bruijn index `i`; throws IndexOutOfRange.
  const Type& at(std::size_t i) const;
  Ctx snoc(Type type) const;

  const std::vector<Type>& outermost_first() const noexcept { return entries_; }

  friend bool operator==(const Ctx&, const Ctx&) = default;

 private:
  std::vector<Type> entries_;
};

std::ostream& operator<<(std::ostream& os, const Ctx& ctx);

const Type& type_at(const Ctx& ctx, std::size_t index);

struct Var;
struct UnitIntro;
struct Pair;
struct Fst;
struct Snd;
struct Abs;
struct App;

/// Well-scoped de Bruijn term. Fst/Snd record the type of the discarded
/// component and App records the argument type, so types can be
/// re-synthesized without a derivation.
class Term {
 public:
  using Node = std::variant<Var, UnitIntro, Pair, Fst, Snd, Abs, App>;

  static Term var(std::size_t index);
  static Term unit();
  static Term pair(Term first, Term second);
  static Term fst(Term pair, Type other);
  static Term snd(Term pair, Type other);
  static Term abs(Type domain, Term body);
  static Term app(Term fun, Term arg, Type arg_type);

  const Node& node() const;

  template <class T>
  const T* as() const;
  template <class T>
  bool is() const {
    return as<T>() != nullptr;
  }

  bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const detail::TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::TermNode> node_;
};

struct Var {
  std::size_t index;
};
struct UnitIntro {};
struct Pair {
  Term first;
  Term second;
};
struct Fst {
  Term pair;
  Type other;
};
struct Snd {
  Term pair;
  Type other;
};
struct Abs {
  Type domain;
  Term body;
};
struct App {
  Term fun;
  Term arg;
  Type arg_type;
};

namespace detail {
struct TermNode {
  Term::Node value;
};
}  // namespace detail

inline const Term::Node& Term::node() const { return node_->value; }

template <class T>
const T* Term::as() const {
  return std::get_if<T>(&node());
}

/// Debug rendering with raw de Bruijn indices, e.g. `(\:b0. #0)`.
std::string to_debug_string(const Term& term);
std::ostream& operator<<(std::ostream& os, const Term& term);

/// Number of constructors in the term (type annotations excluded).
std::size_t term_size(const Term& term);
/// Maximum constructor nesting. Computed without recursion.
std::size_t term_depth(const Term& term);

/// Type-preserving map from the positions of `source` to positions of
/// `target`. Entry j is the image of source index j.
class Renaming {
 public:
  /// Validates lengths, ranges and type preservation.
  static Renaming make(Ctx source, Ctx target, std::vector<std::size_t> targets);

  const Ctx& source() const noexcept { return source_; }
  const Ctx& target() const noexcept { return target_; }
  const std::vector<std::size_t>& targets() const noexcept { return targets_; }

  /// Image of source index `j`; throws ScopeError when out of range.
  std::size_t operator()(std::size_t j) const;
  bool is_identity() const noexcept;

  friend bool operator==(const Renaming&, const Renaming&) = default;

 private:
  Renaming(Ctx source, Ctx target, std::vector<std::size_t> targets)
      : source_(std::move(source)), target_(std::move(target)), targets_(std::move(targets)) {}

  Ctx source_;
  Ctx target_;
  std::vector<std::size_t> targets_;
};

std::ostream& operator<<(std::ostream& os, const Renaming& rho);

Renaming rename_id(const Ctx& ctx);
/// `second` after `first`; throws ContextMismatch unless
/// first.target() == second.source().
Renaming rename_compose(const Renaming& second, const Renaming& first);
Renaming rename_weaken(const Ctx& ctx, const Type& fresh);
Renaming rename_lift(const Renaming& rho, const Type& bound);

Term rename_term(const Term& term, const Renaming& rho);

}  // namespace nbe
