#pragma once

// Neutral and normal terms (long beta-eta normal forms), their renaming
// action, embedding into Term, and a recognizer for normal Terms.

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "nbe/syntax.hpp"

namespace nbe {

namespace detail {
struct NeNode;
struct NfNode;
}  // namespace detail

class Nf;

struct NVar;
struct NFst;
struct NSnd;
struct NApp;

/// Neutral term: a variable under a spine of eliminators.
class Ne {
 public:
  using Node = std::variant<NVar, NFst, NSnd, NApp>;

  static Ne var(std::size_t index);
  static Ne fst(Ne pair, Type other);
  static Ne snd(Ne pair, Type other);
  static Ne app(Ne fun, Nf arg, Type arg_type);

  const Node& node() const;
  template <class T>
  const T* as() const;
  template <class T>
  bool is() const {
    return as<T>() != nullptr;
  }

  friend bool operator==(const Ne& a, const Ne& b);

 private:
  explicit Ne(std::shared_ptr<const detail::NeNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::NeNode> node_;
};

struct NfNe;
struct NfUnit;
struct NfPair;
struct NfAbs;

/// Normal term. Neutrals are admitted only at base type, so every normal
/// term is fully eta-expanded.
class Nf {
 public:
  using Node = std::variant<NfNe, NfUnit, NfPair, NfAbs>;

  /// Precondition: `m` has a base type. See norm_base for the checked form.
  static Nf neutral(Ne m);
  static Nf unit();
  static Nf pair(Nf first, Nf second);
  static Nf abs(Type domain, Nf body);

  const Node& node() const;
  template <class T>
  const T* as() const;
  template <class T>
  bool is() const {
    return as<T>() != nullptr;
  }

  friend bool operator==(const Nf& a, const Nf& b);

 private:
  explicit Nf(std::shared_ptr<const detail::NfNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::NfNode> node_;
};

struct NVar {
  std::size_t index;
};
struct NFst {
  Ne pair;
  Type other;
};
struct NSnd {
  Ne pair;
  Type other;
};
struct NApp {
  Ne fun;
  Nf arg;
  Type arg_type;
};

struct NfNe {
  Ne neutral;
};
struct NfUnit {};
struct NfPair {
  Nf first;
  Nf second;
};
struct NfAbs {
  Type domain;
  Nf body;
};

namespace detail {
struct NeNode {
  Ne::Node value;
};
struct NfNode {
  Nf::Node value;
};
}  // namespace detail

inline const Ne::Node& Ne::node() const { return node_->value; }

template <class T>
const T* Ne::as() const {
  return std::get_if<T>(&node());
}
inline const Nf::Node& Nf::node() const { return node_->value; }

template <class T>
const T* Nf::as() const {
  return std::get_if<T>(&node());
}

std::ostream& operator<<(std::ostream& os, const Ne& m);
std::ostream& operator<<(std::ostream& os, const Nf& n);

Ne rename_ne(const Ne& m, const Renaming& rho);
Nf rename_nf(const Nf& n, const Renaming& rho);

Term embed_ne(const Ne& m);
Term embed_nf(const Nf& n);

/// Type synthesized by a neutral; throws TypeError or ScopeError.
Type type_of_ne(const Ctx& ctx, const Ne& m);
/// Throws TypeError unless `n` is a normal term of type `type` in `ctx`.
void check_nf(const Ctx& ctx, const Nf& n, const Type& type);

/// The base-type coercion from neutrals to normals. Throws NotBaseType.
Nf norm_base(const Ctx& ctx, const Ne& m);

/// The unique Nf embedding to `term`, or nullopt when `term` is not in long
/// beta-eta normal form. Throws TypeError unless `term` has type `type`.
std::optional<Nf> recognize_nf(const Ctx& ctx, const Term& term, const Type& type);

std::size_t nf_size(const Nf& n);

}  // namespace nbe
