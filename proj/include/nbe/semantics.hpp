#pragma once

// Normalization by evaluation.
//
// Terms are evaluated into a context-indexed semantic domain: neutrals at
// base type, the unit value, pairs, and two first-order representations of
// Kripke functions (a term closure, or a reflected neutral). Reading a value
// back at its type (`quote`) yields the long beta-eta normal form; `unquote`
// turns a neutral into a value by eta-expanding it lazily.
//
// A value never records its context. Operations that need it (`quote`, the
// application site) receive it explicitly, and an Env records the context
// its values live in.

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <variant>
#include <vector>

#include "nbe/normal_forms.hpp"
#include "nbe/syntax.hpp"

namespace nbe {

namespace detail {
struct SemNode;
}

struct SBase;
struct SUnit;
struct SPair;
struct SClos;
struct SNeFun;

class Sem {
 public:
  using Node = std::variant<SBase, SUnit, SPair, SClos, SNeFun>;

  explicit Sem(Node node);

  const Node& node() const;
  template <class T>
  const T* as() const;
  template <class T>
  bool is() const {
    return as<T>() != nullptr;
  }

  friend bool operator==(const Sem& a, const Sem& b);

 private:
  std::shared_ptr<const detail::SemNode> node_;
};

/// Values for the variables of a source context, all living in the
/// ambient context.
class Env {
 public:
  explicit Env(Ctx ambient) : ambient_(std::move(ambient)) {}
  Env(Ctx ambient, std::vector<Sem> outermost_first)
      : ambient_(std::move(ambient)), values_(std::move(outermost_first)) {}

  const Ctx& ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Sem>& outermost_first() const noexcept { return values_; }

  /// Value of de Bruijn index `i`; throws ScopeError.
  const Sem& lookup(std::size_t i) const;
  Env extend(Sem value) const;

  friend bool operator==(const Env&, const Env&) = default;

 private:
  Ctx ambient_;
  std::vector<Sem> values_;
};

struct SBase {
  Ne neutral;
};
struct SUnit {};
struct SPair {
  Sem first;
  Sem second;
};
/// `\x:domain. body` under `env`; body is scoped in env's source context
/// extended with `domain`.
struct SClos {
  Type domain;
  Term body;
  Env env;
};
/// A reflected neutral of type `domain -> codomain`.
struct SNeFun {
  Ne neutral;
  Type domain;
  Type codomain;
};

namespace detail {
struct SemNode {
  Sem::Node value;
};
}  // namespace detail

inline const Sem::Node& Sem::node() const { return node_->value; }

template <class T>
const T* Sem::as() const {
  return std::get_if<T>(&node());
}

std::ostream& operator<<(std::ostream& os, const Sem& v);
std::ostream& operator<<(std::ostream& os, const Env& e);

Sem sem_rename(const Sem& v, const Renaming& rho);
Env env_rename(const Env& e, const Renaming& rho);

/// Kripke application: `f` lives in rho.source(), `arg` in rho.target().
Sem sem_apply(const Sem& f, const Renaming& rho, const Sem& arg);

Sem eval(const Term& term, const Env& env);

/// Reflect a neutral of the given type.
Sem unquote(const Type& type, const Ne& m);
/// Reify a value of the given type living in `ctx`.
Nf quote(const Ctx& ctx, const Type& type, const Sem& v);

Env identity_env(const Ctx& ctx);

/// Long beta-eta normal form. Throws TypeError, ScopeError or
/// DepthLimitExceeded.
Nf nf(const Ctx& ctx, const Term& term);

}  // namespace nbe
