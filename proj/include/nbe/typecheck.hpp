#pragma once

// Type synthesis for de Bruijn terms, and elaboration of named surface
// syntax into them.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nbe/errors.hpp"
#include "nbe/syntax.hpp"

namespace nbe {

/// Throws TypeError (ill-typed) or ScopeError (unbound de Bruijn index).
Type synth_type(const Ctx& ctx, const Term& term);

namespace surface {
struct Node;
}

/// Named-variable term as produced by the parser. May be ill-scoped or
/// ill-typed.
class SurfaceTerm {
 public:
  SurfaceTerm(surface::Node node, SourceSpan span);

  const surface::Node& node() const;
  const SourceSpan& span() const noexcept { return span_; }

 private:
  std::shared_ptr<const surface::Node> node_;
  SourceSpan span_;
};

namespace surface {

struct Name {
  std::string name;
};
struct Unit {};
struct Pair {
  SurfaceTerm first;
  SurfaceTerm second;
};
struct Fst {
  SurfaceTerm pair;
};
struct Snd {
  SurfaceTerm pair;
};
struct Lam {
  std::string name;
  Type domain;
  SurfaceTerm body;
};
struct App {
  SurfaceTerm fun;
  SurfaceTerm arg;
};

struct Node {
  std::variant<Name, Unit, Pair, Fst, Snd, Lam, App> value;
};

}  // namespace surface

inline const surface::Node& SurfaceTerm::node() const { return *node_; }

/// Named typing context, outermost binding first. Later entries shadow
/// earlier ones with the same name.
class NamedCtx {
 public:
  struct Entry {
    std::string name;
    Type type;
  };

  NamedCtx() = default;
  NamedCtx(std::initializer_list<Entry> outermost_first) : entries_(outermost_first) {}
  explicit NamedCtx(std::vector<Entry> outermost_first) : entries_(std::move(outermost_first)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Entry>& outermost_first() const noexcept { return entries_; }

  /// De Bruijn index of the innermost binding of `name`.
  std::optional<std::size_t> lookup(const std::string& name) const;
  /// Name bound at de Bruijn index `i`.
  const std::string& name_at(std::size_t i) const;
  NamedCtx snoc(std::string name, Type type) const;
  Ctx ctx() const;

 private:
  std::vector<Entry> entries_;
};

struct Elaborated {
  Term term;
  Type type;
};

/// Resolves names (innermost binding wins) and synthesizes the type.
/// Throws UnboundName or TypeError, both carrying the offending span.
Elaborated elaborate(const NamedCtx& ctx, const SurfaceTerm& term);

}  // namespace nbe
