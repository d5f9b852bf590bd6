#include "nbe/syntax.hpp"

#include "nbe/detail/overloaded.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace nbe {

using detail::overloaded;

// ---------------------------------------------------------------------------
// Type

Type Type::base(std::size_t index) {
  return Type(std::make_shared<const detail::TypeNode>(detail::TypeNode{BaseType{index}}));
}

Type Type::unit() {
  static const Type unit_type(std::make_shared<const detail::TypeNode>(detail::TypeNode{UnitType{}}));
  return unit_type;
}

Type Type::prod(Type left, Type right) {
  return Type(std::make_shared<const detail::TypeNode>(
      detail::TypeNode{ProdType{std::move(left), std::move(right)}}));
}

Type Type::arrow(Type domain, Type codomain) {
  return Type(std::make_shared<const detail::TypeNode>(
      detail::TypeNode{ArrowType{std::move(domain), std::move(codomain)}}));
}

std::size_t Type::depth() const {
  return std::visit(overloaded{
                        [](const BaseType&) -> std::size_t { return 1; },
                        [](const UnitType&) -> std::size_t { return 1; },
                        [](const ProdType& p) { return 1 + std::max(p.left.depth(), p.right.depth()); },
                        [](const ArrowType& a) { return 1 + std::max(a.domain.depth(), a.codomain.depth()); },
                    },
                    node());
}

std::size_t Type::size() const {
  return std::visit(overloaded{
                        [](const BaseType&) -> std::size_t { return 1; },
                        [](const UnitType&) -> std::size_t { return 1; },
                        [](const ProdType& p) { return 1 + p.left.size() + p.right.size(); },
                        [](const ArrowType& a) { return 1 + a.domain.size() + a.codomain.size(); },
                    },
                    node());
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node();
  const auto& y = b.node();
  if (x.index() != y.index()) return false;
  if (auto* p = std::get_if<BaseType>(&x)) return p->index == std::get<BaseType>(y).index;
  if (std::holds_alternative<UnitType>(x)) return true;
  if (auto* p = std::get_if<ProdType>(&x)) {
    const auto& q = std::get<ProdType>(y);
    return p->left == q.left && p->right == q.right;
  }
  const auto& p = std::get<ArrowType>(x);
  const auto& q = std::get<ArrowType>(y);
  return p.domain == q.domain && p.codomain == q.codomain;
}

namespace {

// 0: arrow level, 1: product level, 2: atom level.
void print_type(std::ostream& os, const Type& type, int level) {
  std::visit(overloaded{
                 [&](const BaseType& b) { os << 'b' << b.index; },
                 [&](const UnitType&) { os << "Unit"; },
                 [&](const ProdType& p) {
                   if (level > 1) os << '(';
                   print_type(os, p.left, 1);
                   os << " * ";
                   print_type(os, p.right, 2);
                   if (level > 1) os << ')';
                 },
                 [&](const ArrowType& a) {
                   if (level > 0) os << '(';
                   print_type(os, a.domain, 1);
                   os << " -> ";
                   print_type(os, a.codomain, 0);
                   if (level > 0) os << ')';
                 },
             },
             type.node());
}

}  // namespace

std::string to_string(const Type& type) {
  std::ostringstream os;
  print_type(os, type, 0);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Type& type) {
  print_type(os, type, 0);
  return os;
}

// ---------------------------------------------------------------------------
// Ctx

const Type& Ctx::at(std::size_t i) const {
  if (i >= entries_.size()) {
    throw IndexOutOfRange("variable index " + std::to_string(i) + " out of range for context of length " +
                          std::to_string(entries_.size()));
  }
  return entries_[entries_.size() - 1 - i];
}

Ctx Ctx::snoc(Type type) const {
  std::vector<Type> entries;
  entries.reserve(entries_.size() + 1);
  entries = entries_;
  entries.push_back(std::move(type));
  return Ctx(std::move(entries));
}

std::ostream& operator<<(std::ostream& os, const Ctx& ctx) {
  os << '[';
  const auto& entries = ctx.outermost_first();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    os << entries[i];
  }
  return os << ']';
}

const Type& type_at(const Ctx& ctx, std::size_t index) { return ctx.at(index); }

// ---------------------------------------------------------------------------
// Term

Term Term::var(std::size_t index) {
  return Term(std::make_shared<const detail::TermNode>(detail::TermNode{Var{index}}));
}

Term Term::unit() {
  static const Term unit_term(std::make_shared<const detail::TermNode>(detail::TermNode{UnitIntro{}}));
  return unit_term;
}

Term Term::pair(Term first, Term second) {
  return Term(std::make_shared<const detail::TermNode>(
      detail::TermNode{Pair{std::move(first), std::move(second)}}));
}

Term Term::fst(Term pair, Type other) {
  return Term(
      std::make_shared<const detail::TermNode>(detail::TermNode{Fst{std::move(pair), std::move(other)}}));
}

Term Term::snd(Term pair, Type other) {
  return Term(
      std::make_shared<const detail::TermNode>(detail::TermNode{Snd{std::move(pair), std::move(other)}}));
}

Term Term::abs(Type domain, Term body) {
  return Term(
      std::make_shared<const detail::TermNode>(detail::TermNode{Abs{std::move(domain), std::move(body)}}));
}

Term Term::app(Term fun, Term arg, Type arg_type) {
  return Term(std::make_shared<const detail::TermNode>(
      detail::TermNode{App{std::move(fun), std::move(arg), std::move(arg_type)}}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node();
  const auto& y = b.node();
  if (x.index() != y.index()) return false;
  return std::visit(overloaded{
                        [&](const Var& v) { return v.index == std::get<Var>(y).index; },
                        [&](const UnitIntro&) { return true; },
                        [&](const Pair& p) {
                          const auto& q = std::get<Pair>(y);
                          return p.first == q.first && p.second == q.second;
                        },
                        [&](const Fst& p) {
                          const auto& q = std::get<Fst>(y);
                          return p.other == q.other && p.pair == q.pair;
                        },
                        [&](const Snd& p) {
                          const auto& q = std::get<Snd>(y);
                          return p.other == q.other && p.pair == q.pair;
                        },
                        [&](const Abs& p) {
                          const auto& q = std::get<Abs>(y);
                          return p.domain == q.domain && p.body == q.body;
                        },
                        [&](const App& p) {
                          const auto& q = std::get<App>(y);
                          return p.arg_type == q.arg_type && p.fun == q.fun && p.arg == q.arg;
                        },
                    },
                    x);
}

namespace {

void print_debug(std::ostream& os, const Term& term) {
  std::visit(overloaded{
                 [&](const Var& v) { os << '#' << v.index; },
                 [&](const UnitIntro&) { os << "()"; },
                 [&](const Pair& p) {
                   os << '(';
                   print_debug(os, p.first);
                   os << ", ";
                   print_debug(os, p.second);
                   os << ')';
                 },
                 [&](const Fst& p) {
                   os << "fst[" << p.other << "](";
                   print_debug(os, p.pair);
                   os << ')';
                 },
                 [&](const Snd& p) {
                   os << "snd[" << p.other << "](";
                   print_debug(os, p.pair);
                   os << ')';
                 },
                 [&](const Abs& a) {
                   os << "(\\:" << a.domain << ". ";
                   print_debug(os, a.body);
                   os << ')';
                 },
                 [&](const App& a) {
                   os << '(';
                   print_debug(os, a.fun);
                   os << ' ';
                   print_debug(os, a.arg);
                   os << " :" << a.arg_type << ')';
                 },
             },
             term.node());
}

}  // namespace

std::string to_debug_string(const Term& term) {
  std::ostringstream os;
  print_debug(os, term);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& term) {
  print_debug(os, term);
  return os;
}

namespace {

template <class Visit>
void for_each_child(const Term& term, Visit&& visit) {
  std::visit(overloaded{
                 [](const Var&) {},
                 [](const UnitIntro&) {},
                 [&](const Pair& p) {
                   visit(p.first);
                   visit(p.second);
                 },
                 [&](const Fst& p) { visit(p.pair); },
                 [&](const Snd& p) { visit(p.pair); },
                 [&](const Abs& a) { visit(a.body); },
                 [&](const App& a) {
                   visit(a.fun);
                   visit(a.arg);
                 },
             },
             term.node());
}

}  // namespace

std::size_t term_size(const Term& term) {
  std::size_t count = 0;
  std::vector<const Term*> stack{&term};
  while (!stack.empty()) {
    const Term* t = stack.back();
    stack.pop_back();
    ++count;
    for_each_child(*t, [&](const Term& child) { stack.push_back(&child); });
  }
  return count;
}

std::size_t term_depth(const Term& term) {
  std::size_t deepest = 0;
  std::vector<std::pair<const Term*, std::size_t>> stack{{&term, 1}};
  while (!stack.empty()) {
    auto [t, d] = stack.back();
    stack.pop_back();
    deepest = std::max(deepest, d);
    for_each_child(*t, [&, d = d](const Term& child) { stack.emplace_back(&child, d + 1); });
  }
  return deepest;
}

// ---------------------------------------------------------------------------
// Renaming

Renaming Renaming::make(Ctx source, Ctx target, std::vector<std::size_t> targets) {
  if (targets.size() != source.size()) {
    throw ContextMismatch("renaming has " + std::to_string(targets.size()) + " entries for a source context of length " +
                          std::to_string(source.size()));
  }
  for (std::size_t j = 0; j < targets.size(); ++j) {
    if (targets[j] >= target.size()) {
      throw IndexOutOfRange("renaming maps index " + std::to_string(j) + " to " + std::to_string(targets[j]) +
                            ", outside a target context of length " + std::to_string(target.size()));
    }
    if (!(source.at(j) == target.at(targets[j]))) {
      throw ContextMismatch("renaming is not type preserving at index " + std::to_string(j) + ": " +
                            to_string(source.at(j)) + " vs " + to_string(target.at(targets[j])));
    }
  }
  return Renaming(std::move(source), std::move(target), std::move(targets));
}

std::size_t Renaming::operator()(std::size_t j) const {
  if (j >= targets_.size()) {
    throw ScopeError("index " + std::to_string(j) + " is outside the renaming's source context");
  }
  return targets_[j];
}

bool Renaming::is_identity() const noexcept {
  if (source_.size() != target_.size()) return false;
  for (std::size_t j = 0; j < targets_.size(); ++j) {
    if (targets_[j] != j) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Renaming& rho) {
  os << rho.source() << " -> " << rho.target() << " {";
  for (std::size_t j = 0; j < rho.targets().size(); ++j) {
    if (j) os << ", ";
    os << j << ":" << rho.targets()[j];
  }
  return os << '}';
}

Renaming rename_id(const Ctx& ctx) {
  std::vector<std::size_t> targets(ctx.size());
  for (std::size_t j = 0; j < targets.size(); ++j) targets[j] = j;
  return Renaming::make(ctx, ctx, std::move(targets));
}

Renaming rename_compose(const Renaming& second, const Renaming& first) {
  if (!(first.target() == second.source())) {
    throw ContextMismatch("cannot compose renamings: target " + [&] {
      std::ostringstream os;
      os << first.target() << " differs from source " << second.source();
      return os.str();
    }());
  }
  std::vector<std::size_t> targets(first.targets().size());
  for (std::size_t j = 0; j < targets.size(); ++j) targets[j] = second.targets()[first.targets()[j]];
  return Renaming::make(first.source(), second.target(), std::move(targets));
}

Renaming rename_weaken(const Ctx& ctx, const Type& fresh) {
  std::vector<std::size_t> targets(ctx.size());
  for (std::size_t j = 0; j < targets.size(); ++j) targets[j] = j + 1;
  return Renaming::make(ctx, ctx.snoc(fresh), std::move(targets));
}

Renaming rename_lift(const Renaming& rho, const Type& bound) {
  std::vector<std::size_t> targets;
  targets.reserve(rho.targets().size() + 1);
  targets.push_back(0);
  for (std::size_t t : rho.targets()) targets.push_back(t + 1);
  return Renaming::make(rho.source().snoc(bound), rho.target().snoc(bound), std::move(targets));
}

namespace {

// Renaming lifted through `binders` binders.
Term rename_under(const Term& term, const std::vector<std::size_t>& targets, std::size_t binders) {
  return std::visit(overloaded{
                        [&](const Var& v) {
                          if (v.index < binders) return term;
                          std::size_t j = v.index - binders;
                          if (j >= targets.size()) {
                            throw ScopeError("free variable #" + std::to_string(v.index) +
                                             " is outside the renaming's source context");
                          }
                          return Term::var(targets[j] + binders);
                        },
                        [&](const UnitIntro&) { return term; },
                        [&](const Pair& p) {
                          return Term::pair(rename_under(p.first, targets, binders),
                                            rename_under(p.second, targets, binders));
                        },
                        [&](const Fst& p) { return Term::fst(rename_under(p.pair, targets, binders), p.other); },
                        [&](const Snd& p) { return Term::snd(rename_under(p.pair, targets, binders), p.other); },
                        [&](const Abs& a) { return Term::abs(a.domain, rename_under(a.body, targets, binders + 1)); },
                        [&](const App& a) {
                          return Term::app(rename_under(a.fun, targets, binders),
                                           rename_under(a.arg, targets, binders), a.arg_type);
                        },
                    },
                    term.node());
}

}  // namespace

Term rename_term(const Term& term, const Renaming& rho) {
  if (rho.is_identity()) return term;
  return rename_under(term, rho.targets(), 0);
}

}  // namespace nbe
