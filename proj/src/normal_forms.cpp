#include "nbe/normal_forms.hpp"

#include <ostream>

#include "nbe/detail/overloaded.hpp"
#include "nbe/typecheck.hpp"

namespace nbe {

using detail::overloaded;

Ne Ne::var(std::size_t index) { return Ne(std::make_shared<const detail::NeNode>(detail::NeNode{NVar{index}})); }

Ne Ne::fst(Ne pair, Type other) {
  return Ne(std::make_shared<const detail::NeNode>(detail::NeNode{NFst{std::move(pair), std::move(other)}}));
}

Ne Ne::snd(Ne pair, Type other) {
  return Ne(std::make_shared<const detail::NeNode>(detail::NeNode{NSnd{std::move(pair), std::move(other)}}));
}

Ne Ne::app(Ne fun, Nf arg, Type arg_type) {
  return Ne(std::make_shared<const detail::NeNode>(
      detail::NeNode{NApp{std::move(fun), std::move(arg), std::move(arg_type)}}));
}

Nf Nf::neutral(Ne m) { return Nf(std::make_shared<const detail::NfNode>(detail::NfNode{NfNe{std::move(m)}})); }

Nf Nf::unit() {
  static const Nf unit_nf(std::make_shared<const detail::NfNode>(detail::NfNode{NfUnit{}}));
  return unit_nf;
}

Nf Nf::pair(Nf first, Nf second) {
  return Nf(std::make_shared<const detail::NfNode>(detail::NfNode{NfPair{std::move(first), std::move(second)}}));
}

Nf Nf::abs(Type domain, Nf body) {
  return Nf(std::make_shared<const detail::NfNode>(detail::NfNode{NfAbs{std::move(domain), std::move(body)}}));
}

bool operator==(const Ne& a, const Ne& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node();
  const auto& y = b.node();
  if (x.index() != y.index()) return false;
  return std::visit(overloaded{
                        [&](const NVar& v) { return v.index == std::get<NVar>(y).index; },
                        [&](const NFst& p) {
                          const auto& q = std::get<NFst>(y);
                          return p.other == q.other && p.pair == q.pair;
                        },
                        [&](const NSnd& p) {
                          const auto& q = std::get<NSnd>(y);
                          return p.other == q.other && p.pair == q.pair;
                        },
                        [&](const NApp& p) {
                          const auto& q = std::get<NApp>(y);
                          return p.arg_type == q.arg_type && p.fun == q.fun && p.arg == q.arg;
                        },
                    },
                    x);
}

bool operator==(const Nf& a, const Nf& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node();
  const auto& y = b.node();
  if (x.index() != y.index()) return false;
  return std::visit(overloaded{
                        [&](const NfNe& n) { return n.neutral == std::get<NfNe>(y).neutral; },
                        [&](const NfUnit&) { return true; },
                        [&](const NfPair& p) {
                          const auto& q = std::get<NfPair>(y);
                          return p.first == q.first && p.second == q.second;
                        },
                        [&](const NfAbs& p) {
                          const auto& q = std::get<NfAbs>(y);
                          return p.domain == q.domain && p.body == q.body;
                        },
                    },
                    x);
}

std::ostream& operator<<(std::ostream& os, const Ne& m) { return os << embed_ne(m); }
std::ostream& operator<<(std::ostream& os, const Nf& n) { return os << embed_nf(n); }

namespace {

Nf rename_nf_under(const Nf& n, const std::vector<std::size_t>& targets, std::size_t binders);

Ne rename_ne_under(const Ne& m, const std::vector<std::size_t>& targets, std::size_t binders) {
  return std::visit(overloaded{
                        [&](const NVar& v) {
                          if (v.index < binders) return m;
                          std::size_t j = v.index - binders;
                          if (j >= targets.size()) {
                            throw ScopeError("neutral variable #" + std::to_string(v.index) +
                                             " is outside the renaming's source context");
                          }
                          return Ne::var(targets[j] + binders);
                        },
                        [&](const NFst& p) { return Ne::fst(rename_ne_under(p.pair, targets, binders), p.other); },
                        [&](const NSnd& p) { return Ne::snd(rename_ne_under(p.pair, targets, binders), p.other); },
                        [&](const NApp& a) {
                          return Ne::app(rename_ne_under(a.fun, targets, binders),
                                         rename_nf_under(a.arg, targets, binders), a.arg_type);
                        },
                    },
                    m.node());
}

Nf rename_nf_under(const Nf& n, const std::vector<std::size_t>& targets, std::size_t binders) {
  return std::visit(overloaded{
                        [&](const NfNe& x) { return Nf::neutral(rename_ne_under(x.neutral, targets, binders)); },
                        [&](const NfUnit&) { return n; },
                        [&](const NfPair& p) {
                          return Nf::pair(rename_nf_under(p.first, targets, binders),
                                          rename_nf_under(p.second, targets, binders));
                        },
                        [&](const NfAbs& a) { return Nf::abs(a.domain, rename_nf_under(a.body, targets, binders + 1)); },
                    },
                    n.node());
}

}  // namespace

Ne rename_ne(const Ne& m, const Renaming& rho) {
  if (rho.is_identity()) return m;
  return rename_ne_under(m, rho.targets(), 0);
}

Nf rename_nf(const Nf& n, const Renaming& rho) {
  if (rho.is_identity()) return n;
  return rename_nf_under(n, rho.targets(), 0);
}

Term embed_ne(const Ne& m) {
  return std::visit(overloaded{
                        [](const NVar& v) { return Term::var(v.index); },
                        [](const NFst& p) { return Term::fst(embed_ne(p.pair), p.other); },
                        [](const NSnd& p) { return Term::snd(embed_ne(p.pair), p.other); },
                        [](const NApp& a) { return Term::app(embed_ne(a.fun), embed_nf(a.arg), a.arg_type); },
                    },
                    m.node());
}

Term embed_nf(const Nf& n) {
  return std::visit(overloaded{
                        [](const NfNe& x) { return embed_ne(x.neutral); },
                        [](const NfUnit&) { return Term::unit(); },
                        [](const NfPair& p) { return Term::pair(embed_nf(p.first), embed_nf(p.second)); },
                        [](const NfAbs& a) { return Term::abs(a.domain, embed_nf(a.body)); },
                    },
                    n.node());
}

Type type_of_ne(const Ctx& ctx, const Ne& m) {
  return std::visit(
      overloaded{
          [&](const NVar& v) -> Type {
            if (v.index >= ctx.size()) {
              throw ScopeError("neutral variable #" + std::to_string(v.index) + " is unbound");
            }
            return ctx.at(v.index);
          },
          [&](const NFst& p) -> Type {
            Type t = type_of_ne(ctx, p.pair);
            const auto* prod = t.as<ProdType>();
            if (!prod || !(prod->right == p.other)) throw TypeError("ill-typed neutral projection " + to_debug_string(embed_ne(m)));
            return prod->left;
          },
          [&](const NSnd& p) -> Type {
            Type t = type_of_ne(ctx, p.pair);
            const auto* prod = t.as<ProdType>();
            if (!prod || !(prod->left == p.other)) throw TypeError("ill-typed neutral projection " + to_debug_string(embed_ne(m)));
            return prod->right;
          },
          [&](const NApp& a) -> Type {
            Type t = type_of_ne(ctx, a.fun);
            const auto* arrow = t.as<ArrowType>();
            if (!arrow || !(arrow->domain == a.arg_type)) {
              throw TypeError("ill-typed neutral application " + to_debug_string(embed_ne(m)));
            }
            check_nf(ctx, a.arg, a.arg_type);
            return arrow->codomain;
          },
      },
      m.node());
}

void check_nf(const Ctx& ctx, const Nf& n, const Type& type) {
  std::visit(overloaded{
                 [&](const NfNe& x) {
                   if (!type.is<BaseType>()) {
                     throw TypeError("neutral " + to_debug_string(embed_ne(x.neutral)) +
                                     " used as a normal term at non-base type " + to_string(type));
                   }
                   Type actual = type_of_ne(ctx, x.neutral);
                   if (!(actual == type)) {
                     throw TypeError("neutral has type " + to_string(actual) + ", expected " + to_string(type));
                   }
                 },
                 [&](const NfUnit&) {
                   if (!type.is<UnitType>()) throw TypeError("() is not of type " + to_string(type));
                 },
                 [&](const NfPair& p) {
                   const auto* prod = type.as<ProdType>();
                   if (!prod) throw TypeError("pair is not of type " + to_string(type));
                   check_nf(ctx, p.first, prod->left);
                   check_nf(ctx, p.second, prod->right);
                 },
                 [&](const NfAbs& a) {
                   const auto* arrow = type.as<ArrowType>();
                   if (!arrow || !(arrow->domain == a.domain)) {
                     throw TypeError("abstraction over " + to_string(a.domain) + " is not of type " + to_string(type));
                   }
                   check_nf(ctx.snoc(a.domain), a.body, arrow->codomain);
                 },
             },
             n.node());
}

Nf norm_base(const Ctx& ctx, const Ne& m) {
  Type t = type_of_ne(ctx, m);
  if (!t.is<BaseType>()) {
    throw NotBaseType("neutral " + to_debug_string(embed_ne(m)) + " has non-base type " + to_string(t));
  }
  return Nf::neutral(m);
}

namespace {

// Both recognizers assume the input is well typed.
struct Recognizer {
  std::vector<Type> stack;

  struct Typed {
    Ne ne;
    Type type;
  };

  std::optional<Typed> neutral(const Term& t) {
    if (const auto* v = t.as<Var>()) return Typed{Ne::var(v->index), stack[stack.size() - 1 - v->index]};
    if (const auto* p = t.as<Fst>()) {
      auto inner = neutral(p->pair);
      if (!inner) return std::nullopt;
      Type left = inner->type.as<ProdType>()->left;
      return Typed{Ne::fst(std::move(inner->ne), p->other), std::move(left)};
    }
    if (const auto* p = t.as<Snd>()) {
      auto inner = neutral(p->pair);
      if (!inner) return std::nullopt;
      Type right = inner->type.as<ProdType>()->right;
      return Typed{Ne::snd(std::move(inner->ne), p->other), std::move(right)};
    }
    if (const auto* a = t.as<App>()) {
      auto fun = neutral(a->fun);
      if (!fun) return std::nullopt;
      auto arg = normal(a->arg, a->arg_type);
      if (!arg) return std::nullopt;
      Type codomain = fun->type.as<ArrowType>()->codomain;
      return Typed{Ne::app(std::move(fun->ne), std::move(*arg), a->arg_type), std::move(codomain)};
    }
    return std::nullopt;
  }

  std::optional<Nf> normal(const Term& t, const Type& type) {
    return std::visit(overloaded{
                          [&](const BaseType&) -> std::optional<Nf> {
                            auto m = neutral(t);
                            if (!m) return std::nullopt;
                            return Nf::neutral(std::move(m->ne));
                          },
                          [&](const UnitType&) -> std::optional<Nf> {
                            if (!t.is<UnitIntro>()) return std::nullopt;
                            return Nf::unit();
                          },
                          [&](const ProdType& p) -> std::optional<Nf> {
                            const auto* pair = t.as<Pair>();
                            if (!pair) return std::nullopt;
                            auto a = normal(pair->first, p.left);
                            if (!a) return std::nullopt;
                            auto b = normal(pair->second, p.right);
                            if (!b) return std::nullopt;
                            return Nf::pair(std::move(*a), std::move(*b));
                          },
                          [&](const ArrowType& a) -> std::optional<Nf> {
                            const auto* abs = t.as<Abs>();
                            if (!abs) return std::nullopt;
                            stack.push_back(a.domain);
                            auto body = normal(abs->body, a.codomain);
                            stack.pop_back();
                            if (!body) return std::nullopt;
                            return Nf::abs(a.domain, std::move(*body));
                          },
                      },
                      type.node());
  }
};

}  // namespace

std::optional<Nf> recognize_nf(const Ctx& ctx, const Term& term, const Type& type) {
  Type actual = synth_type(ctx, term);
  if (!(actual == type)) {
    throw TypeError("term " + to_debug_string(term) + " has type " + to_string(actual) + ", expected " +
                    to_string(type));
  }
  Recognizer r{ctx.outermost_first()};
  return r.normal(term, type);
}

std::size_t nf_size(const Nf& n) { return term_size(embed_nf(n)); }

}  // namespace nbe
