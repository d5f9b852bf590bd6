#include "nbe/oracle.hpp"

#include <array>

#include "nbe/detail/overloaded.hpp"
#include "nbe/typecheck.hpp"

namespace nbe {

using detail::overloaded;

namespace {

// Adds `amount` to every variable at or above `cutoff`.
Term shift(const Term& t, std::size_t amount, std::size_t cutoff = 0) {
  if (amount == 0) return t;
  return std::visit(overloaded{
                        [&](const Var& v) { return v.index < cutoff ? t : Term::var(v.index + amount); },
                        [&](const UnitIntro&) { return t; },
                        [&](const Pair& p) { return Term::pair(shift(p.first, amount, cutoff), shift(p.second, amount, cutoff)); },
                        [&](const Fst& p) { return Term::fst(shift(p.pair, amount, cutoff), p.other); },
                        [&](const Snd& p) { return Term::snd(shift(p.pair, amount, cutoff), p.other); },
                        [&](const Abs& a) { return Term::abs(a.domain, shift(a.body, amount, cutoff + 1)); },
                        [&](const App& a) {
                          return Term::app(shift(a.fun, amount, cutoff), shift(a.arg, amount, cutoff), a.arg_type);
                        },
                    },
                    t.node());
}

bool occurs_free(const Term& t, std::size_t index) {
  return std::visit(overloaded{
                        [&](const Var& v) { return v.index == index; },
                        [&](const UnitIntro&) { return false; },
                        [&](const Pair& p) { return occurs_free(p.first, index) || occurs_free(p.second, index); },
                        [&](const Fst& p) { return occurs_free(p.pair, index); },
                        [&](const Snd& p) { return occurs_free(p.pair, index); },
                        [&](const Abs& a) { return occurs_free(a.body, index + 1); },
                        [&](const App& a) { return occurs_free(a.fun, index) || occurs_free(a.arg, index); },
                    },
                    t.node());
}

// Removes variable `cutoff` (which must not occur) by lowering the ones
// above it.
Term unshift(const Term& t, std::size_t cutoff = 0) {
  return std::visit(overloaded{
                        [&](const Var& v) { return v.index < cutoff ? t : Term::var(v.index - 1); },
                        [&](const UnitIntro&) { return t; },
                        [&](const Pair& p) { return Term::pair(unshift(p.first, cutoff), unshift(p.second, cutoff)); },
                        [&](const Fst& p) { return Term::fst(unshift(p.pair, cutoff), p.other); },
                        [&](const Snd& p) { return Term::snd(unshift(p.pair, cutoff), p.other); },
                        [&](const Abs& a) { return Term::abs(a.domain, unshift(a.body, cutoff + 1)); },
                        [&](const App& a) { return Term::app(unshift(a.fun, cutoff), unshift(a.arg, cutoff), a.arg_type); },
                    },
                    t.node());
}

// images[j] replaces free variable j; images are scoped outside all binders.
Term subst_under(const Term& t, const std::vector<Term>& images, std::size_t binders) {
  return std::visit(overloaded{
                        [&](const Var& v) {
                          if (v.index < binders) return t;
                          std::size_t j = v.index - binders;
                          if (j >= images.size()) {
                            throw ScopeError("variable #" + std::to_string(v.index) +
                                             " is outside the substitution's source context");
                          }
                          return shift(images[j], binders);
                        },
                        [&](const UnitIntro&) { return t; },
                        [&](const Pair& p) {
                          return Term::pair(subst_under(p.first, images, binders), subst_under(p.second, images, binders));
                        },
                        [&](const Fst& p) { return Term::fst(subst_under(p.pair, images, binders), p.other); },
                        [&](const Snd& p) { return Term::snd(subst_under(p.pair, images, binders), p.other); },
                        [&](const Abs& a) { return Term::abs(a.domain, subst_under(a.body, images, binders + 1)); },
                        [&](const App& a) {
                          return Term::app(subst_under(a.fun, images, binders), subst_under(a.arg, images, binders),
                                           a.arg_type);
                        },
                    },
                    t.node());
}

// body[0 := arg], lowering the remaining free variables.
Term instantiate(const Term& body, const Term& arg, std::size_t binders = 0) {
  return std::visit(overloaded{
                        [&](const Var& v) {
                          if (v.index < binders) return body;
                          if (v.index == binders) return shift(arg, binders);
                          return Term::var(v.index - 1);
                        },
                        [&](const UnitIntro&) { return body; },
                        [&](const Pair& p) {
                          return Term::pair(instantiate(p.first, arg, binders), instantiate(p.second, arg, binders));
                        },
                        [&](const Fst& p) { return Term::fst(instantiate(p.pair, arg, binders), p.other); },
                        [&](const Snd& p) { return Term::snd(instantiate(p.pair, arg, binders), p.other); },
                        [&](const Abs& a) { return Term::abs(a.domain, instantiate(a.body, arg, binders + 1)); },
                        [&](const App& a) {
                          return Term::app(instantiate(a.fun, arg, binders), instantiate(a.arg, arg, binders), a.arg_type);
                        },
                    },
                    body.node());
}

bool is_redex(const Term& t) {
  if (const auto* a = t.as<App>()) return a->fun.is<Abs>();
  if (const auto* p = t.as<Fst>()) return p->pair.is<Pair>();
  if (const auto* p = t.as<Snd>()) return p->pair.is<Pair>();
  return false;
}

// One-step contraction of a redex at the root.
Term contract(const Term& t) {
  if (const auto* a = t.as<App>()) return instantiate(a->fun.as<Abs>()->body, a->arg);
  if (const auto* p = t.as<Fst>()) return p->pair.as<Pair>()->first;
  return t.as<Snd>()->pair.as<Pair>()->second;
}

}  // namespace

Substitution Substitution::make(Ctx source, Ctx target, std::vector<Term> images) {
  if (images.size() != source.size()) {
    throw ContextMismatch("substitution has " + std::to_string(images.size()) +
                          " images for a source context of length " + std::to_string(source.size()));
  }
  for (std::size_t j = 0; j < images.size(); ++j) {
    Type actual = synth_type(target, images[j]);
    if (!(actual == source.at(j))) {
      throw ContextMismatch("substitution image for index " + std::to_string(j) + " has type " + to_string(actual) +
                            ", expected " + to_string(source.at(j)));
    }
  }
  return Substitution(std::move(source), std::move(target), std::move(images));
}

Term substitute(const Term& term, const Substitution& sigma) { return subst_under(term, sigma.images(), 0); }

Term beta_pi_normalize(const Term& term) {
  return std::visit(overloaded{
                        [&](const Var&) { return term; },
                        [&](const UnitIntro&) { return term; },
                        [&](const Pair& p) { return Term::pair(beta_pi_normalize(p.first), beta_pi_normalize(p.second)); },
                        [&](const Fst& p) {
                          Term inner = beta_pi_normalize(p.pair);
                          if (const auto* pair = inner.as<Pair>()) return pair->first;
                          return Term::fst(std::move(inner), p.other);
                        },
                        [&](const Snd& p) {
                          Term inner = beta_pi_normalize(p.pair);
                          if (const auto* pair = inner.as<Pair>()) return pair->second;
                          return Term::snd(std::move(inner), p.other);
                        },
                        [&](const Abs& a) { return Term::abs(a.domain, beta_pi_normalize(a.body)); },
                        [&](const App& a) {
                          Term fun = beta_pi_normalize(a.fun);
                          Term arg = beta_pi_normalize(a.arg);
                          if (const auto* abs = fun.as<Abs>()) return beta_pi_normalize(instantiate(abs->body, arg));
                          return Term::app(std::move(fun), std::move(arg), a.arg_type);
                        },
                    },
                    term.node());
}

bool has_beta_pi_redex(const Term& term) {
  if (is_redex(term)) return true;
  return std::visit(overloaded{
                        [](const Var&) { return false; },
                        [](const UnitIntro&) { return false; },
                        [](const Pair& p) { return has_beta_pi_redex(p.first) || has_beta_pi_redex(p.second); },
                        [](const Fst& p) { return has_beta_pi_redex(p.pair); },
                        [](const Snd& p) { return has_beta_pi_redex(p.pair); },
                        [](const Abs& a) { return has_beta_pi_redex(a.body); },
                        [](const App& a) { return has_beta_pi_redex(a.fun) || has_beta_pi_redex(a.arg); },
                    },
                    term.node());
}

namespace {

Nf expand(const Term& t, const Type& type);

Ne spine(const Term& t) {
  if (const auto* v = t.as<Var>()) return Ne::var(v->index);
  if (const auto* p = t.as<Fst>()) return Ne::fst(spine(p->pair), p->other);
  if (const auto* p = t.as<Snd>()) return Ne::snd(spine(p->pair), p->other);
  if (const auto* a = t.as<App>()) return Ne::app(spine(a->fun), expand(a->arg, a->arg_type), a->arg_type);
  throw NotNeutral("term " + to_debug_string(t) + " at base type is not neutral");
}

Nf expand(const Term& t, const Type& type) {
  return std::visit(overloaded{
                        [&](const BaseType&) { return Nf::neutral(spine(t)); },
                        [&](const UnitType&) { return Nf::unit(); },
                        [&](const ProdType& p) {
                          return Nf::pair(expand(beta_pi_normalize(Term::fst(t, p.right)), p.left),
                                          expand(beta_pi_normalize(Term::snd(t, p.left)), p.right));
                        },
                        [&](const ArrowType& a) {
                          Term applied = Term::app(shift(t, 1), Term::var(0), a.domain);
                          return Nf::abs(a.domain, expand(beta_pi_normalize(applied), a.codomain));
                        },
                    },
                    type.node());
}

}  // namespace

Nf eta_expand(const Ctx& ctx, const Term& term, const Type& type) {
  Type actual = synth_type(ctx, term);
  if (!(actual == type)) {
    throw TypeError("term " + to_debug_string(term) + " has type " + to_string(actual) + ", expected " +
                    to_string(type));
  }
  return expand(term, type);
}

Nf oracle_nf(const Ctx& ctx, const Term& term) {
  Type type = synth_type(ctx, term);
  return expand(beta_pi_normalize(term), type);
}

// ---------------------------------------------------------------------------
// Random beta-eta equality moves

namespace {

struct Site {
  std::vector<int> path;  // child positions from the root
  std::vector<Type> ctx;  // outermost first
  Term term;
  Type type;
};

void collect_sites(const Term& t, std::vector<int>& path, std::vector<Type>& ctx, std::vector<Site>& out) {
  out.push_back(Site{path, ctx, t, synth_type(Ctx(ctx), t)});
  auto child = [&](int k, const Term& c) {
    path.push_back(k);
    collect_sites(c, path, ctx, out);
    path.pop_back();
  };
  std::visit(overloaded{
                 [](const Var&) {},
                 [](const UnitIntro&) {},
                 [&](const Pair& p) {
                   child(0, p.first);
                   child(1, p.second);
                 },
                 [&](const Fst& p) { child(0, p.pair); },
                 [&](const Snd& p) { child(0, p.pair); },
                 [&](const Abs& a) {
                   ctx.push_back(a.domain);
                   child(0, a.body);
                   ctx.pop_back();
                 },
                 [&](const App& a) {
                   child(0, a.fun);
                   child(1, a.arg);
                 },
             },
             t.node());
}

Term replace_at(const Term& t, const std::vector<int>& path, std::size_t depth, const Term& replacement) {
  if (depth == path.size()) return replacement;
  int k = path[depth];
  auto go = [&](const Term& c) { return replace_at(c, path, depth + 1, replacement); };
  return std::visit(overloaded{
                        [&](const Var&) -> Term { throw ScopeError("invalid term path"); },
                        [&](const UnitIntro&) -> Term { throw ScopeError("invalid term path"); },
                        [&](const Pair& p) { return k == 0 ? Term::pair(go(p.first), p.second) : Term::pair(p.first, go(p.second)); },
                        [&](const Fst& p) { return Term::fst(go(p.pair), p.other); },
                        [&](const Snd& p) { return Term::snd(go(p.pair), p.other); },
                        [&](const Abs& a) { return Term::abs(a.domain, go(a.body)); },
                        [&](const App& a) {
                          return k == 0 ? Term::app(go(a.fun), a.arg, a.arg_type) : Term::app(a.fun, go(a.arg), a.arg_type);
                        },
                    },
                    t.node());
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::optional<Term> eta_contract(const Term& t) {
  if (const auto* abs = t.as<Abs>()) {
    const auto* app = abs->body.as<App>();
    if (!app) return std::nullopt;
    const auto* v = app->arg.as<Var>();
    if (!v || v->index != 0 || occurs_free(app->fun, 0)) return std::nullopt;
    return unshift(app->fun);
  }
  if (const auto* pair = t.as<Pair>()) {
    const auto* first = pair->first.as<Fst>();
    const auto* second = pair->second.as<Snd>();
    if (!first || !second || !(first->pair == second->pair)) return std::nullopt;
    return first->pair;
  }
  return std::nullopt;
}

std::optional<Term> rewrite_site(const Site& site, Move move, std::mt19937_64& rng) {
  const Term& s = site.term;
  switch (move) {
    case Move::BetaReduce:
      if (is_redex(s)) return contract(s);
      return std::nullopt;
    case Move::BetaExpand:
      switch (pick(rng, 4)) {
        case 0:
          return Term::app(Term::abs(site.type, Term::var(0)), s, site.type);
        case 1: {
          // Abstract over a variable or () that the body ignores.
          if (!site.ctx.empty() && pick(rng, 2) == 0) {
            std::size_t j = pick(rng, site.ctx.size());
            const Type& dummy = site.ctx[site.ctx.size() - 1 - j];
            return Term::app(Term::abs(dummy, shift(s, 1)), Term::var(j), dummy);
          }
          return Term::app(Term::abs(Type::unit(), shift(s, 1)), Term::unit(), Type::unit());
        }
        case 2:
          return Term::fst(Term::pair(s, Term::unit()), Type::unit());
        default:
          return Term::snd(Term::pair(Term::unit(), s), Type::unit());
      }
    case Move::EtaExpand:
      return std::visit(overloaded{
                            [](const BaseType&) -> std::optional<Term> { return std::nullopt; },
                            [&](const UnitType&) -> std::optional<Term> {
                              if (s.is<UnitIntro>()) return std::nullopt;
                              return Term::unit();
                            },
                            [&](const ProdType& p) -> std::optional<Term> {
                              return Term::pair(Term::fst(s, p.right), Term::snd(s, p.left));
                            },
                            [&](const ArrowType& a) -> std::optional<Term> {
                              return Term::abs(a.domain, Term::app(shift(s, 1), Term::var(0), a.domain));
                            },
                        },
                        site.type.node());
    case Move::EtaReduce:
      return eta_contract(s);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Term> mutate_once(const Ctx& ctx, const Term& term, Move move, std::mt19937_64& rng) {
  std::vector<Site> sites;
  std::vector<int> path;
  std::vector<Type> stack = ctx.outermost_first();
  collect_sites(term, path, stack, sites);

  std::vector<std::size_t> order(sites.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // Fisher-Yates with a portable index draw.
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[pick(rng, i)]);

  for (std::size_t i : order) {
    if (auto rewritten = rewrite_site(sites[i], move, rng)) return replace_at(term, sites[i].path, 0, *rewritten);
  }
  return std::nullopt;
}

Term mutate_beta_eta(const Ctx& ctx, const Term& term, std::uint64_t seed, std::size_t steps) {
  static constexpr std::array<Move, 4> kMoves{Move::BetaReduce, Move::BetaExpand, Move::EtaExpand, Move::EtaReduce};
  std::mt19937_64 rng(seed);
  Term current = term;
  for (std::size_t step = 0; step < steps; ++step) {
    std::size_t first = pick(rng, kMoves.size());
    for (std::size_t k = 0; k < kMoves.size(); ++k) {
      if (auto next = mutate_once(ctx, current, kMoves[(first + k) % kMoves.size()], rng)) {
        current = std::move(*next);
        break;
      }
    }
  }
  return current;
}

}  // namespace nbe
