#include "nbe/semantics.hpp"

#include <ostream>

#include "nbe/detail/overloaded.hpp"
#include "nbe/typecheck.hpp"

namespace nbe {

using detail::overloaded;

Sem::Sem(Node node) : node_(std::make_shared<const detail::SemNode>(detail::SemNode{std::move(node)})) {}

bool operator==(const Sem& a, const Sem& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node();
  const auto& y = b.node();
  if (x.index() != y.index()) return false;
  return std::visit(overloaded{
                        [&](const SBase& v) { return v.neutral == std::get<SBase>(y).neutral; },
                        [&](const SUnit&) { return true; },
                        [&](const SPair& p) {
                          const auto& q = std::get<SPair>(y);
                          return p.first == q.first && p.second == q.second;
                        },
                        [&](const SClos& c) {
                          const auto& d = std::get<SClos>(y);
                          return c.domain == d.domain && c.body == d.body && c.env == d.env;
                        },
                        [&](const SNeFun& f) {
                          const auto& g = std::get<SNeFun>(y);
                          return f.domain == g.domain && f.codomain == g.codomain && f.neutral == g.neutral;
                        },
                    },
                    x);
}

std::ostream& operator<<(std::ostream& os, const Sem& v) {
  std::visit(overloaded{
                 [&](const SBase& b) { os << "base(" << b.neutral << ')'; },
                 [&](const SUnit&) { os << "unit"; },
                 [&](const SPair& p) { os << "pair(" << p.first << ", " << p.second << ')'; },
                 [&](const SClos& c) { os << "closure(\\:" << c.domain << ". " << c.body << " | " << c.env << ')'; },
                 [&](const SNeFun& f) { os << "reflected(" << f.neutral << " : " << Type::arrow(f.domain, f.codomain) << ')'; },
             },
             v.node());
  return os;
}

std::ostream& operator<<(std::ostream& os, const Env& e) {
  os << '[';
  for (std::size_t i = 0; i < e.outermost_first().size(); ++i) {
    if (i) os << ", ";
    os << e.outermost_first()[i];
  }
  return os << "] over " << e.ambient();
}

const Sem& Env::lookup(std::size_t i) const {
  if (i >= values_.size()) {
    throw ScopeError("variable #" + std::to_string(i) + " has no value in an environment of length " +
                     std::to_string(values_.size()));
  }
  return values_[values_.size() - 1 - i];
}

Env Env::extend(Sem value) const {
  std::vector<Sem> values;
  values.reserve(values_.size() + 1);
  values = values_;
  values.push_back(std::move(value));
  return Env(ambient_, std::move(values));
}

Sem sem_rename(const Sem& v, const Renaming& rho) {
  if (rho.is_identity()) return v;
  return std::visit(overloaded{
                        [&](const SBase& b) { return Sem(SBase{rename_ne(b.neutral, rho)}); },
                        [&](const SUnit&) { return v; },
                        [&](const SPair& p) { return Sem(SPair{sem_rename(p.first, rho), sem_rename(p.second, rho)}); },
                        [&](const SClos& c) { return Sem(SClos{c.domain, c.body, env_rename(c.env, rho)}); },
                        [&](const SNeFun& f) { return Sem(SNeFun{rename_ne(f.neutral, rho), f.domain, f.codomain}); },
                    },
                    v.node());
}

Env env_rename(const Env& e, const Renaming& rho) {
  if (e.ambient().size() != rho.source().size()) {
    throw ScopeError("environment over a context of length " + std::to_string(e.ambient().size()) +
                     " renamed from a context of length " + std::to_string(rho.source().size()));
  }
  if (rho.is_identity()) return e;
  std::vector<Sem> values;
  values.reserve(e.size());
  for (const auto& v : e.outermost_first()) values.push_back(sem_rename(v, rho));
  return Env(rho.target(), std::move(values));
}

Sem sem_apply(const Sem& f, const Renaming& rho, const Sem& arg) {
  if (const auto* clos = f.as<SClos>()) {
    return eval(clos->body, env_rename(clos->env, rho).extend(arg));
  }
  if (const auto* fun = f.as<SNeFun>()) {
    Nf quoted = quote(rho.target(), fun->domain, arg);
    return unquote(fun->codomain, Ne::app(rename_ne(fun->neutral, rho), std::move(quoted), fun->domain));
  }
  throw ShapeError("applying a value that is not a function");
}

namespace {

const SPair& expect_pair(const Sem& v) {
  const auto* p = v.as<SPair>();
  if (!p) throw ShapeError("projection from a value that is not a pair");
  return *p;
}

}  // namespace

Sem eval(const Term& term, const Env& env) {
  return std::visit(overloaded{
                        [&](const Var& v) { return env.lookup(v.index); },
                        [&](const UnitIntro&) { return Sem(SUnit{}); },
                        [&](const Pair& p) { return Sem(SPair{eval(p.first, env), eval(p.second, env)}); },
                        [&](const Fst& p) { return expect_pair(eval(p.pair, env)).first; },
                        [&](const Snd& p) { return expect_pair(eval(p.pair, env)).second; },
                        [&](const Abs& a) { return Sem(SClos{a.domain, a.body, env}); },
                        [&](const App& a) {
                          Sem fun = eval(a.fun, env);
                          Sem arg = eval(a.arg, env);
                          return sem_apply(fun, rename_id(env.ambient()), arg);
                        },
                    },
                    term.node());
}

Sem unquote(const Type& type, const Ne& m) {
  return std::visit(overloaded{
                        [&](const BaseType&) { return Sem(SBase{m}); },
                        [&](const UnitType&) { return Sem(SUnit{}); },
                        [&](const ProdType& p) {
                          return Sem(SPair{unquote(p.left, Ne::fst(m, p.right)), unquote(p.right, Ne::snd(m, p.left))});
                        },
                        [&](const ArrowType& a) { return Sem(SNeFun{m, a.domain, a.codomain}); },
                    },
                    type.node());
}

Nf quote(const Ctx& ctx, const Type& type, const Sem& v) {
  return std::visit(overloaded{
                        [&](const BaseType&) {
                          const auto* b = v.as<SBase>();
                          if (!b) throw ShapeError("quoting a non-neutral value at base type " + to_string(type));
                          return Nf::neutral(b->neutral);
                        },
                        [&](const UnitType&) {
                          if (!v.as<SUnit>()) throw ShapeError("quoting a non-unit value at type Unit");
                          return Nf::unit();
                        },
                        [&](const ProdType& p) {
                          const auto& pair = expect_pair(v);
                          return Nf::pair(quote(ctx, p.left, pair.first), quote(ctx, p.right, pair.second));
                        },
                        [&](const ArrowType& a) {
                          Ctx extended = ctx.snoc(a.domain);
                          Sem body = sem_apply(v, rename_weaken(ctx, a.domain), unquote(a.domain, Ne::var(0)));
                          return Nf::abs(a.domain, quote(extended, a.codomain, body));
                        },
                    },
                    type.node());
}

Env identity_env(const Ctx& ctx) {
  std::vector<Sem> values;
  values.reserve(ctx.size());
  const auto& types = ctx.outermost_first();
  for (std::size_t k = 0; k < types.size(); ++k) {
    values.push_back(unquote(types[k], Ne::var(types.size() - 1 - k)));
  }
  return Env(ctx, std::move(values));
}

Nf nf(const Ctx& ctx, const Term& term) {
  if (std::size_t depth = term_depth(term); depth > kMaxNesting) {
    throw DepthLimitExceeded("term nesting depth " + std::to_string(depth) + " exceeds the limit of " +
                             std::to_string(kMaxNesting));
  }
  Type type = synth_type(ctx, term);
  return quote(ctx, type, eval(term, identity_env(ctx)));
}

}  // namespace nbe
