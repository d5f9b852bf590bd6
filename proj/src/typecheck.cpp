#include "nbe/typecheck.hpp"

#include "nbe/detail/overloaded.hpp"

namespace nbe {

using detail::overloaded;

namespace {

[[noreturn]] void ill_typed(const Term& at, const std::string& what) {
  throw TypeError("ill-typed term " + to_debug_string(at) + ": " + what);
}

// The context is kept as a mutable stack so that descending under a binder
// is O(1).
class Synthesizer {
 public:
  explicit Synthesizer(const Ctx& ctx) : stack_(ctx.outermost_first()) {}

  Type synth(const Term& term) {
    return std::visit(
        overloaded{
            [&](const Var& v) -> Type {
              if (v.index >= stack_.size()) {
                throw ScopeError("variable #" + std::to_string(v.index) + " is unbound in a context of length " +
                                 std::to_string(stack_.size()));
              }
              return stack_[stack_.size() - 1 - v.index];
            },
            [&](const UnitIntro&) { return Type::unit(); },
            [&](const Pair& p) { return Type::prod(synth(p.first), synth(p.second)); },
            [&](const Fst& p) {
              Type pair_type = synth(p.pair);
              const auto* prod = pair_type.as<ProdType>();
              if (!prod) ill_typed(term, "fst expects a product, got " + to_string(pair_type));
              if (!(prod->right == p.other)) {
                ill_typed(term, "annotated second component " + to_string(p.other) + " but the pair has type " +
                                    to_string(pair_type));
              }
              return prod->left;
            },
            [&](const Snd& p) {
              Type pair_type = synth(p.pair);
              const auto* prod = pair_type.as<ProdType>();
              if (!prod) ill_typed(term, "snd expects a product, got " + to_string(pair_type));
              if (!(prod->left == p.other)) {
                ill_typed(term, "annotated first component " + to_string(p.other) + " but the pair has type " +
                                    to_string(pair_type));
              }
              return prod->right;
            },
            [&](const Abs& a) {
              stack_.push_back(a.domain);
              Type body = synth(a.body);
              stack_.pop_back();
              return Type::arrow(a.domain, std::move(body));
            },
            [&](const App& a) {
              Type fun_type = synth(a.fun);
              const auto* arrow = fun_type.as<ArrowType>();
              if (!arrow) ill_typed(term, "application of a non-function of type " + to_string(fun_type));
              if (!(arrow->domain == a.arg_type)) {
                ill_typed(term, "function expects " + to_string(arrow->domain) + " but the argument is annotated " +
                                    to_string(a.arg_type));
              }
              Type arg_type = synth(a.arg);
              if (!(arg_type == a.arg_type)) {
                ill_typed(term, "expected argument of type " + to_string(a.arg_type) + ", got " + to_string(arg_type));
              }
              return arrow->codomain;
            },
        },
        term.node());
  }

 private:
  std::vector<Type> stack_;
};

class Elaborator {
 public:
  explicit Elaborator(const NamedCtx& ctx) {
    for (const auto& entry : ctx.outermost_first()) {
      names_.push_back(entry.name);
      types_.push_back(entry.type);
    }
  }

  Elaborated run(const SurfaceTerm& s) {
    const auto span = s.span();
    return std::visit(
        overloaded{
            [&](const surface::Name& n) -> Elaborated {
              for (std::size_t k = names_.size(); k-- > 0;) {
                if (names_[k] == n.name) return {Term::var(names_.size() - 1 - k), types_[k]};
              }
              throw UnboundName("unbound name '" + n.name + "'", span);
            },
            [&](const surface::Unit&) -> Elaborated { return {Term::unit(), Type::unit()}; },
            [&](const surface::Pair& p) -> Elaborated {
              auto a = run(p.first);
              auto b = run(p.second);
              return {Term::pair(std::move(a.term), std::move(b.term)), Type::prod(a.type, b.type)};
            },
            [&](const surface::Fst& p) -> Elaborated {
              auto a = run(p.pair);
              const auto* prod = a.type.as<ProdType>();
              if (!prod) throw TypeError("fst expects a product, got " + to_string(a.type), span);
              return {Term::fst(std::move(a.term), prod->right), prod->left};
            },
            [&](const surface::Snd& p) -> Elaborated {
              auto a = run(p.pair);
              const auto* prod = a.type.as<ProdType>();
              if (!prod) throw TypeError("snd expects a product, got " + to_string(a.type), span);
              return {Term::snd(std::move(a.term), prod->left), prod->right};
            },
            [&](const surface::Lam& l) -> Elaborated {
              names_.push_back(l.name);
              types_.push_back(l.domain);
              auto body = run(l.body);
              names_.pop_back();
              types_.pop_back();
              return {Term::abs(l.domain, std::move(body.term)), Type::arrow(l.domain, body.type)};
            },
            [&](const surface::App& a) -> Elaborated {
              auto f = run(a.fun);
              const auto* arrow = f.type.as<ArrowType>();
              if (!arrow) {
                throw TypeError("cannot apply a term of type " + to_string(f.type), a.fun.span());
              }
              auto x = run(a.arg);
              if (!(x.type == arrow->domain)) {
                throw TypeError("expected argument of type " + to_string(arrow->domain) + ", got " + to_string(x.type),
                                a.arg.span());
              }
              return {Term::app(std::move(f.term), std::move(x.term), arrow->domain), arrow->codomain};
            },
        },
        s.node().value);
  }

 private:
  std::vector<std::string> names_;
  std::vector<Type> types_;
};

}  // namespace

Type synth_type(const Ctx& ctx, const Term& term) { return Synthesizer(ctx).synth(term); }

SurfaceTerm::SurfaceTerm(surface::Node node, SourceSpan span)
    : node_(std::make_shared<const surface::Node>(std::move(node))), span_(span) {}

std::optional<std::size_t> NamedCtx::lookup(const std::string& name) const {
  for (std::size_t k = entries_.size(); k-- > 0;) {
    if (entries_[k].name == name) return entries_.size() - 1 - k;
  }
  return std::nullopt;
}

const std::string& NamedCtx::name_at(std::size_t i) const {
  if (i >= entries_.size()) {
    throw IndexOutOfRange("index " + std::to_string(i) + " out of range for named context of length " +
                          std::to_string(entries_.size()));
  }
  return entries_[entries_.size() - 1 - i].name;
}

NamedCtx NamedCtx::snoc(std::string name, Type type) const {
  auto entries = entries_;
  entries.push_back({std::move(name), std::move(type)});
  return NamedCtx(std::move(entries));
}

Ctx NamedCtx::ctx() const {
  std::vector<Type> types;
  types.reserve(entries_.size());
  for (const auto& entry : entries_) types.push_back(entry.type);
  return Ctx(std::move(types));
}

Elaborated elaborate(const NamedCtx& ctx, const SurfaceTerm& term) { return Elaborator(ctx).run(term); }

}  // namespace nbe
