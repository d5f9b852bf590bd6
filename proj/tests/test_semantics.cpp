#include "doctest.h"
#include "nbe/oracle.hpp"
#include "nbe/semantics.hpp"
#include "nbe/typecheck.hpp"
#include "support/generators.hpp"

using namespace nbe;

namespace {

const Type b0 = Type::base(0);
const Type b1 = Type::base(1);
const Type unit = Type::unit();
const Type endo = Type::arrow(b0, b0);

Sem base(std::size_t i) { return Sem(SBase{Ne::var(i)}); }

}  // namespace

TEST_CASE("sem_rename and env_rename") {
  Ctx g{b0};
  auto w = rename_weaken(g, unit);
  CHECK(sem_rename(Sem(SUnit{}), w) == Sem(SUnit{}));
  CHECK(sem_rename(base(0), w) == base(1));
  CHECK(sem_rename(Sem(SPair{base(0), Sem(SUnit{})}), w) == Sem(SPair{base(1), Sem(SUnit{})}));

  CHECK(env_rename(Env(g), w).size() == 0);
  CHECK(env_rename(Env(g, {Sem(SUnit{})}), w).outermost_first() == std::vector<Sem>{Sem(SUnit{})});
  auto renamed = env_rename(Env(g, {base(0)}), w);
  CHECK(renamed.outermost_first() == std::vector<Sem>{base(1)});
  CHECK(renamed.ambient() == w.target());

  // Closures rename their captured environment, not their body.
  Sem clos(SClos{b0, Term::var(1), Env(g, {base(0)})});
  CHECK(sem_rename(clos, w) == Sem(SClos{b0, Term::var(1), Env(w.target(), {base(1)})}));
  CHECK_THROWS_AS(env_rename(Env(Ctx{}), w), ScopeError);
}

TEST_CASE("sem_apply") {
  Ctx g{b0};
  Sem id_clos(SClos{b0, Term::var(0), Env(g)});
  CHECK(sem_apply(id_clos, rename_id(g), base(0)) == base(0));

  // A reflected function applied at base codomain yields an applied neutral.
  Ctx f{endo};
  Sem fun(SNeFun{Ne::var(0), b0, b0});
  Ne m = Ne::var(0);
  CHECK(sem_apply(fun, rename_id(f), Sem(SBase{m})) ==
        Sem(SBase{Ne::app(Ne::var(0), Nf::neutral(m), b0)}));

  // The captured value is renamed before the body runs.
  Sem konst(SClos{b0, Term::var(1), Env(g, {base(0)})});
  CHECK(sem_apply(konst, rename_weaken(g, b0), base(0)) == base(1));

  CHECK_THROWS_AS(sem_apply(Sem(SUnit{}), rename_id(g), base(0)), ShapeError);
}

TEST_CASE("eval") {
  CHECK(eval(Term::unit(), Env(Ctx{})) == Sem(SUnit{}));
  CHECK(eval(Term::fst(Term::pair(Term::unit(), Term::unit()), unit), Env(Ctx{})) == Sem(SUnit{}));
  Ctx g{b0};
  CHECK(eval(Term::app(Term::abs(b0, Term::var(0)), Term::var(0), b0), Env(g, {base(0)})) == base(0));
  // Abstractions evaluate to closures over the current environment.
  Env env(g, {base(0)});
  CHECK(eval(Term::abs(unit, Term::var(1)), env) == Sem(SClos{unit, Term::var(1), env}));
  CHECK_THROWS_AS(eval(Term::fst(Term::var(0), unit), env), ShapeError);
}

TEST_CASE("unquote") {
  CHECK(unquote(b0, Ne::var(0)) == base(0));
  CHECK(unquote(unit, Ne::var(3)) == Sem(SUnit{}));
  CHECK(unquote(Type::prod(b0, unit), Ne::var(0)) == Sem(SPair{Sem(SBase{Ne::fst(Ne::var(0), unit)}), Sem(SUnit{})}));
  CHECK(unquote(endo, Ne::var(0)) == Sem(SNeFun{Ne::var(0), b0, b0}));
}

TEST_CASE("quote") {
  CHECK(quote(Ctx{}, unit, Sem(SUnit{})) == Nf::unit());
  CHECK(quote(Ctx{b0, b0, b0}, b0, base(2)) == Nf::neutral(Ne::var(2)));

  Ctx f{endo};
  auto expected = Nf::abs(b0, Nf::neutral(Ne::app(Ne::var(1), Nf::neutral(Ne::var(0)), b0)));
  CHECK(quote(f, endo, Sem(SNeFun{Ne::var(0), b0, b0})) == expected);
  CHECK(oracle_nf(f, Term::var(0)) == expected);

  CHECK_THROWS_AS(quote(Ctx{}, b0, Sem(SUnit{})), ShapeError);
}

TEST_CASE("identity_env") {
  CHECK(identity_env(Ctx{}).size() == 0);
  CHECK(identity_env(Ctx{b0}).outermost_first() == std::vector<Sem>{base(0)});
  CHECK(identity_env(Ctx{endo}).outermost_first() == std::vector<Sem>{Sem(SNeFun{Ne::var(0), b0, b0})});
  CHECK(identity_env(Ctx{b0, b1}).outermost_first() == std::vector<Sem>{base(1), base(0)});
}

TEST_CASE("nf") {
  CHECK(nf(Ctx{}, Term::abs(b0, Term::var(0))) == Nf::abs(b0, Nf::neutral(Ne::var(0))));

  Ctx f{endo};
  auto eta = Nf::abs(b0, Nf::neutral(Ne::app(Ne::var(1), Nf::neutral(Ne::var(0)), b0)));
  CHECK(nf(f, Term::var(0)) == eta);
  CHECK(oracle_nf(f, Term::var(0)) == eta);

  Ctx p{Type::prod(b0, unit)};
  auto surj = Nf::pair(Nf::neutral(Ne::fst(Ne::var(0), unit)), Nf::unit());
  CHECK(nf(p, Term::var(0)) == surj);
  CHECK(oracle_nf(p, Term::var(0)) == surj);

  CHECK_THROWS_AS(nf(Ctx{}, Term::app(Term::unit(), Term::unit(), unit)), TypeError);
}

TEST_CASE("nf rejects terms nested beyond the limit") {
  Term deep = Term::unit();
  for (std::size_t i = 0; i < kMaxNesting; ++i) deep = Term::abs(unit, deep);
  CHECK_THROWS_AS(nf(Ctx{}, deep), DepthLimitExceeded);
}

TEST_CASE("nf handles nesting at the limit") {
  Term deep = Term::var(0);
  for (std::size_t i = 2; i < kMaxNesting; i += 2) deep = Term::snd(Term::pair(Term::unit(), deep), unit);
  REQUIRE(term_depth(deep) <= kMaxNesting);
  CHECK(nf(Ctx{b0}, deep) == Nf::neutral(Ne::var(0)));

  Term lambdas = Term::var(kMaxNesting - 2);
  for (std::size_t i = 2; i < kMaxNesting; ++i) lambdas = Term::abs(unit, lambdas);
  Nf n = nf(Ctx{}, Term::abs(b0, lambdas));
  CHECK(embed_nf(n) == Term::abs(b0, lambdas));
}

TEST_CASE("property: nf agrees with the oracle and is natural") {
  nbe::testing::Rng rng(17);
  nbe::testing::GenOptions options;
  for (int i = 0; i < 500; ++i) {
    auto p = nbe::testing::random_problem(rng, options);
    Nf n = nf(p.ctx, p.term);
    CHECK_NOTHROW(check_nf(p.ctx, n, p.type));
    CHECK(n == oracle_nf(p.ctx, p.term));
    CHECK(nf(p.ctx, embed_nf(n)) == n);

    auto rho = nbe::testing::random_renaming(rng, p.ctx);
    CHECK(rename_nf(n, rho) == nf(rho.target(), rename_term(p.term, rho)));

    // Semantic values form a presheaf too.
    Sem v = eval(p.term, identity_env(p.ctx));
    auto rho2 = nbe::testing::random_renaming(rng, rho.target());
    CHECK(sem_rename(v, rename_id(p.ctx)) == v);
    CHECK(sem_rename(sem_rename(v, rho), rho2) == sem_rename(v, rename_compose(rho2, rho)));
    CHECK(quote(rho.target(), p.type, sem_rename(v, rho)) == rename_nf(n, rho));
  }
}

TEST_CASE("property: quote after unquote is the eta-long neutral") {
  nbe::testing::Rng rng(23);
  int done = 0;
  while (done < 300) {
    Ctx ctx = nbe::testing::random_ctx(rng, 3, 3);
    auto m = nbe::testing::random_ne(rng, ctx, 8);
    if (!m) continue;
    ++done;
    Type type = type_of_ne(ctx, *m);
    CHECK(quote(ctx, type, unquote(type, *m)) == eta_expand(ctx, embed_ne(*m), type));
  }
}
