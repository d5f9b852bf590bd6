#include "doctest.h"
#include "nbe/parser.hpp"
#include "nbe/printer.hpp"
#include "nbe/typecheck.hpp"
#include "support/generators.hpp"

using namespace nbe;

namespace {

const Type b0 = Type::base(0);
const Type unit = Type::unit();

}  // namespace

TEST_CASE("synth_type") {
  CHECK(synth_type(Ctx{}, Term::abs(b0, Term::var(0))) == Type::arrow(b0, b0));
  CHECK(synth_type(Ctx{Type::prod(b0, unit)}, Term::fst(Term::var(0), unit)) == b0);
  CHECK(synth_type(Ctx{Type::prod(b0, unit)}, Term::snd(Term::var(0), b0)) == unit);
  CHECK(synth_type(Ctx{}, Term::pair(Term::unit(), Term::unit())) == Type::prod(unit, unit));
  CHECK(synth_type(Ctx{Type::arrow(b0, unit), b0}, Term::app(Term::var(1), Term::var(0), b0)) == unit);
}

TEST_CASE("synth_type rejects ill-typed terms") {
  CHECK_THROWS_AS(synth_type(Ctx{}, Term::app(Term::unit(), Term::unit(), unit)), TypeError);
  CHECK_THROWS_AS(synth_type(Ctx{}, Term::fst(Term::unit(), unit)), TypeError);
  // Wrong annotations.
  CHECK_THROWS_AS(synth_type(Ctx{Type::prod(b0, unit)}, Term::fst(Term::var(0), b0)), TypeError);
  CHECK_THROWS_AS(synth_type(Ctx{Type::arrow(b0, b0), unit}, Term::app(Term::var(1), Term::var(0), unit)), TypeError);
  CHECK_THROWS_AS(synth_type(Ctx{Type::arrow(b0, b0), unit}, Term::app(Term::var(1), Term::var(0), b0)), TypeError);
  CHECK_THROWS_AS(synth_type(Ctx{}, Term::var(0)), ScopeError);
}

TEST_CASE("elaborate") {
  auto id = elaborate(NamedCtx{}, parse_term("\\x:b0. x"));
  CHECK(id.term == Term::abs(b0, Term::var(0)));
  CHECK(id.type == Type::arrow(b0, b0));

  NamedCtx g{{"f", Type::arrow(b0, b0)}, {"x", b0}};
  auto app = elaborate(g, parse_term("f x"));
  CHECK(app.term == Term::app(Term::var(1), Term::var(0), b0));
  CHECK(app.type == b0);

  auto proj = elaborate(NamedCtx{{"p", Type::prod(b0, unit)}}, parse_term("snd p"));
  CHECK(proj.term == Term::snd(Term::var(0), b0));
  CHECK(proj.type == unit);

  CHECK_THROWS_AS(elaborate(NamedCtx{}, parse_term("y")), UnboundName);
}

TEST_CASE("elaborate binds the innermost name") {
  auto r = elaborate(NamedCtx{}, parse_term("\\x:b0. \\x:Unit. x"));
  CHECK(r.term == Term::abs(b0, Term::abs(unit, Term::var(0))));
  CHECK(r.type == Type::arrow(b0, Type::arrow(unit, unit)));

  auto outer = elaborate(NamedCtx{{"x", b0}, {"x", unit}}, parse_term("x"));
  CHECK(outer.type == unit);
}

TEST_CASE("elaboration errors carry spans") {
  try {
    elaborate(NamedCtx{{"f", Type::arrow(b0, b0)}}, parse_term("f ()"));
    FAIL("expected a type error");
  } catch (const TypeError& e) {
    REQUIRE(e.span());
    CHECK(*e.span() == SourceSpan{2, 4});
  }
  try {
    elaborate(NamedCtx{}, parse_term("(\\x:b0. x, zz)"));
    FAIL("expected an unbound name");
  } catch (const UnboundName& e) {
    REQUIRE(e.span());
    CHECK(*e.span() == SourceSpan{11, 13});
  }
  CHECK_THROWS_AS(elaborate(NamedCtx{}, parse_term("() ()")), TypeError);
  CHECK_THROWS_AS(elaborate(NamedCtx{}, parse_term("fst ()")), TypeError);
}

TEST_CASE("property: elaboration agrees with synth_type") {
  nbe::testing::Rng rng(5);
  nbe::testing::GenOptions options;
  for (int i = 0; i < 300; ++i) {
    auto p = nbe::testing::random_problem(rng, options);
    auto named = nbe::testing::name_ctx(p.ctx);
    auto r = elaborate(named, parse_term(print_term(p.term, named)));
    CHECK(r.term == p.term);
    CHECK(r.type == p.type);
    CHECK(synth_type(p.ctx, r.term) == r.type);
  }
}

TEST_CASE("generator support: inhabitation") {
  using nbe::testing::inhabited;
  const Type b1 = Type::base(1);
  CHECK(inhabited(Ctx{}, Type::arrow(b0, b0)));
  CHECK(inhabited(Ctx{}, unit));
  CHECK_FALSE(inhabited(Ctx{}, b0));
  CHECK(inhabited(Ctx{Type::prod(b1, Type::arrow(b1, b0))}, b0));
  CHECK_FALSE(inhabited(Ctx{Type::arrow(b1, b0)}, b0));
  // Peirce's law has no proof.
  CHECK_FALSE(inhabited(Ctx{}, Type::arrow(Type::arrow(Type::arrow(b0, b1), b0), b0)));
  CHECK(inhabited(Ctx{}, Type::arrow(Type::arrow(Type::arrow(b0, b1), b0), Type::arrow(Type::arrow(b0, b1), b0))));
}
