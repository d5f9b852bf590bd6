#pragma once

// Concrete syntax.
//
//   Type    ::= Prod ('->' Type)?            arrows associate to the right
//   Prod    ::= TAtom ('*' TAtom)*           products associate to the left
//   TAtom   ::= 'b' NAT | 'Unit' | '(' Type ')'
//   Term    ::= '\' IDENT ':' Type '.' Term | AppChain
//   AppChain::= Atom Atom*
//   Atom    ::= IDENT | '()' | 'fst' Atom | 'snd' Atom
//             | '(' Term ',' Term ')' | '(' Term ')'
//   Context ::= (IDENT ':' Type (',' IDENT ':' Type)*)?   outermost first
//
// IDENT is [a-zA-Z_][a-zA-Z0-9_']* minus the keywords fst, snd and Unit.
// All functions throw ParseError carrying the offending span.

#include <string_view>

#include "nbe/syntax.hpp"
#include "nbe/typecheck.hpp"

namespace nbe {

Type parse_type(std::string_view src);
SurfaceTerm parse_term(std::string_view src);
NamedCtx parse_context(std::string_view src);

}  // namespace nbe
