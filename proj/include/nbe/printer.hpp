#pragma once

#include <string>

#include "nbe/normal_forms.hpp"
#include "nbe/syntax.hpp"
#include "nbe/typecheck.hpp"

namespace nbe {

/// Prints in the syntax accepted by parse_term, with minimal parentheses.
/// Free variables take their names from `ctx`; binders are named `x0`,
/// `x1`, ... choosing the smallest index whose name is not already in
/// scope, so no binder captures another name. Contexts with duplicate names
/// print the shadowed entries under the shadowing name.
std::string print_term(const Term& term, const NamedCtx& ctx);
std::string print_nf(const Nf& n, const NamedCtx& ctx);

}  // namespace nbe
