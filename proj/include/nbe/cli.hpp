#pragma once

#include <iosfwd>

namespace nbe {

/// Command-line driver.
///
///   normalize [--ctx "x:T, ..."] <term>        exit 0, or 2 on error
///   check-eq  [--ctx "x:T, ..."] <t1> <t2>     exit 0 EQUAL, 1 DIFFERENT, 2 error
///   typecheck [--ctx "x:T, ..."] <term>        exit 0, or 2 on error
///
/// Global flags: --oracle normalizes with the reference normalizer,
/// --selfcheck runs both normalizers and exits 3 if they disagree.
///
/// Runs on a thread with a 512 MiB stack.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nbe
