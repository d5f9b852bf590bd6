#pragma once

// Reference normalizer built on substitution: reduce beta and projection
// redexes innermost-first, then eta-expand by type. Shares no code with the
// evaluator in semantics.hpp and is meant for cross-checking it; it can be
// exponentially slower.
//
// Also provides random beta-eta equality moves for property tests.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "nbe/normal_forms.hpp"
#include "nbe/syntax.hpp"

namespace nbe {

/// Entry j is the image of source index j, scoped in `target`.
class Substitution {
 public:
  /// Validates lengths and that every image has the source entry's type.
  static Substitution make(Ctx source, Ctx target, std::vector<Term> images);

  const Ctx& source() const noexcept { return source_; }
  const Ctx& target() const noexcept { return target_; }
  const std::vector<Term>& images() const noexcept { return images_; }

 private:
  Substitution(Ctx source, Ctx target, std::vector<Term> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

  Ctx source_;
  Ctx target_;
  std::vector<Term> images_;
};

/// Capture-avoiding simultaneous substitution.
Term substitute(const Term& term, const Substitution& sigma);

/// Rewrites to a term with no beta or projection redex.
Term beta_pi_normalize(const Term& term);
bool has_beta_pi_redex(const Term& term);

/// Type-directed eta-expansion of a beta/pi-normal term. Throws NotNeutral
/// if a term at base type is not neutral.
Nf eta_expand(const Ctx& ctx, const Term& term, const Type& type);

Nf oracle_nf(const Ctx& ctx, const Term& term);

enum class Move {
  BetaReduce,  // contract one beta or projection redex
  BetaExpand,  // wrap a subterm in a redex that contracts back to it
  EtaExpand,   // eta-expand a subterm at function, product or unit type
  EtaReduce,   // contract an eta-expanded function or pair
};

/// Applies `move` at a site chosen by `rng`; nullopt if no site admits it.
std::optional<Term> mutate_once(const Ctx& ctx, const Term& term, Move move, std::mt19937_64& rng);

/// Applies `steps` random beta-eta equality moves, deterministically in
/// `seed`. The result is beta-eta equal to `term` at the same type.
Term mutate_beta_eta(const Ctx& ctx, const Term& term, std::uint64_t seed, std::size_t steps);

}  // namespace nbe
