#pragma once

// Isotopy relations as bidirectional rewrite rules on tangle words.
//
// Each relation is stored as concrete instances lhs ≡ rhs in application
// order (first token applied first). "Forward" replaces lhs by rhs.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "annarc/tangle.hpp"

namespace annarc {

enum class RuleId {
  R0,
  R1F,
  R2,
  R3,
  CupCup,
  CapCap,
  CupCap,
  CupCross,
  CapCross,
  CrossCross,
  Pitchfork,
  AffRR,
  AffCap,
  AffCup,
  AffCross,
  TwistInv,
  TwistCommute,
  TwistCup,
  TwistCap,
  TwistCross,
  TwistRot,
};

std::string_view rule_name(RuleId id);
std::optional<RuleId> rule_from_name(std::string_view name);
const std::vector<RuleId>& all_rules();

enum class Direction { Forward, Reverse };

/// Parameters of one relation instance. `variant` selects between the
/// listed forms of a relation (e.g. the two sides of R0, or a wrap-around
/// affine form); `l` and `m` are crossing or twist signs.
struct RuleParams {
  int n = 0;
  int i = 1;
  int k = 2;
  int j = 0;  // second strand index in the twist slides
  bool l = true;
  bool m = true;
  int variant = 0;
};

struct RuleInstance {
  RuleId rule = RuleId::R0;
  RuleParams params;
  TangleWord lhs;
  TangleWord rhs;

  int max_arity() const;
  bool has_crossings() const { return !lhs.is_flat() || !rhs.is_flat(); }
  std::string label() const;
};

/// The instance for the given parameters, or nullopt when they violate the
/// relation's side conditions.
std::optional<RuleInstance> make_instance(RuleId rule, const RuleParams& p);

/// Every legal instance whose arities never exceed max_arity.
std::vector<RuleInstance> rule_instances(RuleId rule, int max_arity);

/// Rewrites are looked up among instances up to this arity.
inline constexpr int kMaxRuleArity = 12;

struct Rewrite {
  RuleId rule = RuleId::R0;
  std::size_t position = 0;
  Direction direction = Direction::Forward;
  RuleInstance instance;

  const TangleWord& pattern() const {
    return direction == Direction::Forward ? instance.lhs : instance.rhs;
  }
  const TangleWord& replacement() const {
    return direction == Direction::Forward ? instance.rhs : instance.lhs;
  }
};

/// All rewrites that apply to w, ordered by position, rule, direction.
/// Patterns with no tokens (identity sides) are offered as insertions in the
/// reverse direction at every position with a matching arity.
std::vector<Rewrite> applicable_rewrites(const TangleWord& w);

/// Throws NotApplicable when the pattern does not occur at the position.
TangleWord rewrite(const TangleWord& w, const Rewrite& r);

/// The first applicable instance of the rule at that position.
TangleWord rewrite(const TangleWord& w, RuleId rule, std::size_t position, Direction direction);

/// Best-first search by (crossings, length) over non-inserting rewrites.
/// Throws CrossingsIrreducible when `budget` states are exhausted.
TangleWord eliminate_crossings(const TangleWord& w, int budget = 10000);

/// Both sides agree in `contexts` random flat contexts: exactly (connectivity,
/// loop counts, shift) for flat instances, as Kauffman-bracket state sums for
/// instances with crossings.
bool check_relation(const RuleInstance& inst, int contexts = 20, std::uint32_t seed = 20240601u);
bool check_relation(RuleId rule, const RuleParams& p, int contexts = 20);

/// Random flat word from `from` strands to `to` strands (same parity) with
/// `length` random moves before steering to the target arity.
TangleWord random_flat_word(std::mt19937& rng, int from, int to, int length);

}  // namespace annarc
