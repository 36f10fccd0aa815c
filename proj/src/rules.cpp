#include <algorithm>
#include <array>

#include "annarc/rewrite.hpp"

namespace annarc {

namespace {

struct RuleShape {
  RuleId id;
  std::string_view name;
  int variants;
  bool uses_i;
  bool uses_k;
  bool uses_j;
  bool uses_l;
  bool uses_m;
};

constexpr std::array<RuleShape, 21> kShapes{{
    {RuleId::R0, "R0", 2, true, false, false, false, false},
    {RuleId::R1F, "R1F", 2, true, false, false, true, false},
    {RuleId::R2, "R2", 2, true, false, false, false, false},
    {RuleId::R3, "R3", 1, true, false, false, true, false},
    {RuleId::CupCup, "CupCup", 1, true, true, false, false, false},
    {RuleId::CapCap, "CapCap", 1, true, true, false, false, false},
    {RuleId::CupCap, "CupCap", 2, true, true, false, false, false},
    {RuleId::CupCross, "CupCross", 2, true, true, false, true, false},
    {RuleId::CapCross, "CapCross", 2, true, true, false, true, false},
    {RuleId::CrossCross, "CrossCross", 1, true, true, false, true, true},
    {RuleId::Pitchfork, "Pitchfork", 2, true, false, false, false, false},
    {RuleId::AffRR, "AffRR'", 2, false, false, false, false, false},
    {RuleId::AffCap, "AffCap", 2, true, false, false, false, false},
    {RuleId::AffCup, "AffCup", 2, true, false, false, false, false},
    {RuleId::AffCross, "AffCross", 2, true, false, false, true, false},
    {RuleId::TwistInv, "TwistInv", 2, true, false, false, false, false},
    {RuleId::TwistCommute, "TwistCommute", 1, true, false, true, true, true},
    {RuleId::TwistCup, "TwistCup", 2, true, false, true, true, false},
    {RuleId::TwistCap, "TwistCap", 2, true, false, true, true, false},
    {RuleId::TwistCross, "TwistCross", 3, true, false, true, true, true},
    {RuleId::TwistRot, "TwistRot", 2, true, false, false, true, false},
}};

const RuleShape& shape(RuleId id) { return kShapes[static_cast<std::size_t>(id)]; }

using Tokens = std::vector<Generator>;

Generator g(int n, int i) { return Generator::cup(n, i); }
Generator f(int n, int i) { return Generator::cap(n, i); }
Generator t(int n, int i, bool pos) { return Generator::cross(n, i, pos); }
Generator w(int n, int i, bool pos) { return Generator::twist(n, i, pos); }
Generator r(int n) { return Generator::rot(n); }
Generator rp(int n) { return Generator::rot_inv(n); }

// A word from `source` strands, or nullopt when a token is illegal or the
// arities do not chain.
std::optional<TangleWord> word(int source, const Tokens& tokens) {
  if (source < 0) return std::nullopt;
  int arity = source;
  for (const Generator& x : tokens) {
    if (!is_valid(x) || x.source() != arity) return std::nullopt;
    arity = x.target();
  }
  return TangleWord(source, tokens);
}

struct Sides {
  int source;
  Tokens lhs;
  Tokens rhs;
};

// Which strand of n-2 a twist at position p of n lands on after a cap at j,
// or before a cup at j.
int past_cap(int p, int j) { return p < j ? p : p - 2; }
int past_cup(int p, int j) { return p < j ? p : p + 2; }

std::optional<Sides> sides(RuleId id, const RuleParams& q) {
  const int n = q.n, i = q.i, k = q.k, j = q.j;
  const bool l = q.l, m = q.m;
  switch (id) {
    case RuleId::R0:
      if (q.variant == 0) return Sides{n - 2, {g(n, i + 1), f(n, i)}, {}};
      return Sides{n - 2, {g(n, i), f(n, i + 1)}, {}};
    case RuleId::R1F:
      if (q.variant == 0) return Sides{n - 2, {g(n, i), t(n, i + 1, l), f(n, i)}, {w(n - 2, i, l)}};
      return Sides{n - 2, {g(n, i), t(n, i - 1, l), f(n, i)}, {w(n - 2, i - 1, l)}};
    case RuleId::R2:
      if (q.variant == 0) return Sides{n, {t(n, i, true), t(n, i, false)}, {}};
      return Sides{n, {t(n, i, false), t(n, i, true)}, {}};
    case RuleId::R3:
      return Sides{n, {t(n, i, l), t(n, i + 1, l), t(n, i, l)}, {t(n, i + 1, l), t(n, i, l), t(n, i + 1, l)}};
    case RuleId::CupCup:
      return Sides{n - 2, {g(n, i), g(n + 2, i + k)}, {g(n, i + k - 2), g(n + 2, i)}};
    case RuleId::CapCap:
      return Sides{n + 2, {f(n + 2, i), f(n, i + k - 2)}, {f(n + 2, i + k), f(n, i)}};
    case RuleId::CupCap:
      if (q.variant == 0) return Sides{n, {f(n, i), g(n, i + k - 2)}, {g(n + 2, i + k), f(n + 2, i)}};
      return Sides{n, {f(n, i + k - 2), g(n, i)}, {g(n + 2, i), f(n + 2, i + k)}};
    case RuleId::CupCross:
      if (q.variant == 0) return Sides{n - 2, {t(n - 2, i + k - 2, l), g(n, i)}, {g(n, i), t(n, i + k, l)}};
      return Sides{n - 2, {t(n - 2, i, l), g(n, i + k)}, {g(n, i + k), t(n, i, l)}};
    case RuleId::CapCross:
      if (q.variant == 0) return Sides{n, {t(n, i + k, l), f(n, i)}, {f(n, i), t(n - 2, i + k - 2, l)}};
      return Sides{n, {t(n, i, l), f(n, i + k)}, {f(n, i + k), t(n - 2, i, l)}};
    case RuleId::CrossCross:
      return Sides{n, {t(n, i + k, m), t(n, i, l)}, {t(n, i, l), t(n, i + k, m)}};
    case RuleId::Pitchfork:
      if (q.variant == 0) return Sides{n - 2, {g(n, i + 1), t(n, i, true)}, {g(n, i), t(n, i + 1, false)}};
      return Sides{n - 2, {g(n, i + 1), t(n, i, false)}, {g(n, i), t(n, i + 1, true)}};
    case RuleId::AffRR:
      if (q.variant == 0) return Sides{n, {r(n), rp(n)}, {}};
      return Sides{n, {rp(n), r(n)}, {}};
    case RuleId::AffCap:
      if (q.variant == 0) return Sides{n, {r(n), f(n, i), rp(n - 2)}, {f(n, i + 1)}};
      return Sides{n, {r(n), r(n), f(n, n - 1)}, {f(n, 1)}};
    case RuleId::AffCup:
      if (q.variant == 0) return Sides{n - 2, {r(n - 2), g(n, i), rp(n)}, {g(n, i + 1)}};
      return Sides{n - 2, {g(n, n - 1), rp(n), rp(n)}, {g(n, 1)}};
    case RuleId::AffCross:
      if (q.variant == 0) return Sides{n, {r(n), t(n, i, l), rp(n)}, {t(n, i + 1, l)}};
      return Sides{n, {r(n), r(n), t(n, n - 1, l), rp(n), rp(n)}, {t(n, 1, l)}};
    case RuleId::TwistInv:
      if (q.variant == 0) return Sides{n, {w(n, i, false), w(n, i, true)}, {}};
      return Sides{n, {w(n, i, true), w(n, i, false)}, {}};
    case RuleId::TwistCommute:
      if (j <= i) return std::nullopt;
      return Sides{n, {w(n, i, l), w(n, j, m)}, {w(n, j, m), w(n, i, l)}};
    case RuleId::TwistCup:
      if (q.variant == 0) return Sides{n - 2, {g(n, i), w(n, i, l)}, {g(n, i), w(n, i + 1, l)}};
      if (j < 1) return std::nullopt;
      return Sides{n - 2, {w(n - 2, i, l), g(n, j)}, {g(n, j), w(n, past_cup(i, j), l)}};
    case RuleId::TwistCap:
      if (q.variant == 0) return Sides{n, {w(n, i, l), f(n, i)}, {w(n, i + 1, l), f(n, i)}};
      if (j < 1 || i == j || i == j + 1) return std::nullopt;
      return Sides{n, {w(n, i, l), f(n, j)}, {f(n, j), w(n - 2, past_cap(i, j), l)}};
    case RuleId::TwistCross:
      if (q.variant == 0) return Sides{n, {w(n, i, l), t(n, i, m)}, {t(n, i, m), w(n, i + 1, l)}};
      if (q.variant == 1) return Sides{n, {w(n, i + 1, l), t(n, i, m)}, {t(n, i, m), w(n, i, l)}};
      if (j < 1 || i == j || i == j + 1) return std::nullopt;
      return Sides{n, {w(n, i, l), t(n, j, m)}, {t(n, j, m), w(n, i, l)}};
    case RuleId::TwistRot:
      if (q.variant == 0) return Sides{n, {r(n), w(n, i, l)}, {w(n, i % n + 1, l), r(n)}};
      return Sides{n, {rp(n), w(n, i, l)}, {w(n, i == 1 ? n : i - 1, l), rp(n)}};
  }
  return std::nullopt;
}

bool uses_j(RuleId id, int variant) {
  switch (id) {
    case RuleId::TwistCommute: return true;
    case RuleId::TwistCup:
    case RuleId::TwistCap: return variant == 1;
    case RuleId::TwistCross: return variant == 2;
    default: return false;
  }
}

bool uses_i(RuleId id, int variant) {
  switch (id) {
    case RuleId::AffRR: return false;
    case RuleId::AffCap:
    case RuleId::AffCup:
    case RuleId::AffCross: return variant == 0;
    default: return true;
  }
}

}  // namespace

std::string_view rule_name(RuleId id) { return shape(id).name; }

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& s : kShapes)
    if (s.name == name) return s.id;
  if (name == "AffRR") return RuleId::AffRR;
  return std::nullopt;
}

const std::vector<RuleId>& all_rules() {
  static const std::vector<RuleId> ids = [] {
    std::vector<RuleId> v;
    for (const auto& s : kShapes) v.push_back(s.id);
    return v;
  }();
  return ids;
}

int RuleInstance::max_arity() const {
  int a = lhs.source();
  for (const TangleWord* side : {&lhs, &rhs})
    for (std::size_t pos = 0; pos <= side->size(); ++pos) a = std::max(a, side->arity_at(pos));
  return a;
}

std::string RuleInstance::label() const {
  const RuleShape& s = shape(rule);
  std::string out(s.name);
  if (s.variants > 1) out += "." + std::to_string(params.variant);
  out += " n=" + std::to_string(params.n);
  if (uses_i(rule, params.variant)) out += " i=" + std::to_string(params.i);
  if (s.uses_k) out += " k=" + std::to_string(params.k);
  if (uses_j(rule, params.variant)) out += " j=" + std::to_string(params.j);
  if (s.uses_l) out += std::string(" l=") + (params.l ? "+" : "-");
  if (s.uses_m) out += std::string(" m=") + (params.m ? "+" : "-");
  return out;
}

std::optional<RuleInstance> make_instance(RuleId rule, const RuleParams& p) {
  const RuleShape& s = shape(rule);
  if (p.variant < 0 || p.variant >= s.variants) return std::nullopt;
  if (s.uses_k ? p.k < 2 : p.k != 2) return std::nullopt;
  if (!s.uses_l && !p.l) return std::nullopt;
  if (!s.uses_m && !p.m) return std::nullopt;
  if (!uses_j(rule, p.variant) && p.j != 0) return std::nullopt;
  if (!uses_i(rule, p.variant) && p.i != 1) return std::nullopt;
  if (p.n < 1) return std::nullopt;
  auto sd = sides(rule, p);
  if (!sd) return std::nullopt;
  auto lhs = word(sd->source, sd->lhs);
  auto rhs = word(sd->source, sd->rhs);
  if (!lhs || !rhs || lhs->target() != rhs->target()) return std::nullopt;
  return RuleInstance{rule, p, *lhs, *rhs};
}

std::vector<RuleInstance> rule_instances(RuleId rule, int max_arity) {
  const RuleShape& s = shape(rule);
  std::vector<RuleInstance> out;
  for (int variant = 0; variant < s.variants; ++variant) {
    for (int n = 1; n <= max_arity + 2; ++n) {
      const int top = n + 2;
      for (int i = 1; i <= (uses_i(rule, variant) ? top : 1); ++i) {
        for (int k = 2; k <= (s.uses_k ? top : 2); ++k) {
          for (int j = uses_j(rule, variant) ? 1 : 0; j <= (uses_j(rule, variant) ? top : 0); ++j) {
            for (int l = 1; l >= (s.uses_l ? 0 : 1); --l) {
              for (int m = 1; m >= (s.uses_m ? 0 : 1); --m) {
                RuleParams p{n, i, k, j, l == 1, m == 1, variant};
                auto inst = make_instance(rule, p);
                if (inst && inst->max_arity() <= max_arity) out.push_back(std::move(*inst));
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace annarc
