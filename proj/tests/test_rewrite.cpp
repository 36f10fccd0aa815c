#include <algorithm>
#include <random>

#include "annarc/error.hpp"
#include "annarc/matching.hpp"
#include "annarc/rewrite.hpp"
#include "annarc/skein.hpp"
#include "doctest.h"

using namespace annarc;

namespace {

bool contains(const std::vector<Rewrite>& rs, RuleId rule, std::size_t pos, Direction d) {
  return std::any_of(rs.begin(), rs.end(), [&](const Rewrite& r) {
    return r.rule == rule && r.position == pos && r.direction == d;
  });
}

}  // namespace

TEST_CASE("rule names") {
  for (RuleId id : all_rules()) CHECK(rule_from_name(rule_name(id)) == id);
  CHECK(rule_name(RuleId::AffRR) == "AffRR'");
  CHECK_FALSE(rule_from_name("Bogus").has_value());
}

TEST_CASE("instances have matching signatures") {
  for (RuleId id : all_rules()) {
    auto insts = rule_instances(id, 8);
    CHECK_MESSAGE(!insts.empty(), rule_name(id));
    for (const auto& inst : insts) {
      CHECK(inst.lhs.source() == inst.rhs.source());
      CHECK(inst.lhs.target() == inst.rhs.target());
      CHECK(inst.max_arity() <= 8);
      CHECK_FALSE(inst.lhs == inst.rhs);
    }
  }
}

TEST_CASE("instance side conditions") {
  CHECK(make_instance(RuleId::R0, {4, 1}).has_value());
  CHECK_FALSE(make_instance(RuleId::R0, {4, 3}).has_value());
  CHECK_FALSE(make_instance(RuleId::CupCup, {4, 1, 1}).has_value());
  CHECK_FALSE(make_instance(RuleId::TwistCommute, {4, 2, 2, 2}).has_value());
  CHECK_FALSE(make_instance(RuleId::TwistCap, {4, 2, 2, 1, true, true, 1}).has_value());
  auto cup = make_instance(RuleId::AffCup, {4, 2});
  REQUIRE(cup);
  CHECK(format_word(cup->lhs) == "r(2); g(4,2); r'(4)");
  CHECK(format_word(cup->rhs) == "g(4,3)");
  auto r1 = make_instance(RuleId::R1F, {4, 1, 2, 0, false});
  REQUIRE(r1);
  CHECK(format_word(r1->lhs) == "g(4,1); t-(4,2); f(4,1)");
  CHECK(format_word(r1->rhs) == "w-(2,1)");
}

TEST_CASE("applicable rewrites") {
  auto rr = applicable_rewrites(parse_word("r(4); r'(4)"));
  CHECK(contains(rr, RuleId::AffRR, 0, Direction::Forward));
  auto r0 = applicable_rewrites(parse_word("g(4,2); f(4,1)"));
  CHECK(contains(r0, RuleId::R0, 0, Direction::Forward));
  auto id = applicable_rewrites(TangleWord::identity(4));
  CHECK_FALSE(id.empty());
  for (const auto& r : id) CHECK(r.direction == Direction::Reverse);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    TangleWord w = random_flat_word(rng, 0, 2, 5);
    for (const auto& r : applicable_rewrites(w)) {
      TangleWord v = rewrite(w, r);
      CHECK(v.source() == w.source());
      CHECK(v.target() == w.target());
    }
  }
}

TEST_CASE("rewrite examples") {
  CHECK(rewrite(parse_word("t-(2,1); t+(2,1)"), RuleId::R2, 0, Direction::Forward) == TangleWord::identity(2));
  TangleWord w = parse_word("g(4,1); t+(4,3); f(4,2)");
  TangleWord step = rewrite(w, RuleId::CupCross, 0, Direction::Reverse);
  CHECK(format_word(step) == "t+(2,1); g(4,1); f(4,2)");
  CHECK(format_word(rewrite(step, RuleId::R0, 1, Direction::Forward)) == "t+(2,1)");
  CHECK(bracket(FlatState(2), w) == bracket(FlatState(2), parse_word("t+(2,1)")));

  CHECK_THROWS_AS(rewrite(parse_word("g(2,1); t+(2,1)"), RuleId::R2, 0, Direction::Forward), NotApplicable);
  CHECK_THROWS_AS(rewrite(parse_word("g(2,1)"), RuleId::R0, 5, Direction::Forward), NotApplicable);
  auto all = applicable_rewrites(parse_word("r(4); r'(4)"));
  auto stale = *std::find_if(all.begin(), all.end(), [](const Rewrite& r) {
    return r.rule == RuleId::AffRR && r.direction == Direction::Forward;
  });
  CHECK_THROWS_AS(rewrite(parse_word("r'(4); r(4)"), stale), NotApplicable);
}

TEST_CASE("crossing elimination") {
  CHECK(eliminate_crossings(parse_word("t+(2,1); t-(2,1)")) == TangleWord::identity(2));
  TangleWord kink = parse_word("g(2,1); g(4,1); t-(4,2); f(4,1); f(2,1)");
  TangleWord flat = eliminate_crossings(kink);
  CHECK(flat.is_flat());
  CHECK(format_word(flat) == "g(2,1); w-(2,1); f(2,1)");
  CHECK(bracket(flat) == bracket(kink));

  TangleWord open_kink = parse_word("g(2,1); t+(2,1)");
  TangleWord untwisted = eliminate_crossings(open_kink);
  CHECK(untwisted.is_flat());
  CHECK(bracket(untwisted) == bracket(open_kink));
  CHECK(evaluate_word(untwisted).shift == evaluate_word(parse_word("g(2,1); w-(2,1)")).shift);

  TangleWord trefoil = parse_word("g(2,1); g(4,3); t+(4,2); t+(4,2); t+(4,2); f(4,3); f(2,1)");
  auto value = bracket(trefoil);
  REQUIRE(value.size() == 1);
  CHECK(value.begin()->second.terms().size() > 1);
  CHECK_THROWS_AS(eliminate_crossings(trefoil, 2000), CrossingsIrreducible);
}

TEST_CASE("relation examples") {
  CHECK(check_relation(RuleId::R0, {4, 1}));
  CHECK(check_relation(RuleId::AffCup, {4, 2}));
  CHECK(check_relation(RuleId::R1F, {4, 1}));
  CHECK(check_relation(RuleId::R1F, {4, 2, 2, 0, false, true, 1}));
}

TEST_CASE("a wrong relation is rejected") {
  RuleInstance bad = *make_instance(RuleId::AffCup, {4, 2});
  bad.rhs = parse_word("g(4,2)");
  CHECK_FALSE(check_relation(bad));
  RuleInstance twist = *make_instance(RuleId::R1F, {4, 1});
  twist.rhs = parse_word("w-(2,1)");
  CHECK_FALSE(check_relation(twist));
}

TEST_CASE("soundness of every instance up to arity 8") {
  for (RuleId id : all_rules()) {
    int failures = 0;
    for (const auto& inst : rule_instances(id, 8))
      if (!check_relation(inst)) {
        ++failures;
        MESSAGE(inst.label());
      }
    CHECK_MESSAGE(failures == 0, rule_name(id));
  }
}
