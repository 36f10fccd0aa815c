#include "annarc/rewrite.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "annarc/error.hpp"
#include "annarc/matching.hpp"
#include "annarc/skein.hpp"

namespace annarc {

namespace {

struct Entry {
  std::size_t instance;
  Direction direction;
};

struct Table {
  std::vector<RuleInstance> instances;
  std::map<Generator, std::vector<Entry>> by_first;
  std::map<int, std::vector<Entry>> insertions;  // keyed by arity
};

const Table& table() {
  static const Table t = [] {
    Table out;
    for (RuleId id : all_rules())
      for (RuleInstance& inst : rule_instances(id, kMaxRuleArity)) out.instances.push_back(std::move(inst));
    for (std::size_t x = 0; x < out.instances.size(); ++x) {
      const RuleInstance& inst = out.instances[x];
      for (Direction d : {Direction::Forward, Direction::Reverse}) {
        const TangleWord& pat = d == Direction::Forward ? inst.lhs : inst.rhs;
        if (pat.empty()) out.insertions[pat.source()].push_back({x, d});
        else out.by_first[pat.tokens().front()].push_back({x, d});
      }
    }
    return out;
  }();
  return t;
}

bool occurs_at(const TangleWord& w, const TangleWord& pat, std::size_t pos) {
  if (pat.empty()) return pos <= w.size() && w.arity_at(pos) == pat.source();
  if (pos + pat.size() > w.size()) return false;
  return std::equal(pat.tokens().begin(), pat.tokens().end(), w.tokens().begin() + pos);
}

std::vector<Rewrite> rewrites_at(const TangleWord& w, std::size_t pos, bool with_insertions) {
  const Table& t = table();
  std::vector<Rewrite> out;
  auto add = [&](const std::vector<Entry>& entries) {
    for (const Entry& e : entries) {
      const RuleInstance& inst = t.instances[e.instance];
      Rewrite r{inst.rule, pos, e.direction, inst};
      if (occurs_at(w, r.pattern(), pos)) out.push_back(std::move(r));
    }
  };
  if (pos < w.size()) {
    auto it = t.by_first.find(w.tokens()[pos]);
    if (it != t.by_first.end()) add(it->second);
  }
  if (with_insertions) {
    auto it = t.insertions.find(w.arity_at(pos));
    if (it != t.insertions.end()) add(it->second);
  }
  std::stable_sort(out.begin(), out.end(), [](const Rewrite& a, const Rewrite& b) {
    return std::tie(a.rule, a.direction) < std::tie(b.rule, b.direction);
  });
  return out;
}

int peak(const TangleWord& w) {
  int top = w.source();
  for (std::size_t pos = 1; pos <= w.size(); ++pos) top = std::max(top, w.arity_at(pos));
  return top;
}

TangleWord splice(const TangleWord& w, const Rewrite& r) {
  const TangleWord& pat = r.pattern();
  std::vector<Generator> tokens(w.tokens().begin(), w.tokens().begin() + r.position);
  const auto& rep = r.replacement().tokens();
  tokens.insert(tokens.end(), rep.begin(), rep.end());
  tokens.insert(tokens.end(), w.tokens().begin() + r.position + pat.size(), w.tokens().end());
  return TangleWord(w.source(), std::move(tokens));
}

}  // namespace

std::vector<Rewrite> applicable_rewrites(const TangleWord& w) {
  std::vector<Rewrite> out;
  for (std::size_t pos = 0; pos <= w.size(); ++pos) {
    auto here = rewrites_at(w, pos, true);
    out.insert(out.end(), std::make_move_iterator(here.begin()), std::make_move_iterator(here.end()));
  }
  return out;
}

TangleWord rewrite(const TangleWord& w, const Rewrite& r) {
  if (!occurs_at(w, r.pattern(), r.position)) {
    throw NotApplicable(std::string(rule_name(r.rule)) + " pattern \"" + format_word(r.pattern()) +
                        "\" does not occur at position " + std::to_string(r.position));
  }
  return splice(w, r);
}

TangleWord rewrite(const TangleWord& w, RuleId rule, std::size_t position, Direction direction) {
  if (position <= w.size()) {
    for (const Rewrite& r : rewrites_at(w, position, true))
      if (r.rule == rule && r.direction == direction) return splice(w, r);
  }
  throw NotApplicable(std::string(rule_name(rule)) +
                      (direction == Direction::Forward ? " forward" : " reverse") +
                      " does not apply at position " + std::to_string(position));
}

TangleWord eliminate_crossings(const TangleWord& w, int budget) {
  using Key = std::tuple<int, std::size_t, std::string>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> frontier;
  std::map<std::string, TangleWord> words;
  auto push = [&](const TangleWord& v) {
    std::string s = format_word(v);
    if (words.emplace(s, v).second) frontier.emplace(v.crossing_count(), v.size(), std::move(s));
  };
  push(w);
  const int ceiling = peak(w) + 2;
  int expanded = 0;
  while (!frontier.empty() && expanded < budget) {
    auto [cross, len, s] = frontier.top();
    frontier.pop();
    const TangleWord cur = words.at(s);
    if (cross == 0) return cur;
    ++expanded;
    for (std::size_t pos = 0; pos <= cur.size(); ++pos)
      for (const Rewrite& r : rewrites_at(cur, pos, true)) {
        TangleWord next = splice(cur, r);
        if (r.pattern().empty() && peak(next) > ceiling) continue;
        push(next);
      }
  }
  throw CrossingsIrreducible("no crossingless form of \"" + format_word(w) + "\" within " +
                             std::to_string(budget) + " states");
}

TangleWord random_flat_word(std::mt19937& rng, int from, int to, int length) {
  if ((from - to) % 2 != 0) throw ArityError("flat words preserve arity parity");
  const int ceiling = std::max(from, to) + 4;
  std::vector<Generator> tokens;
  int a = from;
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int step = 0; step < length; ++step) {
    std::vector<Generator> options;
    if (a + 2 <= ceiling)
      for (int i = 1; i <= a + 1; ++i) options.push_back(Generator::cup(a + 2, i));
    for (int i = 1; i < a; ++i) options.push_back(Generator::cap(a, i));
    for (int i = 1; i <= a; ++i) {
      options.push_back(Generator::twist(a, i, true));
      options.push_back(Generator::twist(a, i, false));
    }
    options.push_back(Generator::rot(a));
    options.push_back(Generator::rot_inv(a));
    std::erase_if(options, [](const Generator& g) { return !is_valid(g); });
    if (options.empty()) break;
    const Generator g = options[pick(0, static_cast<int>(options.size()) - 1)];
    tokens.push_back(g);
    a = g.target();
  }
  while (a < to) {
    tokens.push_back(Generator::cup(a + 2, pick(1, a + 1)));
    a += 2;
  }
  while (a > to) {
    tokens.push_back(Generator::cap(a, pick(1, a - 1)));
    a -= 2;
  }
  return TangleWord(from, std::move(tokens));
}

bool check_relation(const RuleInstance& inst, int contexts, std::uint32_t seed) {
  std::mt19937 rng(seed);
  const int base = inst.lhs.source() % 2;
  for (int c = 0; c < std::max(contexts, 1); ++c) {
    const TangleWord pre = random_flat_word(rng, base, inst.lhs.source(), 1 + c % 4);
    const TangleWord post = random_flat_word(rng, inst.lhs.target(), base + 2 * (c % 2), 1 + c % 3);
    for (bool with_post : {false, true}) {
      TangleWord l = compose(pre, inst.lhs), r = compose(pre, inst.rhs);
      if (with_post) {
        l = compose(l, post);
        r = compose(r, post);
      }
      if (!inst.has_crossings()) {
        FlatState sl(base), sr(base);
        sl.apply(l);
        sr.apply(r);
        if (!(sl == sr)) return false;
      } else if (bracket(FlatState(base), l) != bracket(FlatState(base), r)) {
        return false;
      }
    }
  }
  return true;
}

bool check_relation(RuleId rule, const RuleParams& p, int contexts) {
  auto inst = make_instance(rule, p);
  if (!inst) throw IndexError("parameters out of range for " + std::string(rule_name(rule)));
  return check_relation(*inst, contexts);
}

}  // namespace annarc
