#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "annarc/error.hpp"
#include "annarc/matching.hpp"
#include "doctest.h"
#include "named.hpp"

using namespace annarc;
using testing_util::named;

namespace {

// Every pairing of 2n points with either orientation of each arc, kept when
// the clockwise spans of any two arcs are disjoint or one contains the other.
std::set<std::vector<Arc>> brute_force(int n) {
  const int pts = 2 * n;
  std::set<std::vector<Arc>> out;
  std::vector<int> partner(pts + 1, 0);
  auto span = [&](int a, int b) {
    std::set<int> s;
    for (int p = a;; p = p % pts + 1) {
      s.insert(p);
      if (p == b) break;
    }
    return s;
  };
  auto rec = [&](auto&& self) -> void {
    int p = 1;
    while (p <= pts && partner[p]) ++p;
    if (p > pts) {
      std::vector<std::pair<int, int>> pairs;
      for (int a = 1; a <= pts; ++a)
        if (a < partner[a]) pairs.push_back({a, partner[a]});
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<Arc> arcs;
        std::vector<std::set<int>> spans;
        for (int k = 0; k < n; ++k) {
          auto [a, b] = pairs[k];
          if (mask >> k & 1) std::swap(a, b);
          arcs.push_back({a, b, a > b ? 1 : 0});
          spans.push_back(span(a, b));
        }
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
          for (int y = x + 1; y < n && ok; ++y) {
            auto within = [&](int in, int out) {
              for (int p : spans[in])
                if (!spans[out].count(p) || p == arcs[out].plus || p == arcs[out].minus) return false;
              return true;
            };
            std::set<int> both;
            std::set_intersection(spans[x].begin(), spans[x].end(), spans[y].begin(), spans[y].end(),
                                  std::inserter(both, both.end()));
            ok = both.empty() || within(x, y) || within(y, x);
          }
        if (ok) {
          std::sort(arcs.begin(), arcs.end());
          out.insert(arcs);
        }
      }
      return;
    }
    for (int q = p + 1; q <= pts; ++q) {
      if (partner[q]) continue;
      partner[p] = q;
      partner[q] = p;
      self(self);
      partner[p] = partner[q] = 0;
    }
  };
  rec(rec);
  return out;
}

long binom(int a, int b) {
  long r = 1;
  for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

}  // namespace

TEST_SUITE("matchings") {

TEST_CASE("enumerate counts") {
  const long expected[] = {1, 2, 6, 20, 70, 252, 924};
  for (int n = 0; n <= 6; ++n) {
    auto all = enumerate(n);
    CHECK(static_cast<long>(all.size()) == expected[n]);
    CHECK(static_cast<long>(all.size()) == binom(2 * n, n));
    std::set<AffineMatching> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
  }
}

TEST_CASE("enumerate agrees with brute force") {
  for (int n = 0; n <= 4; ++n) {
    std::set<std::vector<Arc>> ours;
    for (const auto& m : enumerate(n)) ours.insert(m.arcs());
    CHECK(ours == brute_force(n));
  }
}

TEST_CASE("sign bijection anchors") {
  auto a = from_signs("+-");
  CHECK(a.arcs() == std::vector<Arc>{{1, 2, 0}});
  auto b = from_signs("-+");
  CHECK(b.arcs() == std::vector<Arc>{{2, 1, 1}});
  auto c = from_signs("++--");
  CHECK(c.arcs() == std::vector<Arc>{{1, 4, 0}, {2, 3, 0}});
  CHECK(to_signs(AffineMatching::from_arcs(1, {{1, 2, 0}})) == "+-");
  CHECK(from_signs("").n() == 0);
  CHECK_THROWS_AS(from_signs("++-"), UnbalancedSequence);
  CHECK_THROWS_AS(from_signs("+x"), UnbalancedSequence);
}

TEST_CASE("sign round trips") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& m : enumerate(n)) CHECK(from_signs(to_signs(m)) == m);
  }
  std::set<std::string> strings;
  for (const auto& m : enumerate(2)) strings.insert(to_signs(m));
  CHECK(strings == std::set<std::string>{"++--", "+-+-", "+--+", "-++-", "-+-+", "--++"});
}

TEST_CASE("invalid arc sets") {
  CHECK_THROWS_AS(AffineMatching::from_arcs(2, {{1, 3, 0}, {2, 4, 0}}), IndexError);
  CHECK_THROWS_AS(AffineMatching::from_arcs(2, {{1, 4, 0}, {3, 2, 1}}), IndexError);
  CHECK_THROWS_AS(AffineMatching::from_arcs(3, {{1, 4, 0}, {3, 2, 1}, {5, 6, 0}}), IndexError);
  CHECK_THROWS_AS(AffineMatching::from_arcs(1, {{1, 2, 1}}), IndexError);
  CHECK_THROWS_AS(AffineMatching::from_arcs(1, {{1, 1, 0}}), IndexError);
}

TEST_CASE("generator action") {
  AffineMatching empty;
  auto a1 = act_generator(empty, Generator::cup(2, 1));
  CHECK(a1.matching == from_signs("+-"));
  auto a2 = act_generator(a1.matching, Generator::rot(2));
  CHECK(a2.matching == from_signs("-+"));
  auto closed = act_generator(a1.matching, Generator::cap(2, 1));
  CHECK(closed.matching.n() == 0);
  CHECK(closed.n0 == 1);
  CHECK(closed.n1 == 0);
  CHECK(closed.shift == 0);
  auto twisted = act_generator(a1.matching, Generator::twist(2, 1, true));
  CHECK(twisted.shift == 1);
  CHECK_THROWS_AS(act_generator(a1.matching, Generator::cross(2, 1, true)), FlatnessError);
  CHECK_THROWS_AS(act_generator(a1.matching, Generator::cap(4, 1)), ArityError);
}

TEST_CASE("evaluation golden data") {
  auto a1 = parse_word(testing_util::kAlpha1);
  auto a2 = parse_word(testing_util::kAlpha2);
  auto r = evaluate_word(compose(a2, dual(a1)));
  CHECK(r.matching.n() == 0);
  CHECK(r.n0 == 0);
  CHECK(r.n1 == 1);
  CHECK(r.shift == 0);

  auto b1 = parse_word(testing_util::kBeta1);
  auto b2 = parse_word(testing_util::kBeta2);
  auto b3 = parse_word(testing_util::kBeta3);
  auto rb = evaluate_word(compose(b1, dual(b1)));
  CHECK(rb.n0 == 2);
  CHECK(rb.n1 == 0);
  auto rc = evaluate_word(compose(b2, dual(b3)));
  CHECK(rc.n0 == 0);
  CHECK(rc.n1 == 2);
  CHECK_THROWS_AS(evaluate_word(parse_word("t+(2,1)")), ArityError);
  CHECK_THROWS_AS(evaluate_word(parse_word("g(2,1); t+(2,1)")), FlatnessError);
}

TEST_CASE("the six n=2 irreducibles") {
  std::set<std::string> s;
  for (auto w : {testing_util::kBeta1, testing_util::kBeta2, testing_util::kBeta3, testing_util::kBeta4,
                 testing_util::kBeta5, testing_util::kBeta6})
    s.insert(to_signs(named(w)));
  CHECK(s.size() == 6);
  CHECK(to_signs(named(testing_util::kBeta1)) == "+-+-");
  CHECK(to_signs(named(testing_util::kBeta4)) == "++--");
}

TEST_CASE("matching words and closures") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& m : enumerate(n)) {
      auto w = matching_word(m);
      CHECK(w.source() == 0);
      CHECK(w.target() == 2 * n);
      CHECK(evaluate_word(w).matching == m);
      CHECK(evaluate_word(w).n0 + evaluate_word(w).n1 == 0);
    }
  }
}

TEST_CASE("loop count laws") {
  for (int n = 1; n <= 4; ++n) {
    auto all = enumerate(n);
    for (const auto& a : all) {
      auto self = evaluate_word(closure_word(a, a));
      CHECK(self.n0 == n);
      CHECK(self.n1 == 0);
      for (const auto& b : all) {
        auto ab = evaluate_word(closure_word(a, b));
        auto ba = evaluate_word(closure_word(b, a));
        CHECK(ab.n0 + ab.n1 >= 1);
        CHECK(ab.n0 + ab.n1 <= n);
        CHECK(ab.n0 == ba.n0);
        CHECK(ab.n1 == ba.n1);
      }
    }
  }
}

TEST_CASE("rotation has order 2n") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& m : enumerate(n)) {
      AffineMatching cur = m;
      for (int k = 0; k < 2 * n; ++k) {
        auto r = act_generator(cur, Generator::rot(2 * n));
        CHECK(r.n0 + r.n1 == 0);
        cur = r.matching;
        if (k + 1 < 2 * n && n == 1) CHECK(cur != m);
      }
      CHECK(cur == m);
      for (int k = 0; k < 2 * n; ++k) cur = act_generator(cur, Generator::rot_inv(2 * n)).matching;
      CHECK(cur == m);
    }
  }
}

TEST_CASE("through strands") {
  FlatState st(1);
  st.apply(parse_word("g(3,2); f(3,1)"));
  CHECK(st == FlatState(1));
  FlatState spun(1);
  spun.apply(parse_word("r(1)"));
  CHECK(spun.outer()[0].seam == 1);
  CHECK(spun.inner()[0].seam == -1);
  spun.apply(parse_word("r'(1)"));
  CHECK(spun == FlatState(1));
}

}
