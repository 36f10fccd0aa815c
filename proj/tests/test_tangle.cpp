#include <random>

#include "annarc/error.hpp"
#include "annarc/tangle.hpp"
#include "doctest.h"
#include "random_words.hpp"

using namespace annarc;

TEST_SUITE("tangle") {

TEST_CASE("parse single generators and chains") {
  auto w = parse_word("g(2,1)");
  CHECK(w.size() == 1);
  CHECK(w.source() == 0);
  CHECK(w.target() == 2);
  CHECK(w.tokens()[0] == Generator::cup(2, 1));

  auto w2 = parse_word("g(2,1); g(4,1)");
  CHECK(w2.source() == 0);
  CHECK(w2.target() == 4);

  auto w3 = parse_word("  t+( 4 ,2 ) ;w-(4,4);r'(4) ; r(4)");
  CHECK(w3.source() == 4);
  CHECK(w3.target() == 4);
  CHECK(w3.tokens()[1] == Generator::twist(4, 4, false));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_word("g(2,1); g(2,1)"), ArityError);
  CHECK_THROWS_AS(parse_word("g(2,0)"), IndexError);
  CHECK_THROWS_AS(parse_word("g(2,3)"), IndexError);
  CHECK_THROWS_AS(parse_word("t+(1,1)"), IndexError);
  CHECK_THROWS_AS(parse_word("w+(3,4)"), IndexError);
  CHECK_THROWS_AS(parse_word("q(2,1)"), SyntaxError);
  CHECK_THROWS_AS(parse_word("g(2,1);"), SyntaxError);
  CHECK_THROWS_AS(parse_word("g(2 1)"), SyntaxError);
  CHECK_THROWS_AS(parse_word(""), SyntaxError);
  CHECK_THROWS_AS(parse_word("id(4); g(6,1)"), SyntaxError);
  CHECK_THROWS_AS(parse_word("r(0)"), IndexError);
}

TEST_CASE("format") {
  CHECK(format_word(TangleWord({Generator::cup(2, 1)})) == "g(2,1)");
  CHECK(format_word(TangleWord::identity(4)) == "id(4)");
  CHECK(format_word(TangleWord({Generator::cup(2, 1), Generator::rot(2)})) == "g(2,1); r(2)");
  CHECK(format_word(parse_word("id(3)")) == "id(3)");
  CHECK(parse_word("id(3)").source() == 3);
}

TEST_CASE("index n expands into a rotation conjugate") {
  CHECK(format_word(parse_word("g(2,2)")) == "g(2,1); r'(2)");
  CHECK(format_word(parse_word("g(4,4)")) == "r(2); g(4,3); r'(4)");
  CHECK(format_word(parse_word("f(2,2)")) == "r(2); f(2,1)");
  CHECK(format_word(parse_word("f(4,4)")) == "r(4); f(4,3); r'(2)");
  CHECK(format_word(parse_word("t-(4,4)")) == "r(4); t-(4,3); r'(4)");
}

TEST_CASE("compose") {
  auto c = compose(parse_word("g(2,1)"), parse_word("f(2,1)"));
  CHECK(c.source() == 0);
  CHECK(c.target() == 0);
  auto w = parse_word("g(2,1); r(2)");
  CHECK(compose(w, TangleWord::identity(2)) == w);
  CHECK(compose(TangleWord::identity(0), w) == w);
  CHECK_THROWS_AS(compose(parse_word("g(2,1)"), parse_word("g(2,1)")), ArityError);
}

TEST_CASE("dual") {
  CHECK(format_word(dual(parse_word("g(2,1)"))) == "f(2,1)");
  CHECK(format_word(dual(parse_word("t+(4,2)"))) == "t-(4,2)");
  auto w = parse_word("g(4,1); t+(4,1); r(4)");
  CHECK(dual(dual(w)) == w);
  CHECK(format_word(dual(w)) == "r'(4); t-(4,1); f(4,1)");
  CHECK_THROWS_AS(parse_word("g(2,1); t+(4,1); r(4)"), ArityError);
  CHECK(dual(w).source() == w.target());
  CHECK(dual(w).target() == w.source());
}

TEST_CASE("round trip, involution and associativity on random words") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    const int source = static_cast<int>(rng() % 6);
    auto w = testing_util::random_word(rng, source, static_cast<int>(rng() % 12));
    CHECK(parse_word(format_word(w)) == w);
    CHECK(dual(dual(w)) == w);
    CHECK(dual(w).source() == w.target());
    auto u = testing_util::random_word(rng, w.target(), 4);
    auto v = testing_util::random_word(rng, u.target(), 4);
    CHECK(compose(compose(w, u), v) == compose(w, compose(u, v)));
    CHECK(compose(w, u).source() == w.source());
    CHECK(compose(w, u).target() == u.target());
  }
}

}
