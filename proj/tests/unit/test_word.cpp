#include "doctest.h"
#include "helpers.hpp"
#include "qmforge/kind.hpp"
#include "qmforge/verify.hpp"

using namespace qmf;
using th::W;

TEST_CASE("parse and print") {
  CHECK(to_string(W("ab'a")) == "ab'a");
  CHECK(W("ab^-1a") == W("ab'a"));
  CHECK_THROWS_AS(W("abb'a"), ParseError);
  CHECK(W("e").empty());
  CHECK(to_string(identity(2)) == "e");
  CHECK(to_string(W("acf", 5)) == "acf");
  CHECK_THROWS_AS(W("f", 4), ParseError);
  CHECK_THROWS_AS(W("ac"), ParseError);
  CHECK_THROWS_AS(W("a?b"), ParseError);
  CHECK_THROWS_AS(Alphabet(1), ContractError);
  try {
    W("abx");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("letter names skip e") {
  CHECK(letter_char(4) == 'd');
  CHECK(letter_char(5) == 'f');
  CHECK(letter_index('e') == 0);
  CHECK(letter_index('f') == 5);
}

TEST_CASE("shortlex order") {
  CHECK(W("b") < W("aa"));
  CHECK(W("a") < W("a'"));
  CHECK(W("a'") < W("b"));
  CHECK(W("ab") < W("ab'"));
}

TEST_CASE("group laws on random words") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    Word u = random_word(rng, 3, 0, 7), v = random_word(rng, 3, 0, 7),
         w = random_word(rng, 3, 0, 7);
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
    CHECK(multiply(u, invert(u)).empty());
    CHECK(invert(multiply(u, v)) == multiply(invert(v), invert(u)));
    CHECK(multiply(u, identity(3)) == u);
  }
}

TEST_CASE("overlapping subword counts") {
  CHECK(count_subword(W("aa"), W("aaa")) == 2);
  CHECK(count_subword(W("aba"), W("ababa")) == 2);
  CHECK(count_subword(W("aba"), W("abaaa")) == 1);
  CHECK(count_subword(W("b"), W("a")) == 0);
  CHECK(count_subword(W("abab"), W("ab")) == 0);
}

TEST_CASE("ball sizes") {
  CHECK(ball_size(2, 0) == 1);
  CHECK(ball_size(2, 1) == 5);
  CHECK(ball_size(2, 2) == 17);
  CHECK(ball_size(3, 3) == 1 + 6 + 30 + 150);
  for (int L = 0; L <= 6; ++L)
    CHECK(enumerate_ball(Alphabet(2), L).size() == ball_size(2, L));
  auto s = enumerate_sphere(Alphabet(2), 3);
  CHECK(s.size() == 36);
  CHECK(std::is_sorted(s.begin(), s.end()));
}

TEST_CASE("b-form round trip") {
  CHECK_THROWS_AS(b_form(identity(2)), ContractError);
  for (const Word& w : enumerate_ball(Alphabet(3), 5)) {
    if (w.empty()) continue;
    BForm f = b_form(w);
    CHECK(f.m.size() == f.s.size() + 1);
    CHECK(assemble(3, f) == w);
  }
  BForm f = b_form(W("bbab'a'"));
  CHECK(f.m == std::vector<long>{2, -1, 0});
  CHECK(f.k() == 2);
}

TEST_CASE("truncate") {
  CHECK(truncate(W("bbab'"), kB) == W("a"));
  CHECK_FALSE(truncate(W("bbb"), kB).has_value());
  CHECK(is_truncated(W("aba"), kB));
  CHECK_FALSE(is_truncated(W("ab"), kB));
  CHECK(is_letter_power(W("b'b'"), kB));
}

TEST_CASE("kinds") {
  CHECK(kind(W("aba")) == Kind::B_TRUNCATED);
  CHECK(kind(W("ba")) == Kind::B_LEFT);
  CHECK(kind(W("ab")) == Kind::RIGHT_B);
  CHECK(kind(W("bab")) == Kind::B_AND_B);
  CHECK(kind(W("bb")) == Kind::B_POWER);
  CHECK(to_string(Kind::B_AND_B) == "b-and-b");
  for (const Word& w : enumerate_ball(Alphabet(2), 4)) {
    if (w.empty() || is_letter_power(w, kB)) continue;
    CHECK(kind(invert(w)) == inverse_kind(kind(w)));
  }
}
