#include "doctest.h"
#include "helpers.hpp"
#include "qmforge/oracle.hpp"
#include "qmforge/verify.hpp"

using namespace qmf;
using th::W;
using th::cnt;
using th::phi;

TEST_CASE("canonical orientation") {
  Sum f = phi("b'a'");
  REQUIRE(f.size() == 1);
  CHECK(f.terms().begin()->first == W("ab"));
  CHECK(f.coefficient(W("ab")) == -1);
  CHECK(f.coefficient(W("b'a'")) == 1);
  CHECK((phi("ab") + phi("b'a'")).is_zero());
  CHECK_THROWS_AS(phi("ab") + cnt("ab"), ContractError);
}

TEST_CASE("to_counting") {
  Sum g = to_counting(phi("ab", 3));
  CHECK(g.mode() == Mode::COUNTING);
  CHECK(g.coefficient(W("ab")) == 3);
  CHECK(g.coefficient(W("b'a'")) == -3);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(phi("ab"), W("abab")) == 2);
  CHECK(evaluate(phi("ab"), W("b'a'")) == -1);
  CHECK(evaluate(cnt("aba"), W("abaaab'b'b'b'aaba")) == 2);
  CHECK(evaluate(phi("a", Rational(1, 2)), W("aaa")) == Rational(3, 2));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Sum f = random_sum(rng, 3, 5, 4, 4);
    Evaluator ev(f);
    for (int j = 0; j < 20; ++j) {
      Word v = random_word(rng, 3, 0, 12);
      CHECK(ev(v) == oracle::naive_evaluate(f, v));
    }
  }
}

TEST_CASE("norm") {
  CHECK(norm(Sum(2, Mode::BROOKS)) == 0);
  CHECK(norm(phi("a") + phi("abb")) == 3);
  CHECK(norm(cnt("aa", 5) - cnt("ab", 3) + cnt("b")) == 2);
}

TEST_CASE("unbalanced") {
  Sum f = cnt("aa", 5) - cnt("ab", 3) + cnt("b");
  Unbalanced u = is_unbalanced(f);
  CHECK(u.value);
  REQUIRE(u.v0);
  CHECK(u.v0->size() == 2);
  // a relation is balanced
  Sum l = cnt("a") - cnt("aa") - cnt("ba") - cnt("b'a");
  CHECK_FALSE(is_unbalanced(l).value);
  CHECK_THROWS_AS(is_unbalanced(cnt("a")), ContractError);
}

TEST_CASE("brothers") {
  auto r = right_brothers(W("ab"));
  CHECK(r.size() == 2);  // ab' and a' excluded: aa, ba' ... only a-prefixed
  for (const Word& w : r) CHECK(w.size() == 2);
  CHECK(right_brothers(W("a")).empty());
}

TEST_CASE("truncated end") {
  TruncatedEnd te = truncated_end({W("b"), W("aba"), W("ab")}, kB);
  REQUIRE(te.n_s);
  CHECK(*te.n_s == 2);
  CHECK(te.E_s == std::vector<Word>{W("aba")});
  TruncatedEnd all = truncated_end({W("a"), W("aba")}, kB);
  CHECK_FALSE(all.n_s);
  CHECK(all.E_s.size() == 2);
}

TEST_CASE("certified reduced length") {
  ReducedLength h = certified_reduced_length(phi("a") - phi("b", 2));
  CHECK(h.kind == ReducedLength::Kind::EXACT);
  CHECK(h.length == 1);
  ReducedLength z = certified_reduced_length(Sum(2, Mode::BROOKS));
  CHECK(z.kind == ReducedLength::Kind::EXACT);
  CHECK(z.length == 0);
  ReducedLength u = certified_reduced_length(cnt("aa", 5) - cnt("ab", 3) + cnt("b"));
  CHECK(u.certificate == "unbalanced");
  CHECK(u.length == 2);
  ReducedLength t = certified_reduced_length(phi("aba"));
  CHECK(t.kind == ReducedLength::Kind::EXACT);
  CHECK(t.length == 3);
  CHECK(to_string(ReducedLength::Kind::LOWER_BOUND) == "LOWER_BOUND");
}

TEST_CASE("cyclic value is additive on powers of a homomorphism") {
  Sum f = phi("a", 2) - phi("b");
  for (const Word& v : enumerate_ball(Alphabet(2), 4)) {
    long ea = 0, eb = 0;
    for (Letter l : v.letters()) (l.index == 1 ? ea : eb) += l.sign;
    CHECK(cyclic_value(f, v) == 2 * ea - eb);
  }
}
