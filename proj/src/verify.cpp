#include "qmforge/verify.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "qmforge/nielsen.hpp"
#include "qmforge/speed.hpp"

namespace qmf {

namespace {

constexpr Letter kLa{kA, 1};
constexpr Letter kLai{kA, -1};

int side_row(long m, Letter s, Letter special) {
  if (m == 0) return 0;
  if (m > 0) return s != special ? 1 : 2;
  return s != special ? 3 : 4;
}

bool prefix_of(const Word& p, const Word& w) {
  if (p.size() > w.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.code(i) != w.code(i)) return false;
  return true;
}

bool suffix_of(const Word& p, const Word& w) {
  if (p.size() > w.size()) return false;
  const std::size_t off = w.size() - p.size();
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.code(i) != w.code(off + i)) return false;
  return true;
}

long naive_phi(const Word& w, const Word& v) {
  return oracle::naive_count(w, v) - oracle::naive_count(invert(w), v);
}

oracle::SuiteResult fail(oracle::SuiteResult r, std::string why) {
  r.pass = false;
  r.detail = std::move(why);
  return r;
}

oracle::SuiteResult suite_relations(int rank, int radius) {
  oracle::SuiteResult r;
  r.name = "relations";
  std::vector<Word> ball = enumerate_ball(Alphabet(rank), radius);
  for (const Word& w : enumerate_ball(Alphabet(rank), 3)) {
    if (w.empty()) continue;
    oracle::BallEvaluator el(extension_relation(Side::LEFT, w));
    oracle::BallEvaluator er(extension_relation(Side::RIGHT, w));
    for (const Word& v : ball) {
      r.checks += 2;
      if (el(v) != (prefix_of(w, v) ? 1 : 0))
        return fail(r, "l_" + to_string(w) + " at " + to_string(v));
      if (er(v) != (suffix_of(w, v) ? 1 : 0))
        return fail(r, "r_" + to_string(w) + " at " + to_string(v));
    }
  }
  return r;
}

// Occurrences of w in T^n v against occurrences of W*_n(w) in v, both counted
// cyclically on conjugacy classes.
oracle::SuiteResult suite_transport(int rank, int radius) {
  oracle::SuiteResult r;
  r.name = "transport";
  std::vector<Word> ball = enumerate_ball(Alphabet(rank), radius);
  for (const Word& w : stratified_corpus(rank))
    for (int n = 1; n <= 3; ++n) {
      Sum lhs = Sum::count(w), rhs(rank, Mode::COUNTING);
      for (const Word& u : wstar_n(w, n).words()) rhs.add(u, 1);
      for (const Word& v : ball) {
        ++r.checks;
        if (cyclic_value(lhs, apply_t_power(v, n)) != cyclic_value(rhs, v))
          return fail(r, "w=" + to_string(w) + " n=" + std::to_string(n) +
                             " v=" + to_string(v));
      }
    }
  return r;
}

oracle::SuiteResult suite_nrep(int rank, int radius) {
  oracle::SuiteResult r;
  r.name = "nrep";
  const int lo = std::max(0, radius - 2);
  std::vector<Word> ball = enumerate_ball(Alphabet(rank), radius);
  for (const Word& w : stratified_corpus(rank))
    for (int n = 1; n <= 3; ++n) {
      oracle::BallEvaluator ev(n_representative(w, n));
      std::vector<BigInt> best(static_cast<std::size_t>(radius + 1), BigInt(0));
      for (const Word& v : ball) {
        ++r.checks;
        BigInt d = abs(ev.scaled(v) - ev.scale() * naive_phi(w, apply_t_power(v, n)));
        BigInt& b = best[v.size()];
        if (d > b) b = d;
      }
      BigInt run = 0;
      std::vector<BigInt> sup;
      for (int l = 0; l <= radius; ++l) {
        run = std::max(run, best[static_cast<std::size_t>(l)]);
        if (l >= lo) sup.push_back(run);
      }
      if (std::adjacent_find(sup.begin(), sup.end(), std::not_equal_to<>()) !=
          sup.end())
        return fail(r, "sup not constant for w=" + to_string(w) +
                           " n=" + std::to_string(n));
    }
  return r;
}

oracle::SuiteResult suite_normal_form(int rank, std::optional<int> radius) {
  oracle::SuiteResult r;
  r.name = "normal-form";
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    Sum f = random_sum(rng, rank, 6, 5, 5);
    Rewrite nf = normal_form(f);
    ++r.checks;
    if (!is_normal_form(nf.sum).ok) return fail(r, "not normal: " + std::to_string(i));
    if (!trace_sound(f, nf.sum, nf.trace))
      return fail(r, "trace replay differs: " + std::to_string(i));
    auto e = radius ? oracle::empirical_equiv(f, nf.sum, {*radius - 2, *radius - 1, *radius})
                    : oracle::empirical_equiv(f, nf.sum);
    if (e.verdict != oracle::Verdict::LIKELY_EQUIV)
      return fail(r, "verdict " + oracle::to_string(e.verdict) + " for sum " +
                         std::to_string(i));
  }
  return r;
}

oracle::SuiteResult suite_rot(int rank, int radius) {
  oracle::SuiteResult r;
  r.name = "rot";
  Sum d = act(NielsenWord::of(Gen::TINV), rot(rank)) - rot(rank);
  auto s = oracle::sup_series(d, {radius - 2, radius - 1, radius});
  r.checks = s.back().count;
  if (s[0].sup != s[1].sup || s[1].sup != s[2].sup)
    return fail(r, "sup of T'[rot] - rot not constant");
  return r;
}

oracle::SuiteResult suite_speed(int rank, int) {
  oracle::SuiteResult r;
  r.name = "speed";
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    Sum f = random_sum(rng, rank, 4, 4, 3);
    if (f.is_zero()) continue;
    Sum g = f + random_relations(rng, rank, 3, 4, 3);
    ++r.checks;
    if (speed(f).value != speed(g).value)
      return fail(r, "speed changed by a relation, instance " + std::to_string(i));
  }
  return r;
}

oracle::SuiteResult suite_homogenization(int rank, int) {
  oracle::SuiteResult r;
  r.name = "homogenization";
  const Word a = letter_word(rank, kLa);
  const Word ab = multiply(a, b_power(rank, 1));
  Sum f = Sum::phi(ab);
  for (int k = 1; k <= 8; ++k) {
    Word p = identity(rank), q = identity(rank);
    for (int i = 0; i < k; ++i) {
      p = multiply(p, ab);
      q = multiply(q, a);
    }
    r.checks += 2;
    if (cyclic_value(f, p) / k != 1) return fail(r, "(ab)^k, k=" + std::to_string(k));
    if (cyclic_value(f, q) / k != 0) return fail(r, "a^k, k=" + std::to_string(k));
  }
  return r;
}

}  // namespace

std::pair<int, int> row_combination(const Word& w) {
  BForm bf = b_form(w);
  if (bf.k() == 0) throw ContractError("verify.row_combination: w is a b-power");
  return {side_row(bf.m.front(), bf.s.front(), kLai),
          side_row(bf.m.back(), bf.s.back(), kLa)};
}

std::vector<Word> stratified_corpus(int rank) {
  std::map<std::pair<int, int>, std::vector<Word>> buckets;
  for (const Word& w : enumerate_ball(Alphabet(rank), 5)) {
    if (w.empty() || is_letter_power(w, kB)) continue;
    auto& b = buckets[row_combination(w)];
    if (b.size() < 2) b.push_back(w);
  }
  std::vector<Word> out;
  for (auto& [k, ws] : buckets) out.insert(out.end(), ws.begin(), ws.end());
  return out;
}

Word random_word(std::mt19937_64& rng, int rank, int min_len, int max_len) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<int> letter(0, 2 * rank - 1);
  const int L = len(rng);
  std::string codes;
  while (static_cast<int>(codes.size()) < L) {
    auto c = static_cast<unsigned char>(letter(rng));
    if (!codes.empty() &&
        static_cast<unsigned char>(codes.back()) == inverse_code(c))
      continue;
    codes.push_back(static_cast<char>(c));
  }
  return Word::from_codes(rank, codes);
}

Sum random_sum(std::mt19937_64& rng, int rank, int keys, int max_len, int c) {
  std::uniform_int_distribution<int> nkeys(1, keys);
  std::uniform_int_distribution<int> coef(-c, c);
  Sum f(rank, Mode::BROOKS);
  const int k = nkeys(rng);
  for (int i = 0; i < k; ++i) {
    int x = 0;
    while (x == 0) x = coef(rng);
    f.add(random_word(rng, rank, 1, max_len), x);
  }
  return f;
}

Sum random_relations(std::mt19937_64& rng, int rank, int count, int max_len,
                     int c) {
  std::uniform_int_distribution<int> coef(-c, c);
  std::bernoulli_distribution side;
  Sum f(rank, Mode::BROOKS);
  for (int i = 0; i < count; ++i) {
    Sum rel = brooks_relation(side(rng) ? Side::LEFT : Side::RIGHT,
                              random_word(rng, rank, 1, max_len));
    rel *= coef(rng);
    f += rel;
  }
  return f;
}

std::vector<std::string> suite_names() {
  return {"oracle", "relations", "transport", "nrep",
          "normal-form", "rot", "speed", "homogenization"};
}

oracle::SuiteResult run_suite(const std::string& name, int rank,
                              std::optional<int> radius) {
  Alphabet check(rank);
  (void)check;
  if (radius && *radius < 3)
    throw ContractError("verify.run_suite: radius must be >= 3");
  if (name == "oracle") return oracle::run_oracle_selftest(rank, radius.value_or(6));
  if (name == "relations") return suite_relations(rank, radius.value_or(6));
  if (name == "transport") return suite_transport(rank, radius.value_or(6));
  if (name == "nrep") return suite_nrep(rank, radius.value_or(10));
  if (name == "normal-form") return suite_normal_form(rank, radius);
  if (name == "rot") return suite_rot(rank, radius.value_or(7));
  if (name == "speed") return suite_speed(rank, 0);
  if (name == "homogenization") return suite_homogenization(rank, 0);
  throw ContractError("verify.run_suite: unknown suite '" + name + "'");
}

std::vector<oracle::SuiteResult> run_all_suites(int rank,
                                                std::optional<int> radius) {
  std::vector<std::future<oracle::SuiteResult>> jobs;
  for (const std::string& s : suite_names())
    jobs.push_back(std::async(std::launch::async,
                              [=] { return run_suite(s, rank, radius); }));
  std::vector<oracle::SuiteResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace qmf
