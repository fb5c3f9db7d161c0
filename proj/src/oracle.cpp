#include "qmforge/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

namespace qmf::oracle {

long naive_count(const Word& v, const Word& w) {
  if (v.empty()) throw ContractError("oracle.naive_count: v = e");
  long n = 0;
  if (v.size() > w.size()) return 0;
  for (std::size_t i = 0; i + v.size() <= w.size(); ++i) {
    std::size_t j = 0;
    while (j < v.size() && w.code(i + j) == v.code(j)) ++j;
    if (j == v.size()) ++n;
  }
  return n;
}

namespace {

// Weights of the plain counting expansion, phi(v) = #v - #v'.
std::vector<std::pair<Word, Rational>> counting_terms(const Sum& f) {
  std::vector<std::pair<Word, Rational>> out;
  for (const auto& [v, c] : f.terms()) {
    out.emplace_back(v, c);
    if (f.mode() == Mode::BROOKS) out.emplace_back(invert(v), -c);
  }
  return out;
}

}  // namespace

Rational naive_evaluate(const Sum& f, const Word& w) {
  Rational total = 0;
  for (const auto& [v, c] : counting_terms(f)) total += c * naive_count(v, w);
  return total;
}

BallEvaluator::BallEvaluator(const Sum& f) {
  auto terms = counting_terms(f);
  for (const auto& [v, c] : terms)
    scale_ = boost::multiprecision::lcm(scale_, denominator(c));
  const BigInt limit = BigInt(std::numeric_limits<long long>::max() / 4096);
  for (const auto& [v, c] : terms) {
    BigInt x = numerator(c) * (scale_ / denominator(c));
    if (abs(x) < limit)
      small_.emplace_back(v, static_cast<long long>(x));
    else
      big_.emplace_back(v, x);
  }
}

BigInt BallEvaluator::scaled(const Word& w) const {
  long long acc = 0;
  for (const auto& [v, c] : small_) {
    long n = naive_count(v, w);
    if (n) acc += c * n;
  }
  BigInt total = acc;
  for (const auto& [v, c] : big_) total += c * naive_count(v, w);
  return total;
}

Rational BallEvaluator::operator()(const Word& w) const {
  return Rational(scaled(w), scale_);
}

std::vector<BallReport> sup_series(const Sum& f, const std::vector<int>& radii) {
  std::vector<BallReport> out;
  if (radii.empty()) return out;
  if (!std::is_sorted(radii.begin(), radii.end()))
    throw ContractError("oracle.sup_series: radii must be ascending");
  BallEvaluator ev(f);
  const int top = radii.back();
  // Best value among words of each exact length.
  std::vector<BigInt> best(static_cast<std::size_t>(top + 1), BigInt(-1));
  std::vector<Word> arg(static_cast<std::size_t>(top + 1), identity(f.rank()));
  std::vector<std::uint64_t> count(static_cast<std::size_t>(top + 1), 0);
  for_each_in_ball(Alphabet(f.rank()), top, [&](const Word& w) {
    const std::size_t l = w.size();
    ++count[l];
    BigInt x = abs(ev.scaled(w));
    if (x > best[l]) {
      best[l] = x;
      arg[l] = w;
    }
  });
  for (int L : radii) {
    BallReport r;
    r.radius = L;
    BigInt m = -1;
    for (int l = 0; l <= L; ++l) {
      r.count += count[static_cast<std::size_t>(l)];
      if (best[static_cast<std::size_t>(l)] > m) {
        m = best[static_cast<std::size_t>(l)];
        r.argmax = arg[static_cast<std::size_t>(l)];
      }
    }
    r.sup = Rational(m, ev.scale());
    out.push_back(r);
  }
  return out;
}

std::vector<BallReport> sup_series_dp(const Sum& f, const std::vector<int>& radii) {
  std::vector<BallReport> out;
  if (radii.empty()) return out;
  if (!std::is_sorted(radii.begin(), radii.end()) || radii.front() < 0)
    throw ContractError("oracle.sup_series_dp: radii must be ascending and >= 0");
  const int n = f.rank();
  BigInt scale = 1;
  auto terms = counting_terms(f);
  for (const auto& [v, c] : terms) scale = boost::multiprecision::lcm(scale, denominator(c));
  std::unordered_map<std::string, BigInt> weight;
  std::size_t maxlen = 1;
  for (const auto& [v, c] : terms) {
    weight[v.codes()] += numerator(c) * (scale / denominator(c));
    maxlen = std::max(maxlen, v.size());
  }
  const std::size_t k = std::max<std::size_t>(1, maxlen - 1);

  struct Cell {
    BigInt hi, lo;
    std::string arg_hi, arg_lo;
  };
  std::map<std::string, Cell> cur;
  cur[""] = Cell{0, 0, "", ""};
  const int top = radii.back();
  std::vector<BigInt> best(static_cast<std::size_t>(top + 1), BigInt(0));
  std::vector<std::string> arg(static_cast<std::size_t>(top + 1));
  for (int l = 1; l <= top; ++l) {
    std::map<std::string, Cell> next;
    for (const auto& [s, cell] : cur)
      for (unsigned char c = 0; c < 2 * n; ++c) {
        if (!s.empty() && static_cast<unsigned char>(s.back()) == inverse_code(c)) continue;
        std::string t = s + static_cast<char>(c);
        BigInt gain = 0;
        for (std::size_t j = 0; j < t.size(); ++j) {
          auto it = weight.find(t.substr(j));
          if (it != weight.end()) gain += it->second;
        }
        std::string ns = t.size() > k ? t.substr(1) : t;
        BigInt hi = cell.hi + gain, lo = cell.lo + gain;
        auto [it, fresh] = next.try_emplace(ns, Cell{hi, lo, cell.arg_hi + static_cast<char>(c),
                                                     cell.arg_lo + static_cast<char>(c)});
        if (fresh) continue;
        if (hi > it->second.hi) {
          it->second.hi = hi;
          it->second.arg_hi = cell.arg_hi + static_cast<char>(c);
        }
        if (lo < it->second.lo) {
          it->second.lo = lo;
          it->second.arg_lo = cell.arg_lo + static_cast<char>(c);
        }
      }
    cur = std::move(next);
    for (const auto& [s, cell] : cur) {
      if (abs(cell.hi) > best[static_cast<std::size_t>(l)]) {
        best[static_cast<std::size_t>(l)] = abs(cell.hi);
        arg[static_cast<std::size_t>(l)] = cell.arg_hi;
      }
      if (abs(cell.lo) > best[static_cast<std::size_t>(l)]) {
        best[static_cast<std::size_t>(l)] = abs(cell.lo);
        arg[static_cast<std::size_t>(l)] = cell.arg_lo;
      }
    }
  }
  for (int L : radii) {
    BallReport r;
    r.radius = L;
    r.count = ball_size(n, L);
    BigInt m = 0;
    r.argmax = identity(n);
    for (int l = 0; l <= L; ++l)
      if (best[static_cast<std::size_t>(l)] > m) {
        m = best[static_cast<std::size_t>(l)];
        r.argmax = Word::from_codes(n, arg[static_cast<std::size_t>(l)]);
      }
    r.sup = Rational(m, scale);
    out.push_back(r);
  }
  return out;
}

BallReport sup_on_ball(const Sum& f, int L) {
  if (L < 0) throw ContractError("oracle.sup_on_ball: L must be >= 0");
  return sup_series(f, {L}).front();
}

IdentityResult exact_identity_check(const Sum& lhs, const Sum& rhs,
                                    const WordMap& transform, int L) {
  if (lhs.rank() != rhs.rank())
    throw ContractError("oracle.exact_identity_check: alphabet mismatch");
  BallEvaluator el(lhs), er(rhs);
  IdentityResult res;
  for (const Word& v : enumerate_ball(Alphabet(lhs.rank()), L)) {
    ++res.checked;
    Word tv = transform ? transform(v) : v;
    Rational x = el(tv), y = er(v);
    if (x != y) {
      res.pass = false;
      res.counterexample = v;
      res.lhs = x;
      res.rhs = y;
      return res;
    }
  }
  return res;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::LIKELY_EQUIV: return "LIKELY_EQUIV";
    case Verdict::DIVERGING: return "DIVERGING";
    case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "?";
}

std::vector<int> default_radii(const Sum& f, const Sum& g) {
  const int l = std::max(1, norm(to_counting(f) - to_counting(g)));
  return {2 * l - 1, 2 * l, 2 * l + 1};
}

EquivResult empirical_equiv(const Sum& f, const Sum& g) {
  return empirical_equiv(f, g, default_radii(f, g));
}

EquivResult empirical_equiv(const Sum& f, const Sum& g,
                            const std::vector<int>& radii) {
  if (radii.size() < 3)
    throw ContractError("oracle.empirical_equiv: need at least three radii");
  EquivResult r;
  Sum d = to_counting(f) - to_counting(g);
  r.sups = sup_series_dp(d, radii);
  const std::size_t n = r.sups.size();
  if (r.sups[n - 1].sup == r.sups[n - 2].sup &&
      r.sups[n - 2].sup == r.sups[n - 3].sup) {
    r.verdict = Verdict::LIKELY_EQUIV;
    return r;
  }
  bool strict = true;
  for (std::size_t i = 1; i < n; ++i)
    if (!(r.sups[i].sup > r.sups[i - 1].sup)) strict = false;
  r.verdict = strict ? Verdict::DIVERGING : Verdict::INCONCLUSIVE;
  return r;
}

DefectEstimate defect_and_homogenize(const Sum& f, int L, const Word& v, int k) {
  if (L < 1 || k < 1)
    throw ContractError("oracle.defect_and_homogenize: L and k must be >= 1");
  BallEvaluator ev(f);
  std::vector<Word> ball = enumerate_ball(Alphabet(f.rank()), L);
  std::vector<BigInt> val;
  val.reserve(ball.size());
  for (const Word& u : ball) val.push_back(ev.scaled(u));
  DefectEstimate d;
  BigInt best = -1;
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (std::size_t j = 0; j < ball.size(); ++j) {
      BigInt x = abs(ev.scaled(multiply(ball[i], ball[j])) - val[i] - val[j]);
      if (x > best) {
        best = x;
        d.u = ball[i];
        d.w = ball[j];
      }
    }
  d.defect = Rational(best, ev.scale());
  Word p = identity(f.rank());
  for (int i = 0; i < k; ++i) p = multiply(p, v);
  d.homogenization = ev(p) / k;
  return d;
}

SuiteResult run_oracle_selftest(int rank, int radius) {
  SuiteResult r;
  r.name = "oracle";
  Alphabet alpha(rank);
  std::vector<Word> ball = enumerate_ball(alpha, radius);
  if (ball.size() != ball_size(rank, radius)) {
    r.pass = false;
    r.detail = "ball size differs from closed form";
    return r;
  }
  std::vector<Word> pats = enumerate_ball(alpha, std::min(radius, 3));
  for (const Word& v : pats) {
    if (v.empty()) continue;
    for (const Word& w : ball) {
      ++r.checks;
      if (naive_count(v, w) != count_subword(v, w)) {
        r.pass = false;
        r.detail = "count mismatch for " + to_string(v) + " in " + to_string(w);
        return r;
      }
    }
  }
  return r;
}

}  // namespace qmf::oracle
