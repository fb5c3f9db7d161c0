#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qmforge/counting.hpp"

// Brute force ground truth. Nothing here calls the rewriting code.
namespace qmf::oracle {

// Position-by-position comparison, kept apart from count_subword.
long naive_count(const Word& v, const Word& w);
Rational naive_evaluate(const Sum& f, const Word& w);

// Scaled to integer weights once, then evaluated word by word.
class BallEvaluator {
 public:
  explicit BallEvaluator(const Sum& f);
  // The value at w times scale().
  BigInt scaled(const Word& w) const;
  Rational operator()(const Word& w) const;
  const BigInt& scale() const { return scale_; }

 private:
  std::vector<std::pair<Word, long long>> small_;
  std::vector<std::pair<Word, BigInt>> big_;
  BigInt scale_ = 1;
};

struct BallReport {
  int radius = 0;
  Rational sup = 0;
  Word argmax;
  std::uint64_t count = 0;
};

BallReport sup_on_ball(const Sum& f, int L);
// One pass over the largest ball; radii ascending.
std::vector<BallReport> sup_series(const Sum& f, const std::vector<int>& radii);

// Same reports as sup_series, computed by a transfer matrix over the last
// ||f||_S - 1 letters instead of listing the ball.
std::vector<BallReport> sup_series_dp(const Sum& f, const std::vector<int>& radii);

using WordMap = std::function<Word(const Word&)>;

struct IdentityResult {
  bool pass = true;
  std::optional<Word> counterexample;
  Rational lhs = 0, rhs = 0;
  std::uint64_t checked = 0;
};

// evaluate(lhs, transform(v)) == evaluate(rhs, v) on the ball.
IdentityResult exact_identity_check(const Sum& lhs, const Sum& rhs,
                                    const WordMap& transform, int L);

enum class Verdict { LIKELY_EQUIV, DIVERGING, INCONCLUSIVE };
std::string to_string(Verdict v);

struct EquivResult {
  Verdict verdict = Verdict::INCONCLUSIVE;
  std::vector<BallReport> sups;
};

// {2l-1, 2l, 2l+1} for l = ||f - g||_S (at least 1).
std::vector<int> default_radii(const Sum& f, const Sum& g);

// Heuristic: constant sup of |f - g| over the last three radii.
EquivResult empirical_equiv(const Sum& f, const Sum& g,
                            const std::vector<int>& radii);
EquivResult empirical_equiv(const Sum& f, const Sum& g);

struct DefectEstimate {
  Rational defect = 0;
  Word u, w;
  Rational homogenization = 0;  // f(v^k)/k
};

DefectEstimate defect_and_homogenize(const Sum& f, int L, const Word& v, int k);

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::uint64_t checks = 0;
  std::string detail;
};
// count_subword against naive_count, ball sizes against the closed form.
SuiteResult run_oracle_selftest(int rank, int radius);

}  // namespace qmf::oracle
