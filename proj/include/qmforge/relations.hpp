#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmforge/counting.hpp"

namespace qmf {

enum class Side { LEFT, RIGHT };

std::string to_string(Side s);

struct TraceStep {
  Side kind;
  Word base;
  Rational coef;
};

// input - output = sum of coef * (l_base or r_base), as COUNTING sums.
struct Trace {
  std::vector<TraceStep> steps;
  void append(const Trace& o) {
    steps.insert(steps.end(), o.steps.begin(), o.steps.end());
  }
  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
};

struct Rewrite {
  Sum sum;
  Trace trace;
};

// l_w = #w - sum_{s != w_1'} #sw and r_w = #w - sum_{s != w_last'} #ws.
Sum extension_relation(Side kind, const Word& w);

// phi(u) - sum_t phi(ut) = r_u - l_{u'} (RIGHT), mirrored for LEFT.
Sum brooks_relation(Side kind, const Word& u);

// f <- f - c*(phi(u) - sum_t phi(ut)) for RIGHT (tu for LEFT), recorded in t.
void apply_extension(Sum& f, Trace& t, Side kind, const Word& u,
                     const Rational& c);

Sum replay(const Trace& t, int rank);
bool trace_sound(const Sum& input, const Sum& output, const Trace& t);

Rewrite eliminate_b_powers(const Sum& f);

// RIGHT: rewrites phi(b^{m_fixed} x b^{m_from}) as alpha*phi(b^{m_fixed} x
// b^{m_to}) plus words b^{m_fixed}(b-truncated). LEFT: phi(b^{m_from} x
// b^{m_fixed}), side words (b-truncated)b^{m_fixed}.
Rewrite retarget_power(Side side, const Word& x, long m_fixed, long m_from,
                       long m_to);

// The same moves applied in place to the term c*phi(word) of f; returns the
// coefficient that lands on the target word.
Rational retarget_in_place(Sum& f, Trace& t, Side side, const Word& x,
                           long m_fixed, long m_from, long m_to, Rational c);

struct NormalFormCheck {
  bool ok = true;
  int condition = 0;  // 1, 2 or 3
  std::optional<std::pair<Word, Word>> pair;
};

NormalFormCheck is_normal_form(const Sum& f);
Rewrite normal_form(const Sum& f);

}  // namespace qmf
