#include "qmforge/relations.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <tuple>

#include "qmforge/kind.hpp"

namespace qmf {

std::string to_string(Side s) { return s == Side::LEFT ? "LEFT" : "RIGHT"; }

namespace {

std::vector<Word> one_letter_extensions(Side kind, const Word& u) {
  std::vector<Word> out;
  const int n = u.rank();
  const unsigned char forbidden =
      kind == Side::RIGHT ? inverse_code(u.code(u.size() - 1))
                          : inverse_code(u.code(0));
  for (unsigned char c = 0; c < 2 * n; ++c) {
    if (c == forbidden) continue;
    std::string s = u.codes();
    if (kind == Side::RIGHT)
      s.push_back(static_cast<char>(c));
    else
      s.insert(s.begin(), static_cast<char>(c));
    out.push_back(Word::from_codes(n, std::move(s)));
  }
  return out;
}

Side other(Side s) { return s == Side::LEFT ? Side::RIGHT : Side::LEFT; }

}  // namespace

Sum extension_relation(Side kind, const Word& w) {
  if (w.empty()) throw ContractError("relations.extension_relation: w = e");
  Sum r(w.rank(), Mode::COUNTING);
  r.add(w, 1);
  for (const Word& x : one_letter_extensions(kind, w)) r.add(x, -1);
  return r;
}

Sum brooks_relation(Side kind, const Word& u) {
  if (u.empty()) throw ContractError("relations.brooks_relation: u = e");
  Sum r(u.rank(), Mode::BROOKS);
  r.add(u, 1);
  for (const Word& x : one_letter_extensions(kind, u)) r.add(x, -1);
  return r;
}

void apply_extension(Sum& f, Trace& t, Side kind, const Word& u,
                     const Rational& c) {
  if (c == 0) return;
  Sum rel = brooks_relation(kind, u);
  rel *= c;
  f -= rel;
  t.steps.push_back({kind, u, c});
  t.steps.push_back({other(kind), invert(u), -c});
}

Sum replay(const Trace& t, int rank) {
  Sum acc(rank, Mode::COUNTING);
  for (const TraceStep& s : t.steps) {
    Sum r = extension_relation(s.kind, s.base);
    r *= s.coef;
    acc += r;
  }
  return acc;
}

bool trace_sound(const Sum& input, const Sum& output, const Trace& t) {
  return to_counting(input) - to_counting(output) == replay(t, input.rank());
}

Rewrite eliminate_b_powers(const Sum& f) {
  if (f.mode() != Mode::BROOKS)
    throw ContractError("relations.eliminate_b_powers: mode must be BROOKS");
  Rewrite r{f, {}};
  std::vector<std::pair<long, Rational>> powers;
  for (const auto& [w, c] : f.terms())
    if (is_letter_power(w, kB) && w.size() >= 2)
      powers.emplace_back(w[0].sign * static_cast<long>(w.size()), c);
  for (auto [m, c] : powers) {
    if (m < 0) {
      m = -m;
      c = -c;
    }
    // phi(b^{i+1}) = phi(b^i) - sum_{s in S_b} phi(b^i s) mod relations.
    for (long i = m - 1; i >= 1; --i)
      apply_extension(r.sum, r.trace, Side::RIGHT, b_power(f.rank(), i), -c);
  }
  return r;
}

namespace {

Word with_exponent(Side side, const Word& x, long m_fixed, long m) {
  int n = x.rank();
  if (side == Side::RIGHT)
    return multiply({b_power(n, m_fixed), x, b_power(n, m)});
  return multiply({b_power(n, m), x, b_power(n, m_fixed)});
}

void check_retarget(const Word& x, long m_from, long m_to) {
  if (x.empty() || !is_truncated(x, kB))
    throw ContractError("relations.retarget_power: x must be b-truncated and != e");
  if (m_from == 0 || m_to == 0)
    throw ContractError("relations.retarget_power: exponents must be nonzero");
}

}  // namespace

Rational retarget_in_place(Sum& f, Trace& t, Side side, const Word& x,
                           long m_fixed, long m_from, long m_to, Rational c) {
  check_retarget(x, m_from, m_to);
  long m = m_from;
  while (m != m_to) {
    const long step = m_to > m ? 1 : -1;
    const bool outward = (m > 0 && step > 0) || (m < 0 && step < 0);
    if (outward) {
      // phi(Y b^m) -> phi(Y b^{m+-1}) + sum_s phi(Y b^m s)
      apply_extension(f, t, side, with_exponent(side, x, m_fixed, m), c);
      m += step;
    } else if (std::labs(m) > 1) {
      // phi(Y b^m) -> phi(Y b^{m-+1}) - sum_s phi(Y b^{m-+1} s)
      apply_extension(f, t, side, with_exponent(side, x, m_fixed, m + step),
                      -c);
      m += step;
    } else {
      // phi(Y b^{+-1}) -> phi(Y) - phi(Y b^{-+1}) - sum phi(Y s)
      Word y = side == Side::RIGHT ? multiply(b_power(x.rank(), m_fixed), x)
                                   : multiply(x, b_power(x.rank(), m_fixed));
      apply_extension(f, t, side, y, -c);
      m = -m;
      c = -c;
    }
  }
  return c;
}

Rewrite retarget_power(Side side, const Word& x, long m_fixed, long m_from,
                       long m_to) {
  check_retarget(x, m_from, m_to);
  Rewrite r{Sum::phi(with_exponent(side, x, m_fixed, m_from)), {}};
  retarget_in_place(r.sum, r.trace, side, x, m_fixed, m_from, m_to, 1);
  return r;
}

NormalFormCheck is_normal_form(const Sum& f) {
  if (f.mode() != Mode::BROOKS)
    throw ContractError("relations.is_normal_form: mode must be BROOKS");
  NormalFormCheck res;
  const Word b = b_power(f.rank(), 1);
  for (const auto& [v, c] : f.terms())
    if (is_letter_power(v, kB) && v != b) {
      res.ok = false;
      res.condition = 1;
      res.pair = std::make_pair(v, v);
      return res;
    }
  // Over I and I' the conditions say: one word per (kind, tau_b).
  std::map<std::pair<Kind, Word>, Word> seen;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& [key, c] : f.terms()) {
      if (key == b) continue;
      Word v = pass == 0 ? key : invert(key);
      auto [it, fresh] = seen.try_emplace({kind(v), tau_b(v)}, v);
      if (fresh || it->second == v) continue;
      res.ok = false;
      if (pass == 0) {
        res.condition = 2;
        res.pair = std::make_pair(it->second, v);
      } else {
        res.condition = 3;
        res.pair = std::make_pair(key, it->second);
      }
      return res;
    }
  return res;
}

namespace {

struct Oriented {
  Word w;
  Rational c;
  BForm form;
};

long left_exp(const Oriented& o) { return o.form.m.front(); }
long right_exp(const Oriented& o) { return o.form.m.back(); }

}  // namespace

Rewrite normal_form(const Sum& f) {
  if (f.mode() != Mode::BROOKS)
    throw ContractError("relations.normal_form: mode must be BROOKS");
  // Phase 1: only b survives among b-powers.
  Rewrite r = eliminate_b_powers(f);

  // Phase 2: b-and-b keys, oriented so that tau_b is the shortlex smaller of
  // tau_b and its inverse, merged per tau_b. Side words are b-left/right-b.
  {
    std::map<Word, std::vector<Oriented>> groups;
    for (const auto& [v, c] : r.sum.terms()) {
      if (kind(v) != Kind::B_AND_B) continue;
      Word w = v;
      Rational x = c;
      Word tau = tau_b(w);
      Word itau = invert(tau);
      if (itau < tau) {
        w = invert(w);
        x = -x;
        tau = itau;
      }
      groups[tau].push_back({w, x, b_form(w)});
    }
    for (auto& [tau, g] : groups) {
      if (g.size() < 2) continue;
      auto key = [](const Oriented& o) {
        return std::make_tuple(std::labs(left_exp(o)) + std::labs(right_exp(o)),
                               std::labs(left_exp(o)), o.w);
      };
      auto target = std::min_element(g.begin(), g.end(), [&](auto& p, auto& q) {
        return key(p) < key(q);
      });
      const long M0 = left_exp(*target), Mk = right_exp(*target);
      for (const Oriented& o : g) {
        if (o.w == target->w) continue;
        Rational c = retarget_in_place(r.sum, r.trace, Side::LEFT, tau,
                                    right_exp(o), left_exp(o), M0, o.c);
        retarget_in_place(r.sum, r.trace, Side::RIGHT, tau, M0, right_exp(o), Mk,
                       c);
      }
    }
  }

  // Phase 3: b-left and right-b keys, oriented as b-left, merged per tau_b.
  // Side words are b-truncated.
  {
    std::map<Word, std::vector<Oriented>> groups;
    for (const auto& [v, c] : r.sum.terms()) {
      Kind k = kind(v);
      if (k != Kind::B_LEFT && k != Kind::RIGHT_B) continue;
      Word w = k == Kind::B_LEFT ? v : invert(v);
      Rational x = k == Kind::B_LEFT ? c : -c;
      groups[tau_b(w)].push_back({w, x, b_form(w)});
    }
    for (auto& [tau, g] : groups) {
      if (g.size() < 2) continue;
      auto key = [](const Oriented& o) {
        return std::make_tuple(std::labs(left_exp(o)), o.w);
      };
      auto target = std::min_element(g.begin(), g.end(), [&](auto& p, auto& q) {
        return key(p) < key(q);
      });
      const long M0 = left_exp(*target);
      for (const Oriented& o : g) {
        if (o.w == target->w) continue;
        retarget_in_place(r.sum, r.trace, Side::LEFT, tau, 0, left_exp(o), M0,
                       o.c);
      }
    }
  }
  // b-truncated keys and their inverses are merged by canonical storage.
  return r;
}

}  // namespace qmf
