#include "qmforge/action.hpp"

#include <algorithm>

#include "qmforge/relations.hpp"

namespace qmf {

namespace {

constexpr Letter kLa{kA, 1};
constexpr Letter kLai{kA, -1};

Word lw(int n, Letter l) { return letter_word(n, l); }

// S_b minus one letter, in code order.
std::vector<Letter> sb_without(int n, Letter drop) {
  std::vector<Letter> out;
  for (unsigned char c = 0; c < 2 * n; ++c) {
    Letter l = Letter::from_code(c);
    if (l.index == kB || l == drop) continue;
    out.push_back(l);
  }
  return out;
}

void require_not_b_power(const Word& w, const char* where) {
  if (w.empty() || is_letter_power(w, kB))
    throw ContractError(std::string("action.") + where +
                        ": w must not be a power of b");
}

}  // namespace

std::vector<Word> FactorSet::words() const {
  std::vector<Word> out;
  for (const Word& l : left)
    for (const Word& r : right) out.push_back(multiply({l, middle, r}));
  std::sort(out.begin(), out.end());
  return out;
}

Word middle_word(const Word& w, int n) {
  Word m = *truncate(w, kB);
  for (int i = 0; i < n; ++i)
    m = *truncate(apply_generator(Gen::TINV, m), kB);
  return m;
}

Sum act_perm_flip(Gen g, const Sum& f) {
  if (g == Gen::TINV)
    throw ContractError("action.act_perm_flip: X must be P1, P2 or H");
  if (f.mode() != Mode::BROOKS)
    throw ContractError("action.act_perm_flip: mode must be BROOKS");
  Sum out(f.rank(), Mode::BROOKS);
  for (const auto& [v, c] : f.terms()) out.add(apply_generator(g, v), c);
  return out;
}

FactorSet w1_support(const Word& w) {
  require_not_b_power(w, "w1_support");
  const int n = w.rank();
  const BForm bf = b_form(w);
  const long m0 = bf.m.front(), mk = bf.m.back();
  const Letter s1 = bf.s.front(), sk = bf.s.back();
  FactorSet fs;
  fs.middle = middle_word(w, 1);

  if (m0 == 0) {
    fs.left = {identity(n)};
  } else if (m0 > 0 && s1 != kLai) {
    fs.left = {b_power(n, m0), multiply(lw(n, kLa), b_power(n, m0 - 1))};
  } else if (m0 > 0) {
    fs.left = {b_power(n, m0 + 1), multiply(lw(n, kLa), b_power(n, m0))};
  } else if (s1 != kLai) {
    fs.left = {b_power(n, m0 - 1)};
    for (Letter s : sb_without(n, kLa))
      fs.left.push_back(multiply(lw(n, s), b_power(n, m0)));
  } else {
    fs.left = {b_power(n, m0)};
    for (Letter s : sb_without(n, kLa))
      fs.left.push_back(multiply(lw(n, s), b_power(n, m0 + 1)));
  }

  if (mk == 0) {
    fs.right = {identity(n)};
  } else if (mk > 0 && sk == kLa) {
    fs.right = {b_power(n, mk)};
    for (Letter s : sb_without(n, kLai))
      fs.right.push_back(multiply(b_power(n, mk - 1), lw(n, s)));
  } else if (mk > 0) {
    fs.right = {b_power(n, mk + 1)};
    for (Letter s : sb_without(n, kLai))
      fs.right.push_back(multiply(b_power(n, mk), lw(n, s)));
  } else if (sk == kLa) {
    fs.right = {b_power(n, mk - 1), multiply(b_power(n, mk), lw(n, kLai))};
  } else {
    // The printed row has b^{m_{l+1}}a'; the oracle confirms b^{m_k+1}a'.
    fs.right = {b_power(n, mk), multiply(b_power(n, mk + 1), lw(n, kLai))};
  }
  return fs;
}

FactorSet wstar_n(const Word& w, int N) {
  require_not_b_power(w, "wstar_n");
  if (N < 1) throw ContractError("action.wstar_n: n must be >= 1");
  const int n = w.rank();
  const BForm bf = b_form(w);
  const long m0 = bf.m.front(), mk = bf.m.back();
  const Letter s1 = bf.s.front(), sk = bf.s.back();
  FactorSet fs;
  fs.middle = middle_word(w, N);

  if (m0 == 0) {
    fs.left = {identity(n)};
  } else if (m0 > 0 && s1 != kLai) {
    fs.left = {b_power(n, m0)};
    for (int i = 1; i <= N; ++i)
      fs.left.push_back(multiply(lw(n, kLa), b_power(n, m0 - i)));
  } else if (m0 > 0) {
    fs.left = {b_power(n, m0 + N)};
    for (int i = 1; i <= N; ++i)
      fs.left.push_back(multiply(lw(n, kLa), b_power(n, m0 + i - 1)));
  } else if (s1 != kLai) {
    fs.left = {b_power(n, m0 - N)};
    for (int i = 1; i <= N; ++i)
      for (Letter s : sb_without(n, kLa))
        fs.left.push_back(multiply(lw(n, s), b_power(n, m0 - i + 1)));
  } else {
    fs.left = {b_power(n, m0)};
    for (int i = 1; i <= N; ++i)
      for (Letter s : sb_without(n, kLa))
        fs.left.push_back(multiply(lw(n, s), b_power(n, m0 + i)));
  }

  if (mk == 0) {
    fs.right = {identity(n)};
  } else if (mk > 0 && sk == kLa) {
    fs.right = {b_power(n, mk)};
    for (int i = 1; i <= N; ++i)
      for (Letter s : sb_without(n, kLai))
        fs.right.push_back(multiply(b_power(n, mk - i), lw(n, s)));
  } else if (mk > 0) {
    fs.right = {b_power(n, mk + N)};
    for (int i = 1; i <= N; ++i)
      for (Letter s : sb_without(n, kLai))
        fs.right.push_back(multiply(b_power(n, mk + i - 1), lw(n, s)));
  } else if (sk == kLa) {
    fs.right = {b_power(n, mk - N)};
    for (int i = 1; i <= N; ++i)
      fs.right.push_back(multiply(b_power(n, mk - i + 1), lw(n, kLai)));
  } else {
    fs.right = {b_power(n, mk)};
    for (int i = 1; i <= N; ++i)
      fs.right.push_back(multiply(b_power(n, mk + i), lw(n, kLai)));
  }
  return fs;
}

std::vector<Word> wstar_n_recursive(const Word& w, int N) {
  std::vector<Word> cur = w1_support(w).words();
  for (int i = 2; i <= N; ++i) {
    std::vector<Word> next;
    for (const Word& u : cur)
      for (Word& x : w1_support(u).words()) next.push_back(std::move(x));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
  return cur;
}

NRep nrep_factors(const Word& w, int N) {
  require_not_b_power(w, "nrep_factors");
  if (N < 1) throw ContractError("action.nrep_factors: n must be >= 1");
  const int n = w.rank();
  const BForm bf = b_form(w);
  const long m0 = bf.m.front(), mk = bf.m.back();
  const Letter s1 = bf.s.front(), sk = bf.s.back();
  NRep r;
  r.base = w;
  r.n = N;
  r.middle = middle_word(w, N);

  r.left.push_back({b_power(n, m0), 0, 1});
  if (m0 != 0)
    for (int i = 1; i <= N; ++i) {
      if (m0 > 0 && s1 != kLai) {
        r.left.push_back({multiply(lw(n, kLa), b_power(n, m0 - i)), i, 1});
      } else if (m0 > 0) {
        for (Letter s : sb_without(n, kLa))
          r.left.push_back({multiply(lw(n, s), b_power(n, m0 + i - 1)), i, -1});
      } else if (s1 != kLai) {
        r.left.push_back({multiply(lw(n, kLa), b_power(n, m0 - i + 1)), i, -1});
      } else {
        for (Letter s : sb_without(n, kLa))
          r.left.push_back({multiply(lw(n, s), b_power(n, m0 + i)), i, 1});
      }
    }

  r.right.push_back({b_power(n, mk), 0, 1});
  if (mk != 0)
    for (int j = 1; j <= N; ++j) {
      if (mk > 0 && sk == kLa) {
        for (Letter s : sb_without(n, kLai))
          r.right.push_back({multiply(b_power(n, mk - j), lw(n, s)), j, 1});
      } else if (mk > 0) {
        r.right.push_back({multiply(b_power(n, mk + j - 1), lw(n, kLai)), j, -1});
      } else if (sk == kLa) {
        for (Letter s : sb_without(n, kLai))
          r.right.push_back({multiply(b_power(n, mk - j + 1), lw(n, s)), j, -1});
      } else {
        r.right.push_back({multiply(b_power(n, mk + j), lw(n, kLai)), j, 1});
      }
    }
  return r;
}

namespace {

std::vector<Word> pick(const std::vector<Factor>& fs, int sign) {
  std::vector<Word> out;
  for (const Factor& f : fs)
    if (f.sign == sign) out.push_back(f.word);
  return out;
}

}  // namespace

std::vector<Word> NRep::Lplus() const { return pick(left, 1); }
std::vector<Word> NRep::Lminus() const { return pick(left, -1); }
std::vector<Word> NRep::Rplus() const { return pick(right, 1); }
std::vector<Word> NRep::Rminus() const { return pick(right, -1); }

std::vector<NRep::Element> NRep::elements() const {
  std::vector<Element> out;
  out.reserve(left.size() * right.size());
  for (const Factor& l : left)
    for (const Factor& r : right)
      out.push_back({multiply({l.word, middle, r.word}), l.sign * r.sign,
                     l.index, r.index});
  return out;
}

Sum NRep::to_sum() const {
  Sum s(base.rank(), Mode::BROOKS);
  for (const Element& e : elements()) s.add(e.word, e.sign);
  return s;
}

Sum n_representative(const Word& w, int N) {
  if (N < 1) throw ContractError("action.n_representative: n must be >= 1");
  if (!w.empty() && is_letter_power(w, kB)) {
    if (w.size() != 1)
      throw ContractError(
          "action.n_representative: w = b^m with |m| != 1; eliminate b-powers "
          "first");
    const int n = w.rank();
    const int sign = w[0].sign;
    Sum s(n, Mode::BROOKS);
    s.add(lw(n, kLa), Rational(sign * N));
    s.add(b_power(n, 1), sign);
    return s;
  }
  return nrep_factors(w, N).to_sum();
}

Sum n_representative_sum(const Sum& f, int N) {
  if (f.mode() != Mode::BROOKS)
    throw ContractError("action.n_representative_sum: mode must be BROOKS");
  Sum out(f.rank(), Mode::BROOKS);
  for (const auto& [v, c] : f.terms()) {
    if (is_letter_power(v, kB) && v.size() != 1)
      throw ContractError(
          "action.n_representative_sum: f has a b-power key other than b");
    Sum part = n_representative(v, N);
    part *= c;
    out += part;
  }
  return out;
}

Sum act_tinv(const Sum& f) {
  if (f.mode() != Mode::BROOKS)
    throw ContractError("action.act_tinv: mode must be BROOKS");
  const int n = f.rank();
  Sum g = eliminate_b_powers(f).sum;
  const Word b = b_power(n, 1);
  Sum out(n, Mode::BROOKS);
  for (const auto& [v, c] : g.terms()) {
    if (v == b) {
      out.add(lw(n, kLa), c);
      out.add(b, c);
      continue;
    }
    for (const Word& u : w1_support(v).words()) out.add(u, c);
  }
  return out;
}

Sum act(const NielsenWord& x, const Sum& f) {
  if (f.mode() != Mode::BROOKS)
    throw ContractError("action.act: mode must be BROOKS");
  Sum cur = f;
  for (auto it = x.gens.rbegin(); it != x.gens.rend(); ++it)
    cur = *it == Gen::TINV ? act_tinv(cur) : act_perm_flip(*it, cur);
  return cur;
}

}  // namespace qmf
