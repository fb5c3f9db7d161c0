#include "qmforge/counting.hpp"

#include <algorithm>

namespace qmf {

std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_plain(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return to_string(q);
}

bool is_canonical_key(const Word& v) { return v < invert(v); }

Word canonical_key(const Word& v) {
  Word iv = invert(v);
  return v < iv ? v : iv;
}

Sum Sum::phi(const Word& v, const Rational& c) {
  Sum s(v.rank(), Mode::BROOKS);
  s.add(v, c);
  return s;
}

Sum Sum::count(const Word& v, const Rational& c) {
  Sum s(v.rank(), Mode::COUNTING);
  s.add(v, c);
  return s;
}

std::vector<Word> Sum::support() const {
  std::vector<Word> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.push_back(w);
  return out;
}

void Sum::insert_raw(const Word& v, const Rational& c) {
  if (v.empty()) throw ContractError("counting.Sum: key must not be e");
  if (v.rank() != rank_) throw ContractError("counting.Sum: alphabet mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(v, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Sum::add(const Word& v, const Rational& c) {
  if (mode_ == Mode::BROOKS) {
    Word iv = invert(v);
    if (iv < v) {
      insert_raw(iv, -c);
      return;
    }
  }
  insert_raw(v, c);
}

Rational Sum::coefficient(const Word& v) const {
  auto it = terms_.find(v);
  if (it != terms_.end()) return it->second;
  if (mode_ == Mode::BROOKS) {
    it = terms_.find(invert(v));
    if (it != terms_.end()) return -it->second;
  }
  return 0;
}

void Sum::check(const Sum& o) const {
  if (o.rank_ != rank_) throw ContractError("counting.Sum: alphabet mismatch");
  if (o.mode_ != mode_) throw ContractError("counting.Sum: mode mismatch");
}

Sum& Sum::operator+=(const Sum& o) {
  check(o);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Sum& Sum::operator-=(const Sum& o) {
  check(o);
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Sum& Sum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

Sum to_counting(const Sum& f) {
  if (f.mode() == Mode::COUNTING) return f;
  Sum out(f.rank(), Mode::COUNTING);
  for (const auto& [w, c] : f.terms()) {
    out.add(w, c);
    out.add(invert(w), -c);
  }
  return out;
}

Sum canonicalize(const Sum& f) {
  if (f.mode() != Mode::BROOKS)
    throw ContractError("counting.canonicalize: mode must be BROOKS");
  Sum out(f.rank(), Mode::BROOKS);
  for (const auto& [w, c] : f.terms()) {
    if (invert(w) == w)
      throw ContractError("counting.canonicalize: key equal to its own inverse");
    out.add(w, c);
  }
  return out;
}

Evaluator::Evaluator(const Sum& f) {
  Sum g = to_counting(f);
  for (const auto& [w, c] : g.terms()) {
    table_.emplace(w.codes(), c);
    maxlen_ = std::max(maxlen_, w.size());
  }
}

Rational Evaluator::operator()(const Word& w) const {
  Rational total = 0;
  std::string_view s(w.codes());
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t top = std::min(maxlen_, s.size() - i);
    for (std::size_t l = 1; l <= top; ++l) {
      auto it = table_.find(s.substr(i, l));
      if (it != table_.end()) total += it->second;
    }
  }
  return total;
}

Rational evaluate(const Sum& f, const Word& w) { return Evaluator(f)(w); }

int norm(const Sum& f) {
  // Terms are ordered by shortlex, so the last key is a longest one.
  if (f.is_zero()) return 0;
  return static_cast<int>(f.terms().rbegin()->first.size());
}

std::vector<Word> right_brothers(const Word& v) {
  std::vector<Word> out;
  if (v.size() < 2) return out;
  const std::size_t L = v.size();
  const unsigned char last = v.code(L - 1), prev = v.code(L - 2);
  for (unsigned char c = 0; c < 2 * v.rank(); ++c) {
    if (c == last || c == inverse_code(prev)) continue;
    std::string s = v.codes();
    s.back() = static_cast<char>(c);
    out.push_back(Word::from_codes(v.rank(), std::move(s)));
  }
  return out;
}

std::vector<Word> left_brothers(const Word& v) {
  std::vector<Word> out;
  if (v.size() < 2) return out;
  const unsigned char first = v.code(0), next = v.code(1);
  for (unsigned char c = 0; c < 2 * v.rank(); ++c) {
    if (c == first || c == inverse_code(next)) continue;
    std::string s = v.codes();
    s.front() = static_cast<char>(c);
    out.push_back(Word::from_codes(v.rank(), std::move(s)));
  }
  return out;
}

Unbalanced is_unbalanced(const Sum& f) {
  Sum g = to_counting(f);
  const int L = norm(g);
  if (L < 2)
    throw ContractError("counting.is_unbalanced: requires ||f||_S >= 2");
  auto alpha = [&](const Word& w) { return g.coefficient(w); };
  Unbalanced res;
  for (const auto& [v0, c0] : g.terms()) {
    if (static_cast<int>(v0.size()) != L) continue;
    std::optional<Word> v1;
    for (const Word& r : right_brothers(v0))
      if (alpha(r) != c0) {
        v1 = r;
        break;
      }
    if (!v1) continue;
    for (const Word& l : left_brothers(v0)) {
      if (alpha(l) != 0) continue;
      bool clean = true;
      for (const Word& r : right_brothers(l))
        if (alpha(r) != 0) {
          clean = false;
          break;
        }
      if (clean) {
        res.value = true;
        res.v0 = v0;
        res.v1 = v1;
        res.v2 = l;
        return res;
      }
    }
  }
  return res;
}

TruncatedEnd truncated_end(const std::vector<Word>& I, int s) {
  TruncatedEnd te;
  for (const Word& v : I) {
    if (v.empty()) throw ContractError("counting.truncated_end: e in I");
    if (!is_truncated(v, s)) {
      int l = static_cast<int>(v.size());
      if (!te.n_s || *te.n_s < l) te.n_s = l;
    }
  }
  for (const Word& v : I)
    if (!te.n_s || static_cast<int>(v.size()) > *te.n_s) te.E_s.push_back(v);
  return te;
}

std::string to_string(ReducedLength::Kind k) {
  switch (k) {
    case ReducedLength::Kind::EXACT: return "EXACT";
    case ReducedLength::Kind::LOWER_BOUND: return "LOWER_BOUND";
    case ReducedLength::Kind::UNKNOWN: return "UNKNOWN";
  }
  return "?";
}

namespace {

Word cyclic_reduction(const Word& w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w.code(lo) == inverse_code(w.code(hi - 1))) {
    ++lo;
    --hi;
  }
  return w.subword(lo, hi - lo);
}

long cyclic_count(const Word& v, const Word& u) {
  long n = 0;
  const std::size_t p = u.size();
  for (std::size_t i = 0; i < p; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < v.size() && ok; ++j)
      ok = v.code(j) == u.code((i + j) % p);
    if (ok) ++n;
  }
  return n;
}

std::vector<Word> cyclic_words(int rank, int maxlen) {
  std::vector<Word> out;
  for (const Word& w : enumerate_ball(Alphabet(rank), maxlen))
    if (!w.empty() && cyclic_reduction(w) == w) out.push_back(w);
  return out;
}

}  // namespace

namespace {

Rational cyclic_value_counting(const Sum& g, const Word& w) {
  Word u = cyclic_reduction(w);
  if (u.empty()) return 0;
  Rational total = 0;
  for (const auto& [v, c] : g.terms()) total += c * cyclic_count(v, u);
  return total;
}

}  // namespace

Rational cyclic_value(const Sum& f, const Word& w) {
  return cyclic_value_counting(to_counting(f), w);
}

ReducedLength certified_reduced_length(const Sum& f) {
  ReducedLength r;
  Sum g = to_counting(f);
  r.upper = norm(g);
  if (r.upper <= 1) {
    r.kind = ReducedLength::Kind::EXACT;
    r.length = r.upper;
    r.certificate = "length<=1";
    return r;
  }
  if (Unbalanced u = is_unbalanced(g); u.value) {
    r.kind = ReducedLength::Kind::EXACT;
    r.length = r.upper;
    r.certificate = "unbalanced";
    r.witness = u.v0;
    return r;
  }
  std::vector<Word> I = g.support();
  for (int s = 1; s <= g.rank(); ++s) {
    TruncatedEnd te = truncated_end(I, s);
    if (te.E_s.empty()) continue;
    // I is the support, so every element of E_s carries a nonzero weight and
    // the longest one has length ||f||_S.
    r.kind = ReducedLength::Kind::EXACT;
    r.length = r.upper;
    r.certificate = "truncated-end";
    r.letter = s;
    r.witness = te.E_s.back();
    for (const Word& w : te.E_s)
      if (static_cast<int>(w.size()) == r.upper) {
        r.witness = w;
        break;
      }
    return r;
  }
  // Sub-maximal bounds from the homogenization on conjugacy classes: a
  // nonzero value means [f] != 0, a non-additive pair means [f] is not a
  // homomorphism.
  std::vector<Word> cyc = cyclic_words(g.rank(), g.rank() <= 3 ? 3 : 2);
  std::vector<Rational> val;
  val.reserve(cyc.size());
  for (const Word& u : cyc) val.push_back(cyclic_value_counting(g, u));
  for (std::size_t i = 0; i < cyc.size(); ++i)
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      Word uv = multiply(cyc[i], cyc[j]);
      if (cyclic_value_counting(g, uv) != val[i] + val[j]) {
        r.kind = r.upper == 2 ? ReducedLength::Kind::EXACT
                              : ReducedLength::Kind::LOWER_BOUND;
        r.length = 2;
        r.certificate = "non-additive-homogenization";
        r.witness = uv;
        return r;
      }
    }
  for (std::size_t i = 0; i < cyc.size(); ++i)
    if (val[i] != 0) {
      r.kind = ReducedLength::Kind::LOWER_BOUND;
      r.length = 1;
      r.certificate = "nonzero-homogenization";
      r.witness = cyc[i];
      return r;
    }
  r.kind = ReducedLength::Kind::UNKNOWN;
  r.certificate = "none";
  return r;
}

}  // namespace qmf
