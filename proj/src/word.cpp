#include "qmforge/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace qmf {

Alphabet::Alphabet(int n) : rank(n) {
  if (n < 2 || n > kMaxRank)
    throw ContractError("freegroup.Alphabet: rank must lie in 2.." +
                        std::to_string(kMaxRank));
}

Word Word::from_codes(int rank, std::string codes) {
  Word w(rank);
  w.codes_ = std::move(codes);
  return w;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
  return out;
}

Word identity(int rank) { return Word(rank); }

Word letter_word(int rank, Letter l) {
  return Word::from_codes(rank, std::string(1, static_cast<char>(l.code())));
}

Word power(int rank, Letter l, long m) {
  if (m < 0) {
    l = l.inverse();
    m = -m;
  }
  return Word::from_codes(rank,
                          std::string(static_cast<std::size_t>(m),
                                      static_cast<char>(l.code())));
}

Word b_power(int rank, long m) { return power(rank, Letter{kB, 1}, m); }

namespace {

void append_reduced(std::string& acc, unsigned char c) {
  if (!acc.empty() &&
      static_cast<unsigned char>(acc.back()) == inverse_code(c))
    acc.pop_back();
  else
    acc.push_back(static_cast<char>(c));
}

void check_rank(int rank, Letter l) {
  if (l.index < 1 || l.index > rank || (l.sign != 1 && l.sign != -1))
    throw ContractError("freegroup.reduce: letter index " +
                        std::to_string(l.index) + " outside rank " +
                        std::to_string(rank));
}

}  // namespace

Word reduce(int rank, const std::vector<Letter>& letters) {
  std::string acc;
  for (Letter l : letters) {
    check_rank(rank, l);
    append_reduced(acc, l.code());
  }
  return Word::from_codes(rank, std::move(acc));
}

Word multiply(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw ContractError("freegroup.multiply: alphabet mismatch");
  const std::string& x = u.codes();
  const std::string& y = v.codes();
  std::size_t c = 0;
  while (c < x.size() && c < y.size() &&
         static_cast<unsigned char>(x[x.size() - 1 - c]) ==
             inverse_code(static_cast<unsigned char>(y[c])))
    ++c;
  std::string out = x.substr(0, x.size() - c);
  out.append(y, c, std::string::npos);
  return Word::from_codes(u.rank(), std::move(out));
}

Word multiply(std::initializer_list<Word> parts) {
  Word acc = identity(parts.begin()->rank());
  for (const Word& p : parts) acc = multiply(acc, p);
  return acc;
}

Word invert(const Word& w) {
  std::string out(w.codes().rbegin(), w.codes().rend());
  for (char& ch : out)
    ch = static_cast<char>(inverse_code(static_cast<unsigned char>(ch)));
  return Word::from_codes(w.rank(), std::move(out));
}

long count_subword(const Word& v, const Word& w) {
  if (v.empty()) throw ContractError("freegroup.count_subword: v = e");
  long n = 0;
  const std::string& hay = w.codes();
  for (std::size_t p = hay.find(v.codes()); p != std::string::npos;
       p = hay.find(v.codes(), p + 1))
    ++n;
  return n;
}

bool starts_with(const Word& w, const Word& prefix) {
  return w.codes().compare(0, prefix.size(), prefix.codes()) == 0 &&
         w.size() >= prefix.size();
}

bool ends_with(const Word& w, const Word& suffix) {
  return w.size() >= suffix.size() &&
         w.codes().compare(w.size() - suffix.size(), suffix.size(),
                           suffix.codes()) == 0;
}

std::optional<Word> truncate(const Word& w, int s) {
  if (w.empty()) throw ContractError("freegroup.truncate: w = e");
  std::size_t lo = 0, hi = w.size();
  while (lo < hi && w[lo].index == s) ++lo;
  if (lo == hi) return std::nullopt;
  while (w[hi - 1].index == s) --hi;
  return w.subword(lo, hi - lo);
}

bool is_truncated(const Word& w, int s) {
  return w.empty() || (w[0].index != s && w[w.size() - 1].index != s);
}

bool is_letter_power(const Word& w, int s) {
  if (w.empty()) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].index != s) return false;
  return true;
}

BForm b_form(const Word& w) {
  if (w.empty()) throw ContractError("freegroup.b_form: w = e");
  BForm f;
  long cur = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter l = w[i];
    if (l.index == kB) {
      cur += l.sign;
    } else {
      f.m.push_back(cur);
      f.s.push_back(l);
      cur = 0;
    }
  }
  f.m.push_back(cur);
  return f;
}

Word assemble(int rank, const BForm& f) {
  if (f.m.size() != f.s.size() + 1)
    throw ContractError("freegroup.assemble: need k+1 exponents");
  std::string out;
  auto put_b = [&](long m) {
    unsigned char c = Letter{kB, m < 0 ? -1 : 1}.code();
    for (long i = 0; i < std::labs(m); ++i) out.push_back(static_cast<char>(c));
  };
  for (int j = 0; j < f.k(); ++j) {
    put_b(f.m[j]);
    if (f.s[j].index == kB)
      throw ContractError("freegroup.assemble: s_j must not be b");
    if (!out.empty() && static_cast<unsigned char>(out.back()) ==
                            inverse_code(f.s[j].code()))
      throw ContractError("freegroup.assemble: result not reduced");
    out.push_back(static_cast<char>(f.s[j].code()));
  }
  put_b(f.m.back());
  return Word::from_codes(rank, std::move(out));
}

int b_length(const Word& w) {
  int k = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].index != kB) ++k;
  return k;
}

std::uint64_t ball_size(int rank, int radius) {
  std::uint64_t total = 1, sphere = 2ull * rank;
  for (int l = 1; l <= radius; ++l) {
    total += sphere;
    sphere *= 2ull * rank - 1;
  }
  return total;
}

namespace {

void extend_sphere(int rank, const std::vector<Word>& prev,
                   std::vector<Word>& next) {
  const unsigned char ncodes = static_cast<unsigned char>(2 * rank);
  next.clear();
  for (const Word& p : prev) {
    for (unsigned char c = 0; c < ncodes; ++c) {
      if (!p.empty() && c == inverse_code(p.code(p.size() - 1))) continue;
      std::string s = p.codes();
      s.push_back(static_cast<char>(c));
      next.push_back(Word::from_codes(rank, std::move(s)));
    }
  }
}

}  // namespace

std::vector<Word> enumerate_sphere(const Alphabet& alpha, int radius) {
  std::vector<Word> cur{identity(alpha.rank)}, next;
  for (int l = 1; l <= radius; ++l) {
    extend_sphere(alpha.rank, cur, next);
    cur.swap(next);
  }
  return cur;
}

std::vector<Word> enumerate_ball(const Alphabet& alpha, int radius) {
  std::vector<Word> out;
  if (radius < 0) return out;
  out.reserve(ball_size(alpha.rank, radius));
  std::vector<Word> cur{identity(alpha.rank)}, next;
  out.push_back(cur.front());
  for (int l = 1; l <= radius; ++l) {
    extend_sphere(alpha.rank, cur, next);
    cur.swap(next);
    out.insert(out.end(), cur.begin(), cur.end());
  }
  return out;
}

void for_each_in_ball(const Alphabet& alpha, int radius,
                      const std::function<void(const Word&)>& fn) {
  if (radius < 0) return;
  std::vector<Word> cur{identity(alpha.rank)}, next;
  fn(cur.front());
  for (int l = 1; l <= radius; ++l) {
    extend_sphere(alpha.rank, cur, next);
    cur.swap(next);
    for (const Word& w : cur) fn(w);
  }
}

char letter_char(int index) {
  // 'e' is skipped so that it can always denote the identity.
  int c = 'a' + index - 1;
  if (index >= 5) ++c;
  return static_cast<char>(c);
}

int letter_index(char c) {
  if (c < 'a' || c > 'z' || c == 'e') return 0;
  int i = c - 'a' + 1;
  return c > 'e' ? i - 1 : i;
}

std::string to_string(Letter l) {
  std::string s(1, letter_char(l.index));
  if (l.sign < 0) s.push_back('\'');
  return s;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += to_string(w[i]);
  return s;
}

Word parse_word(std::string_view text, int rank) {
  if (text == "e") return identity(rank);
  if (text.empty()) throw ParseError("empty word", 0);
  std::string acc;
  std::size_t i = 0;
  while (i < text.size()) {
    int idx = letter_index(text[i]);
    if (idx == 0)
      throw ParseError(std::string("unexpected character '") + text[i] +
                           "' in word",
                       i);
    if (idx > rank)
      throw ParseError(std::string("letter '") + text[i] +
                           "' exceeds rank " + std::to_string(rank),
                       i);
    std::size_t at = i++;
    int sign = 1;
    if (i < text.size() && text[i] == '\'') {
      sign = -1;
      ++i;
    } else if (text.substr(i, 3) == "^-1") {
      sign = -1;
      i += 3;
    } else if (i < text.size() && text[i] == '^') {
      throw ParseError("only ^-1 is allowed as an exponent", i);
    }
    unsigned char c = Letter{idx, sign}.code();
    if (!acc.empty() && static_cast<unsigned char>(acc.back()) == inverse_code(c))
      throw ParseError("word is not freely reduced", at);
    acc.push_back(static_cast<char>(c));
  }
  return Word::from_codes(rank, std::move(acc));
}

}  // namespace qmf
