#include "qmforge/nielsen.hpp"

#include <cctype>
#include <cstdlib>

namespace qmf {

NielsenWord NielsenWord::t() {
  using G = Gen;
  return {{G::P1, G::H, G::P1, G::TINV, G::P1, G::H, G::P1}};
}

NielsenWord NielsenWord::p2_power(int j) {
  NielsenWord x;
  x.gens.assign(static_cast<std::size_t>(j), Gen::P2);
  return x;
}

NielsenWord NielsenWord::then(const NielsenWord& inner) const {
  NielsenWord x = *this;
  x.gens.insert(x.gens.end(), inner.gens.begin(), inner.gens.end());
  return x;
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

NielsenWord NielsenWord::parse(std::string_view text) {
  NielsenWord x;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.';
  };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !is_sep(text[i]) && text[i] != '^') ++i;
    std::string name = lower(text.substr(start, i - start));
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t e0 = ++i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string num(text.substr(e0, i - e0));
      if (num.empty() || num == "-" || num == "+")
        throw ParseError("bad exponent in Nielsen word", e0);
      exp = std::strtol(num.c_str(), nullptr, 10);
    }
    NielsenWord unit;
    bool invertible_by_sign = false;
    if (name == "p1") {
      unit = of(Gen::P1);
    } else if (name == "p2") {
      unit = of(Gen::P2);
    } else if (name == "h") {
      unit = of(Gen::H);
    } else if (name == "tinv") {
      unit = of(Gen::TINV);
      invertible_by_sign = true;
    } else if (name == "t") {
      unit = t();
      invertible_by_sign = true;
    } else if (name == "id" || name == "e") {
      continue;
    } else {
      throw ParseError("unknown Nielsen generator '" + name + "'", start);
    }
    if (exp < 0) {
      if (!invertible_by_sign)
        throw ParseError("negative exponent only allowed on T and Tinv", start);
      unit = (name == "t") ? of(Gen::TINV) : t();
      exp = -exp;
    }
    for (long r = 0; r < exp; ++r) x = x.then(unit);
  }
  return x;
}

std::string to_string(Gen g) {
  switch (g) {
    case Gen::P1: return "P1";
    case Gen::P2: return "P2";
    case Gen::H: return "H";
    case Gen::TINV: return "Tinv";
  }
  return "?";
}

std::string to_string(const NielsenWord& x) {
  if (x.gens.empty()) return "id";
  std::string s;
  for (std::size_t i = 0; i < x.gens.size(); ++i) {
    if (i) s += ' ';
    s += to_string(x.gens[i]);
  }
  return s;
}

namespace {

void push_reduced(std::string& acc, unsigned char c) {
  if (!acc.empty() && static_cast<unsigned char>(acc.back()) == inverse_code(c))
    acc.pop_back();
  else
    acc.push_back(static_cast<char>(c));
}

template <class F>
Word substitute(const Word& w, F image_of_positive) {
  int n = w.rank();
  std::vector<std::string> img(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    std::string p = image_of_positive(i);
    std::string inv(p.rbegin(), p.rend());
    for (char& c : inv) c = static_cast<char>(inverse_code(static_cast<unsigned char>(c)));
    img[Letter{i, 1}.code()] = p;
    img[Letter{i, -1}.code()] = inv;
  }
  std::string acc;
  for (std::size_t k = 0; k < w.size(); ++k)
    for (char c : img[w.code(k)]) push_reduced(acc, static_cast<unsigned char>(c));
  return Word::from_codes(n, std::move(acc));
}

std::string codes_of(std::initializer_list<Letter> ls) {
  std::string s;
  for (Letter l : ls) s.push_back(static_cast<char>(l.code()));
  return s;
}

}  // namespace

Word apply_generator(Gen g, const Word& w) {
  int n = w.rank();
  switch (g) {
    case Gen::P1:
      return substitute(w, [](int i) {
        int j = i == 1 ? 2 : (i == 2 ? 1 : i);
        return codes_of({Letter{j, 1}});
      });
    case Gen::P2:
      return substitute(w, [n](int i) { return codes_of({Letter{i % n + 1, 1}}); });
    case Gen::H:
      return substitute(w, [](int i) { return codes_of({Letter{i, i == 1 ? -1 : 1}}); });
    case Gen::TINV:
      return substitute(w, [](int i) {
        return i == 1 ? codes_of({Letter{1, 1}, Letter{2, -1}}) : codes_of({Letter{i, 1}});
      });
  }
  return w;
}

Word apply_automorphism(const NielsenWord& x, const Word& w) {
  Word cur = w;
  for (auto it = x.gens.rbegin(); it != x.gens.rend(); ++it)
    cur = apply_generator(*it, cur);
  return cur;
}

Word apply_t(const Word& w) {
  return substitute(w, [](int i) {
    return i == 1 ? codes_of({Letter{1, 1}, Letter{2, 1}}) : codes_of({Letter{i, 1}});
  });
}

Word apply_t_power(const Word& w, int n) {
  Word cur = w;
  for (int i = 0; i < n; ++i) cur = apply_t(cur);
  return cur;
}

namespace {

Word shift_bform(const Word& w, int dir) {
  if (w.empty()) return w;
  BForm f = b_form(w);
  const Letter a{kA, 1}, ai{kA, -1};
  int k = f.k();
  BForm g = f;
  for (int j = 0; j <= k; ++j) {
    long da = (j >= 1 && f.s[j - 1] == a) ? 1 : 0;
    long dai = (j < k && f.s[j] == ai) ? 1 : 0;
    g.m[j] = f.m[j] + dir * (da - dai);
  }
  return assemble(w.rank(), g);
}

}  // namespace

Word tinv_via_bform(const Word& w) { return shift_bform(w, -1); }
Word t_via_bform(const Word& w) { return shift_bform(w, +1); }

}  // namespace qmf
