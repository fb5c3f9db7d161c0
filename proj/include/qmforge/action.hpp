#pragma once

#include <vector>

#include "qmforge/counting.hpp"
#include "qmforge/kind.hpp"
#include "qmforge/nielsen.hpp"

namespace qmf {

// phi(w) -> phi(Xw) for X in {P1, P2, H}.
Sum act_perm_flip(Gen g, const Sum& f);

// T^{-1}[f]: b-powers are eliminated first, then every key expands by W_1.
Sum act_tinv(const Sum& f);

// X[f] for X = g_1 ... g_k, applying g_k first.
Sum act(const NielsenWord& x, const Sum& f);

// l . m . r with l ranging over `left`, r over `right`.
struct FactorSet {
  std::vector<Word> left;
  Word middle;
  std::vector<Word> right;

  std::vector<Word> words() const;
};

// (tau_b o T^{-1} o tau_b)^n (w)
Word middle_word(const Word& w, int n);

// Both tables (W_1 and W*_n) require that w is not a power of b.
FactorSet w1_support(const Word& w);
FactorSet wstar_n(const Word& w, int n);
// The union of W_1(u) over u in W*_{n-1}(w), sorted and deduplicated.
std::vector<Word> wstar_n_recursive(const Word& w, int n);

struct Factor {
  Word word;
  int index;  // generation i: the factor lies in dL_i (or dR_i)
  int sign;   // +1 for L+ / R+, -1 for L- / R-
};

struct NRep {
  Word base;
  int n = 1;
  std::vector<Factor> left;
  Word middle;
  std::vector<Factor> right;

  std::vector<Word> Lplus() const;
  std::vector<Word> Lminus() const;
  std::vector<Word> Rplus() const;
  std::vector<Word> Rminus() const;

  struct Element {
    Word word;
    int sign;
    int i, j;  // type (i, j)
  };
  std::vector<Element> elements() const;
  Sum to_sum() const;
};

NRep nrep_factors(const Word& w, int n);

// (phi w)_n; w = b^{+-1} gives +-(n phi(a) + phi(b)).
Sum n_representative(const Word& w, int n);

// f_n = sum alpha(v) (phi v)_n; the only b-power key allowed is b.
Sum n_representative_sum(const Sum& f, int n);

}  // namespace qmf
