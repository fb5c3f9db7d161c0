#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qmforge/word.hpp"

namespace qmf {

// P1 swaps a and b, P2 shifts a_i -> a_{i+1}, H inverts a, TINV is a -> ab'.
enum class Gen { P1, P2, H, TINV };

// X = g_1 g_2 ... g_k acting as g_1(g_2(...g_k(.)...)). T itself is never
// stored; it expands to P1 H P1 TINV P1 H P1.
struct NielsenWord {
  std::vector<Gen> gens;

  static NielsenWord identity() { return {}; }
  static NielsenWord of(Gen g) { return {{g}}; }
  static NielsenWord t();
  static NielsenWord p2_power(int j);

  // Tokens P1, P2, H, Tinv, T, id with optional ^k, separated by spaces,
  // '*' or '.'.
  static NielsenWord parse(std::string_view text);

  bool empty() const { return gens.empty(); }
  NielsenWord then(const NielsenWord& inner) const;  // this o inner
  friend bool operator==(const NielsenWord&, const NielsenWord&) = default;
};

std::string to_string(Gen g);
std::string to_string(const NielsenWord& x);

Word apply_generator(Gen g, const Word& w);
Word apply_automorphism(const NielsenWord& x, const Word& w);

// T: a -> ab by direct substitution (oracle convenience).
Word apply_t(const Word& w);
Word apply_t_power(const Word& w, int n);

// T^{-1} and T through the b-representation exponent shifts
// m_j -/+ #a(s_j) +/- #a'(s_{j+1}).
Word tinv_via_bform(const Word& w);
Word t_via_bform(const Word& w);

}  // namespace qmf
