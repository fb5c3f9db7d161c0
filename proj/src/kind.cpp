#include "qmforge/kind.hpp"

namespace qmf {

Kind kind(const Word& w) {
  if (w.empty()) throw ContractError("action.kind: w = e");
  if (is_letter_power(w, kB)) return Kind::B_POWER;
  bool left = w[0].index == kB;
  bool right = w[w.size() - 1].index == kB;
  if (left && right) return Kind::B_AND_B;
  if (left) return Kind::B_LEFT;
  if (right) return Kind::RIGHT_B;
  return Kind::B_TRUNCATED;
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::B_TRUNCATED: return "b-truncated";
    case Kind::B_LEFT: return "b-left";
    case Kind::RIGHT_B: return "right-b";
    case Kind::B_AND_B: return "b-and-b";
    case Kind::B_POWER: return "b-power";
  }
  return "?";
}

Kind inverse_kind(Kind k) {
  if (k == Kind::B_LEFT) return Kind::RIGHT_B;
  if (k == Kind::RIGHT_B) return Kind::B_LEFT;
  return k;
}

Word tau_b(const Word& w) {
  auto t = truncate(w, kB);
  if (!t) throw ContractError("tau_b: w is a power of b");
  return *t;
}

}  // namespace qmf
