#pragma once

#include <string>

#include "qmforge/word.hpp"

namespace qmf {

enum class Kind { B_TRUNCATED, B_LEFT, RIGHT_B, B_AND_B, B_POWER };

Kind kind(const Word& w);
std::string to_string(Kind k);

// b-truncated and b-and-b are self-opposite; b-left and right-b swap.
Kind inverse_kind(Kind k);

// tau_b, with the precondition that w is not a power of b.
Word tau_b(const Word& w);

}  // namespace qmf
