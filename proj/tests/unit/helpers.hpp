#pragma once

#include <random>
#include <string>

#include "qmforge/counting.hpp"
#include "qmforge/word.hpp"

namespace th {

inline qmf::Word W(const std::string& s, int rank = 2) {
  return qmf::parse_word(s, rank);
}

inline qmf::Sum phi(const std::string& s, qmf::Rational c = 1, int rank = 2) {
  return qmf::Sum::phi(W(s, rank), c);
}

inline qmf::Sum cnt(const std::string& s, qmf::Rational c = 1, int rank = 2) {
  return qmf::Sum::count(W(s, rank), c);
}

}  // namespace th
