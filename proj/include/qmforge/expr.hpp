#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qmforge/counting.hpp"

namespace qmf {

// expr := term (('+'|'-') term)*    term := [rat '*'] atom
// atom := ('phi'|'#') '(' word ')' | 'rot'    rat := int ['/' int]
// A leading sign and the literal 0 are also accepted.
struct Term {
  enum class Atom { PHI, COUNT, ROT };
  Rational coef = 1;
  Atom atom = Atom::PHI;
  Word word;
};

struct Expression {
  std::vector<Term> terms;
  bool has_count() const;
};

Expression parse_expression(std::string_view text, int rank);

// BROOKS unless a #(..) term is present; then everything is expanded to
// counting functions.
Sum to_sum(const Expression& e, int rank);
Sum parse_sum(std::string_view text, int rank);

// Inverse of parse_sum: terms in shortlex order, e.g. "phi(a) - 3/2*phi(ab)".
std::string format_sum(const Sum& f);

}  // namespace qmf
