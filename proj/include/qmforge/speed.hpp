#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmforge/action.hpp"
#include "qmforge/relations.hpp"

namespace qmf {

// |A+| + |A-| + kind offset; 0 for b^{+-1}.
int sp_word(const Word& w);
bool in_O(const Word& w);

// phi(ab) - sum over s in S_b \ {a'} of phi(bs).
Sum rot(int rank);

struct Decomposition {
  Rational lambda = 0;
  Sum residue;
  Trace trace;  // input ~ lambda*rot + residue, replayable
  bool rot_rewrite = false;
};

Decomposition speed_decompose(const Sum& f);

struct SpeedReport {
  Rational lambda = 0;
  int value = 0;
  std::optional<Word> witness;
  Sum residue;
  Trace trace;
  std::vector<std::string> trail;
};

SpeedReport speed(const Sum& f);

struct SquareLength {
  int i, j;
  int length;
  std::size_t count;
};

struct SupportGeometry {
  Word base;
  int n = 1;
  Kind kind = Kind::B_TRUNCATED;
  std::vector<SquareLength> squares;  // sorted by (i, j)
  std::optional<int> n_b;             // nullopt is NEG-INFINITY
  bool E_b_nonempty = false;
  int max_length = 0;
};

SupportGeometry support_geometry(const Word& w, int n);

enum class Gauge { LINEAR, QUADRATIC, SQRT, LOG };
std::string to_string(Gauge g);
Gauge parse_gauge(const std::string& s);
double gauge_value(Gauge g, int n);

struct GaugeSample {
  int n;
  ReducedLength::Kind tag;
  int length;  // certified value, lower bound, or ||.||_S when UNKNOWN
  int upper;
  double ratio;
};

struct GaugeSeries {
  Gauge gauge = Gauge::LINEAR;
  std::vector<GaugeSample> samples;
};

// Representatives of X^n[f] for n = 1..n_max. For X = TINV these are the
// n-representatives of the normal form.
GaugeSeries empirical_speed(const Sum& f, const NielsenWord& x, int n_max,
                            Gauge gauge = Gauge::LINEAR);

}  // namespace qmf
