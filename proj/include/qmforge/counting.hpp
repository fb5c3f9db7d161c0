#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qmforge/word.hpp"

namespace qmf {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const Rational& q);   // "p/q" with q >= 1
std::string to_plain(const Rational& q);    // "p" for integers, else "p/q"

enum class Mode { COUNTING, BROOKS };

// COUNTING: sum of alpha(v) #v. BROOKS: sum of alpha(v) phi(v) with phi(v) =
// #v - #v', stored with canonical keys (the shortlex smaller of v and v').
class Sum {
 public:
  using Terms = std::map<Word, Rational>;

  Sum() = default;
  Sum(int rank, Mode mode) : rank_(rank), mode_(mode) {}

  static Sum phi(const Word& v, const Rational& c = 1);
  static Sum count(const Word& v, const Rational& c = 1);

  int rank() const { return rank_; }
  Mode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::vector<Word> support() const;

  // Adds c times the basis element for v. In BROOKS mode v is re-oriented.
  void add(const Word& v, const Rational& c);
  // Signed coefficient of the basis element for v (orientation-aware).
  Rational coefficient(const Word& v) const;
  // Bypasses canonical orientation; only canonicalize() should see the result.
  void insert_raw(const Word& v, const Rational& c);

  Sum& operator+=(const Sum& o);
  Sum& operator-=(const Sum& o);
  Sum& operator*=(const Rational& c);
  friend Sum operator+(Sum x, const Sum& y) { return x += y; }
  friend Sum operator-(Sum x, const Sum& y) { return x -= y; }
  friend Sum operator*(const Rational& c, Sum x) { return x *= c; }
  friend Sum operator-(Sum x) { return x *= Rational(-1); }
  friend bool operator==(const Sum& x, const Sum& y) {
    return x.rank_ == y.rank_ && x.mode_ == y.mode_ && x.terms_ == y.terms_;
  }

 private:
  void check(const Sum& o) const;
  int rank_ = 2;
  Mode mode_ = Mode::BROOKS;
  Terms terms_;
};

bool is_canonical_key(const Word& v);
Word canonical_key(const Word& v);

// Expands phi(v) into #v - #v'. COUNTING input is returned unchanged.
Sum to_counting(const Sum& f);
Sum canonicalize(const Sum& f);

// Flat word -> coefficient table of the counting expansion, for repeated
// evaluation.
class Evaluator {
 public:
  explicit Evaluator(const Sum& f);
  Rational operator()(const Word& w) const;

 private:
  std::unordered_map<std::string, Rational, WordHash, std::equal_to<>> table_;
  std::size_t maxlen_ = 0;
};

Rational evaluate(const Sum& f, const Word& w);
int norm(const Sum& f);

struct Unbalanced {
  bool value = false;
  std::optional<Word> v0, v1, v2;
};

std::vector<Word> right_brothers(const Word& v);
std::vector<Word> left_brothers(const Word& v);

Unbalanced is_unbalanced(const Sum& f);

struct TruncatedEnd {
  std::optional<int> n_s;  // nullopt is NEG-INFINITY
  std::vector<Word> E_s;
};

TruncatedEnd truncated_end(const std::vector<Word>& I, int s);

struct ReducedLength {
  enum class Kind { EXACT, LOWER_BOUND, UNKNOWN };
  Kind kind = Kind::UNKNOWN;
  int length = 0;           // the length, or the lower bound
  int upper = 0;            // ||f||_S, always an upper bound
  std::string certificate;  // "length<=1", "unbalanced", "truncated-end", ...
  std::optional<Word> witness;
  std::optional<int> letter;  // s for the truncated-end certificate
};

std::string to_string(ReducedLength::Kind k);

// Exact homogenization on the conjugacy class of w (cyclic occurrence count).
Rational cyclic_value(const Sum& f, const Word& w);

ReducedLength certified_reduced_length(const Sum& f);

}  // namespace qmf
