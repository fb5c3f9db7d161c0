#include "qmforge/expr.hpp"

#include <cctype>

#include "qmforge/speed.hpp"

namespace qmf {

bool Expression::has_count() const {
  for (const Term& t : terms)
    if (t.atom == Term::Atom::COUNT) return true;
  return false;
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, int rank) : s_(s), rank_(rank) {}

  Expression run() {
    Expression e;
    skip();
    if (at_end()) fail("empty expression");
    if (s_[pos_] == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip();
      if (at_end()) return e;
      pos_ = save;
    }
    int sign = 1;
    if (peek('-') || peek('+')) {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
      skip();
    }
    e.terms.push_back(term(sign));
    for (;;) {
      skip();
      if (at_end()) break;
      if (!peek('+') && !peek('-')) fail("expected '+' or '-'");
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
      skip();
      e.terms.push_back(term(sign));
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& m) const {
    throw ParseError("parse error at " + std::to_string(pos_) + ": " + m, pos_);
  }
  bool at_end() const { return pos_ >= s_.size(); }
  bool peek(char c) const { return !at_end() && s_[pos_] == c; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool keyword(std::string_view k) {
    if (s_.substr(pos_, k.size()) != k) return false;
    pos_ += k.size();
    return true;
  }

  BigInt integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer");
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  Term term(int sign) {
    Term t;
    t.coef = sign;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      BigInt p = integer(), q = 1;
      skip();
      if (peek('/')) {
        ++pos_;
        skip();
        std::size_t at = pos_;
        q = integer();
        if (q == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        skip();
      }
      if (!peek('*')) fail("expected '*' after coefficient");
      ++pos_;
      skip();
      t.coef *= Rational(p, q);
    }
    if (keyword("rot")) {
      t.atom = Term::Atom::ROT;
      return t;
    }
    if (keyword("phi")) {
      t.atom = Term::Atom::PHI;
    } else if (keyword("#")) {
      t.atom = Term::Atom::COUNT;
    } else {
      fail("expected phi(...), #(...) or rot");
    }
    skip();
    if (!peek('(')) fail("expected '('");
    ++pos_;
    skip();
    std::size_t start = pos_;
    while (!at_end() && s_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    std::size_t stop = pos_;
    skip();
    if (!peek(')')) {
      if (at_end()) fail("expected ')'");
      pos_ = stop;
      fail("whitespace inside word");
    }
    if (stop == start) fail("empty word");
    try {
      t.word = parse_word(s_.substr(start, stop - start), rank_);
    } catch (const ParseError& e) {
      pos_ = start + e.position;
      fail(e.what());
    }
    ++pos_;
    return t;
  }

  std::string_view s_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(std::string_view text, int rank) {
  Alphabet check(rank);
  (void)check;
  return Parser(text, rank).run();
}

Sum to_sum(const Expression& e, int rank) {
  const bool counting = e.has_count();
  Sum out(rank, counting ? Mode::COUNTING : Mode::BROOKS);
  for (const Term& t : e.terms) {
    Sum piece(rank, Mode::BROOKS);
    switch (t.atom) {
      case Term::Atom::ROT: piece = rot(rank); break;
      case Term::Atom::PHI:
        if (!t.word.empty()) piece.add(t.word, 1);
        break;
      case Term::Atom::COUNT:
        if (t.word.empty())
          throw ContractError("cli.parse_expression: #(e) is not a counting function");
        piece = Sum::count(t.word);
        break;
    }
    piece *= t.coef;
    out += counting ? to_counting(piece) : piece;
  }
  return out;
}

Sum parse_sum(std::string_view text, int rank) {
  return to_sum(parse_expression(text, rank), rank);
}

std::string format_sum(const Sum& f) {
  if (f.is_zero()) return "0";
  const std::string head = f.mode() == Mode::BROOKS ? "phi(" : "#(";
  std::string out;
  bool first = true;
  for (const auto& [v, c] : f.terms()) {
    Rational a = c;
    if (a < 0) {
      out += first ? "-" : " - ";
      a = -a;
    } else if (!first) {
      out += " + ";
    }
    if (a != 1) out += to_plain(a) + "*";
    out += head + to_string(v) + ")";
    first = false;
  }
  return out;
}

}  // namespace qmf
