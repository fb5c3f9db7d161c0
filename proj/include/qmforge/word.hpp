#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmf {

inline constexpr int kA = 1;
inline constexpr int kB = 2;
inline constexpr int kMaxRank = 25;

struct Alphabet {
  int rank;
  explicit Alphabet(int n);
};

// A letter a_index^sign. Packed into a one-byte code 2*(index-1) + (sign < 0),
// which is also its rank in the order a < a' < b < b' < ...
struct Letter {
  int index = 1;
  int sign = 1;

  constexpr unsigned char code() const {
    return static_cast<unsigned char>(2 * (index - 1) + (sign < 0 ? 1 : 0));
  }
  static constexpr Letter from_code(unsigned char c) {
    return Letter{c / 2 + 1, (c & 1) ? -1 : 1};
  }
  constexpr Letter inverse() const { return Letter{index, -sign}; }
  friend constexpr bool operator==(Letter, Letter) = default;
};

constexpr unsigned char inverse_code(unsigned char c) { return c ^ 1u; }

class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(rank) {}

  // Trusted constructor: codes must already be freely reduced.
  static Word from_codes(int rank, std::string codes);

  int rank() const { return rank_; }
  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  Letter operator[](std::size_t i) const {
    return Letter::from_code(static_cast<unsigned char>(codes_[i]));
  }
  unsigned char code(std::size_t i) const {
    return static_cast<unsigned char>(codes_[i]);
  }
  const std::string& codes() const { return codes_; }
  std::vector<Letter> letters() const;

  Word subword(std::size_t pos, std::size_t len) const {
    return from_codes(rank_, codes_.substr(pos, len));
  }

  friend bool operator==(const Word& x, const Word& y) {
    return x.codes_ == y.codes_;
  }
  // Shortlex: length first, then lexicographic in letter rank.
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
    if (x.size() != y.size()) return x.size() <=> y.size();
    int c = x.codes_.compare(y.codes_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  int rank_ = 2;
  std::string codes_;
};

struct WordHash {
  using is_transparent = void;
  std::size_t operator()(const Word& w) const {
    return std::hash<std::string_view>{}(w.codes());
  }
  std::size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>{}(s);
  }
};

Word identity(int rank);
Word letter_word(int rank, Letter l);
Word power(int rank, Letter l, long m);  // l^m, m may be negative
Word b_power(int rank, long m);

Word reduce(int rank, const std::vector<Letter>& letters);
Word multiply(const Word& u, const Word& v);
Word multiply(std::initializer_list<Word> parts);
Word invert(const Word& w);

// Overlapping occurrences of v in w.
long count_subword(const Word& v, const Word& w);

bool starts_with(const Word& w, const Word& prefix);
bool ends_with(const Word& w, const Word& suffix);

// Strips the maximal a_s^{+-1} prefix and suffix. nullopt is the EMPTY marker,
// returned when every letter of w is a_s^{+-1}.
std::optional<Word> truncate(const Word& w, int s);
bool is_truncated(const Word& w, int s);
bool is_letter_power(const Word& w, int s);

struct BForm {
  std::vector<long> m;      // m_0..m_k
  std::vector<Letter> s;    // s_1..s_k
  int k() const { return static_cast<int>(s.size()); }
  friend bool operator==(const BForm&, const BForm&) = default;
};

BForm b_form(const Word& w);
Word assemble(int rank, const BForm& f);
int b_length(const Word& w);

std::uint64_t ball_size(int rank, int radius);
std::vector<Word> enumerate_ball(const Alphabet& alpha, int radius);
std::vector<Word> enumerate_sphere(const Alphabet& alpha, int radius);
void for_each_in_ball(const Alphabet& alpha, int radius,
                      const std::function<void(const Word&)>& fn);

// Text syntax: letters a,b,c,d,f,g,... (e is reserved for the identity),
// inverse as a trailing ' or ^-1.
char letter_char(int index);
int letter_index(char c);  // 0 if not a letter
std::string to_string(const Word& w);
std::string to_string(Letter l);

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what), position(pos) {}
};

struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Word parse_word(std::string_view text, int rank);

}  // namespace qmf
