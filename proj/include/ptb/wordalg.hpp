#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ptb/bigint.hpp"

namespace ptb {

enum class Letter : char { R = 'R', L = 'L' };

struct Syllable {
  Letter letter;
  long exponent;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Signed word in R and L. sign = -1 means the product is composed with -I.
struct MonodromyWord {
  int sign = 1;
  std::vector<Syllable> syllables;

  long total_exponent() const;
  /// Letters spelled out, e.g. RL^2 -> "RLL".
  std::string letters() const;
  friend bool operator==(const MonodromyWord&, const MonodromyWord&) = default;
};

class WordParseError : public std::invalid_argument {
 public:
  WordParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

using IntMatrix2 = Eigen::Matrix<BigInt, 2, 2>;

/// Grammar: ["-"] (("R"|"L") [uint >= 1])+, no whitespace. Adjacent equal
/// letters are merged. Throws WordParseError naming the byte offset.
MonodromyWord parse_word(std::string_view text);
std::string format_word(const MonodromyWord& w);

/// Product of R = [[1,1],[0,1]] and L = [[1,0],[1,1]] read left to right, times -I for sign -1.
IntMatrix2 word_matrix(const MonodromyWord& w);
BigInt trace(const IntMatrix2& m);
bool is_hyperbolic(const MonodromyWord& w);

/// Least rotation of the cyclic syllable sequence (R < L, then smaller
/// exponent first). First and last syllables with the same letter merge.
MonodromyWord canonical_cyclic_form(const MonodromyWord& w);

/// Canonical ordering: total exponent, then syllables, then + before -.
bool word_less(const MonodromyWord& a, const MonodromyWord& b);

/// Every canonical hyperbolic word of either sign with total exponent <= bound,
/// one per conjugacy class, in word_less order.
std::vector<MonodromyWord> enumerate_words(long max_total_exponent);
/// Streaming form of enumerate_words.
void for_each_word(long max_total_exponent, const std::function<void(const MonodromyWord&)>& sink);

}  // namespace ptb
