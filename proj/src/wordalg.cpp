#include "ptb/wordalg.hpp"

#include <algorithm>
#include <limits>

namespace ptb {
namespace {

constexpr long kMaxExponent = 1000000000L;

void push_syllable(std::vector<Syllable>& out, Letter l, long e) {
  if (!out.empty() && out.back().letter == l) {
    out.back().exponent += e;
  } else {
    out.push_back({l, e});
  }
}

IntMatrix2 generator(Letter l, long e) {
  IntMatrix2 m;
  if (l == Letter::R) {
    m << BigInt(1), BigInt(e), BigInt(0), BigInt(1);
  } else {
    m << BigInt(1), BigInt(0), BigInt(e), BigInt(1);
  }
  return m;
}

int letter_rank(Letter l) { return l == Letter::R ? 0 : 1; }

// Lexicographic comparison of syllable sequences.
int compare_syllables(const std::vector<Syllable>& a, const std::vector<Syllable>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int la = letter_rank(a[i].letter), lb = letter_rank(b[i].letter);
    if (la != lb) return la < lb ? -1 : 1;
    if (a[i].exponent != b[i].exponent) return a[i].exponent < b[i].exponent ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

void compositions(long remaining, std::size_t parts, std::vector<long>& cur,
                  const std::function<void(const std::vector<long>&)>& sink) {
  if (cur.size() == parts) {
    if (remaining == 0) sink(cur);
    return;
  }
  const long slots_left = static_cast<long>(parts - cur.size());
  for (long v = 1; v <= remaining - (slots_left - 1); ++v) {
    cur.push_back(v);
    compositions(remaining - v, parts, cur, sink);
    cur.pop_back();
  }
}

}  // namespace

long MonodromyWord::total_exponent() const {
  long t = 0;
  for (const auto& s : syllables) t += s.exponent;
  return t;
}

std::string MonodromyWord::letters() const {
  std::string out;
  for (const auto& s : syllables) out.append(static_cast<std::size_t>(s.exponent), static_cast<char>(s.letter));
  return out;
}

MonodromyWord parse_word(std::string_view text) {
  if (text.empty()) throw WordParseError("empty word", 0);
  MonodromyWord w;
  std::size_t i = 0;
  if (text[0] == '-') {
    w.sign = -1;
    i = 1;
  }
  if (i == text.size()) throw WordParseError("expected a letter R or L", i);
  while (i < text.size()) {
    const char c = text[i];
    if (c != 'R' && c != 'L') throw WordParseError(std::string("unknown letter '") + c + "'", i);
    const Letter l = static_cast<Letter>(c);
    ++i;
    long e = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      const std::size_t start = i;
      if (text[i] == '0') {
        std::size_t j = i;
        while (j < text.size() && text[j] == '0') ++j;
        if (j == text.size() || !std::isdigit(static_cast<unsigned char>(text[j]))) {
          throw WordParseError("exponent must be at least 1", start);
        }
        throw WordParseError("malformed integer (leading zero)", start);
      }
      e = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        e = e * 10 + (text[i] - '0');
        if (e > kMaxExponent) throw WordParseError("malformed integer (exponent too large)", start);
        ++i;
      }
    }
    push_syllable(w.syllables, l, e);
  }
  return w;
}

std::string format_word(const MonodromyWord& w) {
  std::string out = w.sign < 0 ? "-" : "";
  for (const auto& s : w.syllables) {
    out.push_back(static_cast<char>(s.letter));
    if (s.exponent != 1) out += std::to_string(s.exponent);
  }
  return out;
}

IntMatrix2 word_matrix(const MonodromyWord& w) {
  IntMatrix2 m = IntMatrix2::Identity();
  for (const auto& s : w.syllables) {
    const IntMatrix2 g = generator(s.letter, s.exponent);
    m = (m * g).eval();
  }
  if (w.sign < 0) m = -m;
  return m;
}

BigInt trace(const IntMatrix2& m) { return m(0, 0) + m(1, 1); }

bool is_hyperbolic(const MonodromyWord& w) { return abs(trace(word_matrix(w))) > 2; }

MonodromyWord canonical_cyclic_form(const MonodromyWord& w) {
  std::vector<Syllable> s = w.syllables;
  if (s.size() >= 2 && s.front().letter == s.back().letter) {
    s.front().exponent += s.back().exponent;
    s.pop_back();
  }
  std::vector<Syllable> best = s;
  for (std::size_t r = 1; r < s.size(); ++r) {
    std::vector<Syllable> rot(s.begin() + static_cast<std::ptrdiff_t>(r), s.end());
    rot.insert(rot.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(r));
    if (compare_syllables(rot, best) < 0) best = std::move(rot);
  }
  return {w.sign, best};
}

bool word_less(const MonodromyWord& a, const MonodromyWord& b) {
  const long ta = a.total_exponent(), tb = b.total_exponent();
  if (ta != tb) return ta < tb;
  const int c = compare_syllables(a.syllables, b.syllables);
  if (c != 0) return c < 0;
  return a.sign > b.sign;
}

void for_each_word(long max_total_exponent, const std::function<void(const MonodromyWord&)>& sink) {
  for (long total = 2; total <= max_total_exponent; ++total) {
    std::vector<MonodromyWord> level;
    for (std::size_t pairs = 1; 2 * pairs <= static_cast<std::size_t>(total); ++pairs) {
      std::vector<long> cur;
      compositions(total, 2 * pairs, cur, [&](const std::vector<long>& ex) {
        MonodromyWord w;
        for (std::size_t i = 0; i < ex.size(); ++i) w.syllables.push_back({i % 2 == 0 ? Letter::R : Letter::L, ex[i]});
        if (canonical_cyclic_form(w) != w) return;
        level.push_back(w);
        MonodromyWord neg = w;
        neg.sign = -1;
        level.push_back(neg);
      });
    }
    std::sort(level.begin(), level.end(), word_less);
    for (const auto& w : level) {
      if (is_hyperbolic(w)) sink(w);
    }
  }
}

std::vector<MonodromyWord> enumerate_words(long max_total_exponent) {
  std::vector<MonodromyWord> out;
  for_each_word(max_total_exponent, [&](const MonodromyWord& w) { out.push_back(w); });
  return out;
}

}  // namespace ptb
