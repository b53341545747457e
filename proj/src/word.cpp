#include "bwy/word.hpp"

#include <cctype>

#include "bwy/error.hpp"

namespace bwy {
namespace {

constexpr std::size_t kMaxLetters = 1u << 20;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  DiffeoWord run() {
    DiffeoWord w;
    w.letters = sequence();
    while (pos_ < s_.size() && s_[pos_] == '.') {
      if (s_.substr(pos_, 3) == ".p1") {
        w.eps1 = true;
      } else if (s_.substr(pos_, 3) == ".p2") {
        w.eps2 = true;
      } else {
        error("bad suffix");
      }
      pos_ += 3;
    }
    if (pos_ != s_.size()) error("unexpected character");
    return w;
  }

 private:
  std::vector<Letter> sequence() {
    std::vector<Letter> out;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      std::vector<Letter> item;
      if (c == 'L' || c == 'R') {
        item.push_back(c == 'L' ? Letter::L : Letter::R);
        ++pos_;
      } else if (c == '(') {
        ++pos_;
        item = sequence();
        if (pos_ >= s_.size() || s_[pos_] != ')') error("unbalanced parenthesis");
        if (item.empty()) error("empty group");
        ++pos_;
      } else {
        break;
      }
      const long long reps = exponent();
      if (static_cast<double>(out.size()) + static_cast<double>(item.size()) * reps >
          static_cast<double>(kMaxLetters)) {
        error("word too long");
      }
      for (long long r = 0; r < reps; ++r) out.insert(out.end(), item.begin(), item.end());
    }
    return out;
  }

  long long exponent() {
    if (pos_ >= s_.size() || s_[pos_] != '^') return 1;
    ++pos_;
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > static_cast<long long>(kMaxLetters)) error("exponent too large");
      ++pos_;
    }
    if (pos_ == start || v <= 0) error("exponent must be a positive integer");
    return v;
  }

  [[noreturn]] void error(const char* msg) const {
    fail(ErrorKind::SyntaxError, std::string(msg) + " at position " + std::to_string(pos_) +
                                     " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

DiffeoWord parse_word(std::string_view text) {
  if (text.empty()) fail(ErrorKind::EmptyWord, "empty word");
  DiffeoWord w = Parser(text).run();
  if (w.letters.empty()) fail(ErrorKind::EmptyWord, "no letters in '" + std::string(text) + "'");
  bool has_l = false;
  bool has_r = false;
  for (Letter c : w.letters) (c == Letter::L ? has_l : has_r) = true;
  if (!has_l || !has_r) {
    fail(ErrorKind::MissingLetter, "word needs both L and R: '" + std::string(text) + "'");
  }
  return w;
}

std::string render(const DiffeoWord& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    out += w.letters[i] == Letter::L ? 'L' : 'R';
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  if (w.eps1) out += ".p1";
  if (w.eps2) out += ".p2";
  return out;
}

EpsilonSignature epsilon_signature(const DiffeoWord& w) {
  EpsilonSignature s;
  s.eps.reserve(w.letters.size());
  for (Letter c : w.letters) s.eps.push_back(c == Letter::L ? -1 : 1);
  return s;
}

}  // namespace bwy
