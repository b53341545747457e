#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bwy {

enum class Letter { L, R };

struct DiffeoWord {
  std::vector<Letter> letters;
  bool eps1 = false;
  bool eps2 = false;

  int k0() const { return static_cast<int>(letters.size()); }
  bool operator==(const DiffeoWord&) const = default;
};

// Cyclic +-1 sequence: -1 for L, +1 for R. at(k) accepts any integer index.
struct EpsilonSignature {
  std::vector<int> eps;

  int size() const { return static_cast<int>(eps.size()); }
  int at(int k) const {
    const int m = size();
    return eps[static_cast<std::size_t>(((k % m) + m) % m)];
  }
};

// Grammar: items of "L", "R" or "(...)", each optionally followed by "^<posint>",
// then optional ".p1" / ".p2" suffixes.
DiffeoWord parse_word(std::string_view text);

// Exponent-compressed form, e.g. "L^2R^3.p1".
std::string render(const DiffeoWord& w);

EpsilonSignature epsilon_signature(const DiffeoWord& w);

}  // namespace bwy
