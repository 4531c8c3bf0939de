#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "heegaard/integer.hpp"

namespace heegaard {

/// One signed surface-group generator c_k^{±1}; `generator` is 1-based.
struct Letter {
  int generator = 1;
  int sign = 1;

  Letter inverse() const { return {generator, -sign}; }
  bool cancels(const Letter& other) const {
    return generator == other.generator && sign == -other.sign;
  }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A finite word in c_1^{±1}, ..., c_{2g}^{±1}. The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Reversed word with every letter inverted.
  Word inverse() const;
  /// Cyclic rotation moving the first `shift` letters to the end.
  Word rotated(std::size_t shift = 1) const;
  Word operator*(const Word& rhs) const;

  /// No adjacent pair x x^{-1}.
  bool is_freely_reduced() const;
  /// Freely reduced and the last letter does not cancel the first.
  bool is_cyclically_reduced() const;

  /// Largest generator index used, 0 for the empty word.
  int max_generator() const;

  /// Text form used by the diagram format: `c1 -c3 c2`.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Parses whitespace-separated `c<k>` / `-c<k>` tokens. Throws InvalidWord on
/// a malformed token; index range is not checked here.
Word parse_word(const std::string& text);

/// Throws InvalidWord unless every letter lies in 1..2g.
void check_word(const Word& w, int genus);

/// Exponent sum of each generator: entry k-1 counts c_k minus c_k^{-1}.
IntVector abelianize(const Word& w, int genus);

/// Abelianization of the first k letters, 0 <= k <= |w|.
IntVector prefix_vector(const Word& w, std::size_t k, int genus);

/// Abelianization of letters l+1..n, 0 <= l <= n = |w|.
IntVector suffix_vector(const Word& w, std::size_t l, int genus);

}  // namespace heegaard
