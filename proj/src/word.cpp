#include "heegaard/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "heegaard/errors.hpp"

namespace heegaard {

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::rotated(std::size_t shift) const {
  if (letters_.empty()) return *this;
  std::vector<Letter> out = letters_;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
  return Word(std::move(out));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

bool Word::is_freely_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i - 1].cancels(letters_[i])) return false;
  }
  return true;
}

bool Word::is_cyclically_reduced() const {
  if (!is_freely_reduced()) return false;
  return letters_.size() < 2 || !letters_.back().cancels(letters_.front());
}

int Word::max_generator() const {
  int out = 0;
  for (const auto& l : letters_) out = std::max(out, l.generator);
  return out;
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out += ' ';
    if (letters_[i].sign < 0) out += '-';
    out += 'c';
    out += std::to_string(letters_[i].generator);
  }
  return out;
}

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  std::vector<Letter> letters;
  std::string token;
  while (in >> token) {
    std::string_view t = token;
    int sign = 1;
    if (t.starts_with('-')) {
      sign = -1;
      t.remove_prefix(1);
    }
    if (!t.starts_with('c') || t.size() < 2) throw InvalidWord("bad letter '" + token + "'");
    t.remove_prefix(1);
    int k = 0;
    const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), k);
    if (ec != std::errc{} || end != t.data() + t.size() || k < 1) {
      throw InvalidWord("bad letter '" + token + "'");
    }
    letters.push_back({k, sign});
  }
  return Word(std::move(letters));
}

void check_word(const Word& w, int genus) {
  for (const auto& l : w) {
    if (l.generator < 1 || l.generator > 2 * genus) {
      throw InvalidWord("letter c" + std::to_string(l.generator) + " outside c1..c" +
                        std::to_string(2 * genus));
    }
    if (l.sign != 1 && l.sign != -1) throw InvalidWord("letter exponent must be +1 or -1");
  }
}

namespace {

IntVector letter_sum(const Word& w, std::size_t first, std::size_t last, int genus) {
  IntVector out = IntVector::Zero(2 * genus);
  for (std::size_t i = first; i < last; ++i) out(w[i].generator - 1) += w[i].sign;
  return out;
}

}  // namespace

IntVector abelianize(const Word& w, int genus) {
  check_word(w, genus);
  return letter_sum(w, 0, w.size(), genus);
}

IntVector prefix_vector(const Word& w, std::size_t k, int genus) {
  check_word(w, genus);
  if (k > w.size()) {
    throw IndexError("prefix length " + std::to_string(k) + " exceeds word length " +
                     std::to_string(w.size()));
  }
  return letter_sum(w, 0, k, genus);
}

IntVector suffix_vector(const Word& w, std::size_t l, int genus) {
  check_word(w, genus);
  if (l > w.size()) {
    throw IndexError("suffix position " + std::to_string(l) + " exceeds word length " +
                     std::to_string(w.size()));
  }
  return letter_sum(w, l, w.size(), genus);
}

}  // namespace heegaard
