#pragma once

// Reduced words in the free group on two generators. Letters: g = gamma,
// G = gamma^-1, d = delta, D = delta^-1.

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mlsum {

class Word {
 public:
  Word() = default;
  /// Validates the alphabet and freely reduces.
  explicit Word(std::string_view letters);

  static bool is_letter(char c) { return c == 'g' || c == 'G' || c == 'd' || c == 'D'; }
  static char inverse_letter(char c);

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  bool is_cyclically_reduced() const;

  friend Word operator*(const Word& a, const Word& b);
  friend auto operator<=>(const Word& a, const Word& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << (w.empty() ? std::string("e") : w.letters_);
  }

 private:
  std::string letters_;
};

/// All reduced words of length <= n, shortlex order.
std::vector<Word> enumerate_reduced_words(int n);

/// w is the shortest representative of its coset w<eta> (eta cyclically
/// reduced), with ties broken away from eta^-1.
bool is_canonical_coset_rep(const Word& w, const Word& eta);

/// Homomorphic image of w under g -> for_g, d -> for_d.
Word substitute(const Word& w, const Word& for_g, const Word& for_d);

}  // namespace mlsum
