#include "mlsum/word.hpp"

#include "mlsum/error.hpp"

namespace mlsum {

namespace {

void push_reduced(std::string& out, char c) {
  if (!out.empty() && out.back() == Word::inverse_letter(c)) {
    out.pop_back();
  } else {
    out.push_back(c);
  }
}

}  // namespace

char Word::inverse_letter(char c) {
  switch (c) {
    case 'g': return 'G';
    case 'G': return 'g';
    case 'd': return 'D';
    case 'D': return 'd';
    default: break;
  }
  throw Error(ErrorCode::MalformedConfig, std::string("not a generator letter: '") + c + "'");
}

Word::Word(std::string_view letters) {
  for (char c : letters) {
    if (!is_letter(c)) {
      throw Error(ErrorCode::MalformedConfig, std::string("not a generator letter: '") + c + "'");
    }
    push_reduced(letters_, c);
  }
}

Word Word::inverse() const {
  Word r;
  r.letters_.reserve(size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(inverse_letter(*it));
  return r;
}

bool Word::is_cyclically_reduced() const {
  return size() < 2 || letters_.front() != inverse_letter(letters_.back());
}

Word operator*(const Word& a, const Word& b) {
  Word r = a;
  for (char c : b.letters_) push_reduced(r.letters_, c);
  return r;
}

std::vector<Word> enumerate_reduced_words(int n) {
  static constexpr char kLetters[] = {'g', 'G', 'd', 'D'};
  std::vector<Word> all{Word()};
  std::size_t layer_begin = 0;
  for (int k = 0; k < n; ++k) {
    const std::size_t layer_end = all.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const std::string base = all[i].str();
      for (char c : kLetters) {
        if (!base.empty() && base.back() == Word::inverse_letter(c)) continue;
        all.emplace_back(base + c);
      }
    }
    layer_begin = layer_end;
  }
  return all;
}

bool is_canonical_coset_rep(const Word& w, const Word& eta) {
  return (w * eta).size() >= w.size() && (w * eta.inverse()).size() > w.size();
}

Word substitute(const Word& w, const Word& for_g, const Word& for_d) {
  const Word gi = for_g.inverse();
  const Word di = for_d.inverse();
  Word r;
  for (std::size_t i = 0; i < w.size(); ++i) {
    switch (w[i]) {
      case 'g': r = r * for_g; break;
      case 'G': r = r * gi; break;
      case 'd': r = r * for_d; break;
      default: r = r * di; break;
    }
  }
  return r;
}

}  // namespace mlsum
