#include <doctest.h>

#include <set>
#include <string>

#include "mlsum/error.hpp"
#include "mlsum/word.hpp"

using namespace mlsum;

TEST_CASE("free reduction") {
  CHECK(Word("gG").empty());
  CHECK(Word("gdDG").empty());
  CHECK(Word("ggdDd").str() == "ggd");
  CHECK(Word("dgGD").empty());
  CHECK(Word("").empty());
  CHECK_THROWS_AS(Word("gx"), Error);
}

TEST_CASE("products and inverses") {
  const Word a("gd"), b("Dg");
  CHECK((a * b).str() == "gg");
  CHECK(Word("DGdg").inverse().str() == "GDgd");
  CHECK((a * a.inverse()).empty());
  CHECK(Word("gdG").is_cyclically_reduced() == false);
  CHECK(Word("DGdg").is_cyclically_reduced());
}

TEST_CASE("enumeration counts and shortlex order") {
  const auto w = enumerate_reduced_words(4);
  // 1 + 4 + 12 + 36 + 108
  CHECK(w.size() == 161);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < w.size(); ++i) {
    CHECK(seen.insert(w[i].str()).second);
    CHECK(Word(w[i].str()) == w[i]);
    if (i > 0) CHECK(w[i - 1].size() <= w[i].size());
  }
}

TEST_CASE("canonical coset representatives") {
  // For eta = g, cosets w<g> are indexed by words not ending in g or G.
  const Word eta("g");
  int count = 0;
  for (const Word& w : enumerate_reduced_words(3)) {
    const bool expect = w.empty() || (w[w.size() - 1] != 'g' && w[w.size() - 1] != 'G');
    CHECK(is_canonical_coset_rep(w, eta) == expect);
    count += expect;
  }
  CHECK(count == 1 + 2 + 6 + 18);

  // Each coset w<eta> has exactly one representative: multiplying a canonical
  // rep by eta^k never gives another canonical rep.
  for (const char* e : {"dg", "DGdg", "gdd"}) {
    const Word eta2(e);
    for (const Word& w : enumerate_reduced_words(4)) {
      if (!is_canonical_coset_rep(w, eta2)) continue;
      Word up = w, down = w;
      for (int k = 1; k <= 3; ++k) {
        up = up * eta2;
        down = down * eta2.inverse();
        CHECK_FALSE(is_canonical_coset_rep(up, eta2));
        CHECK_FALSE(is_canonical_coset_rep(down, eta2));
      }
    }
    // ... and every coset has one.
    for (const Word& w : enumerate_reduced_words(3)) {
      bool found = is_canonical_coset_rep(w, eta2);
      Word up = w, down = w;
      for (int k = 1; k <= 4 && !found; ++k) {
        up = up * eta2;
        down = down * eta2.inverse();
        found = is_canonical_coset_rep(up, eta2) || is_canonical_coset_rep(down, eta2);
      }
      CHECK(found);
    }
  }
}

TEST_CASE("substitution is a homomorphism") {
  const Word x("d"), y("Dg");
  CHECK(substitute(Word("g"), x, y).str() == "d");
  CHECK(substitute(Word("gd"), x, y).str() == "g");
  const Word u("gdGd"), v("DDg");
  CHECK(substitute(u * v, x, y) == substitute(u, x, y) * substitute(v, x, y));
  CHECK(substitute(u.inverse(), x, y) == substitute(u, x, y).inverse());
}
