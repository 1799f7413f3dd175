#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "nclr/crystal.hpp"
#include "nclr/error.hpp"
#include "nclr/frank.hpp"

using namespace nclr;
using fixtures::yt;

namespace {

Word fw(std::string_view text) { return parse_frank(text); }

std::vector<Word> all_words(int alphabet, int length) {
  std::vector<Word> out;
  Word w(static_cast<std::size_t>(length), 1);
  while (true) {
    out.push_back(w);
    int k = length - 1;
    while (k >= 0 && w[static_cast<std::size_t>(k)] == alphabet) w[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) break;
    ++w[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace

TEST_CASE("column factorization") {
  const Word w{4, 3, 2, 3, 2, 6, 5, 3, 1};
  CHECK(column_factorization(w) == std::vector<Word>{{4, 3, 2}, {3, 2}, {6, 5, 3, 1}});
  CHECK(column_form(w) == Composition{3, 2, 4});
  CHECK(column_form(Word{5, 3, 2, 1}) == Composition{4});
  CHECK(column_form(Word{1, 2, 2, 4}) == Composition{1, 1, 1, 1});
  CHECK(column_factorization(Word{}).empty());
  CHECK(concat(column_factorization(w)) == w);
}

TEST_CASE("frank words") {
  CHECK(is_frank(Word{4, 3, 2, 3, 2, 6, 5, 3, 1}));
  CHECK(is_frank(Word{5, 2, 1}));
  CHECK_FALSE(is_frank(Word{3, 1, 2, 1}));
  CHECK(insertion_shape(Word{3, 1, 2, 1}) == Partition{2, 1, 1});
}

TEST_CASE("frank word text form") {
  CHECK(format_frank(Word{3, 2, 1, 7, 6, 2, 1, 5}) == "321|7621|5");
  CHECK(fw("321|7621|5") == Word{3, 2, 1, 7, 6, 2, 1, 5});
  CHECK(format_frank(Word{12, 3, 4}) == "12,3|4");
  CHECK(fw("12,3|4") == Word{12, 3, 4});
  CHECK(fw("") == Word{});
  CHECK_THROWS_AS(fw("32|1"), parse_error);
  CHECK_THROWS_AS(fw("3a|1"), parse_error);
}

TEST_CASE("iota") {
  CHECK(iota(fw("76421|632")) == fw("621|76432"));
  CHECK(iota(fw("621|76432")) == fw("76421|632"));
  CHECK(iota_reference(fw("76421|632")) == fw("621|76432"));
  CHECK(iota_reference(fw("621|76432")) == fw("76421|632"));
  CHECK(iota(fw("21|32")) == fw("21|32"));
  CHECK_THROWS_AS(iota(fw("321")), precondition_error);
  CHECK_THROWS_AS(iota(fw("1|2|3")), precondition_error);
  CHECK_THROWS_AS(iota(Word{3, 1, 2, 1}), precondition_error);
}

TEST_CASE("frank action") {
  CHECK(frank_si(1, fw("76421|632")) == fw("621|76432"));
  CHECK_THROWS_AS(frank_si(2, fw("76421|632")), precondition_error);
  CHECK_THROWS_AS(frank_si(0, fw("76421|632")), precondition_error);
  const Word w = fw("432|32|6531");
  for (int i = 1; i <= 2; ++i) CHECK(frank_si(i, frank_si(i, w)) == w);
  CHECK(frank_apply(Permutation::identity(3), w) == w);

  // s_2 s_1 carries the growth words of the running LR tableaux to column
  // form (3,4,1).
  const Permutation s2s1 = Permutation::simple(2, 3) * Permutation::simple(1, 3);
  std::vector<Word> images;
  for (const auto& text : fixtures::kRunningLrt) {
    const Word cgw = column_growth_word(yt(text));
    CHECK(column_form(cgw) == Composition{1, 3, 4});
    images.push_back(frank_apply(s2s1, cgw));
  }
  std::sort(images.begin(), images.end());
  std::vector<Word> expected{fw("321|7621|5"), fw("621|7321|5"), fw("321|6521|7")};
  std::sort(expected.begin(), expected.end());
  CHECK(images == expected);
}

TEST_CASE("compatibility") {
  CHECK(is_compatible(fw("621|76432"), {7, 6, 4, 2, 2}, {5, 5, 2, 1}));
  CHECK(is_compatible(Word{}, {2, 1}, {2, 1}));
  CHECK_FALSE(is_compatible(fw("621|76432"), {7, 6, 4, 2, 2}, {}));
  CHECK_THROWS_AS(is_compatible(Word{}, {1}, {2}), precondition_error);
}

TEST_CASE("LR frank words") {
  const Partition lambda{7, 6, 4, 3, 2};
  const Partition mu{6, 4, 4};
  const auto words = enumerate_lr_frank(lambda, mu, {3, 4, 1});
  std::vector<Word> expected{fw("321|7621|5"), fw("621|7321|5"), fw("321|6521|7")};
  std::sort(expected.begin(), expected.end());
  CHECK(words == expected);

  std::vector<Word> cgws;
  for (const auto& text : fixtures::kRunningLrt) cgws.push_back(column_growth_word(yt(text)));
  std::sort(cgws.begin(), cgws.end());
  CHECK(enumerate_lr_frank(lambda, mu, {1, 3, 4}) == cgws);

  CHECK(enumerate_lr_frank({1}, {}, {1}) == std::vector<Word>{{1}});
  CHECK_THROWS_AS(enumerate_lr_frank({2}, {}, {1}), precondition_error);

  // Oracle: every word over [lambda_1] of the right length, filtered by
  // column form, frankness and compatibility.
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      for (const Partition& m : partitions_inside(lam)) {
        const int k = lam.size() - m.size();
        if (k == 0) continue;
        const auto candidates = all_words(lam.part(1), k);
        for (const Composition& alpha : compositions_of(k)) {
          std::vector<Word> brute;
          for (const Word& w : candidates) {
            if (column_form(w) == alpha && is_frank(w) && is_compatible(w, lam, m)) brute.push_back(w);
          }
          CHECK(enumerate_lr_frank(lam, m, alpha) == brute);
        }
      }
    }
  }
}

TEST_CASE("phi") {
  const Partition lambda{7, 6, 4, 2, 2};
  const Partition mu{5, 5, 2, 1};
  const Word w = fw("621|76432");
  const SkewTableau t = phi(w, lambda, mu);
  CHECK(t == yt(fixtures::kPhi));
  CHECK(column_growth_word(t) == w);
  CHECK(t.content() == std::vector<int>{5, 3});
  CHECK(phi(iota(w), lambda, mu) == yt(fixtures::kPhiS1));
  CHECK(phi(Word{2}, {2}, {1}) == yt(". 1"));
  CHECK_THROWS_AS(phi(w, lambda, {}), precondition_error);

  const LrTriple running{{7, 6, 4, 3, 2}, {6, 4, 4}, {4, 3, 1}};
  std::vector<SkewTableau> images;
  for (const Word& u : enumerate_lr_frank(running.lambda, running.mu, {1, 3, 4})) {
    images.push_back(phi(u, running.lambda, running.mu));
  }
  std::sort(images.begin(), images.end());
  CHECK(images == enumerate_lrt(running));
}
