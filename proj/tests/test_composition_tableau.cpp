#include <doctest.h>

#include <algorithm>
#include <map>

#include "fixtures.hpp"
#include "nclr/composition_tableau.hpp"
#include "nclr/error.hpp"

using namespace nclr;
using fixtures::ct;
using fixtures::yt;

namespace {

// Every filling of gamma // beta by a permutation of [n], kept when it is a
// composition tableau. Independent of the search in enumerate_sct.
std::vector<CompositionTableau> brute_sct(const Composition& gamma, const Composition& beta) {
  std::vector<std::pair<int, int>> cells;
  Grid grid;
  for (int r = 0; r < gamma.length(); ++r) {
    grid.emplace_back(static_cast<std::size_t>(gamma.part(r + 1)), 0);
    for (int c = beta.part(r + 1); c < gamma.part(r + 1); ++c) cells.emplace_back(r, c);
  }
  std::vector<int> perm(cells.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k) + 1;
  std::vector<CompositionTableau> out;
  do {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      grid[static_cast<std::size_t>(cells[k].first)][static_cast<std::size_t>(cells[k].second)] = perm[k];
    }
    if (is_composition_tableau(beta, grid)) out.emplace_back(beta, grid);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("composition tableau conditions") {
  const Grid example = ct(fixtures::kCompositionTableau).grid();
  CHECK(is_composition_tableau({2, 4}, example));
  CHECK(is_composition_tableau({}, Grid{{1, 1, 3}}));
  Grid swapped = Grid{{2, 1}};
  CHECK_FALSE(is_composition_tableau({}, swapped));
  Grid bad_row = example;
  bad_row[1][4] = 2;
  bad_row[1][5] = 1;
  CHECK_FALSE(is_composition_tableau({2, 4}, bad_row));
  // First column must increase upwards.
  CHECK_FALSE(is_composition_tableau({}, Grid{{2}, {1}}));
  // Triple rule: a = 1 <= c = 2 forces b < c, but b = 3.
  CHECK_FALSE(is_composition_tableau({}, Grid{{1, 3}, {2, 4}}));
  CHECK(is_composition_tableau({}, Grid{{1, 3}, {2, 2}}));
  CHECK(is_composition_tableau({}, Grid{{1, 1}, {2}}));
  CHECK_FALSE(is_composition_tableau({1, 1}, Grid{{0, 1}, {0}}));  // (1,1) is not below (2,1)
  CHECK_THROWS_AS(CompositionTableau({}, Grid{{2, 1}}), precondition_error);
}

TEST_CASE("canonical tableau") {
  CHECK(canonical_ct({4, 2, 3, 1}).grid() == Grid{{1, 2, 3, 4}, {5, 6}, {7, 8, 9}, {10}});
  CHECK(canonical_ct({1}).grid() == Grid{{1}});
  CHECK(canonical_ct({1, 4, 3}).grid() == Grid{{1}, {2, 3, 4, 5}, {6, 7, 8}});
  CHECK_THROWS_AS(canonical_ct({}), precondition_error);
  // The only composition tableau whose shape and content are both alpha.
  for (int n = 1; n <= 6; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      std::vector<CompositionTableau> same;
      for (const auto& t : enumerate_ct(alpha, {}, alpha.length())) {
        if (t.content() == alpha.parts()) same.push_back(t);
      }
      REQUIRE(same.size() == 1);
      const CompositionTableau& t = same.front();
      for (int r = 0; r < t.num_rows(); ++r) {
        for (int c = 0; c < t.row_length(r); ++c) CHECK(t.at(r, c) == r + 1);
      }
      CHECK(standardize_tableau(rho(t)) == rho(canonical_ct(alpha)));
    }
  }
}

TEST_CASE("rho and its inverse on the worked example") {
  const CompositionTableau tau = ct(fixtures::kCompositionTableau);
  const SkewTableau t = yt(fixtures::kSemistandard);
  CHECK(rho(tau) == t);
  CHECK(rho_inverse(t, {2, 4}) == tau);
  CHECK(rho(make_unchecked_ct({}, {})).size() == 0);
  CHECK_THROWS_AS(rho_inverse(t, {2, 3}), precondition_error);

  const CompositionTableau canon = canonical_ct({1, 4, 3});
  CHECK(rho(canon) == yt("1 3 4 5\n2 7 8\n6"));
  CHECK(rho_inverse(yt("1 3 4 5\n2 7 8\n6"), {}) == canon);
}

TEST_CASE("rho inverse in both demos") {
  for (std::size_t k = 0; k < fixtures::kDemoS1.size(); ++k) {
    const SkewTableau t = yt(fixtures::kDemoS1[k]);
    CHECK(rho_inverse(t, {1, 2}) == ct(fixtures::kDemoRho12[k]));
    CHECK(rho_inverse(t, {2, 1}) == ct(fixtures::kDemoRho21[k]));
  }
  CHECK(rho_inverse(yt(fixtures::kDemoS1[0]), {1, 2}).outer() == Composition{3, 5, 2});
  CHECK(rho_inverse(yt(fixtures::kDemoS1[1]), {1, 2}).outer() == Composition{2, 5, 3});
  CHECK(rho_inverse(yt(fixtures::kDemoS1[0]), {2, 1}).outer() == Composition{3, 5, 2});
  CHECK(rho_inverse(yt(fixtures::kDemoS1[1]), {2, 1}).outer() == Composition{5, 2, 3});
}

TEST_CASE("rectification of composition tableaux") {
  const CompositionTableau target = ct("1\n2 2 2 2\n3 3 3");
  for (const auto& text : fixtures::kRunningLrtS1S2) {
    const SkewTableau t = yt(text);
    CHECK(rho_inverse(jdt_rectify(t), {}) == target);
    CHECK(rectify_ct(rho_inverse(t, {6, 4, 4})) == target);
    CHECK(rectify_ct(rho_inverse(t, {4, 6, 4})) == target);
    CHECK(rectify_ct(rho_inverse(t, {4, 4, 6})) == target);
  }
  const SkewTableau t = yt(fixtures::kSemistandard);
  CHECK(rectify_ct(rho_inverse(t, {2, 4})) == rectify_ct(rho_inverse(t, {4, 2})));
  const CompositionTableau straight = canonical_ct({3, 1});
  CHECK(rectify_ct(straight) == straight);
}

TEST_CASE("standardizing keeps the outer shape of rho inverse") {
  for (const Composition& beta : compositions_of(3)) {
    const Partition mu = sort_composition(beta);
    for (const Partition& lambda : partitions_of(mu.size() + 3)) {
      if (!contains(lambda, mu)) continue;
      for (const SkewTableau& t : all_tableaux(lambda, mu, 3)) {
        CHECK(rho_inverse(standardize_tableau(t), beta).outer() == rho_inverse(t, beta).outer());
      }
    }
  }
}

TEST_CASE("box adding operators") {
  CHECK(box_add(1, {}) == Composition{1});
  CHECK(box_add(3, {2, 1, 3, 2}) == Composition{2, 1, 3, 3});
  CHECK(box_add(4, {2, 1, 3, 2}) == Composition{2, 1, 4, 2});
  CHECK_THROWS_AS(box_add(5, {2, 1, 3, 2}), precondition_error);
  CHECK(box_add_word(Word{1}, {1}) == Composition{1, 1});
  CHECK(box_add_word(Word{2}, {1}) == Composition{2});
  CHECK(box_add_word(Word{}, {2, 1}) == Composition{2, 1});
  CHECK(box_add_word(Word{2, 1}, {}) == Composition{2});
  CHECK_THROWS_AS(box_add_word(Word{1, 2}, {}), precondition_error);
  for (int n = 0; n <= 6; ++n) {
    for (const Composition& beta : compositions_of(n)) {
      std::vector<Composition> made;
      for (int i = 1; i <= beta.largest_part() + 1; ++i) {
        try {
          made.push_back(box_add(i, beta));
        } catch (const precondition_error&) {
        }
      }
      std::sort(made.begin(), made.end());
      CHECK(made == lc_covers(beta));
    }
  }
}

TEST_CASE("standard composition tableau enumeration") {
  const auto one = enumerate_sct({1}, {});
  REQUIRE(one.size() == 1);
  CHECK(one.front().grid() == Grid{{1}});
  CHECK(enumerate_sct({1, 1}, {1}).size() == 1);
  CHECK(enumerate_sct({2}, {1}).size() == 1);
  CHECK_THROWS_AS(enumerate_sct({1, 2}, {2}), precondition_error);

  long long hits = 0;
  for (const auto& t : enumerate_sct({3, 5, 2}, {1, 2})) hits += rectify_ct(t) == canonical_ct({2, 4, 1});
  CHECK(hits == 1);

  for (int n = 0; n <= 6; ++n) {
    for (const Composition& gamma : compositions_of(n)) {
      for (int m = 0; m <= std::min(n, 3); ++m) {
        for (const Composition& beta : compositions_of(m)) {
          if (!lc_leq(beta, gamma)) continue;
          const auto fast = enumerate_sct(gamma, beta);
          CHECK(fast == brute_sct(gamma, beta));
          CHECK(std::is_sorted(fast.begin(), fast.end()));
        }
      }
    }
  }
}

TEST_CASE("composition tableaux with repeated entries biject with Young tableaux") {
  for (int m = 0; m <= 3; ++m) {
    for (const Composition& beta : compositions_of(m)) {
      for (int s = 0; s <= 4; ++s) {
        std::map<Partition, long long> by_sort;
        for (const Composition& gamma : lc_above(beta, s)) {
          const auto list = enumerate_ct(gamma, beta, 3);
          CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
          by_sort[sort_composition(gamma)] += static_cast<long long>(list.size());
        }
        for (const auto& [lambda, count] : by_sort) {
          CHECK(count == static_cast<long long>(all_tableaux(lambda, sort_composition(beta), 3).size()));
        }
      }
    }
  }
}
