#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>

#include "nclr/core.hpp"
#include "nclr/error.hpp"

using namespace nclr;

namespace {

std::vector<Permutation> all_perms(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = k + 1;
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Brute force: the permutations of S_n with the inversion set of w.
std::vector<Permutation> same_inversions(const Word& w) {
  std::vector<Permutation> out;
  for (const auto& p : all_perms(static_cast<int>(w.size()))) {
    if (inversions(p.one_line()) == inversions(w)) out.push_back(p);
  }
  return out;
}

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

TEST_CASE("standardize_word matches the brute-force inversion oracle") {
  CHECK(standardize_word(Word{1, 2, 3}).one_line() == std::vector<int>{1, 2, 3});
  CHECK(standardize_word(Word{1, 2, 1}).one_line() == std::vector<int>{1, 3, 2});
  CHECK(standardize_word(Word{2, 1, 2}).one_line() == std::vector<int>{2, 1, 3});
  CHECK(standardize_word(Word{}).degree() == 0);
  for (int n = 1; n <= 5; ++n) {
    for (const Word& w : all_words(3, n)) {
      const auto candidates = same_inversions(w);
      REQUIRE(candidates.size() == 1);
      CHECK(standardize_word(w) == candidates.front());
    }
  }
}

TEST_CASE("standardization keeps descent positions") {
  for (int n = 1; n <= 6; ++n) {
    for (const Word& w : all_words(3, n)) {
      const auto s = standardize_word(w).one_line();
      for (std::size_t k = 0; k + 1 < w.size(); ++k) CHECK((w[k] > w[k + 1]) == (s[k] > s[k + 1]));
    }
  }
}

TEST_CASE("lattice words") {
  CHECK(is_lattice(Word{}));
  CHECK(is_reverse_lattice(Word{}));
  CHECK_FALSE(is_lattice(Word{2, 1}));
  CHECK(is_reverse_lattice(Word{2, 1, 3, 2, 2, 1, 1, 1}));
  for (int n = 0; n <= 8; ++n) {
    for (const Word& w : all_words(3, n)) CHECK(is_lattice(w) == is_reverse_lattice(reversed(w)));
  }
}

TEST_CASE("sort, reverse, set and transpose") {
  CHECK(sort_composition({2, 4, 1}) == Partition{4, 2, 1});
  CHECK(sort_composition({}) == Partition{});
  CHECK(reverse({2, 4, 1}) == Composition{1, 4, 2});
  CHECK(set_of({1, 3, 2}) == std::set<int>{1, 4});
  CHECK(composition_from_set({1, 4}, 6) == Composition{1, 3, 2});
  CHECK(transpose({4, 3, 2}) == Partition{3, 3, 2, 1});
  for (int n = 0; n <= 12; ++n) {
    for (const Partition& p : partitions_of(n)) CHECK(transpose(transpose(p)) == p);
  }
  for (int n = 1; n <= 7; ++n) {
    for (const Composition& a : compositions_of(n)) CHECK(composition_from_set(set_of(a), n) == a);
  }
}

TEST_CASE("enumerations of compositions and partitions") {
  for (int n = 1; n <= 8; ++n) CHECK(compositions_of(n).size() == (1u << (n - 1)));
  const std::vector<std::size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == p[static_cast<std::size_t>(n)]);
  CHECK(rearrangements({2, 1, 1}).size() == 3);
  CHECK(partitions_inside({2, 1}).size() == 5);
}

TEST_CASE("permute_sequence") {
  CHECK(permute_sequence(Permutation::identity(3), std::vector<int>{4, 3, 1}) == std::vector<int>{4, 3, 1});
  CHECK(permute_sequence(Permutation::simple(1, 3), std::vector<int>{4, 3, 1}) ==
        std::vector<int>{3, 4, 1});
  const Permutation s1s2 = Permutation::simple(1, 3) * Permutation::simple(2, 3);
  CHECK(permute_sequence(s1s2, std::vector<int>{4, 3, 1}) == std::vector<int>{1, 4, 3});
  CHECK_THROWS_AS(permute_sequence(s1s2, std::vector<int>{4, 3}), precondition_error);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<int> a(static_cast<std::size_t>(n));
    std::vector<int> b(static_cast<std::size_t>(n));
    std::vector<int> seq(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(k)] = k + 1;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    for (int& x : seq) x = 1 + static_cast<int>(rng() % 9);
    const Permutation sa(a);
    const Permutation sb(b);
    CHECK(permute_sequence(sa * sb, seq) == permute_sequence(sa, permute_sequence(sb, seq)));
  }
}

TEST_CASE("reduced words") {
  CHECK(reduced_word(Permutation::identity(4)).empty());
  CHECK(reduced_word(Permutation::simple(1, 3)) == std::vector<int>{1});
  const auto w0 = reduced_word(Permutation::longest(3));
  CHECK(w0.size() == 3);
  CHECK(Permutation::from_reduced_word(w0, 3) == Permutation::longest(3));
  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& p : all_perms(n)) {
      const auto word = reduced_word(p);
      CHECK(static_cast<int>(word.size()) == p.length());
      CHECK(Permutation::from_reduced_word(word, n) == p);
    }
  }
}

TEST_CASE("permutation_to picks the shortest solution") {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& nu : partitions_of(n)) {
      for (const Composition& alpha : rearrangements(nu)) {
        const Permutation sigma = permutation_to(nu, alpha);
        CHECK(permute_sequence(sigma, nu.parts()) == alpha.parts());
        for (const Permutation& p : all_perms(nu.length())) {
          if (permute_sequence(p, nu.parts()) == alpha.parts()) CHECK(sigma.length() <= p.length());
        }
      }
    }
  }
  CHECK_THROWS_AS(permutation_to({2, 1}, {3}), precondition_error);
}

TEST_CASE("covers in the composition poset") {
  CHECK(lc_covers({2, 1, 3, 2}) ==
        std::vector<Composition>{{2, 1, 3, 2, 1}, {2, 1, 3, 3}, {2, 1, 4, 2}, {2, 2, 3, 2}});
  CHECK(lc_covers({}) == std::vector<Composition>{{1}});
  CHECK(lc_leq({1, 2}, {3, 5, 2}));
  CHECK(lc_leq({}, {3, 1}));
  CHECK_FALSE(lc_leq({2, 1}, {1, 2}));
}

TEST_CASE("lc_leq agrees with reachability along covers") {
  // Oracle: breadth-first search upwards from every beta.
  std::vector<Composition> all;
  for (int n = 0; n <= 7; ++n) {
    for (const auto& c : compositions_of(n)) all.push_back(c);
  }
  for (const Composition& beta : all) {
    std::set<Composition> seen{beta};
    std::queue<Composition> todo;
    todo.push(beta);
    while (!todo.empty()) {
      const Composition c = todo.front();
      todo.pop();
      if (c.size() >= 7) continue;
      for (const auto& d : lc_covers(c)) {
        if (seen.insert(d).second) todo.push(d);
      }
    }
    for (const Composition& alpha : all) CHECK(lc_leq(beta, alpha) == (seen.count(alpha) > 0));
  }
}

TEST_CASE("lc_above lists saturated-chain endpoints") {
  CHECK(lc_above({}, 2) == std::vector<Composition>{{1, 1}, {2}});
  CHECK(lc_above({1}, 0) == std::vector<Composition>{{1}});
  for (const Composition& beta : compositions_of(3)) {
    for (const Composition& gamma : lc_above(beta, 2)) CHECK(lc_leq(beta, gamma));
  }
}

TEST_CASE("parsing") {
  CHECK(parse_composition("2,4,1") == Composition{2, 4, 1});
  CHECK(parse_composition("") == Composition{});
  CHECK(parse_composition(" 2, 4 ") == Composition{2, 4});
  CHECK(parse_partition("3,1") == Partition{3, 1});
  CHECK_THROWS_AS(parse_composition("2,,1"), parse_error);
  CHECK_THROWS_AS(parse_composition("2,x"), parse_error);
  CHECK_THROWS_AS(parse_composition("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1,3"), std::invalid_argument);
  CHECK(parse_permutation("2,3,1") == Permutation({2, 3, 1}));
  CHECK_THROWS_AS(parse_permutation("1,1"), std::invalid_argument);
}
