#include <doctest.h>

#include "nclr/composition_tableau.hpp"
#include "nclr/error.hpp"
#include "nclr/lr.hpp"

using namespace nclr;

namespace {

const Method kMethods[] = {Method::crystal, Method::sct, Method::boxadd};

}  // namespace

TEST_CASE("classical coefficients") {
  CHECK(classical_lr({7, 6, 4, 3, 2}, {6, 4, 4}, {4, 3, 1}) == 3);
  CHECK(classical_lr({3, 2, 1}, {2, 1}, {2, 1}) == 2);
  for (const Partition& nu : partitions_of(5)) CHECK(classical_lr(nu, {}, nu) == 1);
  CHECK(classical_lr({3, 1}, {}, {2, 2}) == 0);
  CHECK_THROWS_AS(classical_lr({2}, {1}, {2}), precondition_error);
}

TEST_CASE("noncommutative coefficients of the demos") {
  for (Method m : kMethods) {
    CAPTURE(to_string(m));
    CHECK(nc_lr({2, 4, 1}, {1, 2}, {3, 5, 2}, m) == 1);
    CHECK(nc_lr({2, 4, 1}, {1, 2}, {2, 5, 3}, m) == 1);
    CHECK(nc_lr({2, 4, 1}, {2, 1}, {3, 5, 2}, m) == 1);
    CHECK(nc_lr({2, 4, 1}, {2, 1}, {5, 2, 3}, m) == 1);
    CHECK(nc_lr({1}, {1}, {1, 1}, m) == 1);
    CHECK(nc_lr({1}, {1}, {2}, m) == 1);
    CHECK(nc_lr({1}, {2}, {1, 2}, m) == 0);  // (2) is not below (1,2)
    CHECK(nc_lr({}, {2, 1}, {2, 1}, m) == 1);
    CHECK(nc_lr({2, 1}, {}, {2, 1}, m) == 1);
    CHECK(nc_lr({2, 1}, {}, {1, 2}, m) == 0);
    CHECK_THROWS_AS(nc_lr({1}, {1}, {3}, m), precondition_error);
  }
}

TEST_CASE("sct method against a direct count") {
  // C^gamma_{alpha beta} counts SCT(gamma // beta) rectifying to tau_alpha.
  long long direct = 0;
  for (const auto& t : enumerate_sct({3, 5, 2}, {1, 2})) direct += rectify_ct(t) == canonical_ct({2, 4, 1});
  CHECK(nc_lr({2, 4, 1}, {1, 2}, {3, 5, 2}) == direct);
}

TEST_CASE("method names") {
  CHECK(parse_method("boxadd") == Method::boxadd);
  CHECK(to_string(Method::crystal) == "crystal");
  CHECK_THROWS_AS(parse_method("magic"), parse_error);
}

TEST_CASE("product expansion") {
  const CoefficientTable t = expand_product({2, 4, 1}, {1, 2});
  CHECK(t.at({3, 5, 2}) == 1);
  CHECK(t.at({2, 5, 3}) == 1);
  const CoefficientTable unit = expand_product({1}, {1});
  CHECK(unit.entries == std::map<Composition, long long>{{{1, 1}, 1}, {{2}, 1}});
  for (const Composition& alpha : compositions_of(4)) {
    const CoefficientTable right_unit = expand_product(alpha, {});
    CHECK(right_unit.entries == std::map<Composition, long long>{{alpha, 1}});
  }
  CHECK(expand_product({1}, {}).entries == std::map<Composition, long long>{{{1}, 1}});
  for (Method m : kMethods) CHECK(expand_product({2, 1}, {1, 2}, m) == expand_product({2, 1}, {1, 2}));
  for (const auto& [gamma, c] : t.entries) {
    CHECK(c > 0);
    CHECK(lc_leq({1, 2}, gamma));
    CHECK(gamma.size() == 10);
  }
}

TEST_CASE("crystal method with other choices of sigma") {
  // nu = (2,1,1), alpha = (1,2,1): both [2,1,3] and [2,3,1] . nu give alpha.
  const Composition alpha{1, 2, 1};
  const CoefficientTable reference = expand_product(alpha, {2, 1}, Method::crystal);
  for (const auto& one_line : {std::vector<int>{2, 1, 3}, std::vector<int>{2, 3, 1}}) {
    const Permutation sigma(one_line);
    REQUIRE(permute_sequence(sigma, std::vector<int>{2, 1, 1}) == alpha.parts());
    CHECK(expand_product_crystal(alpha, {2, 1}, reduced_word(sigma)) == reference);
  }
  CHECK_THROWS_AS(expand_product_crystal(alpha, {2, 1}, std::vector<int>{2}), precondition_error);
  CHECK(nc_lr_crystal({2, 4, 1}, {1, 2}, {3, 5, 2},
                      reduced_word(permutation_to({4, 2, 1}, {2, 4, 1}))) == 1);
}

TEST_CASE("refinement identity") {
  CHECK(refinement_check({4, 3, 1}, {6, 4, 4}, {7, 6, 4, 3, 2}, {1, 4, 3}, {6, 4, 4}));
  CHECK(refinement_check({2, 1}, {}, {2, 1}, {1, 2}, {}));
  CHECK(refinement_check({1}, {1}, {3}, {1}, {1}));  // wrong size: both sides vanish
  CHECK_THROWS_AS(refinement_check({2, 1}, {}, {2, 1}, {1, 1, 1}, {}), precondition_error);
  for (int n = 0; n <= 5; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (const Partition& mu : partitions_inside(lambda)) {
        for (const Partition& nu : partitions_of(n - mu.size())) {
          for (const Composition& alpha : rearrangements(nu)) {
            for (const Composition& beta : rearrangements(mu)) {
              CHECK(refinement_check(nu, mu, lambda, alpha, beta));
            }
          }
        }
      }
    }
  }
}
