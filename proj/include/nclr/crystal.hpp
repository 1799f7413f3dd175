#pragma once

// The crystal operators s_i on skew Young tableaux and the symmetric
// group action they generate; LR tableaux and their images LRT^sigma.

#include <vector>

#include "nclr/core.hpp"
#include "nclr/young_tableau.hpp"

namespace nclr {

struct LrTriple {
  Partition lambda;
  Partition mu;
  Partition nu;
};

// Throws precondition_error unless mu is inside lambda and
// |nu| = |lambda| - |mu|.
void validate(const LrTriple& t);

// s_i on T. Letters i+1 and i of crw(T) are matched like brackets ("(" for
// i+1, ")" for i); the unmatched subword i^a (i+1)^b becomes i^b (i+1)^a.
SkewTableau crystal_reflect(int i, const SkewTableau& t);

// s_{i_1}(...(s_{i_k}(T))) for the canonical reduced word i_1 ... i_k of sigma.
SkewTableau crystal_apply(const Permutation& sigma, const SkewTableau& t);
// Same action along an explicit word of generators; rightmost acts first.
SkewTableau crystal_apply_word(std::span<const int> generators, const SkewTableau& t);

// LR tableaux of shape lambda / mu and content nu, in canonical order.
std::vector<SkewTableau> enumerate_lrt(const LrTriple& t);

// { sigma(T) : T in LRT(lambda, mu, nu) } in canonical order. sigma must lie
// in S_{l(nu)}.
std::vector<SkewTableau> lrt_sigma(const LrTriple& t, const Permutation& sigma);

}  // namespace nclr
