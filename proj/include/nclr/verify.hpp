#pragma once

// Exhaustive property sweeps. Each suite enumerates its inputs up to a size
// bound, checks them independently, and reports how many checks ran and
// which failed. Every suite has a serial reference path and an OpenMP path
// that must agree.

#include <cstdint>
#include <string>
#include <vector>

#include "nclr/core.hpp"
#include "nclr/parallel.hpp"

namespace nclr {

struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> samples;  // first few failure descriptions

  bool passed() const { return failures == 0 && checks > 0; }
  friend bool operator==(const SuiteResult&, const SuiteResult&) = default;
};

// Pairs (lambda, mu) with mu inside lambda, |lambda| <= max_outer and
// |lambda/mu| <= max_skew, in lexicographic order.
std::vector<std::pair<Partition, Partition>> skew_shapes(int max_outer, int max_skew);
// Pairs (alpha, beta) with |alpha| + |beta| <= max_size.
std::vector<std::pair<Composition, Composition>> composition_pairs(int max_size);

// crystal, sct and boxadd agree on C^gamma_{alpha beta} for |gamma| <= max_size.
SuiteResult check_three_methods(int max_size, Execution exec);
// c^lambda_{nu mu} = sum_{sort gamma = lambda} C^gamma_{alpha beta} for every
// rearrangement alpha of nu and beta of mu, |lambda| <= max_size.
SuiteResult check_refinement(int max_size, Execution exec);
// The crystal count does not depend on which sigma with sigma . nu = alpha
// is used, nor on the reduced word chosen for it (random, from `seed`).
SuiteResult check_sigma_independence(int max_size, std::uint64_t seed, Execution exec);
// Involution, commutation and braid relations of the crystal operators on
// all tableaux of shape lambda/mu, |lambda/mu| <= max_skew,
// |lambda| <= max_outer, entries in [alphabet].
SuiteResult check_crystal_coxeter(int max_outer, int max_skew, int alphabet, Execution exec);
// rect(stan T) = evac(Q(cgw T))^t for standard T of shape lambda/mu,
// |lambda| <= max_size.
SuiteResult check_evacuation_lemma(int max_size, Execution exec);
// rho_beta(rho_beta^{-1}(T)) = T, rho_beta^{-1}(rho_beta(tau)) = tau, and
// crw / rectification independent of beta within a sort class; |beta| <=
// max_inner, fillings of size <= max_skew with entries in [alphabet].
SuiteResult check_rho(int max_inner, int max_skew, int alphabet, Execution exec);
// rect(stan T) = rho(tau_{sigma . nu}) for T in LRT^sigma(lambda, mu, nu),
// and |LRT^sigma| = |LRT|, all sigma, |lambda| <= max_size.
SuiteResult check_key_proposition(int max_size, Execution exec);
// s_i(phi(w)) = phi(s_{l(alpha)-i}(w)) and cgw(phi(w)) = w for all
// compatible frank words, |lambda| <= max_size.
SuiteResult check_intertwining(int max_size, Execution exec);
// LRT^sigma(lambda, mu, nu) = phi(LRFrank(lambda, mu, (w0 sigma w0) . nu^r)).
SuiteResult check_frank_proposition(int max_size, Execution exec);
// iota against its reference, involutivity, Knuth class and swapped column
// form for two-column frank words over [alphabet] with columns <= max_column.
SuiteResult check_iota(int alphabet, int max_column, Execution exec);
// Coxeter relations, frankness and Knuth class of s_i on frank words of
// length <= max_size over [alphabet].
SuiteResult check_frank_action(int max_size, int alphabet, Execution exec);

struct VerifyOptions {
  int max_size = 7;
  std::uint64_t seed = 1;
  Execution exec = Execution::parallel;
};

// Runs every suite at scales derived from max_size.
std::vector<SuiteResult> run_all_suites(const VerifyOptions& options);

}  // namespace nclr
