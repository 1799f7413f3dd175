#pragma once

// Classical and noncommutative Littlewood-Richardson coefficients.

#include <map>
#include <string>
#include <string_view>

#include "nclr/core.hpp"
#include "nclr/crystal.hpp"

namespace nclr {

// c^lambda_{nu mu} = |LRT(lambda, mu, nu)|.
long long classical_lr(const Partition& lambda, const Partition& mu, const Partition& nu);

// Three independent ways to count C^gamma_{alpha beta}:
//   crystal  LRT^sigma(sort gamma, sort beta, sort alpha) binned by the shape
//            of rho_beta^{-1}(T), for the minimal sigma with sigma . nu = alpha;
//   sct      standard composition tableaux of shape gamma // beta that
//            rectify to tau_alpha;
//   boxadd   words w in LRFrank(sort gamma, sort beta, (w0 sigma w0) . nu^r)
//            with t_w(beta) = gamma.
enum class Method { crystal, sct, boxadd };

std::string_view to_string(Method m);
// Throws parse_error on anything but "crystal", "sct" or "boxadd".
Method parse_method(std::string_view text);

// 0 when beta is not below gamma in L_c. Throws precondition_error unless
// |alpha| + |beta| = |gamma|.
long long nc_lr(const Composition& alpha, const Composition& beta, const Composition& gamma,
                Method method = Method::sct);

// Crystal method with an explicit sigma (any sigma with sigma . sort(alpha) =
// alpha) and reduced word for it.
long long nc_lr_crystal(const Composition& alpha, const Composition& beta,
                        const Composition& gamma, std::span<const int> sigma_word);

struct CoefficientTable {
  Composition alpha;
  Composition beta;
  std::map<Composition, long long> entries;  // positive coefficients only

  long long at(const Composition& gamma) const;
  long long total() const;
  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

// Crystal-method table for an explicit word of generators whose product
// sigma satisfies sigma . sort(alpha) = alpha.
CoefficientTable expand_product_crystal(const Composition& alpha, const Composition& beta,
                                        std::span<const int> sigma_word);

// s_alpha s_beta = sum_gamma C^gamma_{alpha beta} s_gamma.
CoefficientTable expand_product(const Composition& alpha, const Composition& beta,
                                Method method = Method::sct);

// c^lambda_{nu mu} = sum over gamma with sort(gamma) = lambda of
// C^gamma_{alpha beta}. Throws precondition_error unless sort(alpha) = nu
// and sort(beta) = mu.
bool refinement_check(const Partition& nu, const Partition& mu, const Partition& lambda,
                      const Composition& alpha, const Composition& beta);

}  // namespace nclr
