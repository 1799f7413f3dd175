#include "nclr/lr.hpp"

#include "nclr/composition_tableau.hpp"
#include "nclr/error.hpp"
#include "nclr/frank.hpp"

namespace nclr {

namespace {

void require_sizes(const Composition& alpha, const Composition& beta, const Composition& gamma) {
  if (alpha.size() + beta.size() != gamma.size()) {
    throw precondition_error("|alpha| + |beta| = " + std::to_string(alpha.size() + beta.size()) +
                             " but |gamma| = " + std::to_string(gamma.size()));
  }
}

// Outer partitions lambda of size |mu| + n containing mu.
std::vector<Partition> partitions_over(const Partition& mu, int n) {
  std::vector<Partition> out;
  for (const Partition& lambda : partitions_of(mu.size() + n)) {
    if (contains(lambda, mu)) out.push_back(lambda);
  }
  return out;
}

// Adds the crystal-method contributions of LRT^sigma(lambda, sort beta,
// sort alpha) to `table`.
void crystal_bin(const Composition& alpha, const Composition& beta, const Partition& lambda,
                 std::span<const int> sigma_word, std::map<Composition, long long>& table) {
  const LrTriple triple{lambda, sort_composition(beta), sort_composition(alpha)};
  for (const SkewTableau& t : enumerate_lrt(triple)) {
    const SkewTableau image = crystal_apply_word(sigma_word, t);
    ++table[rho_inverse(image, beta).outer()];
  }
}

// Content used for LRFrank in the box-adding method: (w0 sigma w0) . nu^r.
Composition boxadd_content(const Composition& alpha) {
  const Partition nu = sort_composition(alpha);
  const int l = nu.length();
  const Permutation sigma = permutation_to(nu, alpha);
  const Permutation w0 = Permutation::longest(l);
  const auto content = permute_sequence(w0 * sigma * w0, reverse(nu.as_composition()).parts());
  Composition result(content);
  if (result != reverse(alpha)) {
    throw internal_error("(w0 sigma w0) . nu^r differs from alpha^r for alpha = (" +
                         alpha.to_string() + ")");
  }
  return result;
}

void boxadd_bin(const Composition& beta, const Partition& lambda,
                const Composition& content, std::map<Composition, long long>& table) {
  for (const Word& w : enumerate_lr_frank(lambda, sort_composition(beta), content)) {
    Composition gamma;
    try {
      gamma = box_add_word(w, beta);
    } catch (const precondition_error&) {
      throw internal_error("t_w is undefined on (" + beta.to_string() + ") for w = " +
                           format_frank(w));
    }
    ++table[gamma];
  }
}

long long sct_count(const Composition& alpha, const Composition& beta, const Composition& gamma) {
  if (alpha.empty()) return gamma == beta ? 1 : 0;
  const CompositionTableau target = canonical_ct(alpha);
  long long n = 0;
  for (const auto& t : enumerate_sct(gamma, beta)) {
    if (rectify_ct(t) == target) ++n;
  }
  return n;
}

void drop_zeros(std::map<Composition, long long>& m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

long long classical_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return static_cast<long long>(enumerate_lrt({lambda, mu, nu}).size());
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::crystal: return "crystal";
    case Method::sct: return "sct";
    case Method::boxadd: return "boxadd";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "crystal") return Method::crystal;
  if (text == "sct") return Method::sct;
  if (text == "boxadd") return Method::boxadd;
  throw parse_error("unknown method \"" + std::string(text) + "\"");
}

long long nc_lr_crystal(const Composition& alpha, const Composition& beta,
                        const Composition& gamma, std::span<const int> sigma_word) {
  require_sizes(alpha, beta, gamma);
  if (!lc_leq(beta, gamma)) return 0;
  std::map<Composition, long long> table;
  crystal_bin(alpha, beta, sort_composition(gamma), sigma_word, table);
  const auto it = table.find(gamma);
  return it == table.end() ? 0 : it->second;
}

long long nc_lr(const Composition& alpha, const Composition& beta, const Composition& gamma,
                Method method) {
  require_sizes(alpha, beta, gamma);
  if (!lc_leq(beta, gamma)) return 0;
  switch (method) {
    case Method::sct:
      return sct_count(alpha, beta, gamma);
    case Method::crystal: {
      const auto word = reduced_word(permutation_to(sort_composition(alpha), alpha));
      return nc_lr_crystal(alpha, beta, gamma, word);
    }
    case Method::boxadd: {
      std::map<Composition, long long> table;
      boxadd_bin(beta, sort_composition(gamma), boxadd_content(alpha), table);
      const auto it = table.find(gamma);
      return it == table.end() ? 0 : it->second;
    }
  }
  return 0;
}

long long CoefficientTable::at(const Composition& gamma) const {
  const auto it = entries.find(gamma);
  return it == entries.end() ? 0 : it->second;
}

long long CoefficientTable::total() const {
  long long s = 0;
  for (const auto& [gamma, c] : entries) s += c;
  return s;
}

CoefficientTable expand_product_crystal(const Composition& alpha, const Composition& beta,
                                        std::span<const int> sigma_word) {
  const Partition nu = sort_composition(alpha);
  const auto image = permute_sequence(Permutation::from_reduced_word(sigma_word, nu.length()),
                                      nu.parts());
  if (image != alpha.parts()) {
    throw precondition_error("the given permutation does not carry sort(alpha) to (" +
                             alpha.to_string() + ")");
  }
  CoefficientTable table{alpha, beta, {}};
  for (const Partition& lambda : partitions_over(sort_composition(beta), alpha.size())) {
    crystal_bin(alpha, beta, lambda, sigma_word, table.entries);
  }
  drop_zeros(table.entries);
  return table;
}

CoefficientTable expand_product(const Composition& alpha, const Composition& beta, Method method) {
  CoefficientTable table{alpha, beta, {}};
  const int n = alpha.size();
  switch (method) {
    case Method::sct:
      for (const Composition& gamma : lc_above(beta, n)) {
        const long long c = sct_count(alpha, beta, gamma);
        if (c > 0) table.entries[gamma] = c;
      }
      break;
    case Method::crystal:
      return expand_product_crystal(
          alpha, beta, reduced_word(permutation_to(sort_composition(alpha), alpha)));
    case Method::boxadd: {
      const Composition content = boxadd_content(alpha);
      for (const Partition& lambda : partitions_over(sort_composition(beta), n)) {
        boxadd_bin(beta, lambda, content, table.entries);
      }
      break;
    }
  }
  drop_zeros(table.entries);
  return table;
}

bool refinement_check(const Partition& nu, const Partition& mu, const Partition& lambda,
                      const Composition& alpha, const Composition& beta) {
  if (sort_composition(alpha) != nu || sort_composition(beta) != mu) {
    throw precondition_error("alpha, beta must rearrange nu, mu");
  }
  const bool valid = contains(lambda, mu) && lambda.size() == mu.size() + nu.size();
  const long long c = valid ? classical_lr(lambda, mu, nu) : 0;
  const CoefficientTable table = expand_product(alpha, beta);
  long long sum = 0;
  for (const auto& [gamma, c] : table.entries) {
    if (sort_composition(gamma) == lambda) sum += c;
  }
  return sum == c;
}

}  // namespace nclr
