#include "nclr/verify.hpp"

#include <algorithm>
#include <map>
#include <omp.h>
#include <random>

#include "nclr/composition_tableau.hpp"
#include "nclr/crystal.hpp"
#include "nclr/frank.hpp"
#include "nclr/lr.hpp"
#include "nclr/young_tableau.hpp"

namespace nclr {

std::string_view to_string(Execution e) {
  return e == Execution::serial ? "serial" : "parallel";
}

int parallel_threads() { return omp_get_max_threads(); }

namespace {

constexpr std::size_t kMaxSamples = 5;

struct Partial {
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> samples;

  // Records one check; `what` is evaluated only on failure.
  template <class Describe>
  void expect(bool ok, Describe&& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (samples.size() < kMaxSamples) samples.push_back(what());
  }
};

void merge(SuiteResult& into, const Partial& p) {
  into.checks += p.checks;
  into.failures += p.failures;
  for (const auto& s : p.samples) {
    if (into.samples.size() < kMaxSamples) into.samples.push_back(s);
  }
}

// Runs check(item, partial) for every item and merges the partial results
// in item order, so serial and parallel runs report identically.
template <class Item, class Check>
void sweep(SuiteResult& result, const std::vector<Item>& items, Execution exec, Check check) {
  std::vector<Partial> parts(items.size());
  for_each_index(items.size(), exec, [&](std::size_t k) {
    try {
      check(items[k], parts[k]);
    } catch (const std::exception& e) {
      parts[k].expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
  });
  for (const auto& p : parts) merge(result, p);
}

std::string show(const Composition& c) { return "(" + c.to_string() + ")"; }
std::string show(const Partition& p) { return "(" + p.to_string() + ")"; }

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> one_line(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) one_line[static_cast<std::size_t>(k)] = k + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(one_line);
  } while (std::next_permutation(one_line.begin(), one_line.end()));
  return out;
}

struct Triple {
  Partition lambda;
  Partition mu;
  Partition nu;
};

// Triples with |lambda| <= max_size and c^lambda_{nu mu} > 0.
std::vector<Triple> lr_triples(int max_size) {
  std::vector<Triple> out;
  for (const auto& [lambda, mu] : skew_shapes(max_size, max_size)) {
    for (const Partition& nu : partitions_of(lambda.size() - mu.size())) {
      if (classical_lr(lambda, mu, nu) > 0) out.push_back({lambda, mu, nu});
    }
  }
  return out;
}

// A reduced word of sigma built by peeling random right descents.
std::vector<int> random_reduced_word(Permutation sigma, std::mt19937_64& rng) {
  std::vector<int> word;
  const int n = sigma.degree();
  while (!sigma.is_identity()) {
    std::vector<int> descents;
    for (int i = 1; i < n; ++i) {
      if (sigma(i) > sigma(i + 1)) descents.push_back(i);
    }
    std::uniform_int_distribution<std::size_t> pick(0, descents.size() - 1);
    const int i = descents[pick(rng)];
    sigma = sigma * Permutation::simple(i, n);
    word.push_back(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<int> padded(std::vector<int> v, std::size_t n) {
  v.resize(std::max(v.size(), n), 0);
  return v;
}

}  // namespace

std::vector<std::pair<Partition, Partition>> skew_shapes(int max_outer, int max_skew) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int n = 0; n <= max_outer; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (const Partition& mu : partitions_inside(lambda)) {
        if (lambda.size() - mu.size() <= max_skew) out.emplace_back(lambda, mu);
      }
    }
  }
  return out;
}

std::vector<std::pair<Composition, Composition>> composition_pairs(int max_size) {
  std::vector<std::pair<Composition, Composition>> out;
  for (int n = 0; n <= max_size; ++n) {
    for (int a = 0; a <= n; ++a) {
      for (const Composition& alpha : compositions_of(a)) {
        for (const Composition& beta : compositions_of(n - a)) out.emplace_back(alpha, beta);
      }
    }
  }
  return out;
}

SuiteResult check_three_methods(int max_size, Execution exec) {
  SuiteResult result{"three-method agreement", 0, 0, {}};
  sweep(result, composition_pairs(max_size), exec, [](const auto& pair, Partial& p) {
    const auto& [alpha, beta] = pair;
    const CoefficientTable sct = expand_product(alpha, beta, Method::sct);
    const CoefficientTable crystal = expand_product(alpha, beta, Method::crystal);
    const CoefficientTable boxadd = expand_product(alpha, beta, Method::boxadd);
    for (const Composition& gamma : lc_above(beta, alpha.size())) {
      const long long a = sct.at(gamma);
      const long long b = crystal.at(gamma);
      const long long c = boxadd.at(gamma);
      p.expect(a == b && b == c, [&] {
        return "C^" + show(gamma) + "_" + show(alpha) + show(beta) + ": sct " +
               std::to_string(a) + ", crystal " + std::to_string(b) + ", boxadd " +
               std::to_string(c);
      });
    }
    // Nothing may land outside the interval above beta.
    const auto above = lc_above(beta, alpha.size());
    for (const CoefficientTable* t : {&sct, &crystal, &boxadd}) {
      for (const auto& [gamma, c] : t->entries) {
        if (!std::binary_search(above.begin(), above.end(), gamma)) {
          p.expect(false, [&] { return show(gamma) + " is not above " + show(beta); });
        }
      }
    }
  });
  return result;
}

SuiteResult check_refinement(int max_size, Execution exec) {
  SuiteResult result{"refinement identity", 0, 0, {}};
  sweep(result, composition_pairs(max_size), exec, [](const auto& pair, Partial& p) {
    const auto& [alpha, beta] = pair;
    const Partition nu = sort_composition(alpha);
    const Partition mu = sort_composition(beta);
    std::map<Partition, long long> sums;
    for (const auto& [gamma, c] : expand_product(alpha, beta).entries) {
      sums[sort_composition(gamma)] += c;
    }
    for (const Partition& lambda : partitions_of(nu.size() + mu.size())) {
      if (!contains(lambda, mu)) {
        p.expect(sums[lambda] == 0, [&] { return show(lambda) + " does not contain " + show(mu); });
        continue;
      }
      const long long c = classical_lr(lambda, mu, nu);
      p.expect(c == sums[lambda], [&] {
        return "c^" + show(lambda) + "_" + show(nu) + show(mu) + " = " + std::to_string(c) +
               " but the sum over alpha = " + show(alpha) + ", beta = " + show(beta) + " is " +
               std::to_string(sums[lambda]);
      });
    }
  });
  return result;
}

SuiteResult check_sigma_independence(int max_size, std::uint64_t seed, Execution exec) {
  SuiteResult result{"sigma independence", 0, 0, {}};
  const auto pairs = composition_pairs(max_size);
  std::vector<std::size_t> items(pairs.size());
  for (std::size_t k = 0; k < items.size(); ++k) items[k] = k;
  sweep(result, items, exec, [&](std::size_t k, Partial& p) {
    const auto& [alpha, beta] = pairs[k];
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k)};
    std::mt19937_64 rng(seq);
    const Partition nu = sort_composition(alpha);
    const CoefficientTable reference = expand_product(alpha, beta, Method::crystal);
    for (const Permutation& sigma : all_permutations(nu.length())) {
      if (permute_sequence(sigma, nu.parts()) != alpha.parts()) continue;
      const auto word = random_reduced_word(sigma, rng);
      p.expect(expand_product_crystal(alpha, beta, word) == reference, [&] {
        return "crystal table for " + show(alpha) + show(beta) + " changes with sigma = [" +
               join(sigma.one_line()) + "], word " + join(word);
      });
    }
  });
  return result;
}

SuiteResult check_crystal_coxeter(int max_outer, int max_skew, int alphabet, Execution exec) {
  SuiteResult result{"crystal Coxeter relations", 0, 0, {}};
  sweep(result, skew_shapes(max_outer, max_skew), exec, [&](const auto& shape, Partial& p) {
    const auto& [lambda, mu] = shape;
    for (const SkewTableau& t : all_tableaux(lambda, mu, alphabet)) {
      auto describe = [&](const std::string& rel) {
        return rel + " fails on " + show(lambda) + "/" + show(mu) + " with crw [" +
               join(column_reading_word(t)) + "]";
      };
      const auto cont = padded(t.content(), static_cast<std::size_t>(alphabet));
      std::vector<SkewTableau> s(static_cast<std::size_t>(alphabet));
      for (int i = 1; i < alphabet; ++i) {
        s[static_cast<std::size_t>(i)] = crystal_reflect(i, t);
        const SkewTableau& u = s[static_cast<std::size_t>(i)];
        p.expect(crystal_reflect(i, u) == t, [&] { return describe("s_" + std::to_string(i) + "^2"); });
        p.expect(padded(u.content(), cont.size()) ==
                     permute_sequence(Permutation::simple(i, alphabet), cont),
                 [&] { return describe("content of s_" + std::to_string(i)); });
      }
      for (int i = 1; i < alphabet; ++i) {
        for (int j = i + 2; j < alphabet; ++j) {
          p.expect(crystal_reflect(i, s[static_cast<std::size_t>(j)]) ==
                       crystal_reflect(j, s[static_cast<std::size_t>(i)]),
                   [&] { return describe("s_" + std::to_string(i) + " s_" + std::to_string(j)); });
        }
        if (i + 1 < alphabet) {
          const SkewTableau lhs = crystal_reflect(i, crystal_reflect(i + 1, s[static_cast<std::size_t>(i)]));
          const SkewTableau rhs =
              crystal_reflect(i + 1, crystal_reflect(i, s[static_cast<std::size_t>(i + 1)]));
          p.expect(lhs == rhs, [&] { return describe("braid at " + std::to_string(i)); });
        }
      }
    }
  });
  return result;
}

SuiteResult check_evacuation_lemma(int max_size, Execution exec) {
  SuiteResult result{"rect(stan T) = evac(Q(cgw T))^t", 0, 0, {}};
  sweep(result, skew_shapes(max_size, max_size), exec, [](const auto& shape, Partial& p) {
    const auto& [lambda, mu] = shape;
    auto check = [&](const SkewTableau& t) {
      const SkewTableau lhs = jdt_rectify(standardize_tableau(t));
      const SkewTableau rhs = transpose_tableau(evacuation(rs_insert(column_growth_word(t)).q));
      p.expect(lhs == rhs, [&] {
        return "fails on " + show(lambda) + "/" + show(mu) + " with crw [" +
               join(column_reading_word(t)) + "]";
      });
    };
    for (const SkewTableau& t : standard_tableaux(lambda, mu)) check(t);
    if (lambda.size() - mu.size() <= 6) {
      for (const SkewTableau& t : all_tableaux(lambda, mu, 3)) {
        if (!t.is_standard()) check(t);
      }
    }
  });
  return result;
}

SuiteResult check_rho(int max_inner, int max_skew, int alphabet, Execution exec) {
  SuiteResult result{"rho round trips", 0, 0, {}};
  std::vector<std::pair<Partition, Partition>> shapes;
  for (int m = 0; m <= max_inner; ++m) {
    for (const Partition& mu : partitions_of(m)) {
      for (int s = 0; s <= max_skew; ++s) {
        for (const Partition& lambda : partitions_of(m + s)) {
          if (contains(lambda, mu)) shapes.emplace_back(mu, lambda);
        }
      }
    }
  }
  // Young side: rho_beta^{-1} then rho is the identity, and crw and
  // rectification do not depend on beta within a sort class.
  sweep(result, shapes, exec, [&](const auto& shape, Partial& p) {
    const auto& [mu, lambda] = shape;
    const auto betas = rearrangements(mu);
    for (const SkewTableau& t : all_tableaux(lambda, mu, alphabet)) {
      auto describe = [&](const std::string& what, const Composition& beta) {
        return what + " for beta = " + show(beta) + " on crw [" + join(column_reading_word(t)) +
               "] of " + show(lambda) + "/" + show(mu);
      };
      std::vector<CompositionTableau> images;
      for (const Composition& beta : betas) {
        images.push_back(rho_inverse(t, beta));
        p.expect(rho(images.back()) == t, [&] { return describe("rho(rho^{-1}(T)) != T", beta); });
      }
      for (std::size_t k = 1; k < images.size(); ++k) {
        p.expect(column_reading_word(images[k]) == column_reading_word(images[0]),
                 [&] { return describe("crw differs", betas[k]); });
        p.expect(rectify_ct(images[k]) == rectify_ct(images[0]),
                 [&] { return describe("rectification differs", betas[k]); });
      }
    }
  });
  // Composition side: rho then rho_beta^{-1} is the identity, and the two
  // sides have the same number of fillings.
  std::vector<std::pair<Composition, int>> inner_sizes;
  for (int m = 0; m <= max_inner; ++m) {
    for (const Composition& beta : compositions_of(m)) {
      for (int s = 0; s <= max_skew; ++s) inner_sizes.emplace_back(beta, s);
    }
  }
  sweep(result, inner_sizes, exec, [&](const auto& item, Partial& p) {
    const auto& [beta, s] = item;
    const Partition mu = sort_composition(beta);
    long long composition_side = 0;
    for (const Composition& gamma : lc_above(beta, s)) {
      for (const CompositionTableau& tau : enumerate_ct(gamma, beta, alphabet)) {
        ++composition_side;
        p.expect(rho_inverse(rho(tau), beta) == tau, [&] {
          return "rho^{-1}(rho(tau)) != tau for " + show(gamma) + "//" + show(beta) + " crw [" +
                 join(column_reading_word(tau)) + "]";
        });
      }
    }
    long long young_side = 0;
    for (const Partition& lambda : partitions_of(mu.size() + s)) {
      if (contains(lambda, mu)) young_side += static_cast<long long>(all_tableaux(lambda, mu, alphabet).size());
    }
    p.expect(composition_side == young_side, [&] {
      return "beta = " + show(beta) + ", size " + std::to_string(s) + ": " +
             std::to_string(composition_side) + " composition tableaux vs " +
             std::to_string(young_side) + " Young tableaux";
    });
  });
  return result;
}

SuiteResult check_key_proposition(int max_size, Execution exec) {
  SuiteResult result{"rect(stan T) = rho(tau_{sigma.nu})", 0, 0, {}};
  sweep(result, lr_triples(max_size), exec, [](const Triple& tr, Partial& p) {
    if (tr.nu.empty()) return;
    const LrTriple t{tr.lambda, tr.mu, tr.nu};
    const std::size_t count = enumerate_lrt(t).size();
    for (const Permutation& sigma : all_permutations(tr.nu.length())) {
      const Composition alpha(permute_sequence(sigma, tr.nu.parts()));
      const SkewTableau target = rho(canonical_ct(alpha));
      const auto images = lrt_sigma(t, sigma);
      auto describe = [&](const std::string& what) {
        return what + " for " + show(tr.lambda) + "/" + show(tr.mu) + ", nu = " + show(tr.nu) +
               ", sigma = [" + join(sigma.one_line()) + "]";
      };
      p.expect(images.size() == count, [&] { return describe("|LRT^sigma| != |LRT|"); });
      p.expect(std::adjacent_find(images.begin(), images.end()) == images.end(),
               [&] { return describe("repeated tableau in LRT^sigma"); });
      for (const SkewTableau& u : images) {
        p.expect(jdt_rectify(standardize_tableau(u)) == target,
                 [&] { return describe("rect(stan T) != rho(tau_alpha)"); });
      }
    }
  });
  return result;
}

SuiteResult check_intertwining(int max_size, Execution exec) {
  SuiteResult result{"s_i(phi(w)) = phi(s_{l-i}(w))", 0, 0, {}};
  sweep(result, skew_shapes(max_size, max_size), exec, [](const auto& shape, Partial& p) {
    const auto& [lambda, mu] = shape;
    const int n = lambda.size() - mu.size();
    if (n == 0) return;
    for (const Composition& alpha : compositions_of(n)) {
      const int l = alpha.length();
      for (const Word& w : enumerate_lr_frank(lambda, mu, alpha)) {
        auto describe = [&](const std::string& what) {
          return what + " for w = " + format_frank(w) + " in " + show(lambda) + "/" + show(mu);
        };
        const SkewTableau t = phi(w, lambda, mu);
        p.expect(column_growth_word(t) == w, [&] { return describe("cgw(phi(w)) != w"); });
        p.expect(t.content() == reverse(alpha).parts(), [&] { return describe("content"); });
        for (int i = 1; i < l; ++i) {
          p.expect(crystal_reflect(i, t) == phi(frank_si(l - i, w), lambda, mu),
                   [&] { return describe("i = " + std::to_string(i)); });
        }
      }
    }
  });
  return result;
}

SuiteResult check_frank_proposition(int max_size, Execution exec) {
  SuiteResult result{"LRT^sigma = phi(LRFrank)", 0, 0, {}};
  sweep(result, lr_triples(max_size), exec, [](const Triple& tr, Partial& p) {
    const LrTriple t{tr.lambda, tr.mu, tr.nu};
    const int l = tr.nu.length();
    const Permutation w0 = Permutation::longest(l);
    const auto nu_r = reverse(tr.nu.as_composition()).parts();
    for (const Permutation& sigma : all_permutations(l)) {
      const Composition content(permute_sequence(w0 * sigma * w0, nu_r));
      std::vector<SkewTableau> images;
      for (const Word& w : enumerate_lr_frank(tr.lambda, tr.mu, content)) {
        images.push_back(phi(w, tr.lambda, tr.mu));
      }
      std::sort(images.begin(), images.end());
      p.expect(images == lrt_sigma(t, sigma), [&] {
        return "mismatch for " + show(tr.lambda) + "/" + show(tr.mu) + ", nu = " + show(tr.nu) +
               ", sigma = [" + join(sigma.one_line()) + "]";
      });
    }
  });
  return result;
}

SuiteResult check_iota(int alphabet, int max_column, Execution exec) {
  SuiteResult result{"iota", 0, 0, {}};
  std::vector<Word> columns;
  for (unsigned mask = 1; mask < (1u << alphabet); ++mask) {
    Word col;
    for (int x = alphabet; x >= 1; --x) {
      if (mask & (1u << (x - 1))) col.push_back(x);
    }
    if (static_cast<int>(col.size()) <= max_column) columns.push_back(std::move(col));
  }
  std::sort(columns.begin(), columns.end());
  std::vector<Word> words;
  for (const Word& u : columns) {
    for (const Word& v : columns) {
      if (u.back() > v.front()) continue;
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      if (is_frank(w)) words.push_back(std::move(w));
    }
  }
  sweep(result, words, exec, [](const Word& w, Partial& p) {
    const Word x = iota(w);
    auto describe = [&](const std::string& what) { return what + " for " + format_frank(w); };
    p.expect(x == iota_reference(w), [&] { return describe("iota differs from its reference"); });
    p.expect(iota(x) == w, [&] { return describe("iota is not an involution"); });
    p.expect(insertion_tableau(x) == insertion_tableau(w), [&] { return describe("Knuth class"); });
    p.expect(column_form(x) == reverse(column_form(w)), [&] { return describe("column form"); });
  });
  return result;
}

SuiteResult check_frank_action(int max_size, int alphabet, Execution exec) {
  SuiteResult result{"frank word action", 0, 0, {}};
  std::vector<Word> words;
  for (int n = 1; n <= max_size; ++n) {
    Word w(static_cast<std::size_t>(n), 1);
    while (true) {
      if (is_frank(w)) words.push_back(w);
      int k = n - 1;
      while (k >= 0 && w[static_cast<std::size_t>(k)] == alphabet) w[static_cast<std::size_t>(k--)] = 1;
      if (k < 0) break;
      ++w[static_cast<std::size_t>(k)];
    }
  }
  sweep(result, words, exec, [](const Word& w, Partial& p) {
    const int m = static_cast<int>(column_factorization(w).size());
    const Partition shape = sort_composition(column_form(w));
    const SkewTableau pw = insertion_tableau(w);
    auto describe = [&](const std::string& what) { return what + " for " + format_frank(w); };
    std::vector<Word> s(static_cast<std::size_t>(m));
    for (int i = 1; i < m; ++i) {
      const Word v = frank_si(i, w);
      s[static_cast<std::size_t>(i)] = v;
      p.expect(is_frank(v) && sort_composition(column_form(v)) == shape,
               [&] { return describe("s_" + std::to_string(i) + " leaves F_lambda"); });
      p.expect(insertion_tableau(v) == pw, [&] { return describe("Knuth class"); });
      p.expect(frank_si(i, v) == w, [&] { return describe("involution"); });
    }
    for (int i = 1; i < m; ++i) {
      for (int j = i + 2; j < m; ++j) {
        p.expect(frank_si(i, s[static_cast<std::size_t>(j)]) == frank_si(j, s[static_cast<std::size_t>(i)]),
                 [&] { return describe("commutation"); });
      }
      if (i + 1 < m) {
        p.expect(frank_si(i, frank_si(i + 1, s[static_cast<std::size_t>(i)])) ==
                     frank_si(i + 1, frank_si(i, s[static_cast<std::size_t>(i + 1)])),
                 [&] { return describe("braid"); });
      }
    }
  });
  return result;
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& o) {
  const int n = o.max_size;
  return {
      check_three_methods(n, o.exec),
      check_refinement(n, o.exec),
      check_sigma_independence(std::min(n, 6), o.seed, o.exec),
      check_crystal_coxeter(n, n, 4, o.exec),
      check_evacuation_lemma(n, o.exec),
      check_rho(std::min(n, 4), std::min(n, 5), 3, o.exec),
      check_key_proposition(n, o.exec),
      check_intertwining(n, o.exec),
      check_frank_proposition(n, o.exec),
      check_iota(5, 4, o.exec),
      check_frank_action(std::min(n, 6), 5, o.exec),
  };
}

}  // namespace nclr
