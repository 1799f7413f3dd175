// nclr: command-line front end.
//
// Exit codes: 0 ok, 2 parse error, 3 precondition violated, 4 internal
// disagreement or failed verification.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "nclr/composition_tableau.hpp"
#include "nclr/crystal.hpp"
#include "nclr/error.hpp"
#include "nclr/frank.hpp"
#include "nclr/io.hpp"
#include "nclr/lr.hpp"
#include "nclr/verify.hpp"

using namespace nclr;

namespace {

enum class Format { pretty, json, tsv };

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitDisagreement = 4;
constexpr int kVerifyCeiling = 8;

void print_json(const json& j) { std::cout << j.dump() << '\n'; }

// Tableau on one line: rows bottom-up separated by " / ".
std::string one_line(std::string text) {
  std::string out;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] != '\n') {
      out += text[k];
    } else if (k + 1 < text.size()) {
      out += " / ";
    }
  }
  return out;
}

template <class T>
void print_tableaux(const std::vector<T>& ts, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& t : ts) arr.push_back(to_json(t));
    print_json(arr);
    return;
  }
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (format == Format::tsv) {
      std::cout << k + 1 << '\t' << one_line(to_text(ts[k])) << '\n';
    } else {
      if (k > 0) std::cout << '\n';
      std::cout << to_text(ts[k]);
    }
  }
}

struct Inputs {
  std::string lambda, mu, nu, alpha, beta, gamma, colform, sigma;
};

int cmd_classical(const Inputs& in, bool list, Format format) {
  const LrTriple t{parse_partition(in.lambda), parse_partition(in.mu), parse_partition(in.nu)};
  const auto tableaux = enumerate_lrt(t);
  if (format == Format::json) {
    json j{{"lambda", t.lambda.parts()},
           {"mu", t.mu.parts()},
           {"nu", t.nu.parts()},
           {"coefficient", tableaux.size()}};
    if (list) {
      j["tableaux"] = json::array();
      for (const auto& x : tableaux) j["tableaux"].push_back(to_json(x));
    }
    print_json(j);
    return 0;
  }
  std::cout << tableaux.size() << '\n';
  if (list) {
    if (format == Format::pretty && !tableaux.empty()) std::cout << '\n';
    print_tableaux(tableaux, format);
  }
  return 0;
}

int cmd_nc(const Inputs& in, const std::string& method, Format format) {
  const Composition alpha = parse_composition(in.alpha);
  const Composition beta = parse_composition(in.beta);
  const Composition gamma = parse_composition(in.gamma);
  std::vector<Method> methods;
  if (method == "all") {
    methods = {Method::crystal, Method::sct, Method::boxadd};
  } else {
    methods = {parse_method(method)};
  }
  std::vector<long long> values;
  for (Method m : methods) values.push_back(nc_lr(alpha, beta, gamma, m));
  bool agree = true;
  for (long long v : values) agree = agree && v == values.front();

  if (format == Format::json) {
    json j{{"alpha", alpha.parts()}, {"beta", beta.parts()}, {"gamma", gamma.parts()}};
    if (methods.size() == 1) {
      j["method"] = to_string(methods.front());
      j["coefficient"] = values.front();
    } else {
      json per = json::object();
      for (std::size_t k = 0; k < methods.size(); ++k) per[std::string(to_string(methods[k]))] = values[k];
      j["coefficients"] = per;
      j["agree"] = agree;
    }
    print_json(j);
  } else if (methods.size() == 1) {
    std::cout << values.front() << '\n';
  } else {
    for (std::size_t k = 0; k < methods.size(); ++k) {
      std::cout << to_string(methods[k]) << (format == Format::tsv ? "\t" : ": ") << values[k]
                << '\n';
    }
  }
  if (!agree) {
    std::cerr << "error: methods disagree\n";
    return kExitDisagreement;
  }
  return 0;
}

int cmd_expand(const Inputs& in, const std::string& method, Format format) {
  const CoefficientTable table =
      expand_product(parse_composition(in.alpha), parse_composition(in.beta), parse_method(method));
  if (format == Format::json) {
    print_json(to_json(table));
    return 0;
  }
  for (const auto& [gamma, c] : table.entries) {
    if (format == Format::tsv) {
      std::cout << gamma.to_string() << '\t' << c << '\n';
    } else {
      std::cout << '(' << gamma.to_string() << "): " << c << '\n';
    }
  }
  return 0;
}

int cmd_enumerate(const std::string& kind, const Inputs& in, Format format) {
  if (kind == "lrt") {
    const LrTriple t{parse_partition(in.lambda), parse_partition(in.mu), parse_partition(in.nu)};
    const auto ts = in.sigma.empty() ? enumerate_lrt(t) : lrt_sigma(t, parse_permutation(in.sigma));
    print_tableaux(ts, format);
    return 0;
  }
  if (kind == "sct") {
    print_tableaux(enumerate_sct(parse_composition(in.gamma), parse_composition(in.beta)), format);
    return 0;
  }
  const auto words = enumerate_lr_frank(parse_partition(in.lambda), parse_partition(in.mu),
                                        parse_composition(in.colform));
  if (format == Format::json) {
    json arr = json::array();
    for (const Word& w : words) arr.push_back(frank_to_json(w));
    print_json(arr);
    return 0;
  }
  for (const Word& w : words) std::cout << format_frank(w) << '\n';
  return 0;
}

int cmd_verify(int max_size, std::uint64_t seed, bool serial, Format format) {
  if (max_size < 1 || max_size > kVerifyCeiling) {
    throw precondition_error("--max-size must lie in [1, " + std::to_string(kVerifyCeiling) + "]");
  }
  if (max_size == kVerifyCeiling) {
    std::cerr << "warning: --max-size " << max_size << " takes minutes\n";
  }
  VerifyOptions options;
  options.max_size = max_size;
  options.seed = seed;
  options.exec = serial ? Execution::serial : Execution::parallel;
  const auto results = run_all_suites(options);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();

  if (format == Format::json) {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"suite", r.name},
                     {"checks", r.checks},
                     {"failures", r.failures},
                     {"samples", r.samples}});
    }
    print_json({{"max_size", max_size}, {"seed", seed}, {"passed", ok}, {"suites", arr}});
  } else {
    for (const auto& r : results) {
      if (format == Format::tsv) {
        std::cout << r.name << '\t' << r.checks << '\t' << r.failures << '\n';
      } else {
        std::cout << (r.passed() ? "ok    " : "FAIL  ") << r.name << ": " << r.checks
                  << " checks, " << r.failures << " failures\n";
        for (const auto& s : r.samples) std::cout << "        " << s << '\n';
      }
    }
    if (format == Format::pretty) std::cout << (ok ? "all suites passed\n" : "some suites failed\n");
  }
  return ok ? 0 : kExitDisagreement;
}

// Comma-separated parts. "--mu=" and "--mu \"\"" both give the empty shape.
CLI::Option* shape_option(CLI::App* app, const std::string& name, std::string& target) {
  return app->add_option(name, target)->expected(0, 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical and noncommutative Littlewood-Richardson coefficients"};
  app.require_subcommand(1);
  app.fallthrough();

  Inputs in;
  std::string format_name = "pretty";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"pretty", "json", "tsv"}))
      ->capture_default_str();

  // Empty partitions and compositions are written as "".
  auto* classical = app.add_subcommand("classical", "Classical LR coefficient c^lambda_{nu mu}");
  bool list = false;
  shape_option(classical, "--lambda", in.lambda)->required();
  shape_option(classical, "--mu", in.mu)->required();
  shape_option(classical, "--nu", in.nu)->required();
  classical->add_flag("--list", list, "Also print the LR tableaux");

  std::string method = "sct";
  auto* nc = app.add_subcommand("nc", "Noncommutative Littlewood-Richardson coefficient C^gamma_{alpha beta}");
  shape_option(nc, "--alpha", in.alpha)->required();
  shape_option(nc, "--beta", in.beta)->required();
  shape_option(nc, "--gamma", in.gamma)->required();
  nc->add_option("--method", method)
      ->check(CLI::IsMember({"crystal", "sct", "boxadd", "all"}))
      ->capture_default_str();

  auto* expand = app.add_subcommand("expand", "Expand s_alpha s_beta in the basis s_gamma");
  shape_option(expand, "--alpha", in.alpha)->required();
  shape_option(expand, "--beta", in.beta)->required();
  expand->add_option("--method", method)
      ->check(CLI::IsMember({"crystal", "sct", "boxadd"}))
      ->capture_default_str();

  std::string kind;
  auto* enumerate = app.add_subcommand("enumerate", "List LR tableaux, frank words or SCTs");
  enumerate->add_option("kind", kind)->required()->check(CLI::IsMember({"lrt", "frank", "sct"}));
  shape_option(enumerate, "--lambda", in.lambda);
  shape_option(enumerate, "--mu", in.mu);
  shape_option(enumerate, "--nu", in.nu);
  enumerate->add_option("--sigma", in.sigma, "One-line permutation applied to LR tableaux");
  shape_option(enumerate, "--colform", in.colform)->description("Column form of the frank words");
  shape_option(enumerate, "--gamma", in.gamma);
  shape_option(enumerate, "--beta", in.beta);

  int max_size = 7;
  std::uint64_t seed = 1;
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--max-size", max_size)->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_flag("--serial", serial, "Use the serial reference path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  const Format format = format_name == "json"  ? Format::json
                        : format_name == "tsv" ? Format::tsv
                                               : Format::pretty;
  try {
    if (*classical) return cmd_classical(in, list, format);
    if (*nc) return cmd_nc(in, method, format);
    if (*expand) return cmd_expand(in, method, format);
    if (*enumerate) return cmd_enumerate(kind, in, format);
    return cmd_verify(max_size, seed, serial, format);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitDisagreement;
  }
}
