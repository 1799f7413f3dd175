#include "nclr/io.hpp"

#include <sstream>

#include "nclr/error.hpp"
#include "nclr/frank.hpp"

namespace nclr {

namespace {

// Rows of text, bottom row first. Inner cells become 0; `inner` collects the
// number of leading "." per row.
Grid grid_from_text(std::string_view text, std::vector<int>& inner) {
  Grid grid;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::string tok;
    std::vector<int> row;
    int dots = 0;
    while (tokens >> tok) {
      if (tok == ".") {
        if (dots != static_cast<int>(row.size())) throw parse_error("\".\" after an entry");
        ++dots;
        row.push_back(0);
        continue;
      }
      const auto values = parse_int_list(tok);
      if (values.size() != 1) throw parse_error("bad tableau entry \"" + tok + "\"");
      row.push_back(values.front());
    }
    if (row.empty()) continue;
    grid.push_back(std::move(row));
    inner.push_back(dots);
  }
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  return grid;
}

std::vector<int> int_vector(const json& j, std::string_view what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw parse_error(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Grid grid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows")) throw parse_error("tableau JSON needs \"rows\"");
  Grid grid;
  for (const auto& row : j.at("rows")) grid.push_back(int_vector(row, "row"));
  return grid;
}

std::vector<int> inner_from_json(const json& j) {
  return j.contains("inner") ? int_vector(j.at("inner"), "inner") : std::vector<int>{};
}

}  // namespace

std::string to_text(const Grid& grid, const std::vector<int>& inner) {
  std::string out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    const int skip = r < inner.size() ? inner[r] : 0;
    for (std::size_t c = 0; c < grid[r].size(); ++c) {
      if (c > 0) out += ' ';
      out += static_cast<int>(c) < skip ? std::string(".") : std::to_string(grid[r][c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_text(const SkewTableau& t) { return to_text(t.grid(), t.inner().parts()); }
std::string to_text(const CompositionTableau& t) { return to_text(t.grid(), t.inner().parts()); }

SkewTableau skew_tableau_from_text(std::string_view text) {
  std::vector<int> inner;
  Grid grid = grid_from_text(text, inner);
  for (std::size_t k = 1; k < inner.size(); ++k) {
    if (inner[k] > inner[k - 1]) throw parse_error("inner shape is not a partition");
  }
  return SkewTableau(Partition(inner), std::move(grid));
}

CompositionTableau composition_tableau_from_text(std::string_view text) {
  std::vector<int> inner;
  Grid grid = grid_from_text(text, inner);
  if (std::find(inner.begin(), inner.end(), 0) != inner.end()) {
    throw parse_error("inner rows of a composition tableau must be contiguous from the bottom");
  }
  return CompositionTableau(Composition(inner), std::move(grid));
}

json to_json(const SkewTableau& t) {
  return json{{"inner", t.inner().parts()}, {"rows", t.grid()}};
}

json to_json(const CompositionTableau& t) {
  return json{{"inner", t.inner().parts()}, {"rows", t.grid()}};
}

json shape_json(const std::vector<int>& outer, const std::vector<int>& inner) {
  return json{{"outer", outer}, {"inner", inner}};
}

json to_json(const CoefficientTable& table) {
  json entries = json::array();
  for (const auto& [gamma, c] : table.entries) {
    entries.push_back(json{{"gamma", gamma.parts()}, {"coeff", c}});
  }
  return json{{"alpha", table.alpha.parts()}, {"beta", table.beta.parts()}, {"entries", entries}};
}

json frank_to_json(std::span<const int> w) {
  json cols = json::array();
  for (const auto& col : column_factorization(w)) cols.push_back(col);
  return cols;
}

SkewTableau skew_tableau_from_json(const json& j) {
  const auto inner = inner_from_json(j);
  for (std::size_t k = 1; k < inner.size(); ++k) {
    if (inner[k] > inner[k - 1]) throw parse_error("inner shape is not a partition");
  }
  return SkewTableau(Partition(inner), grid_from_json(j));
}

CompositionTableau composition_tableau_from_json(const json& j) {
  return CompositionTableau(Composition(inner_from_json(j)), grid_from_json(j));
}

CoefficientTable coefficient_table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("alpha") || !j.contains("beta") || !j.contains("entries")) {
    throw parse_error("coefficient table JSON needs alpha, beta and entries");
  }
  CoefficientTable table{Composition(int_vector(j.at("alpha"), "alpha")),
                         Composition(int_vector(j.at("beta"), "beta")),
                         {}};
  for (const auto& e : j.at("entries")) {
    if (!e.contains("gamma") || !e.contains("coeff")) throw parse_error("entry needs gamma and coeff");
    table.entries[Composition(int_vector(e.at("gamma"), "gamma"))] = e.at("coeff").get<long long>();
  }
  return table;
}

Word frank_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("frank word JSON must be an array of columns");
  std::vector<Word> cols;
  for (const auto& col : j) cols.push_back(int_vector(col, "column"));
  Word w = concat(cols);
  if (column_factorization(w).size() != cols.size()) {
    throw parse_error("columns are not the maximal column factorization");
  }
  return w;
}

}  // namespace nclr
