#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "lcass/exactalg/poly_io.hpp"
#include "lcass/freemod/poly_matrix.hpp"

namespace lcass {

/// {"rows": r, "cols": c, "entries": [["Z", "Y", "X"], ...]}
template <Coefficient C>
nlohmann::json matrix_to_json(const PolyMatrix<C>& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 1; j <= m.cols(); ++j) row.push_back(to_string(m(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

template <Coefficient C>
PolyMatrix<C> matrix_from_json(const nlohmann::json& j) {
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows) {
      throw ShapeError("matrix JSON: entries must have 'rows' rows");
    }
    PolyMatrix<C> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!entries[i].is_array() || entries[i].size() != cols) {
        throw ShapeError("matrix JSON: row " + std::to_string(i + 1) + " has wrong length");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        m(i + 1, c + 1) = parse_polynomial<C>(entries[i][c].get<std::string>());
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
}

}  // namespace lcass
