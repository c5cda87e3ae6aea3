#include "specht/tableau.hpp"

#include "specht/errors.hpp"

namespace specht {

Tableau::Tableau(Partition shape_, std::vector<std::vector<int>> rows_)
    : shape(std::move(shape_)), rows(std::move(rows_)) {
  if (static_cast<int>(rows.size()) != shape.length()) {
    throw PreconditionError("tableau row count does not match shape");
  }
  const int total = shape.weight();
  std::vector<bool> seen(total, false);
  for (int i = 0; i < shape.length(); ++i) {
    if (static_cast<int>(rows[i].size()) != shape.parts()[i]) {
      throw PreconditionError("tableau row length does not match shape");
    }
    for (int v : rows[i]) {
      if (v < 1 || v > total || seen[v - 1]) {
        throw PreconditionError("tableau entries must be exactly 1..n, each once");
      }
      seen[v - 1] = true;
    }
  }
}

std::vector<int> Tableau::column(int c) const {
  std::vector<int> col;
  for (const auto& row : rows) {
    if (c < static_cast<int>(row.size())) col.push_back(row[c]);
  }
  return col;
}

}  // namespace specht
