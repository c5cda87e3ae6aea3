#pragma once

#include <vector>

#include "specht/partition.hpp"

namespace specht {

// Young tableau of shape lambda |- n: row i holds lambda_i of the entries
// 1..n, each entry occurring exactly once.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  Tableau(Partition shape_, std::vector<std::vector<int>> rows_);

  int n() const { return shape.weight(); }

  // Column c (0-based), read top to bottom.
  std::vector<int> column(int c) const;
  int column_count() const { return shape.length() == 0 ? 0 : shape.parts()[0]; }
};

}  // namespace specht
