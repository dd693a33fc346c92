#ifndef FAIRPART_ROUNDROBIN_HPP
#define FAIRPART_ROUNDROBIN_HPP

#include <string>
#include <vector>

#include "fairpart/model.hpp"

namespace fairpart {

// Column-major record of who picked what and when: columns[c][r] is the item
// the agent in picking position c took in round r.  For the plain procedure
// the filled cells form a row-major prefix (column heights differ by at most
// one and never increase left to right); the modified variant is ragged
// because agents drop out.
struct PickMatrix {
  std::vector<std::vector<int>> columns;

  int cols() const { return static_cast<int>(columns.size()); }
  int rounds() const {
    int r = 0;
    for (const auto& c : columns) r = std::max<int>(r, static_cast<int>(c.size()));
    return r;
  }
  // Item in round `row` (0-based) of column `col`, or -1 when the column is
  // shorter than that.
  int cell(int row, int col) const {
    const auto& c = columns[col];
    return row < static_cast<int>(c.size()) ? c[row] : -1;
  }
};

struct RoundRobinResult {
  // parts[c]: items held by picking position c, sorted ascending.  Equals the
  // column contents, plus (modified variant only) leftover items dumped into
  // parts[0] when every agent has dropped out.
  Partition parts;
  PickMatrix pm;
  std::vector<int> dropped;    // picking positions that dropped out, in drop order
  std::vector<int> leftovers;  // items dumped into parts[0], ascending
};

// Sequential picking: agents (given as instance agent ids, in picking order)
// repeatedly take their most valuable remaining item from `items`, ties going
// to the lowest item id.  Pure: neither input is modified.
RoundRobinResult round_robin(const Instance& inst, const std::vector<int>& agents,
                             const std::vector<int>& items);

// Variant that skips an agent's turn permanently once its best remaining item
// has value zero to it.  Items left over when everyone has dropped out are
// worth zero to every remaining participant and are dumped into parts[0].
// Coincides with round_robin whenever all values are strictly positive.
RoundRobinResult modified_round_robin(const Instance& inst, const std::vector<int>& agents,
                                      const std::vector<int>& items);

// Keeps columns [first_col, cols) and removes the first `drop_rows` picks of
// each kept column.  Re-running round_robin with the surviving agents on the
// surviving items reproduces exactly this matrix, because removing a prefix
// of every column never changes any later argmax.
PickMatrix restrict_matrix(const PickMatrix& pm, int drop_rows, int first_col);

// Sorted part contents per column (no leftovers involved).
Partition partition_of(const PickMatrix& pm);

// Rounds as rows; empty cells blank; items 1-based to match the JSON schema.
std::string pick_matrix_csv(const PickMatrix& pm);

}  // namespace fairpart

#endif  // FAIRPART_ROUNDROBIN_HPP
