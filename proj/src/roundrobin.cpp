#include "fairpart/roundrobin.hpp"

#include <algorithm>
#include <stdexcept>

namespace fairpart {

namespace {

// Per-agent preference list over the pool: item ids sorted by value
// descending, id ascending, consumed through a cursor.  This makes a full
// run O(n * m log m) instead of O(m^2) scans and realizes exactly the
// "most preferred remaining item, lowest id on ties" rule.
struct PrefCursor {
  std::vector<int> order;
  std::size_t at = 0;

  void build(const Instance& inst, int agent, const std::vector<int>& items) {
    order = items;
    const auto& row = inst.values[agent];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return row[b] < row[a]; });
    at = 0;
  }
  // Best remaining item not in `taken`, or -1 when exhausted.
  int peek(const std::vector<char>& taken) {
    while (at < order.size() && taken[order[at]]) ++at;
    return at < order.size() ? order[at] : -1;
  }
};

void validate(const Instance& inst, const std::vector<int>& agents,
              const std::vector<int>& items) {
  std::vector<char> seen_agent(inst.n, 0);
  for (int a : agents) {
    if (a < 0 || a >= inst.n) throw std::invalid_argument("round_robin: unknown agent id");
    if (seen_agent[a]) throw std::invalid_argument("round_robin: duplicate agent");
    seen_agent[a] = 1;
  }
  if (agents.empty()) throw std::invalid_argument("round_robin: no agents");
  std::vector<char> seen_item(inst.m, 0);
  for (int g : items) {
    if (g < 0 || g >= inst.m) throw std::invalid_argument("round_robin: unknown item id");
    if (seen_item[g]) throw std::invalid_argument("round_robin: duplicate item");
    seen_item[g] = 1;
  }
}

}  // namespace

RoundRobinResult round_robin(const Instance& inst, const std::vector<int>& agents,
                             const std::vector<int>& items) {
  validate(inst, agents, items);
  int k = static_cast<int>(agents.size());
  RoundRobinResult out;
  out.pm.columns.assign(k, {});
  std::vector<PrefCursor> pref(k);
  for (int c = 0; c < k; ++c) pref[c].build(inst, agents[c], items);
  std::vector<char> taken(inst.m, 0);
  std::size_t remaining = items.size();
  int c = 0;
  while (remaining > 0) {
    int g = pref[c].peek(taken);
    taken[g] = 1;
    out.pm.columns[c].push_back(g);
    --remaining;
    c = (c + 1) % k;
  }
  out.parts = partition_of(out.pm);
  return out;
}

RoundRobinResult modified_round_robin(const Instance& inst, const std::vector<int>& agents,
                                      const std::vector<int>& items) {
  validate(inst, agents, items);
  int k = static_cast<int>(agents.size());
  RoundRobinResult out;
  out.pm.columns.assign(k, {});
  std::vector<PrefCursor> pref(k);
  for (int c = 0; c < k; ++c) pref[c].build(inst, agents[c], items);
  std::vector<char> taken(inst.m, 0);
  std::size_t remaining = items.size();
  std::vector<int> active(k);
  for (int c = 0; c < k; ++c) active[c] = c;
  std::size_t ptr = 0;
  while (remaining > 0 && !active.empty()) {
    int c = active[ptr];
    int g = pref[c].peek(taken);
    if (g >= 0 && inst.values[agents[c]][g].is_positive()) {
      taken[g] = 1;
      out.pm.columns[c].push_back(g);
      --remaining;
      ptr = (ptr + 1) % active.size();
    } else {
      out.dropped.push_back(c);
      active.erase(active.begin() + ptr);
      if (!active.empty() && ptr >= active.size()) ptr = 0;
    }
  }
  out.parts = partition_of(out.pm);
  if (remaining > 0) {
    for (int g : items)
      if (!taken[g]) out.leftovers.push_back(g);
    auto& p0 = out.parts.parts[0];
    p0.insert(p0.end(), out.leftovers.begin(), out.leftovers.end());
    std::sort(p0.begin(), p0.end());
  }
  return out;
}

PickMatrix restrict_matrix(const PickMatrix& pm, int drop_rows, int first_col) {
  if (drop_rows < 0 || first_col < 0 || first_col > pm.cols())
    throw std::invalid_argument("restrict_matrix: bad arguments");
  PickMatrix out;
  for (int c = first_col; c < pm.cols(); ++c) {
    const auto& col = pm.columns[c];
    std::size_t skip = std::min<std::size_t>(drop_rows, col.size());
    out.columns.emplace_back(col.begin() + skip, col.end());
  }
  return out;
}

Partition partition_of(const PickMatrix& pm) {
  Partition p;
  p.parts.reserve(pm.cols());
  for (const auto& col : pm.columns) {
    std::vector<int> items = col;
    std::sort(items.begin(), items.end());
    p.parts.push_back(std::move(items));
  }
  return p;
}

std::string pick_matrix_csv(const PickMatrix& pm) {
  std::string out = "round";
  for (int c = 0; c < pm.cols(); ++c) out += ",position_" + std::to_string(c + 1);
  out += '\n';
  int rounds = pm.rounds();
  for (int r = 0; r < rounds; ++r) {
    out += std::to_string(r + 1);
    for (int c = 0; c < pm.cols(); ++c) {
      out += ',';
      int g = pm.cell(r, c);
      if (g >= 0) out += std::to_string(g + 1);
    }
    out += '\n';
  }
  return out;
}

}  // namespace fairpart
