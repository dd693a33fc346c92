#include "fairpart/dynamic.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "fairpart/roundrobin.hpp"

namespace fairpart {

namespace {

void require_order(const Instance& inst, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != inst.n)
    throw std::invalid_argument("order must list every agent exactly once");
  std::vector<char> seen(inst.n, 0);
  for (int a : order) {
    if (a < 0 || a >= inst.n || seen[a])
      throw std::invalid_argument("order is not a permutation of the agents");
    seen[a] = 1;
  }
}

std::vector<int> all_items(const Instance& inst) {
  std::vector<int> v(inst.m);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void erase_item(std::vector<int>& sorted_items, int g) {
  auto it = std::lower_bound(sorted_items.begin(), sorted_items.end(), g);
  if (it == sorted_items.end() || *it != g)
    throw std::logic_error("internal: item not where expected");
  sorted_items.erase(it);
}

void insert_item(std::vector<int>& sorted_items, int g) {
  sorted_items.insert(std::lower_bound(sorted_items.begin(), sorted_items.end(), g), g);
}

// Favorite item of `agent` within a sorted item list (value desc, id asc).
int favorite(const Instance& inst, int agent, const std::vector<int>& items) {
  const auto& row = inst.values[agent];
  int best = items.front();
  for (int g : items)
    if (row[best] < row[g]) best = g;
  return best;
}

// Presents all unpicked columns to the cohort agent at `local`, lets it pick
// under the policy, and appends the record.  Part ids are global arrival
// positions (pos0 + column index).  `view`, when given, is the bundle set
// actually shown (ephemeral rebundling); a pick of a non-designated bundle
// commits the view so that items follow the bundles physically handed out.
void serve(const Instance& inst, const TiePolicy& policy, Transcript& t, int pos0,
           const std::vector<int>& cohort, std::vector<std::vector<int>>& cols,
           std::vector<char>& picked, int local, int stage, const char* branch,
           const std::vector<int>& stage_part, const std::vector<std::vector<int>>* view) {
  const auto& shown = view != nullptr ? *view : cols;
  int agent = cohort[local];
  ArrivalRecord rec;
  rec.position = pos0 + local + 1;
  rec.agent = agent;
  rec.stage = stage;
  rec.branch = branch;
  rec.designated = pos0 + local;
  rec.stage_part_items = stage_part;
  for (std::size_t j = 0; j < shown.size(); ++j)
    if (!picked[j]) rec.menu.push_back({pos0 + static_cast<int>(j), shown[j]});
  int e = rational_pick(inst.values[agent], rec.menu, policy, rec.position);
  rec.chosen = rec.menu[e].part;
  rec.value = part_value(inst, agent, rec.menu[e].items);
  if (rec.chosen != rec.designated) {
    t.flags.push_back("position " + std::to_string(rec.position) + ": picked part " +
                      std::to_string(rec.chosen + 1) + " instead of designated part " +
                      std::to_string(rec.designated + 1));
    if (view != nullptr) cols = *view;  // the shown bundles become real
  }
  picked[rec.chosen - pos0] = 1;
  t.records.push_back(std::move(rec));
}

// leftovers = items of the instance not present in any chosen bundle.
void finalize_leftovers(const Instance& inst, Transcript& t) {
  std::vector<char> covered(inst.m, 0);
  for (const auto& rec : t.records)
    for (const auto& e : rec.menu)
      if (e.part == rec.chosen)
        for (int g : e.items) covered[g] = 1;
  t.leftovers.clear();
  for (int g = 0; g < inst.m; ++g)
    if (!covered[g]) t.leftovers.push_back(g);
}

std::vector<int> sorted_copy(const std::vector<int>& v) {
  std::vector<int> s = v;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

int stage_of(long long i, long long n) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("stage_of: need 1 <= i <= n");
  int s = 1;
  while (n > 1) {
    long long mid = n / 2;
    if (i <= mid) return s;
    i -= mid;
    n -= mid;
    ++s;
  }
  return s;
}

Transcript all_pos_val(const Instance& inst, const std::vector<int>& order,
                       const TiePolicy& policy) {
  require_order(inst, order);
  Transcript t;
  t.algorithm = "all_pos";
  t.order = order;
  t.policy = policy;
  for (int a = 0; a < inst.n && t.flags.empty(); ++a)
    for (int g = 0; g < inst.m; ++g)
      if (!inst.values[a][g].is_positive()) {
        t.flags.push_back("positivity: agent " + std::to_string(a + 1) + " values item " +
                          std::to_string(g + 1) + " at zero");
        break;
      }

  std::vector<int> cohort = order;
  std::vector<int> items = all_items(inst);
  int pos0 = 0;
  int stage = 1;
  while (!cohort.empty()) {
    int k = static_cast<int>(cohort.size());
    if (k == 1) {
      std::sort(items.begin(), items.end());
      if (stage == 1) t.stage1_columns.push_back(items);
      std::vector<std::vector<int>> cols{items};
      std::vector<char> picked(1, 0);
      serve(inst, policy, t, pos0, cohort, cols, picked, 0, stage, "base", items, nullptr);
      break;
    }
    auto rr = round_robin(inst, cohort, items);
    std::vector<std::vector<int>> cols = rr.parts.parts;
    if (stage == 1)
      for (int j = 0; j < k; ++j) t.stage1_columns.push_back(cols[j]);
    std::vector<std::vector<int>> snap = cols;  // pre-transfer stage columns
    int mid = k / 2;
    int offset = (k + 1) / 2;
    std::vector<char> picked(k, 0);
    for (int i = 0; i < mid; ++i) {
      int donor = i + offset;
      const char* branch = "present";
      if (!cols[donor].empty()) {
        int g = favorite(inst, cohort[donor], cols[donor]);
        erase_item(cols[donor], g);
        insert_item(cols[i], g);
        branch = "transfer";
      }
      serve(inst, policy, t, pos0, cohort, cols, picked, i, stage, branch, snap[i], nullptr);
    }
    if (k % 2 == 1)
      serve(inst, policy, t, pos0, cohort, cols, picked, offset - 1, stage, "present",
            snap[offset - 1], nullptr);
    std::vector<int> next;
    for (int j = 0; j < k; ++j)
      if (!picked[j]) next.insert(next.end(), cols[j].begin(), cols[j].end());
    std::sort(next.begin(), next.end());
    items = std::move(next);
    cohort.erase(cohort.begin(), cohort.begin() + offset);
    pos0 += offset;
    ++stage;
  }
  finalize_leftovers(inst, t);
  return t;
}

namespace detail {

void run_bounded_prop(const Instance& inst, const std::vector<int>& cohort0,
                      std::vector<int> items, const TiePolicy& policy, RRVariant variant,
                      int first_position, bool record_stage1, Transcript& t) {
  std::vector<int> cohort = cohort0;
  int pos0 = first_position - 1;
  int stage = 1;
  while (!cohort.empty()) {
    int k = static_cast<int>(cohort.size());
    if (k == 1) {
      std::sort(items.begin(), items.end());
      if (record_stage1 && stage == 1) t.stage1_columns.push_back(items);
      std::vector<std::vector<int>> cols{items};
      std::vector<char> picked(1, 0);
      serve(inst, policy, t, pos0, cohort, cols, picked, 0, stage, "base", items, nullptr);
      return;
    }
    auto rr = variant == RRVariant::plain ? round_robin(inst, cohort, items)
                                          : modified_round_robin(inst, cohort, items);
    std::vector<std::vector<int>> cols = rr.parts.parts;
    const auto& pmcols = rr.pm.columns;
    if (record_stage1 && stage == 1)
      for (int j = 0; j < k; ++j) t.stage1_columns.push_back(sorted_copy(pmcols[j]));
    std::vector<std::vector<int>> snap;  // pick columns at stage start, sorted
    snap.reserve(k);
    for (int j = 0; j < k; ++j) snap.push_back(sorted_copy(pmcols[j]));

    int mid = k / 2;
    // Unconsumed donor cells: the first two picks of every donor column.
    std::vector<std::array<char, 2>> alive(k, {0, 0});
    for (int c = mid; c < k; ++c)
      for (int r = 0; r < 2; ++r)
        if (r < static_cast<int>(pmcols[c].size())) alive[c][r] = 1;
    std::vector<char> picked(k, 0);

    for (int i = 0; i < mid; ++i) {
      int me = cohort[i];
      const auto& row = inst.values[me];
      if (i == mid - 1) {
        // Last receiver of the stage folds every unconsumed donor cell.
        for (int c = mid; c < k; ++c)
          for (int r = 0; r < 2; ++r)
            if (alive[c][r]) {
              alive[c][r] = 0;
              int g = pmcols[c][r];
              erase_item(cols[c], g);
              insert_item(cols[i], g);
            }
        serve(inst, policy, t, pos0, cohort, cols, picked, i, stage, "fold", snap[i], nullptr);
        continue;
      }
      int fc = -1, fr = -1;
      for (int c = mid; c < k && fc < 0; ++c)
        for (int r = 0; r < 2; ++r)
          if (alive[c][r] && row[pmcols[c][r]].is_positive()) {
            fc = c;
            fr = r;
            break;
          }
      if (fc >= 0) {
        alive[fc][fr] = 0;
        int g = pmcols[fc][fr];
        erase_item(cols[fc], g);
        insert_item(cols[i], g);
        serve(inst, policy, t, pos0, cohort, cols, picked, i, stage, "transfer", snap[i],
              nullptr);
        continue;
      }
      // The arrival values every unconsumed donor cell at zero: show an
      // ephemeral rebundling that trades later receivers' top picks against
      // donor top cells, at most one cell per donor column.
      std::vector<std::vector<int>> view = cols;
      std::vector<char> used(k, 0);
      for (int kk = 1; kk <= mid - 1 - i; ++kk) {
        int rcv = i + kk;
        int dc = mid + kk - 1;
        if (pmcols[rcv].empty()) continue;  // nothing to displace
        int rtop = pmcols[rcv][0];
        int cc = -1, cr = -1;
        auto try_col = [&](int c) {
          if (used[c]) return false;
          for (int r = 0; r < 2; ++r)
            if (alive[c][r]) {
              cc = c;
              cr = r;
              return true;
            }
          return false;
        };
        if (!try_col(dc))
          for (int c = mid; c < k && cc < 0; ++c) try_col(c);
        if (cc < 0) {
          t.flags.push_back("rebundle at position " + std::to_string(pos0 + i + 1) +
                            ": no unconsumed donor cell for receiver " +
                            std::to_string(pos0 + rcv + 1));
          break;
        }
        used[cc] = 1;
        int dg = pmcols[cc][cr];
        erase_item(view[rcv], rtop);
        insert_item(view[rcv], dg);
        erase_item(view[cc], dg);
        insert_item(view[cc], rtop);
      }
      serve(inst, policy, t, pos0, cohort, cols, picked, i, stage, "rebundle", snap[i], &view);
    }
    std::vector<int> next;
    for (int j = 0; j < k; ++j)
      if (!picked[j]) next.insert(next.end(), cols[j].begin(), cols[j].end());
    std::sort(next.begin(), next.end());
    items = std::move(next);
    cohort.erase(cohort.begin(), cohort.begin() + mid);
    pos0 += mid;
    ++stage;
  }
}

}  // namespace detail

Transcript bounded_prop(const Instance& inst, const std::vector<int>& order,
                        const TiePolicy& policy, RRVariant variant) {
  require_order(inst, order);
  Transcript t;
  t.algorithm = variant == RRVariant::plain ? "bounded_prop" : "bounded_prop_modified";
  t.order = order;
  t.policy = policy;
  for (int i = 1; i <= inst.n; ++i) {
    Rational gate(2 * (log2_ceil(i) + 1));
    Rational p = prop_share(inst, order[i - 1]);
    if (p < gate) {
      t.flags.push_back("prop-gate: position " + std::to_string(i) + " (agent " +
                        std::to_string(order[i - 1] + 1) + ") has share " + p.str() +
                        " < " + gate.str() + "; guarantees void from here on");
      break;
    }
  }
  detail::run_bounded_prop(inst, order, all_items(inst), policy, variant, 1, true, t);
  finalize_leftovers(inst, t);
  return t;
}

FairOrder fair_order_from_props(const std::vector<Rational>& props) {
  int n = static_cast<int>(props.size());
  FairOrder out;
  out.split = n;
  std::vector<char> used(n, 0);
  for (int i = 1; i <= n; ++i) {
    Rational threshold(2 * (log2_ceil(i) + 1));
    int pick = -1;
    for (int a = 0; a < n; ++a)
      if (!used[a] && props[a] >= threshold && (pick < 0 || props[pick] < props[a]))
        pick = a;
    if (pick < 0) {
      out.split = i - 1;
      break;
    }
    used[pick] = 1;
    out.order.push_back(pick);
  }
  // Fill the rest by decreasing share, lowest id on ties.
  std::vector<int> rest;
  for (int a = 0; a < n; ++a)
    if (!used[a]) rest.push_back(a);
  std::stable_sort(rest.begin(), rest.end(),
                   [&](int a, int b) { return props[b] < props[a]; });
  out.order.insert(out.order.end(), rest.begin(), rest.end());
  return out;
}

FairOrder fair_arrival_order(const Instance& inst) {
  std::vector<Rational> props(inst.n);
  for (int a = 0; a < inst.n; ++a) props[a] = prop_share(inst, a);
  return fair_order_from_props(props);
}

Transcript rebundling_demo(const Instance& inst, const Partition& initial,
                           const TiePolicy& policy) {
  auto check = check_partition(inst, initial);
  if (!check.ok()) throw std::invalid_argument("rebundling_demo: malformed partition");
  if (initial.size() != inst.n)
    throw std::invalid_argument("rebundling_demo: need one part per agent");
  Transcript t;
  t.algorithm = "rebundling_demo";
  t.order.resize(inst.n);
  std::iota(t.order.begin(), t.order.end(), 0);
  t.policy = policy;
  std::vector<std::vector<int>> parts = initial.parts;
  std::vector<char> picked(inst.n, 0);
  for (int pos = 1; pos <= inst.n; ++pos) {
    int agent = pos - 1;
    if (pos < inst.n && !picked[pos] && !picked[pos - 1]) {
      // Move up to two lowest-id items the arrival values positively from the
      // next part into its designated one.
      int moved = 0;
      for (std::size_t idx = 0; idx < parts[pos].size() && moved < 2;) {
        int g = parts[pos][idx];
        if (inst.values[agent][g].is_positive()) {
          parts[pos].erase(parts[pos].begin() + idx);
          insert_item(parts[pos - 1], g);
          ++moved;
        } else {
          ++idx;
        }
      }
    }
    ArrivalRecord rec;
    rec.position = pos;
    rec.agent = agent;
    rec.branch = "rebundle-transfer";
    rec.designated = pos - 1;
    for (int j = 0; j < inst.n; ++j)
      if (!picked[j]) rec.menu.push_back({j, parts[j]});
    int e = rational_pick(inst.values[agent], rec.menu, policy, pos);
    rec.chosen = rec.menu[e].part;
    rec.value = part_value(inst, agent, rec.menu[e].items);
    picked[rec.chosen] = 1;
    t.records.push_back(std::move(rec));
  }
  finalize_leftovers(inst, t);
  return t;
}

}  // namespace fairpart
