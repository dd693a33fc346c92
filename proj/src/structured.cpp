#include "fairpart/structured.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fairpart/dynamic.hpp"
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

int favorite(const Instance& inst, int agent, const std::vector<int>& items) {
  const auto& row = inst.values[agent];
  int best = items.front();
  for (int g : items)
    if (row[best] < row[g]) best = g;
  return best;
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

}  // namespace

InfluenceProfile influence_profile(const Instance& inst) {
  InfluenceProfile out;
  out.sets.resize(inst.n);
  for (int a = 0; a < inst.n; ++a) {
    for (int b = 0; b < inst.n; ++b) {
      bool related = false;
      for (int g = 0; g < inst.m && !related; ++g)
        related = inst.values[a][g].is_positive() && inst.values[b][g].is_positive();
      if (related) out.sets[a].push_back(b);
    }
    out.D = std::max(out.D, static_cast<int>(out.sets[a].size()));
  }
  return out;
}

TieProfile tie_profile(const Instance& inst) {
  TieProfile out;
  out.per_agent.resize(inst.n, 0);
  for (int a = 0; a < inst.n; ++a) {
    std::map<Rational, int> mult;
    for (const Rational& v : inst.values[a])
      if (v.is_positive()) out.per_agent[a] = std::max(out.per_agent[a], ++mult[v]);
    out.t = std::max(out.t, out.per_agent[a]);
  }
  return out;
}

std::vector<int> sorted_prop_order(const Instance& inst) {
  std::vector<int> order(inst.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return prop_share(inst, b) < prop_share(inst, a);
  });
  return order;
}

Transcript bounded_influence(const Instance& inst, const std::vector<int>& order,
                             const TiePolicy& policy) {
  require_order(inst, order);
  InfluenceProfile prof = influence_profile(inst);
  int D = prof.D;
  Transcript t;
  t.algorithm = "bounded_influence";
  t.order = order;
  t.policy = policy;
  for (int a = 0; a < inst.n; ++a) {
    Rational gate(2 * log2_ceil(2 * D - 1) + 2);
    Rational share = total_value(inst, a) / Rational(D);
    if (share < gate) {
      t.flags.push_back("influence-gate: agent " + std::to_string(a + 1) +
                        " has total/D = " + share.str() + " < " + gate.str());
      break;
    }
  }

  // Phase 1: deal everything, dropout-aware.  Columns are indexed by arrival
  // position; leftovers (worth zero to everyone who could want them) stay in
  // column 0's part per the dealing procedure.
  std::vector<int> items(inst.m);
  std::iota(items.begin(), items.end(), 0);
  auto rr = modified_round_robin(inst, order, items);
  std::vector<std::vector<int>> cols = rr.parts.parts;
  for (int j = 0; j < inst.n; ++j) {
    std::vector<int> sorted = rr.pm.columns[j];
    std::sort(sorted.begin(), sorted.end());
    t.stage1_columns.push_back(std::move(sorted));
  }

  int early_count = std::max(0, inst.n - (2 * D - 1));
  std::vector<char> picked(inst.n, 0);

  for (int i = 0; i < early_count; ++i) {
    int agent = order[i];
    const auto& row = inst.values[agent];
    Rational mine = part_value(inst, agent, cols[i]);

    // Parts the arrival values as much as its own, and parts worth zero to
    // it; recomputed against the current physical bundles.
    auto scan = [&](std::vector<int>& equals, std::vector<int>& zeros) {
      equals.clear();
      zeros.clear();
      for (int j = 0; j < inst.n; ++j) {
        if (picked[j] || j == i) continue;
        Rational v = part_value(inst, agent, cols[j]);
        if (v == mine)
          equals.push_back(j);
        else if (!v.is_positive())
          zeros.push_back(j);
      }
    };
    std::vector<int> equals, zeros;
    scan(equals, zeros);

    ArrivalRecord rec;
    rec.position = i + 1;
    rec.agent = agent;
    rec.stage = 1;
    rec.branch = "influence-early";
    rec.designated = i;
    rec.stage_part_items = t.stage1_columns[i];
    rec.equals_size = static_cast<int>(equals.size());
    rec.zeros_size = static_cast<int>(zeros.size());

    // Break every tie: move the arrival's favorite item of the lowest equal
    // part into a fresh zero part (taking that part's first item back when
    // it has one), until the designated part is the unique favorite.  Each
    // zero part absorbs at most one trade per arrival, so the loop ends.
    std::vector<char> zero_used(inst.n, 0);
    while (!equals.empty()) {
      int r = equals.front();
      if (cols[r].empty()) {
        t.flags.push_back("influence: equal part " + std::to_string(r + 1) +
                          " empty at position " + std::to_string(i + 1));
        break;
      }
      int z = -1;
      for (int cand : zeros)
        if (!zero_used[cand]) {
          z = cand;
          break;
        }
      if (z < 0) {
        t.flags.push_back("influence: zero parts exhausted at position " +
                          std::to_string(i + 1));
        break;
      }
      zero_used[z] = 1;
      InfluenceSwap sw;
      sw.equals_part = r;
      sw.zero_part = z;
      sw.item_to_zero = favorite(inst, agent, cols[r]);
      erase_item(cols[r], sw.item_to_zero);
      if (!cols[z].empty()) {
        sw.item_from_zero = cols[z][0];
        erase_item(cols[z], sw.item_from_zero);
        insert_item(cols[r], sw.item_from_zero);
      }
      insert_item(cols[z], sw.item_to_zero);
      rec.swaps.push_back(sw);
      scan(equals, zeros);
    }

    for (int j = 0; j < inst.n; ++j)
      if (!picked[j]) rec.menu.push_back({j, cols[j]});
    int e = rational_pick(row, rec.menu, policy, rec.position);
    rec.chosen = rec.menu[e].part;
    rec.value = part_value(inst, agent, rec.menu[e].items);
    if (rec.chosen != rec.designated)
      t.flags.push_back("position " + std::to_string(rec.position) + ": picked part " +
                        std::to_string(rec.chosen + 1) + " instead of designated part " +
                        std::to_string(rec.designated + 1));
    picked[rec.chosen] = 1;
    t.records.push_back(std::move(rec));
  }

  // Phase 3: pool the unpicked parts and rerun the halving procedure on the
  // remaining (at most 2D-1) agents.
  std::vector<int> rest_agents(order.begin() + early_count, order.end());
  std::vector<int> pool;
  for (int j = 0; j < inst.n; ++j)
    if (!picked[j]) pool.insert(pool.end(), cols[j].begin(), cols[j].end());
  std::sort(pool.begin(), pool.end());
  if (!rest_agents.empty())
    detail::run_bounded_prop(inst, rest_agents, std::move(pool), policy, RRVariant::modified,
                             early_count + 1, false, t);
  finalize_leftovers(inst, t);
  return t;
}

Transcript bounded_indifference(const Instance& inst, const std::vector<int>& order,
                                const TiePolicy& policy) {
  require_order(inst, order);
  TieProfile prof = tie_profile(inst);
  int tmax = std::max(1, prof.t);
  int kk = (tmax + 2) / 2;  // ceil((t+1)/2)
  Transcript t;
  t.algorithm = "bounded_indifference";
  t.order = order;
  t.policy = policy;
  for (int a = 0; a < inst.n; ++a) {
    Rational p = prop_share(inst, a);
    if (p < Rational(kk)) {
      t.flags.push_back("indifference-gate: agent " + std::to_string(a + 1) + " has share " +
                        p.str() + " < " + std::to_string(kk));
      break;
    }
  }
  if (inst.m < inst.n * kk)
    throw std::invalid_argument("bounded_indifference: not enough items to reserve cores");

  // Reserve cores: arrival position i takes its ceil((t+1)/2) favorite items
  // from the shrinking pool, most valuable first, lowest id on value ties.
  std::vector<int> pool(inst.m);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::vector<int>> cores(inst.n);
  for (int i = 0; i < inst.n; ++i) {
    int agent = order[i];
    for (int c = 0; c < kk; ++c) {
      int g = favorite(inst, agent, pool);
      erase_item(pool, g);
      insert_item(cores[i], g);
    }
  }
  t.core_parts = cores;

  // Deal the remainder; column j extends position j's core.
  auto rr = round_robin(inst, order, pool);
  std::vector<std::vector<int>> cols(inst.n);
  for (int j = 0; j < inst.n; ++j) {
    cols[j] = cores[j];
    for (int g : rr.parts.parts[j]) insert_item(cols[j], g);
  }

  std::vector<char> picked(inst.n, 0);
  for (int i = 0; i < inst.n; ++i) {
    int agent = order[i];
    ArrivalRecord rec;
    rec.position = i + 1;
    rec.agent = agent;
    rec.stage = 1;
    rec.branch = "core";
    rec.designated = i;
    rec.stage_part_items = cols[i];
    for (int j = 0; j < inst.n; ++j)
      if (!picked[j]) rec.menu.push_back({j, cols[j]});
    int e = rational_pick(inst.values[agent], rec.menu, policy, rec.position);
    rec.chosen = rec.menu[e].part;
    rec.value = part_value(inst, agent, rec.menu[e].items);
    if (rec.chosen != rec.designated)
      t.flags.push_back("position " + std::to_string(rec.position) + ": picked part " +
                        std::to_string(rec.chosen + 1) + " instead of designated part " +
                        std::to_string(rec.designated + 1));
    picked[rec.chosen] = 1;
    t.records.push_back(std::move(rec));
  }
  finalize_leftovers(inst, t);
  return t;
}

}  // namespace fairpart
