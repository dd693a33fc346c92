#include "fairpart/arrival.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fairpart/dynamic.hpp"
#include "fairpart/rng.hpp"
#include "fairpart/structured.hpp"

namespace fairpart {

const char* tie_kind_name(TieKind k) {
  switch (k) {
    case TieKind::lowest_part_index: return "lowest";
    case TieKind::highest_part_index: return "highest";
    case TieKind::seeded_random: return "random";
  }
  return "?";
}

TieKind tie_kind_from_name(const std::string& name) {
  if (name == "lowest") return TieKind::lowest_part_index;
  if (name == "highest") return TieKind::highest_part_index;
  if (name == "random") return TieKind::seeded_random;
  throw std::invalid_argument("unknown tie policy: " + name);
}

int rational_pick(const std::vector<Rational>& row, const std::vector<MenuEntry>& menu,
                  const TiePolicy& policy, int position) {
  if (menu.empty()) throw std::invalid_argument("rational_pick: empty menu");
  std::vector<Rational> totals(menu.size());
  for (std::size_t e = 0; e < menu.size(); ++e) {
    Rational s;
    for (int g : menu[e].items) s += row[g];
    totals[e] = s;
  }
  Rational best = totals[0];
  for (const Rational& v : totals) best = max(best, v);
  std::vector<std::size_t> ties;
  for (std::size_t e = 0; e < menu.size(); ++e)
    if (totals[e] == best) ties.push_back(e);
  switch (policy.kind) {
    case TieKind::lowest_part_index:
      return static_cast<int>(*std::min_element(ties.begin(), ties.end(),
                                                [&](std::size_t a, std::size_t b) {
                                                  return menu[a].part < menu[b].part;
                                                }));
    case TieKind::highest_part_index:
      return static_cast<int>(*std::max_element(ties.begin(), ties.end(),
                                                [&](std::size_t a, std::size_t b) {
                                                  return menu[a].part < menu[b].part;
                                                }));
    case TieKind::seeded_random: {
      Rng rng(splitmix64(policy.seed ^ splitmix64(static_cast<std::uint64_t>(position))));
      return static_cast<int>(ties[rng.uniform(0, static_cast<long long>(ties.size()) - 1)]);
    }
  }
  throw std::logic_error("rational_pick: unreachable");
}

Transcript run_static(const Instance& inst, const Partition& partition,
                      const std::vector<int>& order, const TiePolicy& policy) {
  if (static_cast<int>(order.size()) != inst.n)
    throw std::invalid_argument("run_static: order must list every agent once");
  auto check = check_partition(inst, partition);
  if (!check.ok()) throw std::invalid_argument("run_static: malformed partition");
  Transcript t;
  t.algorithm = "static";
  t.order = order;
  t.policy = policy;
  std::vector<char> taken(partition.parts.size(), 0);
  for (int pos = 1; pos <= inst.n; ++pos) {
    int agent = order[pos - 1];
    ArrivalRecord rec;
    rec.position = pos;
    rec.agent = agent;
    for (std::size_t p = 0; p < partition.parts.size(); ++p)
      if (!taken[p]) rec.menu.push_back({static_cast<int>(p), partition.parts[p]});
    if (rec.menu.empty()) break;  // more agents than parts
    int e = rational_pick(inst.values[agent], rec.menu, policy, pos);
    rec.chosen = rec.menu[e].part;
    rec.value = part_value(inst, agent, rec.menu[e].items);
    taken[rec.chosen] = 1;
    t.records.push_back(std::move(rec));
  }
  for (std::size_t p = 0; p < partition.parts.size(); ++p)
    if (!taken[p])
      t.leftovers.insert(t.leftovers.end(), partition.parts[p].begin(),
                         partition.parts[p].end());
  std::sort(t.leftovers.begin(), t.leftovers.end());
  return t;
}

namespace {

// Structural soundness of a transcript, independent of any guarantee.
void check_invariants(const Instance& inst, const Transcript& t, VerifyReport& rep) {
  std::vector<int> covered(inst.m, 0);
  std::vector<char> part_seen;  // chosen part ids
  for (const auto& rec : t.records) {
    if (rec.agent < 0 || rec.agent >= inst.n) {
      rep.notes.push_back("record with unknown agent id");
      rep.invariants_ok = false;
      continue;
    }
    const auto* chosen_entry = static_cast<const MenuEntry*>(nullptr);
    Rational best;
    bool first = true;
    for (const auto& e : rec.menu) {
      Rational v = part_value(inst, rec.agent, e.items);
      if (first || best < v) best = v;
      first = false;
      if (e.part == rec.chosen) chosen_entry = &e;
    }
    if (chosen_entry == nullptr) {
      rep.notes.push_back("position " + std::to_string(rec.position) +
                          ": chosen part is not on the recorded menu");
      rep.invariants_ok = false;
      continue;
    }
    Rational got = part_value(inst, rec.agent, chosen_entry->items);
    if (got != best) {
      rep.notes.push_back("position " + std::to_string(rec.position) +
                          ": chosen part is not value-maximal on its menu");
      rep.invariants_ok = false;
    }
    if (got != rec.value) {
      rep.notes.push_back("position " + std::to_string(rec.position) +
                          ": recorded value disagrees with menu snapshot");
      rep.invariants_ok = false;
    }
    if (rec.chosen >= 0) {
      if (rec.chosen >= static_cast<int>(part_seen.size()))
        part_seen.resize(rec.chosen + 1, 0);
      if (part_seen[rec.chosen]) {
        rep.notes.push_back("part id " + std::to_string(rec.chosen) + " chosen twice");
        rep.invariants_ok = false;
      }
      part_seen[rec.chosen] = 1;
    }
    for (int g : chosen_entry->items) {
      if (g < 0 || g >= inst.m || ++covered[g] > 1) {
        rep.notes.push_back("item " + std::to_string(g + 1) +
                            " taken more than once or unknown");
        rep.invariants_ok = false;
      }
    }
  }
  if (static_cast<int>(t.records.size()) == inst.n) {
    for (int g : t.leftovers)
      if (g < 0 || g >= inst.m || ++covered[g] > 1) rep.invariants_ok = false;
    for (int g = 0; g < inst.m; ++g)
      if (covered[g] != 1) {
        rep.notes.push_back("item " + std::to_string(g + 1) +
                            " not covered exactly once by picks plus leftovers");
        rep.invariants_ok = false;
        break;
      }
  }
}

}  // namespace

VerifyReport verify_transcript(const Instance& inst, const Transcript& t, TheoremId theorem) {
  VerifyReport rep;
  check_invariants(inst, t, rep);

  bool influence_scale =
      theorem == TheoremId::mod_rr || theorem == TheoremId::bounded_influence_early ||
      theorem == TheoremId::bounded_influence_late;
  int D = 1;
  if (influence_scale) D = influence_profile(inst).D;
  long long tie_t = 0;
  if (theorem == TheoremId::bounded_indiff) tie_t = tie_profile(inst).t;

  for (const auto& rec : t.records) {
    VerifyRow row;
    row.position = rec.position;
    row.agent = rec.agent;
    row.value = rec.value;
    row.ref = influence_scale ? total_value(inst, rec.agent) / Rational(D)
                              : prop_share(inst, rec.agent);
    TheoremBoundSpec spec;
    spec.id = theorem;
    spec.n = inst.n;
    spec.i = rec.position;
    spec.stage = rec.stage > 0 ? rec.stage : stage_of(rec.position, inst.n);
    spec.D = D;
    spec.t = tie_t;
    if (theorem == TheoremId::bounded_influence_early ||
        theorem == TheoremId::bounded_influence_late) {
      bool early = rec.position <= inst.n - (2 * D - 1);
      spec.id = early ? TheoremId::bounded_influence_early
                      : TheoremId::bounded_influence_late;
    }
    row.bound = theorem_bound(spec, row.ref);
    row.trivial = row.bound.trivial();
    row.pass = row.bound.satisfied_by(row.value);
    if (row.trivial) ++rep.trivial_count;
    if (!row.pass) rep.all_pass = false;
    rep.rows.push_back(std::move(row));
  }
  if (!rep.invariants_ok) rep.all_pass = false;
  return rep;
}

}  // namespace fairpart
