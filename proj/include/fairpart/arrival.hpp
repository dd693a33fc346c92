#ifndef FAIRPART_ARRIVAL_HPP
#define FAIRPART_ARRIVAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fairpart/model.hpp"

namespace fairpart {

// How a rational agent settles exact ties between equally valued parts.
// lowest_part_index is the default; highest_part_index is the adversarial
// choice used to stress guarantees; seeded_random draws uniformly among the
// tied parts with a deterministic per-arrival stream.
enum class TieKind { lowest_part_index, highest_part_index, seeded_random };

struct TiePolicy {
  TieKind kind = TieKind::lowest_part_index;
  std::uint64_t seed = 0;  // only used by seeded_random
};

const char* tie_kind_name(TieKind k);
TieKind tie_kind_from_name(const std::string& name);

// One offered bundle: a stable part id plus a snapshot of its items.
struct MenuEntry {
  int part = -1;
  std::vector<int> items;
};

// A persistent exchange performed by the influence-bounded procedure before
// an arrival: the top item of an equal-valued part is traded against an item
// of a zero-valued part (item_from_zero == -1 when the zero part was empty
// and the trade degenerated to a one-way move).
struct InfluenceSwap {
  int equals_part = -1;
  int zero_part = -1;
  int item_to_zero = -1;
  int item_from_zero = -1;
};

struct ArrivalRecord {
  int position = 0;  // 1-based arrival position
  int agent = -1;    // agent id
  std::vector<MenuEntry> menu;
  int chosen = -1;  // part id of the bundle taken
  Rational value;   // the agent's value for the taken bundle

  // Procedure annotations (defaults mean "not applicable").
  int stage = 0;           // recursion stage serving this arrival
  std::string branch;      // e.g. "transfer", "rebundle", "fold", "base"
  int designated = -1;     // part id the procedure reserves for this agent
  std::vector<int> stage_part_items;  // designated column right after the
                                      // stage's fresh deal, before edits
  int equals_size = -1;    // |Equals| at arrival (influence procedure)
  int zeros_size = -1;     // |Zeros| at arrival (influence procedure)
  std::vector<InfluenceSwap> swaps;
};

// Full log of a sequential run: enough to re-derive and re-check every
// guarantee without re-executing the procedure.
struct Transcript {
  std::string algorithm;
  std::vector<int> order;  // agent ids by arrival position
  TiePolicy policy;
  std::vector<ArrivalRecord> records;
  std::vector<int> leftovers;          // items in no chosen bundle
  std::vector<std::string> flags;      // precondition violations, deviations
  std::vector<std::vector<int>> stage1_columns;  // first-stage pick columns,
                                                 // indexed by arrival position
  std::vector<std::vector<int>> core_parts;      // reserved cores, indexed by
                                                 // arrival position (indifference
                                                 // procedure only)
};

// Index into `menu` of the entry a rational agent with valuation `row` takes:
// an entry of maximum total value, ties resolved by `policy`.  `position`
// seeds the per-arrival stream for seeded_random.  Invariant under positive
// scaling of `row`.  Throws std::invalid_argument on an empty menu.
int rational_pick(const std::vector<Rational>& row, const std::vector<MenuEntry>& menu,
                  const TiePolicy& policy, int position);

// Presents the fixed partition to the agents in `order`, one arrival at a
// time; each takes a most valuable remaining part.  Part ids are the
// partition indices.  Items of never-chosen parts end up in leftovers.
Transcript run_static(const Instance& inst, const Partition& partition,
                      const std::vector<int>& order, const TiePolicy& policy);

struct VerifyRow {
  int position = 0;
  int agent = -1;
  Rational value;
  Rational ref;  // reference share the bound is relative to
  Bound bound;
  bool pass = false;
  bool trivial = false;  // bound <= 0, met by any value
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  bool all_pass = true;
  int trivial_count = 0;
  bool invariants_ok = true;
  std::vector<std::string> notes;
};

// Re-checks a transcript against the named guarantee: recomputes each
// agent's reference share and bound from the instance, confirms the recorded
// pick was value-maximal in its recorded menu, that no part id was taken
// twice, and that chosen bundles plus leftovers cover the items exactly.
// Influence-bounded runs are split into early/late arrivals automatically.
VerifyReport verify_transcript(const Instance& inst, const Transcript& t, TheoremId theorem);

}  // namespace fairpart

#endif  // FAIRPART_ARRIVAL_HPP
