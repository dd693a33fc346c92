#ifndef FAIRPART_DYNAMIC_HPP
#define FAIRPART_DYNAMIC_HPP

#include <vector>

#include "fairpart/arrival.hpp"
#include "fairpart/model.hpp"

namespace fairpart {

// Stage in which arrival position i (1-based) is served when n agents are
// processed by halving: the first floor(n/2) positions are served in the
// current stage, the rest recursively.  stage_of(i, n) <= ceil(log2 i) + 1.
int stage_of(long long i, long long n);

// Recursive halving procedure for strictly positive valuations.  Each stage
// deals the pool by sequential picking, tops up the first half of the cohort
// with one item donated by a partner column, serves those agents, and recurses
// on the second half with the unpicked items.  An agent served at stage k
// receives at least prop - k, hence at least prop - ceil(log2 n) overall.
Transcript all_pos_val(const Instance& inst, const std::vector<int>& order,
                       const TiePolicy& policy);

enum class RRVariant { plain, modified };

// Recursive halving procedure driven by donor-cell accounting.  Per stage:
// the first half of the cohort is served in order; an arrival either takes a
// positively valued unconsumed cell from the first two picks of a donor
// column (persistent transfer), or — when it values all such cells at zero —
// is shown an ephemeral rebundling that swaps later receivers' top cells with
// donor top cells; the last receiver of the stage folds every unconsumed
// donor top-2 cell into its part.  Provided prop_i >= 2*(ceil(log2 i)+1) for
// every arrival position i, agent i's designated part is its unique favorite
// and is worth at least prop_i - 2*ceil(log2 i) - 1 (equivalently at least
// prop_i - 2*g(i) + 1 in terms of its stage g(i)).  Positions violating the
// gate are flagged; guarantees from the first violator onward are void.
Transcript bounded_prop(const Instance& inst, const std::vector<int>& order,
                        const TiePolicy& policy, RRVariant variant = RRVariant::plain);

// Arrival order maximizing how many positions carry a non-trivial guarantee:
// greedily fills position i with the highest-share agent still clearing
// 2*(ceil(log2 i)+1), then appends the rest by decreasing share.  split is
// the number of positions filled by the greedy phase.  Running the halving
// procedure under this order guarantees position i at least
// prop - 2*ceil(log2 i) - 2.
struct FairOrder {
  std::vector<int> order;  // agent ids by arrival position
  int split = 0;
};

FairOrder fair_arrival_order(const Instance& inst);
FairOrder fair_order_from_props(const std::vector<Rational>& props);

// Demonstration driver for dynamic rebundling over a fixed initial partition:
// at each arrival i < n, up to two lowest-id items the arriving agent values
// positively are moved from part i+1 into part i before the menu is shown.
// Arrivals follow agent-id order.
Transcript rebundling_demo(const Instance& inst, const Partition& initial,
                           const TiePolicy& policy);

namespace detail {
// Core of bounded_prop, reusable as the tail phase of other procedures.
// Serves `cohort` (agent ids, in arrival order) out of `items`, appending
// records with positions first_position, first_position+1, ...  When
// record_stage1 is set, the first stage's pick columns are captured into
// t.stage1_columns (indexed by position, 1-based offset first_position).
void run_bounded_prop(const Instance& inst, const std::vector<int>& cohort,
                      std::vector<int> items, const TiePolicy& policy, RRVariant variant,
                      int first_position, bool record_stage1, Transcript& t);
}  // namespace detail

}  // namespace fairpart

#endif  // FAIRPART_DYNAMIC_HPP
