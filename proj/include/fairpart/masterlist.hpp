#ifndef FAIRPART_MASTERLIST_HPP
#define FAIRPART_MASTERLIST_HPP

#include <utility>
#include <vector>

#include "fairpart/model.hpp"
#include "fairpart/roundrobin.hpp"

namespace fairpart {

// A swap of two master-list positions (0-based, first < second).  Swap sets
// are multisets: the same position pair may appear with multiplicity.
using Swap = std::pair<int, int>;

// Replaces every row by its own values re-read in master-list order: the
// sorted (non-increasing) values x_1 >= ... >= x_m of agent a are assigned so
// that row[pi[i]] = x_i.  Projected rows are non-increasing along pi.
std::vector<std::vector<Rational>> projected_valuations(const Instance& inst,
                                                        const std::vector<int>& pi);

// Sequential picking on the projected valuations, value ties broken by the
// earliest master-list position.  Because every projected row is
// non-increasing along pi, the result does not depend on whose row is used:
// it always deals position 1 to part 1, position 2 to part 2, and so on
// cyclically.  Columns are positions in picking order mapped back to items.
RoundRobinResult masterlist_partition(const Instance& inst, const std::vector<int>& pi);

// Minimal number of adjacent transpositions turning pi into sigma
// (= inversion count between the two orders).
long long adjacent_swap_distance(const std::vector<int>& sigma, const std::vector<int>& pi);

// Minimal number of arbitrary transpositions turning pi into sigma
// (= m minus the number of cycles of the relative permutation).
long long transposition_distance(const std::vector<int>& sigma, const std::vector<int>& pi);

// A swap multiset is linearly separable when for every ordered pair of
// distinct elements (p1,p2), (p3,p4) with p1 <= p3: p2 <= p3 and p1 < p4.
// Sharing an endpoint is allowed; properly overlapping or duplicated swaps
// are not.  The empty set is separable.
bool is_linearly_separable(const std::vector<Swap>& swaps);

struct SwapLayers {
  std::vector<std::vector<Swap>> layers;

  int count() const { return static_cast<int>(layers.size()); }
};

// Minimal decomposition into linearly separable layers: equals the maximum
// number of swaps whose open intervals share a point, found by a sweep that
// reuses a layer as soon as its last interval has closed (endpoints may
// touch).  Every returned layer is linearly separable.
SwapLayers min_linsep_layers(std::vector<Swap> swaps);

// Laminar: every two swaps are nested or internally disjoint.
bool is_laminar(const std::vector<Swap>& swaps);

// Number of peeling rounds that empty the multiset when each round removes
// one copy of every maximal (not strictly contained) swap still present.
// Throws std::invalid_argument when the multiset is not laminar.
int laminar_depth(std::vector<Swap> swaps);

// Adjacent-swap multiset transforming pi into sigma: repeatedly bubbles the
// item with the smallest target position among those sitting right of their
// target.  The size of the result equals adjacent_swap_distance(sigma, pi),
// and grouping the i-th copies of each swap into layer i yields at most
// ceil(sqrt(2k)) linearly separable layers.
std::vector<Swap> bubble_decomposition(const std::vector<int>& sigma,
                                       const std::vector<int>& pi);

// Layer i collects the i-th copy of every swap in the multiset.
SwapLayers copy_layers(const std::vector<Swap>& swaps);

// Largest difference between consecutive projected values, over all agents
// and all adjacent master-list positions.  Zero when m < 2.
Rational lipschitz_delta(const Instance& inst, const std::vector<int>& pi);

// The agent's preference order as a list of items, most preferred first;
// equal values are ordered by master-list position (the resolution closest
// to pi among all orders consistent with the row).
std::vector<int> derive_agent_permutation(const std::vector<Rational>& row,
                                          const std::vector<int>& pi);

// Structure class an agent's preference order is declared to fall in,
// relative to the master list, with the parameters its guarantee needs.
enum class MlClass { ordered, linsep, linsep_t, adjacent, arbitrary, laminar, lipschitz };

const char* ml_class_name(MlClass c);

struct MlAgentSpec {
  MlClass cls = MlClass::ordered;
  long long k = 0;       // swap count (adjacent, arbitrary, lipschitz)
  long long layers = 0;  // separable layer count (linsep_t)
  long long depth = 0;   // laminar depth
  Rational delta;        // Lipschitz constant
};

struct MlVerifyRow {
  int agent = -1;
  Rational min_part_value;  // worst part of the master-list partition
  Rational ref;
  Bound bound;
  bool pass = false;
};

struct MlVerifyReport {
  std::vector<MlVerifyRow> rows;
  bool all_pass = true;
};

// Checks that every part of the master-list partition satisfies each agent's
// class bound — the partition is one-size-fits-all, so the minimum over
// parts is what must clear the threshold.
MlVerifyReport verify_masterlist_guarantees(const Instance& inst, const std::vector<int>& pi,
                                            const std::vector<MlAgentSpec>& specs);

}  // namespace fairpart

#endif  // FAIRPART_MASTERLIST_HPP
