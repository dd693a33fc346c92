#ifndef FAIRPART_MODEL_HPP
#define FAIRPART_MODEL_HPP

#include <string>
#include <vector>

#include "fairpart/rational.hpp"

namespace fairpart {

// ceil(log2 x) for x >= 1, with log2_ceil(1) == 0.
int log2_ceil(long long x);

// A fair-division instance: n agents with additive valuations over m
// indivisible items.  Values live in [0, 1].  Agents and items are 0-based
// internally; the JSON codec translates to the 1-based external schema.
//
// Instances are immutable after construction: every operation that "changes"
// an instance (rescaling, projecting onto a master list, restricting to a
// sub-pool) returns a new object or a view, never mutates in place.
struct Instance {
  int n = 0;
  int m = 0;
  std::vector<std::vector<Rational>> values;  // n rows of m entries

  // Optional annotations (empty when absent).
  std::vector<int> arrival;                // agent ids in arrival order
  std::vector<int> master_list;            // item ids by master-list position
  std::vector<std::vector<int>> hypergraph;  // per item: agents allowed to value it

  const Rational& value(int agent, int item) const { return values[agent][item]; }
};

// Validates dimensions, value range [0, 1], permutation annotations, and the
// hypergraph support condition (positive value implies membership).
// Throws std::invalid_argument with a descriptive message on violation.
Instance make_instance(int n, int m, std::vector<std::vector<Rational>> values,
                       std::vector<int> arrival = {}, std::vector<int> master_list = {},
                       std::vector<std::vector<int>> hypergraph = {});

// An ordered partition of the items into n parts (empty parts allowed).
// Parts are plain item-id lists kept sorted ascending.
struct Partition {
  std::vector<std::vector<int>> parts;

  int size() const { return static_cast<int>(parts.size()); }
};

Rational total_value(const Instance& inst, int agent);

// Proportional share: the agent's value for the whole pool divided by n.
Rational prop_share(const Instance& inst, int agent);

Rational part_value(const Instance& inst, int agent, const std::vector<int>& items);

// Structural diagnosis of a candidate partition.  ok() means every item
// appears exactly once and no part references an unknown item.
struct PartitionCheck {
  std::vector<int> duplicated;  // items appearing in more than one slot
  std::vector<int> missing;     // items in no part
  std::vector<int> foreign;     // ids outside [0, m)

  bool ok() const { return duplicated.empty() && missing.empty() && foreign.empty(); }
};

PartitionCheck check_partition(const Instance& inst, const Partition& p);

// Guarantee families of the allocation procedures.  Each maps an agent's
// reference share to a worst-case value bound.  For mod_rr and the two
// bounded_influence entries the reference share is total/D (D = influence
// bound); for every other id it is the proportional share.
enum class TheoremId {
  round_robin,              // ref - 1
  all_pos,                  // ref - ceil(log2 n)
  bounded_prop,             // ref - 2 ceil(log2 i) - 1     (i = arrival position)
  bounded_prop_g,           // ref - 2 g + 1                (g = stage number)
  fair_order,               // ref - 2 ceil(log2 i) - 2
  mod_rr,                   // ref - 1
  bounded_influence_early,  // ref - 1
  bounded_influence_late,   // ref - 2 ceil(log2(2D-1)) - 1
  bounded_indiff,           // ref - ceil((t+3)/2)
  ml_ordered,               // ref - 1
  ml_linsep,                // ref - 2
  ml_linsep_t,              // ref - 1 - t                  (t = layer count)
  ml_adjacent,              // ref - 1 - sqrt(2k)
  ml_arbitrary,             // ref - 1 - k
  ml_laminar,               // ref - 1 - depth
  ml_lipschitz,             // ref - 1 - delta * k
};

const char* theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);  // throws std::invalid_argument

// Parameters a bound may depend on; unused fields are ignored per id.
struct TheoremBoundSpec {
  TheoremId id = TheoremId::round_robin;
  long long n = 0;      // cohort size (all_pos)
  long long i = 0;      // 1-based arrival position (bounded_prop, fair_order)
  long long stage = 0;  // stage number g(i) (bounded_prop_g)
  long long D = 0;      // influence bound (bounded_influence_late)
  long long t = 0;      // tie multiplicity (bounded_indiff) or layer count (ml_linsep_t)
  long long k = 0;      // swap count (ml_adjacent, ml_arbitrary, ml_lipschitz)
  long long depth = 0;  // laminar depth (ml_laminar)
  Rational delta;       // Lipschitz constant (ml_lipschitz)
};

// A guarantee threshold of the form base - sqrt(radicand), radicand >= 0.
// Most bounds are rational (radicand == 0); the adjacent-swaps bound
// ref - 1 - sqrt(2k) is not, so satisfaction is decided by cross-squaring
// instead of ever evaluating a square root numerically.
struct Bound {
  Rational base;
  Rational radicand;

  // value >= base - sqrt(radicand), decided exactly.
  bool satisfied_by(const Rational& value) const {
    Rational gap = base - value;
    if (!gap.is_positive()) return true;
    return gap * gap <= radicand;
  }

  // True when the threshold is <= 0, i.e. met by any nonnegative value.
  bool trivial() const {
    if (!base.is_positive()) return true;
    return base * base <= radicand;
  }

  bool exact() const { return radicand.is_zero(); }

  std::string str() const;  // "p/q" or "p/q - sqrt(r/s)"
};

// Worst-case value bound for the given guarantee at reference share `ref`.
// Monotone non-decreasing in `ref` for every id.
Bound theorem_bound(const TheoremBoundSpec& spec, const Rational& ref);

// Returns a copy with every value divided by the largest value present, so
// the result lies in [0, 1].  Identity when the instance is empty or all
// zero.  This is never applied implicitly anywhere in the library; guarantees
// are stated in whatever scale the instance actually carries.
Instance rescale_to_unit(const Instance& inst);

}  // namespace fairpart

#endif  // FAIRPART_MODEL_HPP
