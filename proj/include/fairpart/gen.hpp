#ifndef FAIRPART_GEN_HPP
#define FAIRPART_GEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fairpart/masterlist.hpp"
#include "fairpart/model.hpp"

namespace fairpart {

// Instance families exercising the different allocation procedures.  Every
// family is deterministic in (spec, seed).
enum class GenFamily {
  uniform,             // iid values on the 1/2^16 grid, zeros allowed
  strictly_positive,   // iid values in [floor, 1]
  bounded_prop,        // strictly positive, every prop share clears the
                       // doubling procedure's gate under identity arrival
  hypergraph,          // block-structured support with influence bound D
  masterlist_swaps,    // per-agent orders at a crafted distance from a
                       // random master list
  lipschitz,           // masterlist_swaps with bounded consecutive steps
  bounded_ties,        // tie multiplicity exactly `ties` for every agent
  rebundling_fixture,  // the static-vs-rebundled separation fixture
};

const char* gen_family_name(GenFamily f);
GenFamily gen_family_from_name(const std::string& name);

enum class SwapKind { adjacent, arbitrary, linsep, laminar };

const char* swap_kind_name(SwapKind k);
SwapKind swap_kind_from_name(const std::string& name);

struct GenSpec {
  GenFamily family = GenFamily::uniform;
  int n = 4;
  int m = 16;
  std::uint64_t seed = 1;
  Rational floor = Rational(1, 1 << 16);  // strictly_positive only
  int D = 2;                              // hypergraph block size
  SwapKind swap_kind = SwapKind::adjacent;
  long long swaps = 0;   // target distance / total swap count
  int layers = 1;        // linsep rounds (>1 yields a layered multiset)
  long long depth = 1;   // laminar chain length (depth <= swaps)
  Rational delta = Rational(1, 16);  // lipschitz step bound
  int ties = 1;          // bounded_ties multiplicity
  int fixture_prop = 1;  // rebundling fixture scale P
};

struct GenResult {
  GenSpec spec;
  Instance inst;
  // masterlist_swaps / lipschitz: the swaps applied per agent (master-list
  // position pairs) and the realized distance per agent.
  std::vector<std::vector<Swap>> swap_sets;
  std::vector<long long> swap_counts;
  int D = 0;               // hypergraph: the block size actually used
  int t = 0;               // bounded_ties: realized tie multiplicity
  Rational delta;          // lipschitz: step bound the values obey
  int layers = 0;          // linsep rounds applied
  long long depth = 0;     // laminar chain length applied
  Partition fixture_partition;  // rebundling fixture blocks
};

// Throws std::invalid_argument when the spec is infeasible (dimension
// mismatch, unreachable retry target, distance beyond the permutation
// diameter).
GenResult generate(const GenSpec& spec);

}  // namespace fairpart

#endif  // FAIRPART_GEN_HPP
