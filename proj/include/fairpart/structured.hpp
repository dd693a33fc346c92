#ifndef FAIRPART_STRUCTURED_HPP
#define FAIRPART_STRUCTURED_HPP

#include <vector>

#include "fairpart/arrival.hpp"
#include "fairpart/model.hpp"

namespace fairpart {

// Influence set of agent a: every agent (including a itself) holding positive
// value on some item a also values positively.  D is the largest set size,
// clamped to >= 1 so it can always serve as a divisor.
struct InfluenceProfile {
  std::vector<std::vector<int>> sets;
  int D = 1;
};

InfluenceProfile influence_profile(const Instance& inst);

// Largest multiplicity among an agent's positive values (zeros are exempt
// from the count); t is the instance-wide maximum.
struct TieProfile {
  std::vector<int> per_agent;
  int t = 0;
};

TieProfile tie_profile(const Instance& inst);

// Arrival order by decreasing proportional share, agent id breaking ties.
std::vector<int> sorted_prop_order(const Instance& inst);

// Allocation for instances whose influence sets have size at most D.
// Phase 1 deals all items by the dropout-aware picking procedure; phase 2
// serves all but the last 2D-1 agents, trading items so that each arrival's
// designated part becomes its unique favorite; phase 3 pools the remaining
// parts and runs the doubling procedure (dropout-aware variant) on the last
// agents.  Early arrivals are guaranteed total/D - 1, late arrivals
// total/D - 2*ceil(log2(2D-1)) - 1, provided total/D >= 2*ceil(log2(2D-1))+2
// for every agent (violations are flagged, never hidden).
Transcript bounded_influence(const Instance& inst, const std::vector<int>& order,
                             const TiePolicy& policy);

// Allocation for instances with tie multiplicity at most t: reserves each
// agent its ceil((t+1)/2) favorite remaining items up front, deals the rest
// by sequential picking, then presents the combined bundles.  Each agent's
// reserved core strictly beats every later agent's core, and the received
// value is at least prop - ceil((t+3)/2) when prop >= ceil((t+1)/2) for all
// agents (the gate is flagged when unmet).
Transcript bounded_indifference(const Instance& inst, const std::vector<int>& order,
                                const TiePolicy& policy);

}  // namespace fairpart

#endif  // FAIRPART_STRUCTURED_HPP
