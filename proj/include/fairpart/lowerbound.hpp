#ifndef FAIRPART_LOWERBOUND_HPP
#define FAIRPART_LOWERBOUND_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fairpart/model.hpp"

namespace fairpart {

// Instance family witnessing that no procedure can guarantee every agent
// more than prop - c*sqrt(n): valuations are 0/1 rows of a block matrix
// built from a Sylvester-Hadamard design, and every split of the items into
// n parts leaves some agent short of its share by at least sqrt(n/32) on
// the smallest part.
struct HadamardFamily {
  int n = 0;  // number of agents (multiple of 4, n/2 a power of two)
  int t = 0;  // horizontal copies of the base block (= n/4)
  int m = 0;  // number of items (= n*n/4)
  std::vector<std::vector<int>> H;        // +-1 Sylvester matrix, n/2 x n/2
  std::vector<std::vector<int>> A;        // (J+H)/2, 0/1
  std::vector<std::vector<int>> A_opp;    // J-A
  std::vector<std::vector<int>> A_tilde;  // [[A,A],[A_opp,A_opp]], n x n
  std::vector<std::vector<int>> B;        // t copies of A_tilde side by side
  Instance inst;                          // values[a][g] = B[a][g]
  std::vector<Rational> props;            // proportional shares
};

// Sylvester construction: H_1 = [1]; H_{2k} doubles by the [[H,H],[H,-H]]
// rule.  `order` must be a power of two.
std::vector<std::vector<int>> sylvester_hadamard(int order);

HadamardFamily build_lowerbound_instance(int n);

// Exact identity behind the family: for every rational y,
//   sum_a (row_a . y)^2  ==  (n/4)*(sum y)^2 + (n/4)*sum_i (y_i + y_{i+n/2})^2
// where row_a ranges over the rows of A_tilde.  Returns (lhs, rhs).
std::pair<Rational, Rational> l2_identity(const std::vector<std::vector<int>>& a_tilde,
                                          const std::vector<Rational>& y);

// For one assignment of items to parts: look at the smallest part (fewest
// items, lowest index on ties); the agent with the largest absolute gap
// between share and part value — or its opposite-row partner when that gap
// is an excess — is short by at least sqrt(n/32).
struct WitnessResult {
  int part = -1;     // smallest part inspected
  int anchor = -1;   // agent with the largest |share - value| on that part
  int witness = -1;  // anchor itself, or (anchor + n/2) mod n
  bool opposite = false;
  Rational deficit;  // share(witness) - value(witness, part)
  bool pass = false;  // deficit >= 0 and deficit^2 >= n/32
};

WitnessResult witness_for(const HadamardFamily& fam, const std::vector<int>& assignment);

struct BruteForceReport {
  int n = 0;
  std::string mode;  // "exhaustive" or "sampled"
  long long checked = 0;
  long long failures = 0;
  bool all_pass = false;
  Rational min_deficit;       // smallest witness deficit seen
  Rational threshold_sq;      // n/32
  long long direct = 0;       // witnesses equal to their anchor
  long long opposite = 0;     // witnesses on the opposite row
  std::uint64_t seed = 0;     // sampled mode only
  std::vector<int> min_assignment;    // assignment achieving min_deficit
  std::vector<std::string> evidence;  // failing assignments, capped
};

// Every one of the n^m assignments.  Throws std::invalid_argument when that
// count exceeds 10^7.
BruteForceReport exhaustive_check(const HadamardFamily& fam);

// `count` uniformly random assignments from a deterministic stream.
BruteForceReport sampled_check(const HadamardFamily& fam, long long count,
                               std::uint64_t seed);

// Minimal over all k-colorings of the columns of the largest row/color
// imbalance |sum of the color's entries - rowsum/k|.  Exhaustive; requires
// k^(columns) <= 10^7.
Rational exact_discrepancy(const std::vector<std::vector<Rational>>& mat, int k);

}  // namespace fairpart

#endif  // FAIRPART_LOWERBOUND_HPP
