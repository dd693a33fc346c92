#include "fairpart/model.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace fairpart {

int log2_ceil(long long x) {
  if (x < 1) throw std::invalid_argument("log2_ceil: argument must be >= 1");
  int k = 0;
  long long p = 1;
  while (p < x) {
    p <<= 1;
    ++k;
  }
  return k;
}

Instance make_instance(int n, int m, std::vector<std::vector<Rational>> values,
                       std::vector<int> arrival, std::vector<int> master_list,
                       std::vector<std::vector<int>> hypergraph) {
  if (n < 1) throw std::invalid_argument("instance: n must be >= 1");
  if (m < 0) throw std::invalid_argument("instance: m must be >= 0");
  if (static_cast<int>(values.size()) != n)
    throw std::invalid_argument("instance: expected " + std::to_string(n) + " value rows");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(values[a].size()) != m)
      throw std::invalid_argument("instance: row " + std::to_string(a + 1) + " has " +
                                  std::to_string(values[a].size()) + " entries, expected " +
                                  std::to_string(m));
    for (int g = 0; g < m; ++g) {
      const Rational& v = values[a][g];
      if (v.is_negative() || v > Rational(1))
        throw std::invalid_argument("instance: value for agent " + std::to_string(a + 1) +
                                    ", item " + std::to_string(g + 1) +
                                    " is outside [0, 1]: " + v.str());
    }
  }
  auto check_perm = [](const std::vector<int>& p, int count, const char* what) {
    if (p.empty()) return;
    if (static_cast<int>(p.size()) != count)
      throw std::invalid_argument(std::string("instance: ") + what + " has wrong length");
    std::vector<char> seen(count, 0);
    for (int x : p) {
      if (x < 0 || x >= count || seen[x])
        throw std::invalid_argument(std::string("instance: ") + what +
                                    " is not a permutation");
      seen[x] = 1;
    }
  };
  check_perm(arrival, n, "arrival order");
  check_perm(master_list, m, "master list");
  if (!hypergraph.empty()) {
    if (static_cast<int>(hypergraph.size()) != m)
      throw std::invalid_argument("instance: hypergraph needs one edge per item");
    for (int g = 0; g < m; ++g) {
      std::vector<char> in(n, 0);
      for (int a : hypergraph[g]) {
        if (a < 0 || a >= n)
          throw std::invalid_argument("instance: hypergraph edge references unknown agent");
        in[a] = 1;
      }
      for (int a = 0; a < n; ++a)
        if (values[a][g].is_positive() && !in[a])
          throw std::invalid_argument("instance: agent " + std::to_string(a + 1) +
                                      " values item " + std::to_string(g + 1) +
                                      " outside its hypergraph edge");
    }
  }
  Instance inst;
  inst.n = n;
  inst.m = m;
  inst.values = std::move(values);
  inst.arrival = std::move(arrival);
  inst.master_list = std::move(master_list);
  inst.hypergraph = std::move(hypergraph);
  return inst;
}

Rational total_value(const Instance& inst, int agent) {
  Rational s;
  for (const Rational& v : inst.values[agent]) s += v;
  return s;
}

Rational prop_share(const Instance& inst, int agent) {
  return total_value(inst, agent) / Rational(inst.n);
}

Rational part_value(const Instance& inst, int agent, const std::vector<int>& items) {
  Rational s;
  for (int g : items) s += inst.values[agent][g];
  return s;
}

PartitionCheck check_partition(const Instance& inst, const Partition& p) {
  PartitionCheck out;
  std::vector<int> count(inst.m, 0);
  for (const auto& part : p.parts) {
    for (int g : part) {
      if (g < 0 || g >= inst.m) {
        out.foreign.push_back(g);
        continue;
      }
      ++count[g];
    }
  }
  for (int g = 0; g < inst.m; ++g) {
    if (count[g] == 0) out.missing.push_back(g);
    if (count[g] > 1) out.duplicated.push_back(g);
  }
  return out;
}

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::round_robin: return "round_robin";
    case TheoremId::all_pos: return "all_pos";
    case TheoremId::bounded_prop: return "bounded_prop";
    case TheoremId::bounded_prop_g: return "bounded_prop_g";
    case TheoremId::fair_order: return "fair_order";
    case TheoremId::mod_rr: return "mod_rr";
    case TheoremId::bounded_influence_early: return "bounded_influence_early";
    case TheoremId::bounded_influence_late: return "bounded_influence_late";
    case TheoremId::bounded_indiff: return "bounded_indiff";
    case TheoremId::ml_ordered: return "ml_ordered";
    case TheoremId::ml_linsep: return "ml_linsep";
    case TheoremId::ml_linsep_t: return "ml_linsep_t";
    case TheoremId::ml_adjacent: return "ml_adjacent";
    case TheoremId::ml_arbitrary: return "ml_arbitrary";
    case TheoremId::ml_laminar: return "ml_laminar";
    case TheoremId::ml_lipschitz: return "ml_lipschitz";
  }
  return "?";
}

TheoremId theorem_from_name(const std::string& name) {
  static const std::unordered_map<std::string, TheoremId> table = {
      {"round_robin", TheoremId::round_robin},
      {"all_pos", TheoremId::all_pos},
      {"bounded_prop", TheoremId::bounded_prop},
      {"bounded_prop_g", TheoremId::bounded_prop_g},
      {"fair_order", TheoremId::fair_order},
      {"mod_rr", TheoremId::mod_rr},
      {"bounded_influence_early", TheoremId::bounded_influence_early},
      {"bounded_influence_late", TheoremId::bounded_influence_late},
      {"bounded_indiff", TheoremId::bounded_indiff},
      {"ml_ordered", TheoremId::ml_ordered},
      {"ml_linsep", TheoremId::ml_linsep},
      {"ml_linsep_t", TheoremId::ml_linsep_t},
      {"ml_adjacent", TheoremId::ml_adjacent},
      {"ml_arbitrary", TheoremId::ml_arbitrary},
      {"ml_laminar", TheoremId::ml_laminar},
      {"ml_lipschitz", TheoremId::ml_lipschitz},
  };
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown theorem id: " + name);
  return it->second;
}

std::string Bound::str() const {
  if (radicand.is_zero()) return base.str();
  return base.str() + " - sqrt(" + radicand.str() + ")";
}

Bound theorem_bound(const TheoremBoundSpec& spec, const Rational& ref) {
  auto need_pos = [&](long long v, const char* what) {
    if (v < 1)
      throw std::invalid_argument(std::string("theorem_bound: ") + what +
                                  " must be >= 1 for " + theorem_name(spec.id));
  };
  Bound b;
  switch (spec.id) {
    case TheoremId::round_robin:
    case TheoremId::mod_rr:
    case TheoremId::bounded_influence_early:
    case TheoremId::ml_ordered:
      b.base = ref - Rational(1);
      break;
    case TheoremId::all_pos:
      need_pos(spec.n, "n");
      b.base = ref - Rational(log2_ceil(spec.n));
      break;
    case TheoremId::bounded_prop:
      need_pos(spec.i, "i");
      b.base = ref - Rational(2 * log2_ceil(spec.i) + 1);
      break;
    case TheoremId::bounded_prop_g:
      need_pos(spec.stage, "stage");
      b.base = ref - Rational(2 * spec.stage - 1);
      break;
    case TheoremId::fair_order:
      need_pos(spec.i, "i");
      b.base = ref - Rational(2 * log2_ceil(spec.i) + 2);
      break;
    case TheoremId::bounded_influence_late:
      need_pos(spec.D, "D");
      b.base = ref - Rational(2 * log2_ceil(2 * spec.D - 1) + 1);
      break;
    case TheoremId::bounded_indiff:
      if (spec.t < 0) throw std::invalid_argument("theorem_bound: t must be >= 0");
      b.base = ref - Rational((spec.t + 3 + 1) / 2);  // ceil((t+3)/2)
      break;
    case TheoremId::ml_linsep:
      b.base = ref - Rational(2);
      break;
    case TheoremId::ml_linsep_t:
      if (spec.t < 0) throw std::invalid_argument("theorem_bound: t must be >= 0");
      b.base = ref - Rational(1 + spec.t);
      break;
    case TheoremId::ml_adjacent:
      if (spec.k < 0) throw std::invalid_argument("theorem_bound: k must be >= 0");
      b.base = ref - Rational(1);
      b.radicand = Rational(2 * spec.k);
      break;
    case TheoremId::ml_arbitrary:
      if (spec.k < 0) throw std::invalid_argument("theorem_bound: k must be >= 0");
      b.base = ref - Rational(1 + spec.k);
      break;
    case TheoremId::ml_laminar:
      if (spec.depth < 0) throw std::invalid_argument("theorem_bound: depth must be >= 0");
      b.base = ref - Rational(1 + spec.depth);
      break;
    case TheoremId::ml_lipschitz:
      if (spec.k < 0) throw std::invalid_argument("theorem_bound: k must be >= 0");
      if (spec.delta.is_negative())
        throw std::invalid_argument("theorem_bound: delta must be >= 0");
      b.base = ref - Rational(1) - spec.delta * Rational(spec.k);
      break;
  }
  return b;
}

Instance rescale_to_unit(const Instance& inst) {
  Rational top;
  for (const auto& row : inst.values)
    for (const auto& v : row) top = max(top, v);
  if (!top.is_positive() || top == Rational(1)) return inst;
  Instance out = inst;
  for (auto& row : out.values)
    for (auto& v : row) v /= top;
  return out;
}

}  // namespace fairpart
