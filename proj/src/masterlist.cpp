#include "fairpart/masterlist.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace fairpart {

namespace {

void require_perm(const std::vector<int>& p, int count, const char* what) {
  if (static_cast<int>(p.size()) != count)
    throw std::invalid_argument(std::string(what) + ": wrong length");
  std::vector<char> seen(count, 0);
  for (int x : p) {
    if (x < 0 || x >= count || seen[x])
      throw std::invalid_argument(std::string(what) + ": not a permutation");
    seen[x] = 1;
  }
}

// seq[i] = position in sigma of the item at position i of pi; the identity
// exactly when the two orders agree.
std::vector<int> relative_positions(const std::vector<int>& sigma,
                                    const std::vector<int>& pi) {
  int m = static_cast<int>(pi.size());
  require_perm(sigma, m, "sigma");
  require_perm(pi, m, "pi");
  std::vector<int> pos_in_sigma(m);
  for (int i = 0; i < m; ++i) pos_in_sigma[sigma[i]] = i;
  std::vector<int> seq(m);
  for (int i = 0; i < m; ++i) seq[i] = pos_in_sigma[pi[i]];
  return seq;
}

void require_swap(const Swap& s) {
  if (s.first < 0 || s.second <= s.first)
    throw std::invalid_argument("swap: need 0 <= first < second");
}

}  // namespace

std::vector<std::vector<Rational>> projected_valuations(const Instance& inst,
                                                        const std::vector<int>& pi) {
  require_perm(pi, inst.m, "master list");
  std::vector<std::vector<Rational>> out(inst.n, std::vector<Rational>(inst.m));
  for (int a = 0; a < inst.n; ++a) {
    std::vector<Rational> xs = inst.values[a];
    std::sort(xs.begin(), xs.end(), [](const Rational& x, const Rational& y) { return y < x; });
    for (int i = 0; i < inst.m; ++i) out[a][pi[i]] = xs[i];
  }
  return out;
}

RoundRobinResult masterlist_partition(const Instance& inst, const std::vector<int>& pi) {
  // Relabel items by master-list position; the lowest-id tie rule of the
  // picking procedure then realizes "earliest position wins".
  Instance relabeled;
  relabeled.n = inst.n;
  relabeled.m = inst.m;
  auto projected = projected_valuations(inst, pi);
  relabeled.values.assign(inst.n, std::vector<Rational>(inst.m));
  for (int a = 0; a < inst.n; ++a)
    for (int i = 0; i < inst.m; ++i) relabeled.values[a][i] = projected[a][pi[i]];
  std::vector<int> agents(inst.n);
  std::iota(agents.begin(), agents.end(), 0);
  std::vector<int> positions(inst.m);
  std::iota(positions.begin(), positions.end(), 0);
  RoundRobinResult rr = round_robin(relabeled, agents, positions);
  for (auto& col : rr.pm.columns)
    for (int& g : col) g = pi[g];
  rr.parts = partition_of(rr.pm);
  return rr;
}

long long adjacent_swap_distance(const std::vector<int>& sigma, const std::vector<int>& pi) {
  std::vector<int> seq = relative_positions(sigma, pi);
  long long inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv;
}

long long transposition_distance(const std::vector<int>& sigma, const std::vector<int>& pi) {
  std::vector<int> seq = relative_positions(sigma, pi);
  int m = static_cast<int>(seq.size());
  std::vector<char> seen(m, 0);
  int cycles = 0;
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = seq[j]) seen[j] = 1;
  }
  return m - cycles;
}

bool is_linearly_separable(const std::vector<Swap>& swaps) {
  for (const Swap& s : swaps) require_swap(s);
  for (std::size_t i = 0; i < swaps.size(); ++i)
    for (std::size_t j = 0; j < swaps.size(); ++j) {
      if (i == j) continue;
      const Swap& x = swaps[i];
      const Swap& y = swaps[j];
      if (x.first <= y.first && !(x.second <= y.first && x.first < y.second)) return false;
    }
  return true;
}

SwapLayers min_linsep_layers(std::vector<Swap> swaps) {
  for (const Swap& s : swaps) require_swap(s);
  std::sort(swaps.begin(), swaps.end());
  SwapLayers out;
  // (end of the last interval, layer) — reuse the earliest-closing layer.
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>>
      open;
  for (const Swap& s : swaps) {
    int layer;
    if (!open.empty() && open.top().first <= s.first) {
      layer = open.top().second;
      open.pop();
    } else {
      layer = out.count();
      out.layers.emplace_back();
    }
    out.layers[layer].push_back(s);
    open.emplace(s.second, layer);
  }
  return out;
}

bool is_laminar(const std::vector<Swap>& swaps) {
  for (const Swap& s : swaps) require_swap(s);
  for (std::size_t i = 0; i < swaps.size(); ++i)
    for (std::size_t j = i + 1; j < swaps.size(); ++j) {
      const Swap& x = swaps[i];
      const Swap& y = swaps[j];
      bool disjoint = x.second <= y.first || y.second <= x.first;
      bool nested = (x.first <= y.first && y.second <= x.second) ||
                    (y.first <= x.first && x.second <= y.second);
      if (!disjoint && !nested) return false;
    }
  return true;
}

int laminar_depth(std::vector<Swap> swaps) {
  if (!is_laminar(swaps)) throw std::invalid_argument("laminar_depth: multiset not laminar");
  std::map<Swap, int> count;
  for (const Swap& s : swaps) ++count[s];
  int depth = 0;
  while (!count.empty()) {
    ++depth;
    std::vector<Swap> maximal;
    for (const auto& [s, c] : count) {
      bool contained = false;
      for (const auto& [o, oc] : count)
        if (o != s && o.first <= s.first && s.second <= o.second) {
          contained = true;
          break;
        }
      if (!contained) maximal.push_back(s);
    }
    for (const Swap& s : maximal) {
      auto it = count.find(s);
      if (--it->second == 0) count.erase(it);
    }
  }
  return depth;
}

std::vector<Swap> bubble_decomposition(const std::vector<int>& sigma,
                                       const std::vector<int>& pi) {
  int m = static_cast<int>(pi.size());
  require_perm(sigma, m, "sigma");
  require_perm(pi, m, "pi");
  std::vector<int> target(m);  // target[item] = position in sigma
  for (int i = 0; i < m; ++i) target[sigma[i]] = i;
  std::vector<int> cur = pi;
  std::vector<Swap> swaps;
  while (true) {
    // Item sitting right of its target, with the smallest target position.
    int from = -1, to = -1;
    for (int p = 0; p < m; ++p) {
      int tp = target[cur[p]];
      if (p > tp && (to < 0 || tp < to)) {
        from = p;
        to = tp;
      }
    }
    if (from < 0) break;
    for (int q = from; q > to; --q) {
      std::swap(cur[q], cur[q - 1]);
      swaps.emplace_back(q - 1, q);
    }
  }
  if (cur != sigma) throw std::logic_error("bubble_decomposition: did not converge");
  return swaps;
}

SwapLayers copy_layers(const std::vector<Swap>& swaps) {
  std::map<Swap, int> count;
  for (const Swap& s : swaps) ++count[s];
  int rounds = 0;
  for (const auto& [s, c] : count) rounds = std::max(rounds, c);
  SwapLayers out;
  out.layers.resize(rounds);
  for (const auto& [s, c] : count)
    for (int l = 0; l < c; ++l) out.layers[l].push_back(s);
  return out;
}

Rational lipschitz_delta(const Instance& inst, const std::vector<int>& pi) {
  require_perm(pi, inst.m, "master list");
  if (inst.m < 2) return Rational(0);
  Rational best;
  for (int a = 0; a < inst.n; ++a) {
    std::vector<Rational> xs = inst.values[a];
    std::sort(xs.begin(), xs.end(), [](const Rational& x, const Rational& y) { return y < x; });
    for (int i = 0; i + 1 < inst.m; ++i) best = max(best, xs[i] - xs[i + 1]);
  }
  return best;
}

std::vector<int> derive_agent_permutation(const std::vector<Rational>& row,
                                          const std::vector<int>& pi) {
  int m = static_cast<int>(row.size());
  require_perm(pi, m, "master list");
  std::vector<int> pos_in_pi(m);
  for (int i = 0; i < m; ++i) pos_in_pi[pi[i]] = i;
  std::vector<int> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::stable_sort(sigma.begin(), sigma.end(), [&](int a, int b) {
    if (row[a] != row[b]) return row[b] < row[a];
    return pos_in_pi[a] < pos_in_pi[b];
  });
  return sigma;
}

const char* ml_class_name(MlClass c) {
  switch (c) {
    case MlClass::ordered: return "ordered";
    case MlClass::linsep: return "linsep";
    case MlClass::linsep_t: return "linsep_t";
    case MlClass::adjacent: return "adjacent";
    case MlClass::arbitrary: return "arbitrary";
    case MlClass::laminar: return "laminar";
    case MlClass::lipschitz: return "lipschitz";
  }
  return "?";
}

MlVerifyReport verify_masterlist_guarantees(const Instance& inst, const std::vector<int>& pi,
                                            const std::vector<MlAgentSpec>& specs) {
  if (static_cast<int>(specs.size()) != inst.n)
    throw std::invalid_argument("verify_masterlist_guarantees: need one spec per agent");
  RoundRobinResult rr = masterlist_partition(inst, pi);
  MlVerifyReport rep;
  for (int a = 0; a < inst.n; ++a) {
    MlVerifyRow row;
    row.agent = a;
    row.ref = prop_share(inst, a);
    bool first = true;
    for (const auto& part : rr.parts.parts) {
      Rational v = part_value(inst, a, part);
      if (first || v < row.min_part_value) row.min_part_value = v;
      first = false;
    }
    TheoremBoundSpec tb;
    switch (specs[a].cls) {
      case MlClass::ordered: tb.id = TheoremId::ml_ordered; break;
      case MlClass::linsep: tb.id = TheoremId::ml_linsep; break;
      case MlClass::linsep_t:
        tb.id = TheoremId::ml_linsep_t;
        tb.t = specs[a].layers;
        break;
      case MlClass::adjacent:
        tb.id = TheoremId::ml_adjacent;
        tb.k = specs[a].k;
        break;
      case MlClass::arbitrary:
        tb.id = TheoremId::ml_arbitrary;
        tb.k = specs[a].k;
        break;
      case MlClass::laminar:
        tb.id = TheoremId::ml_laminar;
        tb.depth = specs[a].depth;
        break;
      case MlClass::lipschitz:
        tb.id = TheoremId::ml_lipschitz;
        tb.k = specs[a].k;
        tb.delta = specs[a].delta;
        break;
    }
    row.bound = theorem_bound(tb, row.ref);
    row.pass = row.bound.satisfied_by(row.min_part_value);
    if (!row.pass) rep.all_pass = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace fairpart
