#include "fairpart/gen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fairpart/rng.hpp"

namespace fairpart {

namespace {

constexpr long long kGrid = 1 << 16;
constexpr int kRetries = 1000;

// m distinct numerators from [lo, hi], descending.
std::vector<long long> distinct_desc(Rng& rng, int count, long long lo, long long hi) {
  if (hi - lo + 1 < count)
    throw std::invalid_argument("generate: not enough grid levels for distinct values");
  std::set<long long> seen;
  while (static_cast<int>(seen.size()) < count) seen.insert(rng.uniform(lo, hi));
  std::vector<long long> out(seen.rbegin(), seen.rend());
  return out;
}

// ranks[p] = preference rank of the item at master-list position p.  The
// swaps below permute ranks in position coordinates; the preference order is
// recovered by inverting at the end.
std::vector<int> invert(const std::vector<int>& ranks) {
  std::vector<int> seq(ranks.size());
  for (std::size_t p = 0; p < ranks.size(); ++p) seq[ranks[p]] = static_cast<int>(p);
  return seq;
}

long long max_adjacent_distance(int m) { return static_cast<long long>(m) * (m - 1) / 2; }

// k adjacent transpositions, each strictly increasing the inversion count,
// so the resulting order is at adjacent-swap distance exactly k.
std::vector<Swap> apply_adjacent(Rng& rng, std::vector<int>& ranks, long long k) {
  int m = static_cast<int>(ranks.size());
  std::vector<Swap> swaps;
  for (long long s = 0; s < k; ++s) {
    std::vector<int> rising;
    for (int p = 0; p + 1 < m; ++p)
      if (ranks[p] < ranks[p + 1]) rising.push_back(p);
    if (rising.empty()) throw std::logic_error("generate: inversion budget exhausted");
    int p = rising[rng.uniform(0, static_cast<long long>(rising.size()) - 1)];
    std::swap(ranks[p], ranks[p + 1]);
    swaps.emplace_back(p, p + 1);
  }
  return swaps;
}

long long transposition_distance_of(const std::vector<int>& ranks) {
  int m = static_cast<int>(ranks.size());
  std::vector<char> seen(m, 0);
  int cycles = 0;
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = ranks[j]) seen[j] = 1;
  }
  return m - cycles;
}

// k transpositions, each increasing the transposition distance by one.
std::vector<Swap> apply_arbitrary(Rng& rng, std::vector<int>& ranks, long long k) {
  int m = static_cast<int>(ranks.size());
  std::vector<Swap> swaps;
  for (long long s = 0; s < k; ++s) {
    long long before = transposition_distance_of(ranks);
    int p = -1, q = -1;
    for (int attempt = 0; attempt < 64 && p < 0; ++attempt) {
      int a = static_cast<int>(rng.uniform(0, m - 1));
      int b = static_cast<int>(rng.uniform(0, m - 1));
      if (a == b) continue;
      std::swap(ranks[a], ranks[b]);
      if (transposition_distance_of(ranks) == before + 1) {
        p = std::min(a, b);
        q = std::max(a, b);
      } else {
        std::swap(ranks[a], ranks[b]);
      }
    }
    for (int a = 0; a < m && p < 0; ++a)
      for (int b = a + 1; b < m && p < 0; ++b) {
        std::swap(ranks[a], ranks[b]);
        if (transposition_distance_of(ranks) == before + 1) {
          p = a;
          q = b;
        } else {
          std::swap(ranks[a], ranks[b]);
        }
      }
    if (p < 0) throw std::logic_error("generate: transposition budget exhausted");
    swaps.emplace_back(p, q);
  }
  return swaps;
}

// One linearly separable round: 2k distinct positions, sorted, paired left
// to right — pairwise disjoint intervals.
std::vector<Swap> apply_linsep_round(Rng& rng, std::vector<int>& ranks, long long k) {
  int m = static_cast<int>(ranks.size());
  if (2 * k > m) throw std::invalid_argument("generate: linsep needs m >= 2*swaps");
  std::vector<int> pos = rng.permutation(m);
  pos.resize(static_cast<std::size_t>(2 * k));
  std::sort(pos.begin(), pos.end());
  std::vector<Swap> swaps;
  for (long long i = 0; i < k; ++i) {
    int a = pos[2 * i], b = pos[2 * i + 1];
    std::swap(ranks[a], ranks[b]);
    swaps.emplace_back(a, b);
  }
  return swaps;
}

// Nested chain (s+j, s+2d-1-j) of depth d plus `extra` disjoint adjacent
// pairs strictly after the chain.
std::vector<Swap> apply_laminar(Rng& rng, std::vector<int>& ranks, long long depth,
                                long long extra) {
  int m = static_cast<int>(ranks.size());
  long long need = 2 * depth + 2 * extra;
  if (depth < 1 || need > m)
    throw std::invalid_argument("generate: laminar needs m >= 2*depth + 2*(swaps-depth)");
  long long s = rng.uniform(0, m - need);
  std::vector<Swap> swaps;
  for (long long j = 0; j < depth; ++j) {
    int a = static_cast<int>(s + j), b = static_cast<int>(s + 2 * depth - 1 - j);
    std::swap(ranks[a], ranks[b]);
    swaps.emplace_back(a, b);
  }
  long long base = s + 2 * depth;
  for (long long e = 0; e < extra; ++e) {
    int a = static_cast<int>(base + 2 * e), b = a + 1;
    std::swap(ranks[a], ranks[b]);
    swaps.emplace_back(a, b);
  }
  return swaps;
}

GenResult gen_uniform(const GenSpec& spec, Rng& rng, bool positive) {
  long long lo = 0;
  if (positive) {
    lo = (spec.floor.num() * kGrid + spec.floor.den() - 1) / spec.floor.den();
    lo = std::max(lo, 1LL);
    if (lo > kGrid) throw std::invalid_argument("generate: floor above 1");
  }
  std::vector<std::vector<Rational>> values(spec.n, std::vector<Rational>(spec.m));
  for (int a = 0; a < spec.n; ++a)
    for (int g = 0; g < spec.m; ++g) values[a][g] = rng.grid_value(lo, kGrid);
  GenResult out;
  out.spec = spec;
  out.inst = make_instance(spec.n, spec.m, std::move(values));
  return out;
}

GenResult gen_bounded_prop(const GenSpec& spec, Rng& rng) {
  Rational worst_gate(2 * spec.n * (log2_ceil(spec.n) + 1));
  if (Rational(spec.m) < worst_gate)
    throw std::invalid_argument(
        "generate: bounded_prop infeasible, need m >= 2*n*(ceil(log2 n)+1)");
  std::vector<std::vector<Rational>> values(spec.n);
  for (int a = 0; a < spec.n; ++a) {
    Rational gate(2 * spec.n * (log2_ceil(a + 1) + 1));  // rowsum >= n * prop gate
    for (int attempt = 0;; ++attempt) {
      if (attempt == kRetries)
        throw std::invalid_argument("generate: bounded_prop retry budget exhausted");
      std::vector<Rational> row(spec.m);
      Rational sum;
      for (int g = 0; g < spec.m; ++g) {
        row[g] = rng.grid_value(1, kGrid);
        sum += row[g];
      }
      if (!(sum < gate)) {
        values[a] = std::move(row);
        break;
      }
    }
  }
  GenResult out;
  out.spec = spec;
  out.inst = make_instance(spec.n, spec.m, std::move(values));
  return out;
}

GenResult gen_hypergraph(const GenSpec& spec, Rng& rng) {
  if (spec.D < 1 || spec.n % spec.D != 0)
    throw std::invalid_argument("generate: hypergraph needs D >= 1 dividing n");
  int blocks = spec.n / spec.D;
  Rational gate(spec.D * (2 * log2_ceil(2 * spec.D - 1) + 2));
  for (int attempt = 0;; ++attempt) {
    if (attempt == kRetries)
      throw std::invalid_argument("generate: hypergraph retry budget exhausted");
    std::vector<std::vector<Rational>> values(spec.n, std::vector<Rational>(spec.m));
    std::vector<std::vector<int>> edges(spec.m);
    for (int g = 0; g < spec.m; ++g) {
      int b = static_cast<int>(rng.uniform(0, blocks - 1));
      for (int a = b * spec.D; a < (b + 1) * spec.D; ++a) {
        edges[g].push_back(a);
        values[a][g] = rng.chance(1, 4) ? Rational(0) : rng.grid_value(1, kGrid);
      }
    }
    bool ok = true;
    for (int a = 0; a < spec.n && ok; ++a) {
      Rational sum;
      for (int g = 0; g < spec.m; ++g) sum += values[a][g];
      ok = !(sum < gate);
    }
    if (!ok) continue;
    GenResult out;
    out.spec = spec;
    out.D = spec.D;
    out.inst = make_instance(spec.n, spec.m, std::move(values), {}, {}, std::move(edges));
    return out;
  }
}

GenResult gen_masterlist(const GenSpec& spec, Rng& rng, bool lipschitz) {
  if (spec.m < 1) throw std::invalid_argument("generate: need at least one item");
  if (spec.swaps > max_adjacent_distance(spec.m) &&
      (spec.swap_kind == SwapKind::adjacent || lipschitz))
    throw std::invalid_argument("generate: adjacent distance beyond m*(m-1)/2");
  if (spec.swap_kind == SwapKind::arbitrary && !lipschitz && spec.swaps > spec.m - 1)
    throw std::invalid_argument("generate: transposition distance beyond m-1");
  std::vector<int> pi = rng.permutation(spec.m);
  GenResult out;
  out.spec = spec;
  out.swap_sets.resize(spec.n);
  out.swap_counts.resize(spec.n, 0);
  out.layers = spec.layers;
  out.depth = spec.depth;
  out.delta = spec.delta;
  std::vector<std::vector<Rational>> values(spec.n, std::vector<Rational>(spec.m));
  for (int a = 0; a < spec.n; ++a) {
    std::vector<int> ranks(spec.m);
    std::iota(ranks.begin(), ranks.end(), 0);
    std::vector<Swap>& swaps = out.swap_sets[a];
    if (lipschitz || spec.swap_kind == SwapKind::adjacent) {
      swaps = apply_adjacent(rng, ranks, spec.swaps);
      out.swap_counts[a] = spec.swaps;
    } else if (spec.swap_kind == SwapKind::arbitrary) {
      swaps = apply_arbitrary(rng, ranks, spec.swaps);
      out.swap_counts[a] = spec.swaps;
    } else if (spec.swap_kind == SwapKind::linsep) {
      for (int l = 0; l < spec.layers; ++l) {
        auto round = apply_linsep_round(rng, ranks, spec.swaps);
        swaps.insert(swaps.end(), round.begin(), round.end());
      }
      out.swap_counts[a] = static_cast<long long>(swaps.size());
    } else {
      swaps = apply_laminar(rng, ranks, spec.depth, spec.swaps - spec.depth);
      out.swap_counts[a] = static_cast<long long>(swaps.size());
    }

    // Strictly decreasing values along the agent's preference order make the
    // order recoverable from the row with no ties.
    std::vector<int> seq = invert(ranks);
    if (lipschitz) {
      Rational x(1);
      for (int r = 0; r < spec.m; ++r) {
        values[a][pi[seq[r]]] = x;
        Rational step = spec.delta * rng.grid_value(1, kGrid);
        x = max(Rational(0), x - step);
      }
    } else {
      std::vector<long long> xs = distinct_desc(rng, spec.m, 1, kGrid);
      for (int r = 0; r < spec.m; ++r) values[a][pi[seq[r]]] = Rational(xs[r], kGrid);
    }
  }
  out.inst = make_instance(spec.n, spec.m, std::move(values), {}, pi);
  return out;
}

GenResult gen_bounded_ties(const GenSpec& spec, Rng& rng) {
  int t = spec.ties;
  if (t < 1) throw std::invalid_argument("generate: ties must be >= 1");
  int kk = (t + 2) / 2;
  if (spec.m < 2 * spec.n * kk)
    throw std::invalid_argument("generate: bounded_ties needs m >= 2*n*ceil((t+1)/2)");
  std::vector<std::vector<Rational>> values(spec.n, std::vector<Rational>(spec.m));
  for (int a = 0; a < spec.n; ++a) {
    // Group sizes: one group of exactly t (realizing the multiplicity), the
    // rest uniform in [1, t].  Values >= 1/2 keep prop shares comfortably
    // above the reservation gate.
    std::vector<int> sizes{t};
    int assigned = t;
    while (assigned < spec.m) {
      int s = static_cast<int>(rng.uniform(1, t));
      s = std::min(s, spec.m - assigned);
      sizes.push_back(s);
      assigned += s;
    }
    std::vector<long long> numers =
        distinct_desc(rng, static_cast<int>(sizes.size()), kGrid / 2, kGrid);
    std::vector<int> slots = rng.permutation(spec.m);
    int at = 0;
    for (std::size_t gidx = 0; gidx < sizes.size(); ++gidx)
      for (int c = 0; c < sizes[gidx]; ++c) values[a][slots[at++]] = Rational(numers[gidx], kGrid);
  }
  GenResult out;
  out.spec = spec;
  out.t = t;
  out.inst = make_instance(spec.n, spec.m, std::move(values));
  return out;
}

GenResult gen_fixture(const GenSpec& spec) {
  int n = spec.n;
  int P = spec.fixture_prop;
  if (n < 4 || n % 2 != 0 || P < 1)
    throw std::invalid_argument("generate: fixture needs even n >= 4 and P >= 1");
  int half = n / 2 * P;
  int m = (n - 1) * half + n * P;
  GenResult out;
  out.spec = spec;
  out.fixture_partition.parts.resize(n);
  int at = 0;
  for (int b = 0; b < n; ++b) {
    int size = b < n - 1 ? half : n * P;
    for (int c = 0; c < size; ++c) out.fixture_partition.parts[b].push_back(at++);
  }
  const auto& blocks = out.fixture_partition.parts;
  std::vector<std::vector<Rational>> values(n, std::vector<Rational>(m));
  for (int a = 0; a + 1 < n; ++a) {
    for (int g : blocks[a]) values[a][g] = Rational(1);
    if (a + 1 < n - 1) {
      for (int g : blocks[a + 1]) values[a][g] = Rational(1);
    } else {
      for (int c = 0; c < half; ++c) values[a][blocks[n - 1][c]] = Rational(1);
    }
  }
  for (int g : blocks[n - 1]) values[n - 1][g] = Rational(1);
  out.inst = make_instance(n, m, std::move(values));
  return out;
}

}  // namespace

const char* gen_family_name(GenFamily f) {
  switch (f) {
    case GenFamily::uniform: return "uniform";
    case GenFamily::strictly_positive: return "positive";
    case GenFamily::bounded_prop: return "bounded-prop";
    case GenFamily::hypergraph: return "hypergraph";
    case GenFamily::masterlist_swaps: return "masterlist";
    case GenFamily::lipschitz: return "lipschitz";
    case GenFamily::bounded_ties: return "ties";
    case GenFamily::rebundling_fixture: return "fixture";
  }
  return "?";
}

GenFamily gen_family_from_name(const std::string& name) {
  for (GenFamily f :
       {GenFamily::uniform, GenFamily::strictly_positive, GenFamily::bounded_prop,
        GenFamily::hypergraph, GenFamily::masterlist_swaps, GenFamily::lipschitz,
        GenFamily::bounded_ties, GenFamily::rebundling_fixture})
    if (name == gen_family_name(f)) return f;
  throw std::invalid_argument("unknown family: " + name);
}

const char* swap_kind_name(SwapKind k) {
  switch (k) {
    case SwapKind::adjacent: return "adjacent";
    case SwapKind::arbitrary: return "arbitrary";
    case SwapKind::linsep: return "linsep";
    case SwapKind::laminar: return "laminar";
  }
  return "?";
}

SwapKind swap_kind_from_name(const std::string& name) {
  for (SwapKind k :
       {SwapKind::adjacent, SwapKind::arbitrary, SwapKind::linsep, SwapKind::laminar})
    if (name == swap_kind_name(k)) return k;
  throw std::invalid_argument("unknown swap kind: " + name);
}

GenResult generate(const GenSpec& spec) {
  if (spec.n < 1 || spec.m < 0) throw std::invalid_argument("generate: bad dimensions");
  Rng rng(spec.seed);
  switch (spec.family) {
    case GenFamily::uniform: return gen_uniform(spec, rng, false);
    case GenFamily::strictly_positive: return gen_uniform(spec, rng, true);
    case GenFamily::bounded_prop: return gen_bounded_prop(spec, rng);
    case GenFamily::hypergraph: return gen_hypergraph(spec, rng);
    case GenFamily::masterlist_swaps: return gen_masterlist(spec, rng, false);
    case GenFamily::lipschitz: return gen_masterlist(spec, rng, true);
    case GenFamily::bounded_ties: return gen_bounded_ties(spec, rng);
    case GenFamily::rebundling_fixture: return gen_fixture(spec);
  }
  throw std::invalid_argument("generate: unknown family");
}

}  // namespace fairpart
