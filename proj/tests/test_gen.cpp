#include <doctest.h>

#include <vector>

#include "fairpart/dynamic.hpp"
#include "fairpart/gen.hpp"
#include "fairpart/masterlist.hpp"
#include "fairpart/structured.hpp"

using namespace fairpart;

namespace {

GenSpec base_spec(GenFamily family, int n, int m, std::uint64_t seed) {
  GenSpec spec;
  spec.family = family;
  spec.n = n;
  spec.m = m;
  spec.seed = seed;
  return spec;
}

}  // namespace

TEST_CASE("generation is deterministic in the spec") {
  for (GenFamily family : {GenFamily::uniform, GenFamily::strictly_positive,
                           GenFamily::masterlist_swaps, GenFamily::bounded_ties}) {
    GenSpec spec = base_spec(family, 3, 12, 77);
    spec.swaps = 2;
    spec.ties = 2;
    GenResult a = generate(spec);
    GenResult b = generate(spec);
    CHECK(a.inst.values == b.inst.values);
    CHECK(a.inst.master_list == b.inst.master_list);
    spec.seed = 78;
    GenResult c = generate(spec);
    CHECK(a.inst.values != c.inst.values);
  }
}

TEST_CASE("family names round-trip") {
  for (GenFamily f : {GenFamily::uniform, GenFamily::strictly_positive, GenFamily::bounded_prop,
                      GenFamily::hypergraph, GenFamily::masterlist_swaps, GenFamily::lipschitz,
                      GenFamily::bounded_ties, GenFamily::rebundling_fixture}) {
    CHECK(gen_family_from_name(gen_family_name(f)) == f);
  }
  CHECK_THROWS_AS(gen_family_from_name("nope"), std::invalid_argument);
  for (SwapKind k : {SwapKind::adjacent, SwapKind::arbitrary, SwapKind::linsep, SwapKind::laminar})
    CHECK(swap_kind_from_name(swap_kind_name(k)) == k);
}

TEST_CASE("uniform and strictly positive ranges") {
  GenResult u = generate(base_spec(GenFamily::uniform, 4, 40, 5));
  for (const auto& row : u.inst.values)
    for (const auto& v : row) {
      CHECK(v >= Rational(0));
      CHECK(v <= Rational(1));
    }

  GenSpec spec = base_spec(GenFamily::strictly_positive, 4, 40, 5);
  spec.floor = Rational(1, 4);
  GenResult p = generate(spec);
  for (const auto& row : p.inst.values)
    for (const auto& v : row) {
      CHECK(v >= Rational(1, 4));
      CHECK(v <= Rational(1));
    }
}

TEST_CASE("share-gated family clears every arrival's gate") {
  int n = 8;
  GenSpec spec = base_spec(GenFamily::bounded_prop, n, 5 * n * (log2_ceil(n) + 1), 9);
  GenResult gr = generate(spec);
  for (int a = 0; a < n; ++a) {
    Rational gate(2 * (log2_ceil(a + 1) + 1));
    CHECK(prop_share(gr.inst, a) >= gate);
  }
  // Too few items to ever clear the last gate: rejected up front.
  CHECK_THROWS_AS(generate(base_spec(GenFamily::bounded_prop, 8, 30, 9)),
                  std::invalid_argument);
}

TEST_CASE("hypergraph family respects block structure") {
  GenSpec spec = base_spec(GenFamily::hypergraph, 4, 96, 13);
  spec.D = 2;
  GenResult gr = generate(spec);
  CHECK(gr.D == 2);
  REQUIRE(gr.inst.hypergraph.size() == 96);
  for (const auto& edge : gr.inst.hypergraph) CHECK(edge.size() == 2);
  CHECK(influence_profile(gr.inst).D <= 2);
  Rational gate(2 * (2 * log2_ceil(3) + 2));  // D * (2*ceil(log2(2D-1)) + 2)
  for (int a = 0; a < 4; ++a) CHECK(total_value(gr.inst, a) >= gate);

  GenSpec bad = spec;
  bad.n = 5;  // D does not divide n
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);
}

TEST_CASE("adjacent-swap family lands at the exact distance") {
  for (long long k : {0LL, 1LL, 4LL}) {
    GenSpec spec = base_spec(GenFamily::masterlist_swaps, 3, 10, 21 + k);
    spec.swap_kind = SwapKind::adjacent;
    spec.swaps = k;
    GenResult gr = generate(spec);
    const auto& pi = gr.inst.master_list;
    REQUIRE(pi.size() == 10);
    for (int a = 0; a < 3; ++a) {
      auto sigma = derive_agent_permutation(gr.inst.values[a], pi);
      CHECK(adjacent_swap_distance(sigma, pi) == k);
      CHECK(gr.swap_counts[a] == k);
      CHECK(gr.swap_sets[a].size() == static_cast<std::size_t>(k));
    }
  }
  GenSpec bad = base_spec(GenFamily::masterlist_swaps, 1, 4, 3);
  bad.swaps = 7;  // diameter of S_4 is 6
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);
}

TEST_CASE("arbitrary-swap family lands at the exact transposition distance") {
  for (long long k : {1LL, 3LL, 6LL}) {
    GenSpec spec = base_spec(GenFamily::masterlist_swaps, 2, 12, 31 + k);
    spec.swap_kind = SwapKind::arbitrary;
    spec.swaps = k;
    GenResult gr = generate(spec);
    const auto& pi = gr.inst.master_list;
    for (int a = 0; a < 2; ++a) {
      auto sigma = derive_agent_permutation(gr.inst.values[a], pi);
      CHECK(transposition_distance(sigma, pi) == k);
    }
  }
  GenSpec bad = base_spec(GenFamily::masterlist_swaps, 1, 5, 3);
  bad.swap_kind = SwapKind::arbitrary;
  bad.swaps = 5;  // at most m-1 = 4
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);
}

TEST_CASE("layered separable swaps decompose within the declared layer count") {
  GenSpec spec = base_spec(GenFamily::masterlist_swaps, 3, 16, 41);
  spec.swap_kind = SwapKind::linsep;
  spec.swaps = 3;  // per round
  spec.layers = 2;
  GenResult gr = generate(spec);
  CHECK(gr.layers == 2);
  for (int a = 0; a < 3; ++a) {
    CHECK(gr.swap_counts[a] == 6);
    CHECK(min_linsep_layers(gr.swap_sets[a]).count() <= 2);
  }

  GenSpec one = spec;
  one.layers = 1;
  GenResult single = generate(one);
  for (int a = 0; a < 3; ++a) CHECK(is_linearly_separable(single.swap_sets[a]));
}

TEST_CASE("laminar family carries the declared depth") {
  GenSpec spec = base_spec(GenFamily::masterlist_swaps, 3, 14, 51);
  spec.swap_kind = SwapKind::laminar;
  spec.depth = 3;
  spec.swaps = 5;  // chain of 3 plus 2 side swaps
  GenResult gr = generate(spec);
  CHECK(gr.depth == 3);
  for (int a = 0; a < 3; ++a) {
    REQUIRE(is_laminar(gr.swap_sets[a]));
    CHECK(laminar_depth(gr.swap_sets[a]) == 3);
    CHECK(gr.swap_counts[a] == 5);
  }

  GenSpec bad = spec;
  bad.m = 8;  // needs 2*depth + 2*extras = 10 positions
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);
}

TEST_CASE("lipschitz family bounds consecutive steps") {
  GenSpec spec = base_spec(GenFamily::lipschitz, 3, 8, 61);
  spec.swaps = 3;
  spec.delta = Rational(1, 16);
  GenResult gr = generate(spec);
  const auto& pi = gr.inst.master_list;
  CHECK(lipschitz_delta(gr.inst, pi) <= Rational(1, 16));
  for (int a = 0; a < 3; ++a) {
    auto sigma = derive_agent_permutation(gr.inst.values[a], pi);
    CHECK(adjacent_swap_distance(sigma, pi) == 3);
  }
}

TEST_CASE("tie-bounded family hits the multiplicity exactly") {
  GenSpec spec = base_spec(GenFamily::bounded_ties, 3, 18, 71);
  spec.ties = 3;
  GenResult gr = generate(spec);
  TieProfile tp = tie_profile(gr.inst);
  CHECK(tp.t == 3);
  CHECK(tp.per_agent == std::vector<int>{3, 3, 3});
  CHECK(gr.t == 3);

  GenSpec bad = spec;
  bad.m = 6;  // needs m >= 2 * n * ceil((t+1)/2)
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);
}

TEST_CASE("rebundling fixture geometry") {
  GenSpec spec = base_spec(GenFamily::rebundling_fixture, 6, 0, 1);
  spec.fixture_prop = 2;
  GenResult gr = generate(spec);
  // half = 6, m = 5*6 + 12 = 42.
  CHECK(gr.inst.m == 42);
  CHECK(gr.fixture_partition.size() == 6);
  for (int a = 0; a < 6; ++a) CHECK(prop_share(gr.inst, a) == Rational(2));

  GenSpec odd = spec;
  odd.n = 5;
  CHECK_THROWS_AS(generate(odd), std::invalid_argument);
}
