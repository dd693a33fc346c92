#include <doctest.h>

#include <vector>

#include "fairpart/model.hpp"

using namespace fairpart;

namespace {

Instance two_agent_demo() {
  // Both agents value the four items 1, 3/4, 1/2, 1/4.
  std::vector<Rational> row{Rational(1), Rational(3, 4), Rational(1, 2), Rational(1, 4)};
  return make_instance(2, 4, {row, row});
}

}  // namespace

TEST_CASE("log2_ceil") {
  CHECK(log2_ceil(1) == 0);
  CHECK(log2_ceil(2) == 1);
  CHECK(log2_ceil(3) == 2);
  CHECK(log2_ceil(4) == 2);
  CHECK(log2_ceil(5) == 3);
  CHECK(log2_ceil(8) == 3);
  CHECK(log2_ceil(9) == 4);
  CHECK(log2_ceil(1 << 14) == 14);
  CHECK(log2_ceil((1 << 14) + 1) == 15);
  CHECK_THROWS_AS(log2_ceil(0), std::invalid_argument);
}

TEST_CASE("make_instance validates") {
  std::vector<std::vector<Rational>> ok{{Rational(1, 2)}, {Rational(1)}};
  CHECK_NOTHROW(make_instance(2, 1, ok));
  CHECK_THROWS_AS(make_instance(2, 1, {{Rational(3, 2)}, {Rational(1)}}),
                  std::invalid_argument);  // above 1
  CHECK_THROWS_AS(make_instance(2, 1, {{Rational(-1, 2)}, {Rational(1)}}),
                  std::invalid_argument);  // negative
  CHECK_THROWS_AS(make_instance(2, 2, {{Rational(1)}, {Rational(1), Rational(1)}}),
                  std::invalid_argument);  // ragged
  CHECK_THROWS_AS(make_instance(2, 1, ok, {0, 0}), std::invalid_argument);  // not a perm
  CHECK_THROWS_AS(make_instance(2, 1, ok, {}, {0, 0}), std::invalid_argument);
  // Hypergraph support: agent 1 values item 0 but the edge only allows agent 0.
  CHECK_THROWS_AS(make_instance(2, 1, ok, {}, {}, {{0}}), std::invalid_argument);
  CHECK_NOTHROW(make_instance(2, 1, ok, {}, {}, {{0, 1}}));
}

TEST_CASE("shares and part values") {
  Instance inst = two_agent_demo();
  CHECK(total_value(inst, 0) == Rational(5, 2));
  CHECK(prop_share(inst, 0) == Rational(5, 4));
  CHECK(part_value(inst, 0, {0, 2}) == Rational(3, 2));
  CHECK(part_value(inst, 1, {1, 3}) == Rational(1));
  CHECK(part_value(inst, 0, {}) == Rational(0));
}

TEST_CASE("check_partition diagnoses structure") {
  Instance inst = two_agent_demo();
  Partition good{{{0, 2}, {1, 3}}};
  CHECK(check_partition(inst, good).ok());
  Partition dup{{{0, 1}, {1, 3}}};
  auto d = check_partition(inst, dup);
  CHECK(d.duplicated == std::vector<int>{1});
  CHECK(d.missing == std::vector<int>{2});
  Partition foreign{{{0, 1, 2, 3}, {9}}};
  CHECK(check_partition(inst, foreign).foreign == std::vector<int>{9});
}

TEST_CASE("theorem_bound table") {
  Rational ref(10);
  auto bound = [&](TheoremBoundSpec spec) { return theorem_bound(spec, ref); };
  CHECK(bound({.id = TheoremId::round_robin}).base == Rational(9));
  CHECK(bound({.id = TheoremId::mod_rr}).base == Rational(9));
  CHECK(bound({.id = TheoremId::bounded_influence_early}).base == Rational(9));
  CHECK(bound({.id = TheoremId::ml_ordered}).base == Rational(9));
  CHECK(bound({.id = TheoremId::all_pos, .n = 8}).base == Rational(7));
  CHECK(bound({.id = TheoremId::all_pos, .n = 1}).base == Rational(10));
  CHECK(bound({.id = TheoremId::bounded_prop, .i = 5}).base == Rational(3));   // 10-2*3-1
  CHECK(bound({.id = TheoremId::bounded_prop_g, .stage = 2}).base == Rational(7));  // 10-4+1
  CHECK(bound({.id = TheoremId::fair_order, .i = 4}).base == Rational(4));     // 10-2*2-2
  CHECK(bound({.id = TheoremId::bounded_influence_late, .D = 3}).base ==
        Rational(3));  // 10-2*ceil(log2 5)-1
  CHECK(bound({.id = TheoremId::bounded_indiff, .t = 2}).base == Rational(7));  // ceil(5/2)=3
  CHECK(bound({.id = TheoremId::bounded_indiff, .t = 1}).base == Rational(8));
  CHECK(bound({.id = TheoremId::bounded_indiff, .t = 3}).base == Rational(7));
  CHECK(bound({.id = TheoremId::ml_linsep}).base == Rational(8));
  CHECK(bound({.id = TheoremId::ml_linsep_t, .t = 3}).base == Rational(6));
  CHECK(bound({.id = TheoremId::ml_arbitrary, .k = 4}).base == Rational(5));
  CHECK(bound({.id = TheoremId::ml_laminar, .depth = 2}).base == Rational(7));
  CHECK(bound({.id = TheoremId::ml_lipschitz, .k = 6, .delta = Rational(1, 2)}).base ==
        Rational(6));  // 10-1-3

  Bound adj = bound({.id = TheoremId::ml_adjacent, .k = 8});
  CHECK(adj.base == Rational(9));
  CHECK(adj.radicand == Rational(16));
  CHECK_FALSE(adj.exact());

  CHECK_THROWS_AS(bound({.id = TheoremId::bounded_prop, .i = 0}), std::invalid_argument);
  CHECK_THROWS_AS(bound({.id = TheoremId::all_pos, .n = 0}), std::invalid_argument);
}

TEST_CASE("bound satisfaction via cross-squaring") {
  // threshold 9 - sqrt(16) = 5, decided without floating point
  Bound b{Rational(9), Rational(16)};
  CHECK(b.satisfied_by(Rational(5)));
  CHECK(b.satisfied_by(Rational(100)));
  CHECK_FALSE(b.satisfied_by(Rational(99, 20)));  // 4.95 < 5
  // irrational threshold: 9 - sqrt(2) ~ 7.586
  Bound c{Rational(9), Rational(2)};
  CHECK(c.satisfied_by(Rational(76, 10)));
  CHECK_FALSE(c.satisfied_by(Rational(75, 10)));
  CHECK_FALSE(Bound{Rational(2), Rational(2)}.trivial());  // 2 > sqrt(2)
  CHECK(Bound{Rational(1), Rational(2)}.trivial());        // 1 <= sqrt(2)
  CHECK(Bound{Rational(0), Rational(0)}.trivial());
  CHECK(Bound{Rational(-1), Rational(0)}.trivial());
  CHECK(Bound{Rational(9), Rational(16)}.str() == "9 - sqrt(16)");
  CHECK(Bound{Rational(3, 4), Rational(0)}.str() == "3/4");
}

TEST_CASE("bounds are monotone in the reference share") {
  std::vector<TheoremBoundSpec> specs{
      {.id = TheoremId::round_robin},
      {.id = TheoremId::all_pos, .n = 8},
      {.id = TheoremId::bounded_prop, .i = 3},
      {.id = TheoremId::bounded_prop_g, .stage = 2},
      {.id = TheoremId::fair_order, .i = 3},
      {.id = TheoremId::bounded_influence_late, .D = 2},
      {.id = TheoremId::bounded_indiff, .t = 2},
      {.id = TheoremId::ml_adjacent, .k = 5},
      {.id = TheoremId::ml_lipschitz, .k = 5, .delta = Rational(1, 8)},
  };
  std::vector<Rational> refs{Rational(0), Rational(1, 3), Rational(1), Rational(2),
                             Rational(5), Rational(10)};
  for (const auto& spec : specs) {
    for (std::size_t i = 0; i + 1 < refs.size(); ++i) {
      Bound lo = theorem_bound(spec, refs[i]);
      Bound hi = theorem_bound(spec, refs[i + 1]);
      CHECK(lo.base <= hi.base);
      CHECK(lo.radicand == hi.radicand);
    }
  }
}

TEST_CASE("rescale_to_unit") {
  Instance half = make_instance(1, 2, {{Rational(1, 2), Rational(1, 4)}});
  Instance scaled = rescale_to_unit(half);
  CHECK(scaled.values[0][0] == Rational(1));
  CHECK(scaled.values[0][1] == Rational(1, 2));
  // Already at full scale and all-zero instances come back unchanged.
  Instance unit = make_instance(1, 1, {{Rational(1)}});
  CHECK(rescale_to_unit(unit).values == unit.values);
  Instance zero = make_instance(1, 1, {{Rational(0)}});
  CHECK(rescale_to_unit(zero).values == zero.values);
}
