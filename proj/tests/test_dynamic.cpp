#include <doctest.h>

#include <vector>

#include "fairpart/dynamic.hpp"
#include "fairpart/gen.hpp"

using namespace fairpart;

namespace {

const TiePolicy kLowest{TieKind::lowest_part_index};

std::vector<int> bundle_of(const ArrivalRecord& rec) {
  for (const auto& entry : rec.menu)
    if (entry.part == rec.chosen) return entry.items;
  return {-1};
}

}  // namespace

TEST_CASE("stage_of halving table") {
  std::vector<int> expected{1, 1, 1, 1, 2, 2, 3, 4};
  for (int i = 1; i <= 8; ++i) CHECK(stage_of(i, 8) == expected[i - 1]);
  CHECK(stage_of(1, 1) == 1);
  // Odd cohorts serve floor(k/2) per stage, so 3 agents need 3 stages.
  CHECK(stage_of(2, 3) == 2);
  CHECK(stage_of(3, 3) == 3);

  bool within = true;
  long long n = 1 << 14;
  for (long long i = 1; i <= n; ++i) {
    if (stage_of(i, n) > log2_ceil(i) + 1) {
      within = false;
      break;
    }
  }
  CHECK(within);
}

TEST_CASE("halving run, two agents") {
  std::vector<Rational> row{Rational(9, 10), Rational(4, 5), Rational(7, 10), Rational(3, 5)};
  Instance inst = make_instance(2, 4, {row, row});
  Transcript t = all_pos_val(inst, {0, 1}, kLowest);
  REQUIRE(t.records.size() == 2);
  CHECK(t.records[0].stage == 1);
  CHECK(t.records[0].value == Rational(12, 5));
  CHECK(bundle_of(t.records[0]) == std::vector<int>{0, 1, 2});
  CHECK(t.records[1].stage == 2);
  CHECK(t.records[1].value == Rational(3, 5));
  CHECK(bundle_of(t.records[1]) == std::vector<int>{3});
  CHECK(t.flags.empty());
  CHECK(t.leftovers.empty());

  VerifyReport rep = verify_transcript(inst, t, TheoremId::all_pos);
  CHECK(rep.invariants_ok);
  CHECK(rep.all_pass);
  CHECK(rep.rows[0].ref == Rational(3, 2));
}

TEST_CASE("halving run, four agents with donated favorites") {
  auto r = [](std::vector<int> v) {
    std::vector<Rational> out;
    for (int x : v) out.emplace_back(x, 16);
    return out;
  };
  Instance inst = make_instance(4, 8,
                                {r({16, 15, 3, 4, 5, 6, 7, 8}), r({2, 14, 13, 4, 5, 6, 7, 8}),
                                 r({9, 2, 3, 12, 11, 6, 7, 8}), r({1, 2, 3, 4, 10, 12, 9, 8})});
  Transcript t = all_pos_val(inst, {0, 1, 2, 3}, kLowest);
  REQUIRE(t.records.size() == 4);
  CHECK(t.records[0].value == Rational(7, 4));
  CHECK(bundle_of(t.records[0]) == std::vector<int>{0, 3, 7});
  CHECK(t.records[1].value == Rational(33, 16));
  CHECK(bundle_of(t.records[1]) == std::vector<int>{1, 2, 5});
  CHECK(t.records[2].value == Rational(9, 8));
  CHECK(bundle_of(t.records[2]) == std::vector<int>{4, 6});
  CHECK(t.records[3].value == Rational(0));
  CHECK(bundle_of(t.records[3]).empty());
  CHECK(t.records[2].stage == 2);
  CHECK(t.records[3].stage == 3);

  VerifyReport rep = verify_transcript(inst, t, TheoremId::all_pos);
  CHECK(rep.invariants_ok);
  CHECK(rep.all_pass);  // the last agent's bound is already below zero
}

TEST_CASE("donor-cell run: rebundle, fold and base branches") {
  auto r16 = [](std::vector<int> v) {
    std::vector<Rational> out;
    for (int x : v) out.emplace_back(x, 16);
    return out;
  };
  Instance inst =
      make_instance(4, 12,
                    {r16({16, 12, 8, 4, 0, 0, 0, 0, 0, 0, 0, 0}),
                     r16({1, 1, 1, 1, 16, 15, 6, 5, 1, 1, 1, 1}),
                     r16({1, 1, 1, 1, 1, 1, 1, 1, 14, 13, 4, 3}),
                     r16({2, 2, 2, 2, 1, 1, 1, 1, 8, 7, 6, 5})});
  Transcript t = bounded_prop(inst, {0, 1, 2, 3}, kLowest);
  REQUIRE(t.records.size() == 4);

  CHECK(t.records[0].branch == "rebundle");
  CHECK(t.records[0].value == Rational(9, 4));
  CHECK(bundle_of(t.records[0]) == std::vector<int>{0, 1, 2});

  CHECK(t.records[1].branch == "fold");
  CHECK(t.records[1].value == Rational(41, 16));
  CHECK(bundle_of(t.records[1]) == std::vector<int>{4, 5, 6, 8, 9, 10, 11});

  CHECK(t.records[2].branch == "fold");
  CHECK(t.records[2].stage == 2);
  CHECK(t.records[2].value == Rational(1, 8));
  CHECK(bundle_of(t.records[2]) == std::vector<int>{3, 7});

  CHECK(t.records[3].branch == "base");
  CHECK(t.records[3].stage == 3);
  CHECK(t.records[3].value == Rational(0));

  CHECK(t.stage1_columns ==
        std::vector<std::vector<int>>{{0, 1, 2}, {4, 5, 6}, {3, 8, 10}, {7, 9, 11}});
  // The share gate fails at the very first position; exactly one flag.
  CHECK(t.flags.size() == 1);

  VerifyReport rep = verify_transcript(inst, t, TheoremId::bounded_prop);
  CHECK(rep.invariants_ok);
}

TEST_CASE("donor-cell run satisfies both bound forms when the gate holds") {
  GenSpec spec;
  spec.family = GenFamily::bounded_prop;
  spec.n = 8;
  spec.m = 5 * 8 * (log2_ceil(8) + 1);
  spec.seed = 5;
  Instance inst = generate(spec).inst;
  std::vector<int> order(8);
  for (int i = 0; i < 8; ++i) order[i] = i;
  Transcript t = bounded_prop(inst, order, kLowest);
  CHECK(t.flags.empty());
  for (TheoremId id : {TheoremId::bounded_prop, TheoremId::bounded_prop_g}) {
    VerifyReport rep = verify_transcript(inst, t, id);
    CHECK(rep.invariants_ok);
    CHECK(rep.all_pass);
  }
}

TEST_CASE("greedy fair order") {
  auto fo = fair_order_from_props(
      {Rational(1), Rational(5), Rational(3), Rational(9), Rational(2)});
  CHECK(fo.order == std::vector<int>{3, 1, 2, 4, 0});
  CHECK(fo.split == 2);

  auto flat = fair_order_from_props(std::vector<Rational>(4, Rational(1, 2)));
  CHECK(flat.order == std::vector<int>{0, 1, 2, 3});
  CHECK(flat.split == 0);
}

TEST_CASE("static assignment starves the last agent; rebundling does not") {
  GenSpec spec;
  spec.family = GenFamily::rebundling_fixture;
  spec.n = 4;
  spec.fixture_prop = 1;
  GenResult gr = generate(spec);
  const Instance& inst = gr.inst;
  REQUIRE(inst.m == 10);
  REQUIRE(gr.fixture_partition.parts ==
          std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}, {6, 7, 8, 9}});
  for (int a = 0; a < 4; ++a) CHECK(prop_share(inst, a) == Rational(1));

  // Adversarial ties on the fixed partition: somebody ends up with nothing.
  Transcript fixed =
      run_static(inst, gr.fixture_partition, {0, 1, 2, 3}, {TieKind::highest_part_index});
  CHECK(fixed.records[3].value == Rational(0));

  // Moving items one part to the left as agents arrive rescues everyone.
  Transcript moved = rebundling_demo(inst, gr.fixture_partition, kLowest);
  std::vector<Rational> got;
  for (const auto& rec : moved.records) got.push_back(rec.value);
  CHECK(got == std::vector<Rational>{Rational(4), Rational(2), Rational(2), Rational(2)});
}

TEST_CASE("halving edge at powers of two: rounded bound can fail, stage bound holds") {
  // Two agents, three items, both agents valuing them (1, 1, epsilon).  The
  // first agent's part absorbs the donated top of the second column, so the
  // second agent ends with nothing: value 0 against a share of 1 + eps/2.
  // The ceil(log n)-rounded bound (share - 1) is positive and fails; the
  // per-stage guarantee (share - stage, stage 2 here) still holds.  With a
  // non-power-of-two agent count the extra stage is absorbed by the ceiling
  // and the rounded bound is exact -- see the acceptance suite's family.
  Rational eps(1, 1 << 16);
  std::vector<Rational> row{Rational(1), Rational(1), eps};
  Instance inst = make_instance(2, 3, {row, row});
  Transcript t = all_pos_val(inst, {0, 1}, {TieKind::highest_part_index});

  CHECK(t.flags.empty());  // both agents still pick their designated parts
  REQUIRE(t.records.size() == 2);
  CHECK(t.records[0].value == Rational(2) + eps);
  CHECK(t.records[1].value == Rational(0));
  CHECK(t.records[1].stage == 2);

  VerifyReport rep = verify_transcript(inst, t, TheoremId::all_pos);
  CHECK(rep.invariants_ok);
  CHECK_FALSE(rep.all_pass);
  CHECK_FALSE(rep.rows[1].pass);
  CHECK_FALSE(rep.rows[1].trivial);  // the rounded bound is strictly positive
  Rational prop = prop_share(inst, 1);
  CHECK(rep.rows[1].bound.base == prop - Rational(1));
  CHECK(rep.rows[1].value >= prop - Rational(t.records[1].stage));
}
