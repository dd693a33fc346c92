#include <doctest.h>

#include <vector>

#include "fairpart/lowerbound.hpp"
#include "fairpart/rng.hpp"

using namespace fairpart;

namespace {

using Mat = std::vector<std::vector<int>>;

}  // namespace

TEST_CASE("sylvester construction") {
  CHECK(sylvester_hadamard(1) == Mat{{1}});
  CHECK(sylvester_hadamard(2) == Mat{{1, 1}, {1, -1}});
  CHECK(sylvester_hadamard(4) ==
        Mat{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}});
  CHECK_THROWS_AS(sylvester_hadamard(3), std::invalid_argument);
  CHECK_THROWS_AS(sylvester_hadamard(0), std::invalid_argument);

  // Orthogonality: H H^T = order * I.
  Mat h = sylvester_hadamard(8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      int dot = 0;
      for (int c = 0; c < 8; ++c) dot += h[i][c] * h[j][c];
      CHECK(dot == (i == j ? 8 : 0));
    }
}

TEST_CASE("family construction, four agents") {
  HadamardFamily fam = build_lowerbound_instance(4);
  CHECK(fam.t == 1);
  CHECK(fam.m == 4);
  CHECK(fam.A_tilde == Mat{{1, 1, 1, 1}, {1, 0, 1, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}});
  CHECK(fam.B == fam.A_tilde);
  CHECK(fam.props ==
        std::vector<Rational>{Rational(1), Rational(1, 2), Rational(0), Rational(1, 2)});
  CHECK_THROWS_AS(build_lowerbound_instance(6), std::invalid_argument);
  CHECK_THROWS_AS(build_lowerbound_instance(12), std::invalid_argument);
  CHECK_THROWS_AS(build_lowerbound_instance(0), std::invalid_argument);
}

TEST_CASE("family construction, eight agents") {
  HadamardFamily fam = build_lowerbound_instance(8);
  CHECK(fam.t == 2);
  CHECK(fam.m == 16);
  for (const auto& p : fam.props)
    CHECK((p == Rational(0) || p == Rational(1) || p == Rational(2)));
  // Column self-dot 4, dot with the same column of the other copy 4,
  // distinct columns 2: the design's defining inner products.
  auto col_dot = [&](int c1, int c2) {
    int dot = 0;
    for (int a = 0; a < fam.n; ++a) dot += fam.B[a][c1] * fam.B[a][c2];
    return dot;
  };
  CHECK(col_dot(0, 0) == 4);
  CHECK(col_dot(0, 8) == 4);   // same column, second copy
  CHECK(col_dot(1, 9) == 4);
  CHECK(col_dot(0, 1) == 2);
  CHECK(col_dot(2, 11) == 2);
}

TEST_CASE("exact l2 identity") {
  HadamardFamily fam4 = build_lowerbound_instance(4);
  std::vector<Rational> e1{Rational(1), Rational(0), Rational(0), Rational(0)};
  auto [lhs, rhs] = l2_identity(fam4.A_tilde, e1);
  CHECK(lhs == Rational(2));
  CHECK(rhs == Rational(2));

  Rng rng(31);
  for (int n : {4, 8}) {
    HadamardFamily fam = build_lowerbound_instance(n);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Rational> y(n);
      for (auto& v : y) {
        long long num = static_cast<long long>(rng.uniform(0, 200)) - 100;
        long long den = 1 + static_cast<long long>(rng.uniform(0, 29));
        v = Rational(num, den);
      }
      auto [l, r] = l2_identity(fam.A_tilde, y);
      CHECK(l == r);
    }
  }
}

TEST_CASE("witness for a degenerate assignment") {
  HadamardFamily fam = build_lowerbound_instance(4);
  // Every item in part 0: parts 1..3 are empty; the smallest part is part 1.
  WitnessResult w = witness_for(fam, {0, 0, 0, 0});
  CHECK(w.part == 1);
  CHECK(w.anchor == 0);  // largest share, empty part: gap = 1
  CHECK_FALSE(w.opposite);
  CHECK(w.witness == 0);
  CHECK(w.deficit == Rational(1));
  CHECK(w.pass);  // 1^2 >= 4/32
}

TEST_CASE("exhaustive check, four agents") {
  HadamardFamily fam = build_lowerbound_instance(4);
  BruteForceReport rep = exhaustive_check(fam);
  CHECK(rep.mode == "exhaustive");
  CHECK(rep.checked == 256);
  CHECK(rep.failures == 0);
  CHECK(rep.all_pass);
  CHECK(rep.min_deficit == Rational(1, 2));
  CHECK(rep.threshold_sq == Rational(1, 8));
  CHECK(rep.direct + rep.opposite == 256);
  CHECK(rep.evidence.empty());
  CHECK(static_cast<int>(rep.min_assignment.size()) == fam.m);
  // The recorded extremal assignment really achieves the minimum.
  CHECK(witness_for(fam, rep.min_assignment).deficit == rep.min_deficit);
}

TEST_CASE("exhaustive check refuses oversized state spaces") {
  HadamardFamily fam = build_lowerbound_instance(8);  // 8^16 assignments
  CHECK_THROWS_AS(exhaustive_check(fam), std::invalid_argument);
}

TEST_CASE("sampled check, eight agents") {
  HadamardFamily fam = build_lowerbound_instance(8);
  BruteForceReport rep = sampled_check(fam, 1000, 42);
  CHECK(rep.mode == "sampled");
  CHECK(rep.checked == 1000);
  CHECK(rep.failures == 0);
  CHECK(rep.all_pass);
  CHECK(rep.threshold_sq == Rational(1, 4));
  CHECK(rep.min_deficit * rep.min_deficit >= rep.threshold_sq);
  CHECK(rep.seed == 42);

  BruteForceReport again = sampled_check(fam, 1000, 42);
  CHECK(again.min_deficit == rep.min_deficit);
  CHECK(again.min_assignment == rep.min_assignment);
  BruteForceReport other = sampled_check(fam, 1000, 43);
  CHECK(other.all_pass);  // different stream, same conclusion
}

TEST_CASE("exact discrepancy") {
  CHECK(exact_discrepancy({{Rational(1)}}, 2) == Rational(1, 2));
  // All-zero rows can always be balanced perfectly.
  std::vector<std::vector<Rational>> zeros(2, std::vector<Rational>(3, Rational(0)));
  CHECK(exact_discrepancy(zeros, 3) == Rational(0));
  // Two unit items split across two colors: perfectly balanced.
  CHECK(exact_discrepancy({{Rational(1), Rational(1)}}, 2) == Rational(0));

  HadamardFamily fam = build_lowerbound_instance(4);
  std::vector<std::vector<Rational>> mat(fam.n, std::vector<Rational>(fam.m));
  for (int a = 0; a < fam.n; ++a)
    for (int g = 0; g < fam.m; ++g) mat[a][g] = Rational(fam.B[a][g]);
  CHECK(exact_discrepancy(mat, 4) == Rational(1, 2));

  CHECK_THROWS_AS(exact_discrepancy(std::vector<std::vector<Rational>>(
                      1, std::vector<Rational>(20, Rational(1))), 4),
                  std::invalid_argument);
}
