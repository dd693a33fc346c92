#include "fairpart/lowerbound.hpp"

#include <algorithm>
#include <stdexcept>

#include "fairpart/rng.hpp"

namespace fairpart {

namespace {

bool is_power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

std::string assignment_str(const std::vector<int>& asg) {
  std::string s = "[";
  for (std::size_t i = 0; i < asg.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(asg[i] + 1);
  }
  return s + "]";
}

void tally(const HadamardFamily& fam, const std::vector<int>& asg, BruteForceReport& rep) {
  WitnessResult w = witness_for(fam, asg);
  ++rep.checked;
  if (w.opposite)
    ++rep.opposite;
  else
    ++rep.direct;
  if (rep.min_assignment.empty() || w.deficit < rep.min_deficit) {
    rep.min_deficit = w.deficit;
    rep.min_assignment = asg;
  }
  if (!w.pass) {
    ++rep.failures;
    if (rep.evidence.size() < 5)
      rep.evidence.push_back("assignment " + assignment_str(asg) + ": witness agent " +
                             std::to_string(w.witness + 1) + " deficit " + w.deficit.str());
  }
}

}  // namespace

std::vector<std::vector<int>> sylvester_hadamard(int order) {
  if (!is_power_of_two(order))
    throw std::invalid_argument("sylvester_hadamard: order must be a power of two");
  std::vector<std::vector<int>> h{{1}};
  for (int s = 1; s < order; s *= 2) {
    std::vector<std::vector<int>> next(2 * s, std::vector<int>(2 * s));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        next[i][j] = h[i][j];
        next[i][j + s] = h[i][j];
        next[i + s][j] = h[i][j];
        next[i + s][j + s] = -h[i][j];
      }
    h = std::move(next);
  }
  return h;
}

HadamardFamily build_lowerbound_instance(int n) {
  if (n < 4 || n % 4 != 0 || !is_power_of_two(n / 2))
    throw std::invalid_argument(
        "build_lowerbound_instance: need n >= 4, divisible by 4, with n/2 a power of two");
  HadamardFamily fam;
  fam.n = n;
  fam.t = n / 4;
  fam.m = n * n / 4;
  int half = n / 2;
  fam.H = sylvester_hadamard(half);
  fam.A.assign(half, std::vector<int>(half));
  fam.A_opp.assign(half, std::vector<int>(half));
  for (int i = 0; i < half; ++i)
    for (int j = 0; j < half; ++j) {
      fam.A[i][j] = (1 + fam.H[i][j]) / 2;
      fam.A_opp[i][j] = 1 - fam.A[i][j];
    }
  fam.A_tilde.assign(n, std::vector<int>(n));
  for (int i = 0; i < half; ++i)
    for (int j = 0; j < half; ++j) {
      fam.A_tilde[i][j] = fam.A[i][j];
      fam.A_tilde[i][j + half] = fam.A[i][j];
      fam.A_tilde[i + half][j] = fam.A_opp[i][j];
      fam.A_tilde[i + half][j + half] = fam.A_opp[i][j];
    }
  fam.B.assign(n, std::vector<int>(fam.m));
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < fam.t; ++c)
      for (int j = 0; j < n; ++j) fam.B[a][c * n + j] = fam.A_tilde[a][j];
  std::vector<std::vector<Rational>> values(n, std::vector<Rational>(fam.m));
  for (int a = 0; a < n; ++a)
    for (int g = 0; g < fam.m; ++g) values[a][g] = Rational(fam.B[a][g]);
  fam.inst = make_instance(n, fam.m, std::move(values));
  fam.props.resize(n);
  for (int a = 0; a < n; ++a) fam.props[a] = prop_share(fam.inst, a);
  return fam;
}

std::pair<Rational, Rational> l2_identity(const std::vector<std::vector<int>>& a_tilde,
                                          const std::vector<Rational>& y) {
  int n = static_cast<int>(a_tilde.size());
  if (n == 0 || n % 2 != 0 || static_cast<int>(y.size()) != n)
    throw std::invalid_argument("l2_identity: need an even-order matrix and matching y");
  Rational lhs;
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(a_tilde[a].size()) != n)
      throw std::invalid_argument("l2_identity: matrix not square");
    Rational dot;
    for (int j = 0; j < n; ++j)
      if (a_tilde[a][j] != 0) dot += Rational(a_tilde[a][j]) * y[j];
    lhs += dot * dot;
  }
  Rational total;
  for (const Rational& v : y) total += v;
  Rational pair_sq;
  for (int i = 0; i < n / 2; ++i) {
    Rational s = y[i] + y[i + n / 2];
    pair_sq += s * s;
  }
  Rational quarter(n, 4);
  return {lhs, quarter * (total * total + pair_sq)};
}

WitnessResult witness_for(const HadamardFamily& fam, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != fam.m)
    throw std::invalid_argument("witness_for: assignment must place every item");
  std::vector<int> size(fam.n, 0);
  for (int p : assignment) {
    if (p < 0 || p >= fam.n) throw std::invalid_argument("witness_for: part out of range");
    ++size[p];
  }
  WitnessResult w;
  w.part = 0;
  for (int p = 1; p < fam.n; ++p)
    if (size[p] < size[w.part]) w.part = p;

  // Gap between share and the smallest part's value, per agent.
  std::vector<Rational> z(fam.n);
  for (int a = 0; a < fam.n; ++a) {
    Rational v;
    for (int g = 0; g < fam.m; ++g)
      if (assignment[g] == w.part && fam.B[a][g] != 0) v += Rational(1);
    z[a] = fam.props[a] - v;
  }
  w.anchor = 0;
  for (int a = 1; a < fam.n; ++a)
    if (abs(z[w.anchor]) < abs(z[a])) w.anchor = a;
  if (z[w.anchor] < Rational(0)) {
    // The anchor got a windfall on this part; its opposite row missed out by
    // at least as much (their rows sum to all-ones).
    w.opposite = true;
    w.witness = (w.anchor + fam.n / 2) % fam.n;
  } else {
    w.witness = w.anchor;
  }
  w.deficit = z[w.witness];
  Rational threshold_sq(fam.n, 32);
  w.pass = !(w.deficit < Rational(0)) && threshold_sq <= w.deficit * w.deficit;
  return w;
}

BruteForceReport exhaustive_check(const HadamardFamily& fam) {
  double est = 1;
  for (int g = 0; g < fam.m; ++g) est *= fam.n;
  if (est > 1e7)
    throw std::invalid_argument("exhaustive_check: more than 10^7 assignments");
  BruteForceReport rep;
  rep.n = fam.n;
  rep.mode = "exhaustive";
  rep.threshold_sq = Rational(fam.n, 32);
  std::vector<int> asg(fam.m, 0);
  while (true) {
    tally(fam, asg, rep);
    int i = 0;
    while (i < fam.m && ++asg[i] == fam.n) asg[i++] = 0;
    if (i == fam.m) break;
  }
  rep.all_pass = rep.failures == 0;
  return rep;
}

BruteForceReport sampled_check(const HadamardFamily& fam, long long count,
                               std::uint64_t seed) {
  if (count <= 0) throw std::invalid_argument("sampled_check: count must be positive");
  BruteForceReport rep;
  rep.n = fam.n;
  rep.mode = "sampled";
  rep.seed = seed;
  rep.threshold_sq = Rational(fam.n, 32);
  Rng rng(seed);
  std::vector<int> asg(fam.m);
  for (long long it = 0; it < count; ++it) {
    for (int g = 0; g < fam.m; ++g) asg[g] = static_cast<int>(rng.uniform(0, fam.n - 1));
    tally(fam, asg, rep);
  }
  rep.all_pass = rep.failures == 0;
  return rep;
}

Rational exact_discrepancy(const std::vector<std::vector<Rational>>& mat, int k) {
  if (mat.empty() || k < 1) throw std::invalid_argument("exact_discrepancy: bad input");
  int rows = static_cast<int>(mat.size());
  int cols = static_cast<int>(mat[0].size());
  for (const auto& r : mat)
    if (static_cast<int>(r.size()) != cols)
      throw std::invalid_argument("exact_discrepancy: ragged matrix");
  double est = 1;
  for (int j = 0; j < cols; ++j) est *= k;
  if (cols > 12 || est > 1e7)
    throw std::invalid_argument("exact_discrepancy: more than 10^7 colorings");

  std::vector<Rational> share(rows);  // rowsum / k
  for (int i = 0; i < rows; ++i) {
    Rational sum;
    for (int j = 0; j < cols; ++j) sum += mat[i][j];
    share[i] = sum / Rational(k);
  }

  std::vector<int> color(cols, 0);
  bool first = true;
  Rational best;
  while (true) {
    Rational worst;
    for (int i = 0; i < rows; ++i)
      for (int c = 0; c < k; ++c) {
        Rational s;
        for (int j = 0; j < cols; ++j)
          if (color[j] == c) s += mat[i][j];
        worst = max(worst, abs(s - share[i]));
      }
    if (first || worst < best) best = worst;
    first = false;
    int j = 0;
    while (j < cols && ++color[j] == k) color[j++] = 0;
    if (j == cols) break;
  }
  return best;
}

}  // namespace fairpart
