// Acceptance run: one PASS/FAIL line per criterion. Reference values come
// from the oracles in oracles.hpp or from direct enumeration below, never
// from the routine under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nqs/bounds.hpp"
#include "nqs/codes.hpp"
#include "nqs/entropy.hpp"
#include "nqs/hashing.hpp"
#include "nqs/protocols.hpp"
#include "oracles.hpp"

using namespace nqs;
using oracle::hp::Real;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  // Time spent in the routine under test when oracle work dominates the body.
  double subject_seconds = -1.0;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double to_d(const Real& r) { return r.convert_to<double>(); }

double binom_sd(double p, double trials) { return std::sqrt(p * (1.0 - p) / trials); }

// ------------------------------------------------------------------ 1

void formula_fidelity(Outcome& o) {
  const double e15 = ot_epsilon(0.000057588, 1e15);
  const double e10 = ot_epsilon(0.0106, 1e10);
  const double ref10 = to_d(oracle::hp::ot_epsilon(Real("0.0106"), Real("1e10")));
  const double ref15 = to_d(oracle::hp::ot_epsilon(Real("0.000057588"), Real("1e15")));
  o.require(e15 <= 1e-8, "eps(0.000057588, 1e15) <= 1e-8");
  o.require(std::abs(e15 - ref15) <= 0.01 * ref15, "eps at 1e15 within 1% of the oracle");
  o.require(std::abs(e10 - ref10) <= 0.01 * ref10, "eps at 1e10 within 1% of the oracle");
  o.require(std::abs(e10 - 5.69e-9) <= 0.01 * 5.69e-9, "eps at 1e10 within 1% of 5.69e-9");
  o.detail << "eps(1e10)=" << e10 << " oracle=" << ref10 << " rel=" << std::abs(e10 - ref10) / ref10
           << "; eps(1e15)=" << e15 << " oracle=" << ref15 << "; threshold 1e-8: eps "
           << (e10 <= 1e-8 ? "meets" : "misses") << " it at 1e10, 2eps=" << 2 * e10 << (2 * e10 <= 1e-8 ? " meets" : " misses")
           << " it; at 1e15 2eps=" << 2 * e15 << (2 * e15 <= 1e-8 ? " meets" : " misses") << " it";
}

// ------------------------------------------------------------------ 2

void capacity_suite(Outcome& o) {
  o.require(depolarizing_capacity(1.0) == 1.0, "C(1) == 1");
  o.require(depolarizing_capacity(0.0) == 0.0, "C(0) == 0");

  Real lo = 0, hi = 1;
  for (int i = 0; i < 120; ++i) {
    const Real mid = (lo + hi) / 2;
    (oracle::hp::capacity(mid) < Real(0.25) ? lo : hi) = mid;
  }
  const double boundary_ref = to_d(lo);
  const double boundary = region_boundary(1.0);
  o.require(std::abs(boundary_ref - 0.571) <= 0.005, "oracle boundary at 0.571 +- 0.005");
  o.require(std::abs(boundary - 0.571) <= 0.005, "library boundary at 0.571 +- 0.005");
  o.require(std::abs(boundary - boundary_ref) <= 1e-9, "library boundary equals the bisection oracle");

  int zero_checks = 0;
  int positive_checks = 0;
  double worst_gap = 0.0;
  for (int i = 0; i <= 9; ++i) {
    const double r = i / 10.0;
    const StorageModel s{2, r, 1.0};
    const double cap = to_d(oracle::hp::capacity(Real(r)));
    for (double below : {0.0, 1e-9, 1e-4, 0.01, 0.1}) {
      const double rate = cap - below;
      if (rate < 0.0) continue;
      ++zero_checks;
      o.require(strong_converse_exponent(rate, s) == 0.0, "gamma(R) = 0 for R <= C at r = " + std::to_string(r));
    }
    for (double above : {1.01e-6, 1e-4, 0.01, 0.1, 0.5}) {
      const double rate = cap + above;
      const double g = strong_converse_exponent(rate, s);
      ++positive_checks;
      o.require(g > 0.0, "gamma(R) > 0 for R > C + 1e-6 at r = " + std::to_string(r));
      if (above >= 1e-4) {
        const double ref = to_d(oracle::hp::gamma(Real(rate), Real(r)));
        worst_gap = std::max(worst_gap, std::abs(g - ref));
      }
    }
  }
  o.require(worst_gap <= 1e-7, "gamma matches the high-precision optimizer within 1e-7");
  const double g0 = strong_converse_exponent(0.25, StorageModel{2, 0.0, 1.0});
  o.require(std::abs(g0 - 0.25) <= 1e-6, "gamma(1/4) at r = 0 equals 0.25 +- 1e-6");
  o.detail << "boundary=" << boundary << " oracle=" << boundary_ref << "; " << zero_checks << " zero and "
           << positive_checks << " positive exponent checks; max |gamma - oracle|=" << worst_gap
           << "; gamma(1/4, r=0)=" << g0;
}

// ------------------------------------------------------------------ 3

void rate_curve_suite(Outcome& o) {
  std::vector<double> grid;
  for (int i = 0; i < 200; ++i) grid.push_back(i / 199.0);
  const auto start = std::chrono::steady_clock::now();
  const auto rows = rate_curve(1e10, 0.0106, 1.0, grid);
  o.subject_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(rows.size() == 200, "200 rows");
  if (rows.size() != 200) return;
  int feasible = 0;
  double prev = 1.0;
  double worst = 0.0;
  double last_r = 0.0;
  int checked = 0;
  for (const auto& row : rows) {
    if (!row.feasible || row.ell <= 0) continue;
    ++feasible;
    last_r = row.r;
    o.require(row.ot_rate < prev, "strictly decreasing at r = " + std::to_string(row.r));
    prev = row.ot_rate;
    if (feasible % 8 != 1) continue;
    ++checked;
    const double ref = to_d(oracle::hp::ot_ell_real(Real(1e10), Real(0.0106), Real(row.r), Real(1)));
    worst = std::max(worst, std::abs(static_cast<double>(row.ell) - std::floor(ref)));
  }
  o.require(feasible > 100, "most of the grid is feasible");
  o.require(std::abs(rows.front().ot_rate - 0.1197) <= 1e-3, "ell/n at r = 0 is 0.1197 +- 1e-3");
  o.require(worst <= 2.0, "ell matches the oracle within rounding");
  o.detail << "generator " << o.subject_seconds << " s; " << feasible << " feasible rows up to r=" << last_r
           << "; ell/n(0)=" << rows.front().ot_rate << "; max |ell - oracle| over " << checked << " rows=" << worst;
}

// ------------------------------------------------------------------ 4

struct SplitStats {
  int trials = 0;
  int failures = 0;
  double worst_margin = 1e300;
  double worst_recompute = 0.0;
};

// H_min(X_1..X_m | Z) for a table whose last register is Z.
double joint_hmin(const Eigen::VectorXd& p, int nz) {
  const Eigen::Index xs = p.size() / nz;
  double pg = 0.0;
  for (int z = 0; z < nz; ++z) {
    double mx = 0.0;
    for (Eigen::Index x = 0; x < xs; ++x) mx = std::max(mx, p(x * nz + z));
    pg += mx;
  }
  return -std::log2(pg);
}

void binary_split_trials(int trials, Rng& rng, SplitStats& st, Outcome& o) {
  for (int t = 0; t < trials; ++t) {
    const int a = 1 + static_cast<int>(rng.below(8));
    const int b = 1 + static_cast<int>(rng.below(8));
    const int nz = 1 + static_cast<int>(rng.below(4));
    const auto d = oracle::random_table({{"X0", a}, {"X1", b}, {"Z", nz}}, rng);
    const Eigen::VectorXd& p = d.probs();
    const double alpha = joint_hmin(p, nz);
    const auto res = split_binary(d, alpha);

    // D must follow the threshold rule on P(x0 | z).
    Eigen::MatrixXd x0z = Eigen::MatrixXd::Zero(a, nz);
    for (int x0 = 0; x0 < a; ++x0)
      for (int x1 = 0; x1 < b; ++x1)
        for (int z = 0; z < nz; ++z) x0z(x0, z) += p((x0 * b + x1) * nz + z);
    const Eigen::RowVectorXd pz = x0z.colwise().sum();
    const double thr = std::exp2(-alpha / 2);
    std::vector<double> sel(static_cast<std::size_t>(std::max(a, b) * 2 * nz), 0.0);
    bool rule_ok = true;
    for (int x0 = 0; x0 < a; ++x0) {
      for (int x1 = 0; x1 < b; ++x1) {
        for (int z = 0; z < nz; ++z) {
          const Eigen::Index cell = (x0 * b + x1) * nz + z;
          const double pr = p(cell);
          const int expect_d = x0z(x0, z) < thr * pz(z) ? 0 : 1;
          const double a0 = res.augmented.probs()(cell * 2);
          const double a1 = res.augmented.probs()(cell * 2 + 1);
          if (pr > 0.0 && (expect_d == 0 ? (a0 != pr || a1 != 0.0) : (a1 != pr || a0 != 0.0))) rule_ok = false;
          const int xd = expect_d == 0 ? x0 : x1;
          sel[static_cast<std::size_t>((xd * 2 + expect_d) * nz + z)] += pr;
        }
      }
    }
    double pg = 0.0;
    for (int dv = 0; dv < 2; ++dv) {
      for (int z = 0; z < nz; ++z) {
        double mx = 0.0;
        for (int x = 0; x < std::max(a, b); ++x) mx = std::max(mx, sel[static_cast<std::size_t>((x * 2 + dv) * nz + z)]);
        pg += mx;
      }
    }
    const double achieved = -std::log2(pg);
    ++st.trials;
    st.worst_recompute = std::max(st.worst_recompute, std::abs(achieved - res.achieved));
    st.worst_margin = std::min(st.worst_margin, achieved - (alpha / 2 - 1));
    if (!rule_ok || achieved < alpha / 2 - 1 - 1e-9) ++st.failures;
  }
  o.require(st.failures == 0, "binary split bound in every trial");
}

void multi_split_trials(int m, int trials, Rng& rng, SplitStats& st, Outcome& o) {
  const int max_alphabet = m == 2 ? 8 : m == 3 ? 6 : 4;
  for (int t = 0; t < trials; ++t) {
    std::vector<Register> regs;
    std::vector<int> sizes;
    for (int j = 1; j <= m; ++j) {
      sizes.push_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_alphabet))));
      regs.push_back({"X" + std::to_string(j), sizes.back()});
    }
    const int nz = 1 + static_cast<int>(rng.below(4));
    regs.push_back({"Z", nz});
    const auto d = oracle::random_table(regs, rng);
    const Eigen::VectorXd& p = d.probs();
    const double alpha = joint_hmin(p, nz);
    const auto res = split_multi(d, alpha);

    // Decode each cell, recompute P(X_j = x_j | z) and the selection rule.
    std::vector<Eigen::MatrixXd> marg;
    for (int j = 0; j < m; ++j) marg.emplace_back(Eigen::MatrixXd::Zero(sizes[static_cast<std::size_t>(j)], nz));
    std::vector<int> digits(static_cast<std::size_t>(m));
    auto decode = [&](Eigen::Index cell, int& z) {
      z = static_cast<int>(cell % nz);
      cell /= nz;
      for (int j = m - 1; j >= 0; --j) {
        digits[static_cast<std::size_t>(j)] = static_cast<int>(cell % sizes[static_cast<std::size_t>(j)]);
        cell /= sizes[static_cast<std::size_t>(j)];
      }
    };
    for (Eigen::Index cell = 0; cell < p.size(); ++cell) {
      int z;
      decode(cell, z);
      for (int j = 0; j < m; ++j) marg[static_cast<std::size_t>(j)](digits[static_cast<std::size_t>(j)], z) += p(cell);
    }
    const Eigen::RowVectorXd pz = marg[0].colwise().sum();
    const double thr = std::exp2(-alpha / 2);
    int nx = 0;
    for (int s : sizes) nx = std::max(nx, s);
    std::vector<double> sel(static_cast<std::size_t>(nx * m * m * nz), 0.0);
    bool rule_ok = true;
    for (Eigen::Index cell = 0; cell < p.size(); ++cell) {
      int z;
      decode(cell, z);
      int v = m - 1;
      for (int j = 0; j + 1 < m; ++j) {
        if (marg[static_cast<std::size_t>(j)](digits[static_cast<std::size_t>(j)], z) >= thr * pz(z)) {
          v = j;
          break;
        }
      }
      if (p(cell) > 0.0 && res.augmented.probs()(cell * m + v) != p(cell)) rule_ok = false;
      for (int w = 0; w < m; ++w) {
        if (w == v) continue;
        sel[static_cast<std::size_t>(((digits[static_cast<std::size_t>(w)] * m + v) * m + w) * nz + z)] += p(cell) / m;
      }
    }
    double pr_differ = 0.0;
    for (double s : sel) pr_differ += s;
    double pg = 0.0;
    for (int v = 0; v < m; ++v) {
      for (int w = 0; w < m; ++w) {
        for (int z = 0; z < nz; ++z) {
          double mx = 0.0;
          for (int x = 0; x < nx; ++x) mx = std::max(mx, sel[static_cast<std::size_t>(((x * m + v) * m + w) * nz + z)]);
          pg += mx;
        }
      }
    }
    const double achieved = -std::log2(pg / pr_differ);
    const double bound = alpha / 2 - std::log2(static_cast<double>(m)) - 1;
    ++st.trials;
    st.worst_recompute = std::max(st.worst_recompute, std::abs(achieved - res.achieved));
    st.worst_margin = std::min(st.worst_margin, achieved - bound);
    if (!rule_ok || achieved < bound - 1e-9) ++st.failures;
  }
  o.require(st.failures == 0, "m = " + std::to_string(m) + " split bound in every trial");
}

void splitting_suite(Outcome& o) {
  Rng rng(4004);
  SplitStats bin;
  binary_split_trials(10000, rng, bin, o);
  o.require(bin.worst_recompute <= 1e-9, "binary achieved value matches the recomputation");
  o.detail << "binary: " << bin.trials << " tables, " << bin.failures << " failures, min margin " << bin.worst_margin;
  for (int m : {2, 3, 4}) {
    SplitStats st;
    multi_split_trials(m, 10000, rng, st, o);
    o.require(st.worst_recompute <= 1e-9, "m-ary achieved value matches the recomputation");
    o.detail << "; m=" << m << ": " << st.trials << " tables, " << st.failures << " failures, min margin "
             << st.worst_margin;
  }
}

// ------------------------------------------------------------------ 5

void smoothing_suite(Outcome& o) {
  Rng rng(5005);
  int exact = 0;
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    int nx, ny;
    do {
      nx = 1 + static_cast<int>(rng.below(16));
      ny = 1 + static_cast<int>(rng.below(16));
    } while (nx * ny > 64);
    const auto d = oracle::random_table({{"X", nx}, {"Y", ny}}, rng);
    const double eps = t % 10 == 0 ? 0.0 : rng.uniform() * 0.95;
    const double lp = oracle::smooth_guess_lp(d.as_matrix({"X"}, {"Y"}), eps);
    const double wf = min_entropy(d, "X", {"Y"}, eps);
    const double gap = std::abs(wf + std::log2(lp));
    worst = std::max(worst, gap);
    if (gap <= 1e-9) ++exact;
  }
  o.require(exact == 1000, "water-filling equals the LP optimum on every table");
  o.detail << exact << "/1000 tables agree; max |H_wf - H_lp|=" << worst;
}

// ------------------------------------------------------------------ 6

double enumerate_collisions(int n, int ell) {
  const int seed_bits = n + ell - 1;
  const int inputs = 1 << n;
  std::vector<int> count(static_cast<std::size_t>(inputs * inputs), 0);
  std::vector<int> out(static_cast<std::size_t>(inputs));
  for (int s = 0; s < (1 << seed_bits); ++s) {
    // Row i of the Toeplitz matrix is the seed window starting at ell-1-i.
    std::vector<int> rows(static_cast<std::size_t>(ell), 0);
    for (int i = 0; i < ell; ++i) {
      for (int j = 0; j < n; ++j) {
        const int k = j - i + ell - 1;
        if ((s >> k) & 1) rows[static_cast<std::size_t>(i)] |= 1 << j;
      }
    }
    for (int x = 0; x < inputs; ++x) {
      int v = 0;
      for (int i = 0; i < ell; ++i) v |= (__builtin_popcount(rows[static_cast<std::size_t>(i)] & x) & 1) << i;
      out[static_cast<std::size_t>(x)] = v;
    }
    for (int x = 0; x < inputs; ++x)
      for (int y = x + 1; y < inputs; ++y) count[static_cast<std::size_t>(x * inputs + y)] += out[static_cast<std::size_t>(x)] == out[static_cast<std::size_t>(y)];
  }
  int worst = 0;
  for (int c : count) worst = std::max(worst, c);
  return static_cast<double>(worst) / (1 << seed_bits);
}

void hashing_suite(Outcome& o) {
  int pairs = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int ell = 1; ell <= std::min(n, 3); ++ell) {
      const double ref = enumerate_collisions(n, ell);
      const double lib = collision_bound(n, ell);
      ++pairs;
      o.require(ref <= std::exp2(-ell), "two-universal at n=" + std::to_string(n) + " ell=" + std::to_string(ell));
      o.require(lib == ref, "library collision bound equals enumeration");
    }
  }
  Rng rng(6006);
  int violations = 0;
  int bound_mismatch = 0;
  double worst_excess = -1.0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const int ne = 1 + static_cast<int>(rng.below(4));
    const int ell = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const auto d = oracle::random_table({{"X", 1 << n}, {"E", ne}}, rng);
    const auto rep = pa_distance(d, ell, 20, rng);
    const double h = -std::log2(oracle::guess(d.as_matrix({"X"}, {"E"})));
    const double bound = std::exp2(-(h - ell) / 2 - 1);
    if (std::abs(bound - rep.bound) > 1e-12 * std::max(1.0, bound)) ++bound_mismatch;
    const double excess = rep.empirical - (bound + 3 * rep.std_error);
    worst_excess = std::max(worst_excess, excess);
    if (excess > 1e-12) ++violations;
  }
  o.require(violations == 0, "PA distance within the bound in every instance");
  o.require(bound_mismatch == 0, "reported PA bound equals the recomputed one");
  o.detail << pairs << " (n, ell) pairs two-universal; PA: 1000 instances, " << violations
           << " violations, max(empirical - bound - 3se)=" << worst_excess;
}

// ------------------------------------------------------------------ 7

void protocol_suite(Outcome& o) {
  Rng rng(7007);
  int failures = 0;
  int empty = 0;
  int unexplained = 0;
  for (int t = 0; t < 10000; ++t) {
    const auto c = static_cast<std::uint8_t>(t & 1);
    const auto tr = run_rot(16, 4, c, rng);
    const bool ok = tr.y == (c == 0 ? tr.s0 : tr.s1);
    empty += tr.choice_set_empty;
    failures += !ok;
    unexplained += !ok && !tr.choice_set_empty;
  }
  o.require(unexplained == 0, "ROT fails only on an empty I_c");
  o.require(empty <= 3, "empty I_c count consistent with 2^-16 per run");
  o.detail << "ROT n=16: " << failures << " failures, " << empty << " empty I_c in 10^4 runs (expected "
           << 1e4 * std::exp2(-16) << ")";

  RobustConfig cfg;
  cfg.n = 512;
  cfg.ell = 8;
  cfg.p1_sent = 0.95;
  cfg.ph_noclick = 0.6;
  cfg.pd_noclick = 0.05;
  cfg.ph_err = 0.01;
  cfg.eps = 1e-3;
  const auto code = LinearCode::repetition(3);
  const double p = cfg.ph_err;
  const double block_fail = 3 * p * p * (1 - p) + p * p * p;
  int aborts = 0;
  int decode_fail = 0;
  int accepted = 0;
  double oracle_sum = 0.0;
  constexpr int kRobustTrials = 1000;
  for (int t = 0; t < kRobustTrials; ++t) {
    const auto c = static_cast<std::uint8_t>(t & 1);
    const auto tr = run_robust_rot(cfg, code, c, RobustBob{}, rng);
    if (tr.aborted) {
      ++aborts;
      continue;
    }
    ++accepted;
    const auto size_c = static_cast<double>((c == 0 ? tr.rot.i0 : tr.rot.i1).size());
    oracle_sum += 1.0 - std::pow(1.0 - block_fail, std::ceil(size_c / 3.0));
    decode_fail += !tr.decoded;
  }
  const double abort_rate = aborts / double(kRobustTrials);
  const double abort_limit = cfg.eps + 3 * binom_sd(cfg.eps, kRobustTrials);
  const double fail_rate = accepted > 0 ? decode_fail / double(accepted) : 0.0;
  const double fail_oracle = accepted > 0 ? oracle_sum / accepted : 0.0;
  const double fail_limit = fail_oracle + 3 * binom_sd(fail_oracle, std::max(accepted, 1));
  o.require(abort_rate <= abort_limit, "robust abort rate <= eps + 3 sigma");
  o.require(fail_rate <= fail_limit, "robust decode failures <= binomial oracle + 3 sigma");
  o.detail << "; robust n=512: abort " << abort_rate << " (limit " << abort_limit << "), decode failures " << fail_rate
           << " (oracle " << fail_oracle << ", limit " << fail_limit << ")";

  const auto qcode = qid_code(16, 7);
  int equal_reject = 0;
  int false_accept = 0;
  constexpr int kQidTrials = 10000;
  for (int t = 0; t < kQidTrials; ++t) {
    const int w = 1 + static_cast<int>(rng.below(16));
    equal_reject += !run_qid(w, w, qcode, 8, rng).accept;
    int wb;
    do {
      wb = 1 + static_cast<int>(rng.below(16));
    } while (wb == w);
    false_accept += run_qid(w, wb, qcode, 8, rng).accept;
  }
  const double fa = false_accept / double(kQidTrials);
  const double fa_limit = std::exp2(-8) + 3 * binom_sd(std::exp2(-8), kQidTrials);
  o.require(equal_reject == 0, "Q-ID accepts every equal-password run");
  o.require(fa <= fa_limit, "Q-ID false accepts <= 2^-8 + 3 sigma");
  o.detail << "; Q-ID m=16 ell=8: " << equal_reject << " equal-password rejects, false-accept " << fa << " (limit "
           << fa_limit << ")";
}

// ------------------------------------------------------------------ 8

BasisString bases_of(std::uint64_t v, int n) { return bases_from_bits(bits_of(v, n)); }

std::uint64_t mask_of(const IndexSet& s) {
  std::uint64_t m = 0;
  for (int i : s) m |= std::uint64_t{1} << i;
  return m;
}

void independence_suite(Outcome& o) {
  Rng rng(8008);
  int rot_mismatch = 0;
  int rot_cases = 0;
  for (int n = 1; n <= 8; ++n) {
    for (std::uint64_t th = 0; th < (std::uint64_t{1} << n); ++th) {
      std::map<std::pair<std::uint64_t, std::uint64_t>, int> hist[2];
      for (std::uint64_t thh = 0; thh < (std::uint64_t{1} << n); ++thh) {
        for (std::uint8_t c : {0, 1}) {
          RotOptions opt;
          opt.theta = bases_of(th, n);
          opt.theta_hat = bases_of(thh, n);
          const auto t = run_rot(n, 1, c, rng, opt);
          ++hist[c][{mask_of(t.i0), mask_of(t.i1)}];
        }
      }
      ++rot_cases;
      rot_mismatch += hist[0] != hist[1];
    }
  }
  o.require(rot_mismatch == 0, "ROT index-set distribution identical for c = 0 and c = 1");

  int click_mismatch = 0;
  RobustConfig cfg;
  cfg.n = 64;
  cfg.p1_sent = 0.9;
  cfg.ph_noclick = 0.4;
  cfg.pd_noclick = 0.05;
  cfg.ph_err = 0.02;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Rng a(seed);
    Rng b(seed);
    const auto t0 = run_robust_rot(cfg, LinearCode::repetition(3), 0, RobustBob{}, a);
    const auto t1 = run_robust_rot(cfg, LinearCode::repetition(3), 1, RobustBob{}, b);
    click_mismatch += t0.click != t1.click;
  }
  o.require(click_mismatch == 0, "robust click report does not depend on c");

  int kappa_bad = 0;
  int qid_cases = 0;
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{2, 5}, {4, 8}, {5, 6}, {16, 7}, {16, 8}}) {
    const auto code = qid_code(m, n);
    for (int wb = 1; wb <= m; ++wb) {
      std::map<std::uint64_t, int> hist;
      for (std::uint64_t thh = 0; thh < (std::uint64_t{1} << n); ++thh) {
        QidOptions opt;
        opt.theta_hat = bases_of(thh, n);
        const auto t = run_qid(1, wb, code, 2, rng, opt);
        ++hist[value_of(bits_from_bases(t.kappa))];
      }
      ++qid_cases;
      bool uniform = hist.size() == (std::size_t{1} << n);
      for (const auto& [k, count] : hist) uniform = uniform && count == 1;
      kappa_bad += !uniform;
    }
  }
  o.require(kappa_bad == 0, "kappa uniform for every w_B");
  o.detail << rot_cases << " (n, theta) ROT cases, " << rot_mismatch << " mismatches; " << click_mismatch
           << " robust click mismatches over 500 seeds; " << qid_cases << " (code, w_B) Q-ID cases, " << kappa_bad
           << " non-uniform";
}

// ------------------------------------------------------------------ 9

void leakage_suite(Outcome& o) {
  Rng rng(9009);
  for (double r : {0.0, 0.3, 1.0}) {
    LeakageConfig cfg;
    cfg.n = 16;
    cfg.r = r;
    cfg.trials = 12500;
    const auto rep = estimate_leakage(cfg, rng);
    const double expect = (1 + r) / 2;
    const double sd = binom_sd(expect, static_cast<double>(rep.bits));
    const bool ok = r == 1.0 ? rep.guess_rate == 1.0 : std::abs(rep.guess_rate - expect) <= 4 * sd;
    o.require(ok, "guess rate at r = " + std::to_string(r));
    o.detail << "r=" << r << ": rate " << rep.guess_rate << " over " << rep.bits << " bits (expected " << expect
             << ", 4sd " << 4 * sd << "); ";
  }
  int configs = 0;
  int over_ot = 0;
  int over_pa = 0;
  double worst_pa_margin = 1.0;
  double min_ot_bound = 1.0;
  for (int n : {8, 16, 24}) {
    for (int ell : {1, 2, 4}) {
      for (double r : {0.0, 0.3, 0.6, 1.0}) {
        LeakageConfig cfg;
        cfg.n = n;
        cfg.ell = ell;
        cfg.r = r;
        cfg.trials = 1000;
        const auto rep = estimate_leakage(cfg, rng);
        ++configs;
        over_ot += rep.max_nonuniformity > rep.ot_bound;
        over_pa += !rep.within_pa_bound;
        worst_pa_margin = std::min(worst_pa_margin, rep.mean_pa_bound - rep.mean_nonuniformity);
        min_ot_bound = std::min(min_ot_bound, rep.ot_bound);
      }
    }
  }
  o.require(over_ot == 0, "non-uniformity within the ROT bound in every configuration");
  o.require(over_pa == 0, "mean non-uniformity within the PA bound in every configuration");
  o.detail << configs << " configurations: " << over_ot << " above the ROT bound (smallest bound " << min_ot_bound
           << "), " << over_pa << " above the PA bound (min margin " << worst_pa_margin << ")";
}

// ------------------------------------------------------------------ driver

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "formula fidelity", 1.0, formula_fidelity},
      {2, "capacity and exponent", 10.0, capacity_suite},
      {3, "rate curve", 10.0, rate_curve_suite},
      {4, "min-entropy splitting", 60.0, splitting_suite},
      {5, "smoothing vs LP", 60.0, smoothing_suite},
      {6, "hashing", 60.0, hashing_suite},
      {7, "protocol correctness", 120.0, protocol_suite},
      {8, "independence shields", 60.0, independence_suite},
      {9, "individual-attack simulation", 120.0, leakage_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double timed = o.subject_seconds >= 0.0 ? o.subject_seconds : secs;
    if (timed > c.limit_seconds) o.require(false, "runtime above " + std::to_string(c.limit_seconds) + " s");
    failed += !o.pass;
    std::printf("%s %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
