#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nqs/codes.hpp"
#include "nqs/entropy.hpp"
#include "nqs/hashing.hpp"

namespace nqs::verify {

namespace {

constexpr double kSlack = 1e-9;

int alphabet(Rng& rng, int max) { return 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max))); }

}  // namespace

Json to_json(const Report& r) {
  Json j;
  j["suite"] = r.suite;
  j["checks"] = r.checks;
  j["violations"] = r.violations;
  j["details"] = r.details;
  return j;
}

JointDistribution random_distribution(std::vector<Register> registers, Rng& rng) {
  Eigen::Index cells = 1;
  for (const auto& r : registers) cells *= r.size;
  Eigen::VectorXd p(cells);
  for (Eigen::Index i = 0; i < cells; ++i) p(i) = rng.bernoulli(0.25) ? 0.0 : -std::log(1.0 - rng.uniform());
  if (p.sum() == 0.0) p(static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(cells)))) = 1.0;
  p /= p.sum();
  return JointDistribution(std::move(registers), std::move(p));
}

Report split(int trials, Rng& rng) {
  Report rep{"split"};
  std::int64_t binary = 0;
  std::int64_t multi = 0;
  double worst_margin = 1e300;
  for (int t = 0; t < trials; ++t) {
    Rng trial = rng.split(static_cast<std::uint64_t>(t));
    const auto dist = random_distribution({{"X0", alphabet(trial, 8)}, {"X1", alphabet(trial, 8)}, {"Z", alphabet(trial, 4)}}, trial);
    const double alpha = min_entropy(dist, RegisterSet{"X0", "X1"}, RegisterSet{"Z"});
    const SplitResult res = split_binary(dist, alpha);
    ++rep.checks;
    ++binary;
    worst_margin = std::min(worst_margin, res.achieved - res.guarantee);
    if (res.achieved < res.guarantee - kSlack) ++rep.violations;

    const int m = 2 + t % 3;
    std::vector<Register> regs;
    const int cap = m == 4 ? 4 : 8;
    for (int j = 1; j <= m; ++j) regs.push_back({"X" + std::to_string(j), alphabet(trial, cap)});
    regs.push_back({"Z", alphabet(trial, 4)});
    const auto md = random_distribution(regs, trial);
    double pair_alpha = 1e300;
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) {
        pair_alpha = std::min(pair_alpha, min_entropy(md, RegisterSet{"X" + std::to_string(i), "X" + std::to_string(j)},
                                                      RegisterSet{"Z"}));
      }
    }
    const SplitResult mres = split_multi(md, pair_alpha);
    ++rep.checks;
    ++multi;
    worst_margin = std::min(worst_margin, mres.achieved - mres.guarantee);
    if (mres.achieved < mres.guarantee - kSlack) ++rep.violations;
  }
  rep.details["binary_checks"] = binary;
  rep.details["multi_checks"] = multi;
  rep.details["worst_margin"] = worst_margin;
  return rep;
}

Report hashing(int max_n, int max_ell) {
  Report rep{"hashing"};
  Json cases = Json::array();
  for (int n = 1; n <= max_n; ++n) {
    for (int ell = 1; ell <= std::min(n, max_ell); ++ell) {
      const double worst = collision_bound(n, ell);
      const double limit = std::exp2(-ell);
      ++rep.checks;
      if (worst > limit + kSlack) ++rep.violations;
      cases.push_back({{"n", n}, {"ell", ell}, {"max_collision", worst}, {"limit", limit}});
    }
  }
  rep.details["cases"] = cases;
  return rep;
}

Report pa(int trials, int samples, Rng& rng) {
  Report rep{"pa"};
  double worst_excess = -1e300;
  for (int t = 0; t < trials; ++t) {
    Rng trial = rng.split(static_cast<std::uint64_t>(t));
    const int n = 1 + static_cast<int>(trial.below(4));
    const int ell = 1 + static_cast<int>(trial.below(static_cast<std::uint64_t>(n)));
    const auto dist = random_distribution({{"X", 1 << n}, {"E", alphabet(trial, 4)}}, trial);
    const PaDistance d = pa_distance(dist, ell, samples, trial);
    ++rep.checks;
    const double excess = d.empirical - d.bound - 3.0 * d.std_error;
    worst_excess = std::max(worst_excess, excess);
    if (excess > kSlack) ++rep.violations;
  }
  rep.details["samples_per_instance"] = samples;
  rep.details["worst_excess_over_bound"] = worst_excess;
  return rep;
}

Report lemma4(int trials, Rng& rng) {
  Report rep{"lemma4"};
  const double smoothing[] = {0.0, 0.01, 0.1};
  const double extra[] = {0.1, 0.25, 0.5};
  double worst_margin = 1e300;
  for (int t = 0; t < trials; ++t) {
    Rng trial = rng.split(static_cast<std::uint64_t>(t));
    const int nx = 2 + static_cast<int>(trial.below(7));
    const int nt = alphabet(trial, 3);
    const int nq = 2 + static_cast<int>(trial.below(7));
    const int ny = 2 + static_cast<int>(trial.below(7));
    const auto xtq = random_distribution({{"X", nx}, {"T", nt}, {"Q", nq}}, trial);
    Eigen::MatrixXd channel(ny, nq);
    for (int a = 0; a < nq; ++a) {
      for (int y = 0; y < ny; ++y) channel(y, a) = trial.bernoulli(0.3) ? 0.0 : -std::log(1.0 - trial.uniform());
      if (channel.col(a).sum() == 0.0) channel(static_cast<Eigen::Index>(trial.below(static_cast<std::uint64_t>(ny))), a) = 1.0;
      channel.col(a) /= channel.col(a).sum();
    }
    // P(x, t, y) = sum_q P(x, t, q) W(y | q).
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(nx) * nt * ny);
    for (Eigen::Index cell = 0; cell < xtq.cells(); ++cell) {
      const auto v = xtq.unflatten(cell);
      for (int y = 0; y < ny; ++y) out((static_cast<Eigen::Index>(v[0]) * nt + v[1]) * ny + y) += xtq.probs()(cell) * channel(y, v[2]);
    }
    const JointDistribution xty({{"X", nx}, {"T", nt}, {"Y", ny}}, out / out.sum());

    // Without side information T.
    const double hx = min_entropy(xtq, "X", RegisterSet{});
    const double lhs3 = min_entropy(xty, "X", RegisterSet{"Y"});
    const double rhs3 = -std::log2(psucc_classical(channel, static_cast<int>(std::floor(hx + kSlack))));
    ++rep.checks;
    worst_margin = std::min(worst_margin, lhs3 - rhs3);
    if (lhs3 < rhs3 - kSlack) ++rep.violations;

    for (double e : smoothing) {
      const double h = min_entropy(xtq, "X", RegisterSet{"T"}, e);
      for (double e2 : extra) {
        const int k = static_cast<int>(std::floor(h - std::log2(1.0 / e2) + kSlack));
        const double lhs = min_entropy(xty, "X", RegisterSet{"T", "Y"}, e + e2);
        const double rhs = -std::log2(psucc_classical(channel, std::min(k, kMaxCodeBits)));
        ++rep.checks;
        worst_margin = std::min(worst_margin, lhs - rhs);
        if (lhs < rhs - kSlack) ++rep.violations;
      }
    }
  }
  rep.details["worst_margin"] = worst_margin;
  return rep;
}

Report codes(int trials, Rng& rng) {
  Report rep{"codes"};
  std::vector<LinearCode> catalog = {LinearCode::repetition(3), LinearCode::repetition(5), LinearCode::hamming74(),
                                     LinearCode::extended_hamming84(), LinearCode::identity(4)};
  for (int t = 0; t < trials; ++t) {
    Rng trial = rng.split(static_cast<std::uint64_t>(t));
    const int n = 2 + static_cast<int>(trial.below(11));
    const int k = 1 + static_cast<int>(trial.below(static_cast<std::uint64_t>(n)));
    catalog.push_back(LinearCode::random_systematic(n, k, trial));
  }
  Json summary = Json::array();
  for (const auto& code : catalog) {
    const int n = code.length();
    const int k = code.dimension();
    // Distance by listing every codeword.
    int d = n + 1;
    for (std::uint64_t msg = 1; msg < (std::uint64_t{1} << k); ++msg) d = std::min(d, weight(encode(code, bits_of(msg, k))));
    ++rep.checks;
    if (d != code.min_distance()) ++rep.violations;

    // Every error of weight <= (d - 1) / 2 on every codeword is corrected.
    const int t_corr = (d - 1) / 2;
    const SyndromeDecoder decoder(code);
    const BitVector zero_syndrome = BitVector::Zero(n - k);
    std::int64_t decoded = 0;
    for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << k); ++msg) {
      const BitVector word = encode(code, bits_of(msg, k));
      for (std::uint64_t e = 0; e < (std::uint64_t{1} << n); ++e) {
        if (std::popcount(e) > t_corr) continue;
        const BitVector received = word.binaryExpr(bits_of(e, n), [](std::uint8_t a, std::uint8_t b) -> std::uint8_t { return a ^ b; });
        ++rep.checks;
        ++decoded;
        if (decoder.decode(received, zero_syndrome) != word) ++rep.violations;
      }
    }
    summary.push_back({{"n", n}, {"k", k}, {"d", d}, {"decoded_patterns", decoded}});
  }
  rep.details["codes"] = summary;
  return rep;
}

}  // namespace nqs::verify
