#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "nqs/errors.hpp"
#include "nqs/protocols.hpp"

namespace nqs {

double hashed_noise_nonuniformity(const ToeplitzHash& h, int bits, double q) {
  const int ell = h.output_bits();
  require(ell >= 1 && ell <= kMaxLeakageOutputBits, "nonuniformity check is limited to ell <= 12");
  require(bits >= 0 && bits <= h.input_bits() && bits <= 64, "noise length exceeds the hash domain");
  require(q >= 0.0 && q <= 1.0, "noise probability must lie in [0, 1]");

  // chi(u) = E[(-1)^(u . hE)] = (1 - 2q)^wt(u^T T restricted to the noisy columns).
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(ell), 0);
  for (int i = 0; i < ell; ++i) {
    for (int j = 0; j < bits; ++j) {
      if (h.entry(i, j)) rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    }
  }
  const std::size_t size = std::size_t{1} << ell;
  std::vector<std::uint64_t> combo(size, 0);
  std::vector<double> spectrum(size, 1.0);
  const double bias = 1.0 - 2.0 * q;
  for (std::size_t u = 1; u < size; ++u) {
    combo[u] = combo[u & (u - 1)] ^ rows[static_cast<std::size_t>(std::countr_zero(u))];
    spectrum[u] = std::pow(bias, std::popcount(combo[u]));
  }
  // In-place Walsh-Hadamard transform turns characteristic values into 2^ell P(s).
  for (std::size_t len = 1; len < size; len <<= 1) {
    for (std::size_t i = 0; i < size; i += 2 * len) {
      for (std::size_t j = i; j < i + len; ++j) {
        const double a = spectrum[j];
        const double b = spectrum[j + len];
        spectrum[j] = a + b;
        spectrum[j + len] = a - b;
      }
    }
  }
  double d = 0.0;
  const double share = 1.0 / static_cast<double>(size);
  for (double v : spectrum) d += std::abs(v * share - share);
  return 0.5 * d;
}

LeakageReport estimate_leakage(const LeakageConfig& config, Rng& rng) {
  require(config.n >= 1 && config.n <= kMaxLeakageQubits, "leakage estimation is limited to n <= 24");
  require(config.ell >= 1 && config.ell <= config.n && config.ell <= kMaxLeakageOutputBits,
          "leakage estimation needs 1 <= ell <= min(n, 12)");
  require(config.r >= 0.0 && config.r <= 1.0, "storage noise r must lie in [0, 1]");
  require(config.delta > 0.0 && config.delta < 0.25, "delta must lie in (0, 1/4)");
  require(config.trials >= 1000, "leakage estimation needs at least 1000 trials");

  const double q = (1.0 - config.r) / 2.0;
  const double per_bit_entropy = -std::log2((1.0 + config.r) / 2.0);
  LeakageReport rep;
  rep.trials = config.trials;
  rep.expected_rate = (1.0 + config.r) / 2.0;
  double sum_d = 0.0;
  double sum_d2 = 0.0;
  double sum_pa = 0.0;
  for (int trial = 0; trial < config.trials; ++trial) {
    const auto c = static_cast<std::uint8_t>(trial & 1);
    const IndividualStorageBob bob(config.r, c);
    RotOptions options;
    options.bob = &bob;
    options.storage_r = config.r;
    const RotTranscript t = run_rot(config.n, config.ell, c, rng, options);

    // The string Bob did not choose.
    const IndexSet& other = c == 0 ? t.i1 : t.i0;
    for (int i : other) {
      ++rep.bits;
      if (t.bob_guess(i) == t.x(i)) ++rep.correct;
    }
    // Given Bob's readout g, x|other = g xor E with E i.i.d. Bernoulli(q),
    // so S_other is a known shift of h(E).
    const double d = hashed_noise_nonuniformity(c == 0 ? t.f1 : t.f0, static_cast<int>(other.size()), q);
    sum_d += d;
    sum_d2 += d * d;
    rep.max_nonuniformity = std::max(rep.max_nonuniformity, d);
    const double hmin = per_bit_entropy * static_cast<double>(other.size());
    sum_pa += std::min(1.0, std::exp2(-0.5 * (hmin - config.ell) - 1.0));
  }
  const double trials = config.trials;
  rep.guess_rate = rep.bits > 0 ? static_cast<double>(rep.correct) / static_cast<double>(rep.bits) : 0.0;
  rep.guess_std_error = rep.bits > 0 ? std::sqrt(rep.guess_rate * (1.0 - rep.guess_rate) / static_cast<double>(rep.bits)) : 0.0;
  rep.mean_nonuniformity = sum_d / trials;
  rep.nonuniformity_std_error = std::sqrt(std::max(sum_d2 / trials - rep.mean_nonuniformity * rep.mean_nonuniformity, 0.0) / trials);
  rep.mean_pa_bound = sum_pa / trials;
  rep.ot_bound = std::min(1.0, 2.0 * ot_epsilon(config.delta, config.n));
  rep.within_ot_bound = rep.max_nonuniformity <= rep.ot_bound;
  rep.within_pa_bound = rep.mean_nonuniformity <= rep.mean_pa_bound + 3.0 * rep.nonuniformity_std_error;
  return rep;
}

}  // namespace nqs
