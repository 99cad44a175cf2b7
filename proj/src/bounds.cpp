#include "nqs/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "nqs/errors.hpp"

namespace nqs {

namespace {

constexpr double kAlphaMax = 1e6;
constexpr double kTMax = 1.0 - 1.0 / kAlphaMax;
constexpr int kGridPoints = 256;
constexpr double kBracketTolerance = 1e-10;

void check_delta(double delta) {
  require(std::isfinite(delta) && delta > 0.0 && delta < 0.25,
          "delta must lie in (0, 1/4) [OT and identification security bounds]");
}

// log2(1/epsilon) for the ROT error parameter, evaluated without forming
// epsilon (which underflows for large n).
double log2_inv_ot_epsilon(double delta, double n) {
  const double q = delta / 4.0;
  const double denom = 32.0 * std::pow(2.0 + std::log2(4.0 / delta), 2.0);
  return q * q / denom * n / std::numbers::ln2 - 1.0;
}

// Depolarizing-channel spectrum: one eigenvalue lambda_plus, dim-1 copies of lambda_minus.
struct Spectrum {
  double plus;
  double minus;
  int dim;
};

Spectrum spectrum(const StorageModel& s) {
  const double minus = (1.0 - s.r) / s.dim;
  return {s.r + minus, minus, s.dim};
}

// Renyi entropy H_alpha of the output spectrum, alpha = 1 / (1 - t).
double renyi_entropy(const Spectrum& sp, double t) {
  const double alpha = 1.0 / (1.0 - t);
  const double am1 = t / (1.0 - t);  // alpha - 1
  if (t < 0.5) {
    // sum w lambda^alpha - 1 = sum w lambda (lambda^(alpha-1) - 1); accurate near alpha = 1.
    double s = 0.0;
    if (sp.plus > 0.0) s += sp.plus * std::expm1(am1 * std::log(sp.plus));
    if (sp.minus > 0.0) s += (sp.dim - 1) * sp.minus * std::expm1(am1 * std::log(sp.minus));
    return -std::log1p(s) / std::numbers::ln2 / am1;
  }
  double log2_sum = alpha * std::log2(sp.plus);
  if (sp.minus > 0.0) log2_sum += std::log2(1.0 + (sp.dim - 1) * std::pow(sp.minus / sp.plus, alpha));
  return -log2_sum / am1;
}

double exponent_objective(double rate, const Spectrum& sp, double t) {
  if (t <= 0.0) return 0.0;
  return t * (rate - std::log2(static_cast<double>(sp.dim)) + renyi_entropy(sp, t));
}

}  // namespace

void StorageModel::validate() const {
  require(dim >= 2, "storage dimension must be >= 2 [depolarizing channel]");
  require(std::isfinite(r) && r >= 0.0 && r <= 1.0, "r must lie in [0, 1] [depolarizing channel]");
  require(std::isfinite(nu) && nu > 0.0, "storage rate nu must be > 0 [tensor-product storage]");
}

void OtParams::validate() const {
  check_delta(delta);
  storage.validate();
  require(std::isfinite(n) && n >= 4.0 / delta, "n must be >= 4/delta [OT security bound]");
}

void RobustParams::validate() const {
  check_delta(delta);
  storage.validate();
  require(std::isfinite(n) && n >= 1.0, "n must be >= 1");
  for (double p : {p1_sent, ph_noclick, pd_noclick, ph_err}) {
    require(std::isfinite(p) && p >= 0.0 && p <= 1.0, "source and detector probabilities must lie in [0, 1]");
  }
  require(m1() > 0.0, "p1_sent - ph_noclick + pd_noclick must be > 0 [robust OT single-photon rounds]");
  require(ph_err < 0.5, "ph_err must be < 1/2 [robust OT error correction]");
  require(m1() >= 4.0 / delta, "m1 must be >= 4/delta [robust OT security bound]");
}

double binary_entropy(double p) {
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0, "binary entropy argument must lie in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double inv_binary_entropy(double y) {
  require(std::isfinite(y) && y >= 0.0 && y <= 1.0, "inverse binary entropy argument must lie in [0, 1]");
  if (y == 0.0) return 0.0;
  if (y == 1.0) return 0.5;
  double lo = 0.0;
  double hi = 0.5;
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (binary_entropy(mid) < y ? lo : hi) = mid;
  }
  return std::abs(binary_entropy(lo) - y) < std::abs(binary_entropy(hi) - y) ? lo : hi;
}

double sigma(double delta) {
  require(std::isfinite(delta) && delta > 0.0 && delta < 1.0, "sigma: delta must lie in (0, 1)");
  const double denom = 2.0 - std::log2(delta);
  return delta * delta * std::numbers::log2e / (32.0 * denom * denom);
}

double ot_epsilon(double delta, double n) {
  check_delta(delta);
  require(std::isfinite(n) && n >= 1.0, "n must be >= 1");
  const double q = delta / 4.0;
  const double denom = 2.0 + std::log2(4.0 / delta);
  return 2.0 * std::exp(-(q * q) / (32.0 * denom * denom) * n);
}

double depolarizing_capacity(const StorageModel& storage) {
  storage.validate();
  const Spectrum sp = spectrum(storage);
  double c = std::log2(static_cast<double>(sp.dim)) + sp.plus * std::log2(sp.plus);
  if (sp.minus > 0.0) c += (sp.dim - 1) * sp.minus * std::log2(sp.minus);
  return std::max(c, 0.0);
}

double depolarizing_capacity(double r, int dim) { return depolarizing_capacity(StorageModel{dim, r, 1.0}); }

double strong_converse_exponent(double rate, const StorageModel& storage) {
  storage.validate();
  require(std::isfinite(rate) && rate >= 0.0, "rate must be >= 0");
  // H_alpha is nonincreasing in alpha, so the bracket never exceeds
  // rate - capacity; below capacity the maximum is attained at alpha = 1.
  if (rate <= depolarizing_capacity(storage)) return 0.0;

  const Spectrum sp = spectrum(storage);
  auto f = [&](double t) {
    const double v = exponent_objective(rate, sp, t);
    if (!std::isfinite(v)) throw NumericFailure("strong-converse objective is not finite at t = " + std::to_string(t));
    return v;
  };

  int best = 0;
  double best_value = 0.0;
  for (int i = 1; i <= kGridPoints; ++i) {
    const double v = f(kTMax * i / kGridPoints);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  double a = kTMax * std::max(best - 1, 0) / kGridPoints;
  double b = kTMax * std::min(best + 1, kGridPoints) / kGridPoints;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int iterations = 0;
  while (b - a > kBracketTolerance) {
    if (++iterations > 200) throw NumericFailure("strong-converse optimizer did not reach the 1e-10 bracket");
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  best_value = std::max({best_value, fc, fd});
  // alpha -> infinity: H_inf = -log2 lambda_max.
  const double limit = rate - std::log2(static_cast<double>(sp.dim)) - std::log2(sp.plus);
  return std::max({best_value, limit, 0.0});
}

double log2_psucc_bound(double bits, double uses, const StorageModel& storage) {
  require(std::isfinite(uses) && uses > 0.0, "channel uses must be > 0");
  require(std::isfinite(bits) && bits >= 0.0, "bit count must be >= 0");
  return -uses * strong_converse_exponent(bits / uses, storage);
}

OtLength ot_length(const OtParams& params) {
  params.validate();
  const StorageModel& s = params.storage;
  OtLength out;
  out.capacity = depolarizing_capacity(s);
  out.epsilon = ot_epsilon(params.delta, params.n);
  out.two_epsilon = 2.0 * out.epsilon;
  if (!(out.capacity * s.nu < 0.25 - params.delta)) {
    throw Infeasible("storage too large: capacity * nu must be < 1/4 - delta [tensor-product OT bound]");
  }
  out.rate = (0.25 - params.delta) / s.nu;
  out.gamma = strong_converse_exponent(out.rate, s);
  out.ell_real = out.gamma * s.nu * params.n / 2.0 - log2_inv_ot_epsilon(params.delta, params.n);
  if (!(out.ell_real >= 1.0)) throw Infeasible("no positive-length OT for these parameters");
  out.ell = static_cast<std::int64_t>(std::floor(out.ell_real));
  return out;
}

OtLength robust_ot_length(const RobustParams& params, ErrorCorrectionTerm term) {
  params.validate();
  const StorageModel& s = params.storage;
  const double n = params.n;
  const double m1 = params.m1();
  OtLength out;
  out.capacity = depolarizing_capacity(s);
  out.epsilon = ot_epsilon(params.delta, m1);
  out.two_epsilon = 2.0 * out.epsilon;
  out.rate = (0.25 - params.delta) * m1 / n;
  if (!(out.capacity * s.nu < out.rate)) {
    throw Infeasible("storage too large: capacity * nu * n must be < (1/4 - delta) m1 [robust OT bound]");
  }
  out.gamma = strong_converse_exponent(out.rate / s.nu, s);
  const double h = binary_entropy(params.ph_err);
  const double ec = term == ErrorCorrectionTerm::kRemainingRounds ? 1.2 * h * params.m_total() / 2.0
                                                                  : 1.2 * h * (1.0 - params.ph_err) * n / 2.0;
  out.ell_real = 0.5 * s.nu * out.gamma * n - ec - log2_inv_ot_epsilon(params.delta, m1);
  if (!(out.ell_real >= 1.0)) throw Infeasible("no positive-length robust OT for these parameters");
  out.ell = static_cast<std::int64_t>(std::floor(out.ell_real));
  return out;
}

QidError qid_error(const QidParams& p) {
  check_delta(p.delta);
  p.storage.validate();
  require(std::isfinite(p.m) && p.m >= 2.0, "number of passwords m must be >= 2");
  require(std::isfinite(p.n) && p.n >= 1.0, "code length n must be >= 1");
  require(std::isfinite(p.d_code) && p.d_code >= 1.0 && p.d_code <= p.n, "code distance must lie in [1, n]");
  require(std::isfinite(p.ell) && p.ell >= 0.0, "ell must be >= 0");
  const double log_m = std::log2(p.m);
  require(p.d_code >= (4.0 + 4.0 * log_m) / p.delta,
          "code distance must be >= (4 + 4 log2 m)/delta [identification security against the server]");
  const double log_psucc = log2_psucc_bound((0.25 - p.delta) * p.d_code, p.storage.nu * p.n, p.storage);
  QidError out;
  out.pa_term = std::exp2(0.5 * (log_psucc + p.ell));
  out.uncertainty_term = std::exp2(-(sigma(p.delta / 4.0) * p.d_code - log_m - 3.0));
  const double total = out.pa_term + out.uncertainty_term;
  out.saturated = !(total < 1.0);
  out.epsilon = std::min(total, 1.0);
  return out;
}

ImpersonationError impersonation_error(const QidParams& p) {
  check_delta(p.delta);
  p.storage.validate();
  require(std::isfinite(p.m) && p.m >= 2.0, "number of passwords m must be >= 2 [password min-entropy >= 1]");
  require(std::isfinite(p.n) && p.n >= 1.0, "code length n must be >= 1");
  const double log_m = std::log2(p.m);
  require(log_m < p.n, "log2 m must be < n [Gilbert-Varshamov parameters]");
  const StorageModel& s = p.storage;
  if (!(depolarizing_capacity(s) * s.nu < 0.25)) {
    throw Infeasible("storage too large: capacity * nu must be < 1/4 [impersonation bound]");
  }
  ImpersonationError out;
  out.mu = inv_binary_entropy(1.0 - log_m / p.n);
  out.d = out.mu * p.n - 1.0;
  out.gamma = strong_converse_exponent((0.25 - p.delta) / s.nu, s);
  const double gnu = out.gamma * s.nu;
  out.ell_real = gnu * out.d / 3.0;
  out.ell = static_cast<std::int64_t>(std::floor(std::max(out.ell_real, 0.0)));
  out.bob_term = std::min(1.0, std::exp2(-(gnu * out.mu * p.n - 6.0 * log_m - 1.0) / 3.0));
  out.uncertainty_term = std::min(1.0, std::exp2(-(sigma(p.delta / 4.0) * out.mu * p.n - log_m - 4.0)));
  out.alice_error = std::min(1.0, std::exp2(2.0 * log_m - out.ell_real));
  out.epsilon = out.bob_term + out.uncertainty_term;
  out.insecure = !(out.epsilon < 1.0);
  return out;
}

std::vector<RegionRow> feasible_region(int r_steps, int nu_steps, double nu_max, int dim) {
  require(r_steps >= 2 && nu_steps >= 2, "region grid needs at least 2 steps per axis");
  require(std::isfinite(nu_max) && nu_max > 0.0, "nu_max must be > 0");
  std::vector<RegionRow> rows;
  rows.reserve(static_cast<std::size_t>(r_steps) * nu_steps);
  for (int i = 0; i < r_steps; ++i) {
    const double r = static_cast<double>(i) / (r_steps - 1);
    const double c = depolarizing_capacity(r, dim);
    for (int j = 1; j <= nu_steps; ++j) {
      const double nu = nu_max * j / nu_steps;
      rows.push_back({r, nu, c, c * nu, c * nu < 0.25});
    }
  }
  return rows;
}

double region_boundary(double nu, int dim) {
  require(std::isfinite(nu) && nu > 0.0, "nu must be > 0");
  const double target = 0.25 / nu;
  if (target >= depolarizing_capacity(1.0, dim)) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (depolarizing_capacity(mid, dim) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<RateRow> rate_curve(double n, double delta, double nu, const std::vector<double>& r_grid, int dim) {
  std::vector<RateRow> rows;
  if (!(delta > 0.0 && delta < 0.25)) return rows;
  rows.reserve(r_grid.size());
  for (double r : r_grid) {
    OtParams params{n, delta, StorageModel{dim, r, nu}};
    params.validate();
    RateRow row;
    row.r = r;
    row.nu = nu;
    row.n = n;
    row.delta = delta;
    row.capacity = depolarizing_capacity(params.storage);
    row.gamma = strong_converse_exponent((0.25 - delta) / nu, params.storage);
    row.eps = ot_epsilon(delta, n);
    row.two_eps = 2.0 * row.eps;
    try {
      const OtLength len = ot_length(params);
      row.ell = len.ell;
      row.ot_rate = static_cast<double>(len.ell) / n;
      row.feasible = true;
    } catch (const Infeasible&) {
      row.feasible = false;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace nqs
