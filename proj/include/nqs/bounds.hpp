#pragma once

#include <cstdint>
#include <vector>

namespace nqs {

/// Adversary storage: nu * n uses of a dim-dimensional depolarizing channel
/// that keeps its input with probability r.
struct StorageModel {
  int dim = 2;
  double r = 0.0;
  double nu = 1.0;

  void validate() const;
};

/// Parameters of the basic ROT length bound.
struct OtParams {
  double n = 0.0;  // number of qubits; held as double for astronomically large n
  double delta = 0.0;
  StorageModel storage;

  void validate() const;
};

enum class ErrorCorrectionTerm {
  kRemainingRounds,  // 1.2 h(p_err) m / 2 with m = (1 - p^h_noclick) n
  kErrorComplement,  // 1.2 h(p_err) (1 - p_err) n / 2, the tensor-product variant
};

/// Parameters of the robust (lossy, noisy) ROT length bound.
struct RobustParams {
  double n = 0.0;
  double delta = 0.0;
  StorageModel storage;
  double p1_sent = 0.0;
  double ph_noclick = 0.0;
  double pd_noclick = 0.0;
  double ph_err = 0.0;

  /// Rounds Alice accepts from an honest Bob.
  double m_total() const { return (1.0 - ph_noclick) * n; }
  /// Minimal number of single-photon rounds among them.
  double m1() const { return (p1_sent - ph_noclick + pd_noclick) * n; }

  void validate() const;
};

/// Parameters of the password-identification bounds.
struct QidParams {
  double n = 0.0;  // code length
  double m = 2.0;  // number of passwords
  double d_code = 0.0;
  double delta = 0.0;
  double ell = 0.0;
  StorageModel storage;
};

struct OtLength {
  std::int64_t ell = 0;
  double ell_real = 0.0;
  double epsilon = 0.0;
  double two_epsilon = 0.0;
  double gamma = 0.0;
  double capacity = 0.0;
  double rate = 0.0;  // rate argument passed to the exponent
};

struct QidError {
  double epsilon = 0.0;  // capped at 1
  double pa_term = 0.0;
  double uncertainty_term = 0.0;
  bool saturated = false;
};

struct ImpersonationError {
  std::int64_t ell = 0;
  double ell_real = 0.0;
  double epsilon = 0.0;  // each term capped at 1, so at most 2
  double bob_term = 0.0;
  double uncertainty_term = 0.0;
  double alice_error = 0.0;  // m^2 / 2^ell_real
  double mu = 0.0;
  double d = 0.0;
  double gamma = 0.0;
  bool insecure = false;
};

double binary_entropy(double p);
/// Inverse of the binary entropy on (0, 1/2].
double inv_binary_entropy(double y);

/// Error exponent of the BB84 uncertainty relation.
double sigma(double delta);

/// Error parameter of the ROT security bound; the security statement holds
/// with error 2 * epsilon.
double ot_epsilon(double delta, double n);

/// Classical capacity of the depolarizing channel. For dim > 2 the formula
/// is the standard generalization of the qubit expression.
double depolarizing_capacity(const StorageModel& storage);
double depolarizing_capacity(double r, int dim = 2);

/// Strong-converse exponent gamma(R): success probability of sending nR bits
/// through n channel uses is at most 2^(-n gamma(R)). Zero for R <= capacity.
double strong_converse_exponent(double rate, const StorageModel& storage);

/// log2 of the strong-converse bound on P_succ for `bits` bits sent through
/// `uses` channel uses.
double log2_psucc_bound(double bits, double uses, const StorageModel& storage);

OtLength ot_length(const OtParams& params);
OtLength robust_ot_length(const RobustParams& params,
                          ErrorCorrectionTerm term = ErrorCorrectionTerm::kRemainingRounds);

/// Security error against a dishonest server for a code of distance d_code.
QidError qid_error(const QidParams& params);

/// Combined impersonation error with the recommended string length and a
/// code at the Gilbert-Varshamov distance. Uses n, m, delta and storage.
ImpersonationError impersonation_error(const QidParams& params);

struct RegionRow {
  double r = 0.0;
  double nu = 0.0;
  double capacity = 0.0;
  double product = 0.0;
  bool feasible = false;
};

/// Grid over r in [0, 1] (r_steps points) and nu in (0, nu_max]
/// (nu_steps points, nu_j = nu_max * j / nu_steps).
std::vector<RegionRow> feasible_region(int r_steps, int nu_steps, double nu_max = 1.0, int dim = 2);

/// r at which capacity(r) * nu = 1/4; bisection.
double region_boundary(double nu, int dim = 2);

struct RateRow {
  double r = 0.0;
  double nu = 0.0;
  double n = 0.0;
  double delta = 0.0;
  double gamma = 0.0;
  double capacity = 0.0;
  std::int64_t ell = 0;
  double ot_rate = 0.0;
  double eps = 0.0;
  double two_eps = 0.0;
  bool feasible = false;
};

/// OT rate ell/n over an r-grid; infeasible rows carry ell = 0.
/// Empty when delta lies outside (0, 1/4).
std::vector<RateRow> rate_curve(double n, double delta, double nu, const std::vector<double>& r_grid,
                                int dim = 2);

}  // namespace nqs
