#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace nqs {

struct Register {
  std::string name;
  int size = 0;

  friend bool operator==(const Register&, const Register&) = default;
};

using RegisterSet = std::vector<std::string>;

/// Largest joint table the exhaustive routines accept.
inline constexpr Eigen::Index kMaxTableCells = Eigen::Index{1} << 16;

/// Nonnegative table over named finite registers, stored row-major
/// (the last register varies fastest). Total mass may be below one;
/// see JointDistribution for the normalized case.
class ProbabilityTable {
 public:
  ProbabilityTable(std::vector<Register> registers, Eigen::VectorXd probs);

  const std::vector<Register>& registers() const { return registers_; }
  const Eigen::VectorXd& probs() const { return probs_; }
  Eigen::Index cells() const { return probs_.size(); }
  double mass() const { return probs_.sum(); }

  int index_of(std::string_view name) const;
  bool has(std::string_view name) const;
  int alphabet(std::string_view name) const { return registers_[index_of(name)].size; }

  std::vector<int> unflatten(Eigen::Index cell) const;
  Eigen::Index flatten(const std::vector<int>& values) const;

  /// Marginal table over `keep`, registers in the listed order.
  ProbabilityTable marginal(const RegisterSet& keep) const;

  /// Rows index the joint `target` alphabet, columns the joint `given`
  /// alphabet; entry is the marginal mass. Empty `given` yields one column.
  Eigen::MatrixXd as_matrix(const RegisterSet& target, const RegisterSet& given) const;

 private:
  std::vector<Register> registers_;
  Eigen::VectorXd probs_;
  std::vector<Eigen::Index> strides_;
};

/// ProbabilityTable whose entries sum to one within 1e-12.
class JointDistribution : public ProbabilityTable {
 public:
  JointDistribution(std::vector<Register> registers, Eigen::VectorXd probs);
  explicit JointDistribution(ProbabilityTable table);

  static JointDistribution uniform(std::vector<Register> registers);

  /// Product with an independent register distributed as `marginal`.
  JointDistribution with_independent(Register reg, const Eigen::VectorXd& marginal) const;
};

/// Smoothed table q with 0 <= q <= p entrywise over the (target, given)
/// marginal of its parent; `mass` is 1 minus the smoothing budget spent.
struct SubDistribution {
  ProbabilityTable table;
  double mass = 1.0;
};

struct SplitResult {
  JointDistribution augmented;
  double alpha = 0.0;
  /// Min-entropy of the selected string given the split register and Z.
  double achieved = 0.0;
  /// Guarantee the construction promises when alpha is a valid lower bound.
  double guarantee = 0.0;
};

double guessing_probability(const ProbabilityTable& dist, const RegisterSet& target,
                            const RegisterSet& given);
double guessing_probability(const ProbabilityTable& dist, std::string_view target,
                            const RegisterSet& given);

/// Smooth min-entropy in bits; eps = 0 gives the ordinary min-entropy.
double min_entropy(const ProbabilityTable& dist, const RegisterSet& target,
                   const RegisterSet& given, double eps = 0.0);
double min_entropy(const ProbabilityTable& dist, std::string_view target,
                   const RegisterSet& given, double eps = 0.0);

/// The optimal sub-distribution behind min_entropy(dist, target, given, eps).
SubDistribution smooth(const ProbabilityTable& dist, const RegisterSet& target,
                       const RegisterSet& given, double eps);

/// Statistical distance of `target` from uniform and independent of `given`.
double nonuniformity(const ProbabilityTable& dist, const RegisterSet& target,
                     const RegisterSet& given);
double nonuniformity(const ProbabilityTable& dist, std::string_view target,
                     const RegisterSet& given);

/// Binary min-entropy splitting over registers X0, X1, Z. Appends register
/// D with D = 0 iff P(X0 = x0 | Z = z) < 2^(-alpha/2).
SplitResult split_binary(const JointDistribution& dist, double alpha);

/// m-ary splitting over registers X1..Xm, Z. Appends register V (stored as
/// index v-1) chosen as the first j < m with P(Xj = xj | Z = z) >= 2^(-alpha/2),
/// or m if there is none. `achieved` is the min-entropy of X_W given
/// (V, W, Z) conditioned on V != W, for W uniform on {1..m}.
SplitResult split_multi(const JointDistribution& dist, double alpha);

/// Caps for psucc_classical.
inline constexpr int kMaxChannelAlphabet = 8;
inline constexpr int kMaxCodeBits = 3;

/// Best average probability of sending k uniform bits through one use of the
/// classical channel. channel(y, a) = P(output y | input a); columns must be
/// probability vectors. k <= 0 means a single message (success 1).
double psucc_classical(const Eigen::MatrixXd& channel, int k);

}  // namespace nqs
