#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nqs/bits.hpp"
#include "nqs/bounds.hpp"
#include "nqs/codes.hpp"
#include "nqs/hashing.hpp"
#include "nqs/qsim.hpp"
#include "nqs/rng.hpp"

namespace nqs {

// ---------------------------------------------------------------------------
// Adversarial receivers. A dishonest Bob sees the qubits once, before the
// wait; what he keeps is a WaitRecord. The engine then sends the stored
// qubits through the storage channel, and everything Bob does afterwards is
// a function of the noisy qubits, his classical record and public messages.

struct WaitRecord {
  IndexSet positions;                // rounds whose qubit enters storage
  std::vector<DensityMatrix> qubits; // in `positions` order
  BitVector classical;               // unrestricted classical memory
};

struct PostWaitView {
  const IndexSet& positions;
  const std::vector<DensityMatrix>& stored;  // after the storage channel
  const BitVector& classical;
  const BasisString& theta;
};

struct BobReply {
  IndexSet i0;
  IndexSet i1;
  BitVector guess;  // guess of every bit of x
};

class DishonestBob {
 public:
  virtual ~DishonestBob() = default;
  virtual WaitRecord receive(const std::vector<DensityMatrix>& qubits, Rng& rng) const = 0;
  virtual BobReply after_wait(const PostWaitView& view, Rng& rng) const = 0;
};

/// Stores every qubit unmeasured. After learning theta, reads each stored
/// qubit with the Helstrom measurement for the two noisy candidate states.
/// The index sets mimic an honest Bob with choice `c` and a random cover
/// basis string kept in classical memory.
class IndividualStorageBob final : public DishonestBob {
 public:
  IndividualStorageBob(double r, std::uint8_t c) : r_(r), c_(c) {}

  WaitRecord receive(const std::vector<DensityMatrix>& qubits, Rng& rng) const override;
  BobReply after_wait(const PostWaitView& view, Rng& rng) const override;

 private:
  double r_;
  std::uint8_t c_;
};

// ---------------------------------------------------------------------------
// 1-2 randomized oblivious transfer.

struct RotTranscript {
  int n = 0;
  int ell = 0;
  std::uint8_t c = 0;
  BitVector x;
  BasisString theta;
  BasisString theta_hat;
  BitVector x_hat;
  IndexSet i0;
  IndexSet i1;
  ToeplitzHash f0;
  ToeplitzHash f1;
  BitVector s0;
  BitVector s1;
  BitVector y;
  bool choice_set_empty = false;
  bool adversarial = false;
  BitVector bob_guess;  // adversarial runs only
};

struct RotOptions {
  std::optional<BasisString> theta;      // test hook: force Alice's bases
  std::optional<BasisString> theta_hat;  // test hook: force Bob's bases
  const DishonestBob* bob = nullptr;     // null: honest Bob
  double storage_r = 1.0;                // storage channel for a dishonest Bob
};

RotTranscript run_rot(int n, int ell, std::uint8_t c, Rng& rng, const RotOptions& options = {});

/// Bob's index-set message for given bases and choice bit.
std::pair<IndexSet, IndexSet> rot_index_sets(const BasisString& theta, const BasisString& theta_hat,
                                             std::uint8_t c);

// ---------------------------------------------------------------------------
// Robust ROT over a lossy, noisy link.

struct RobustConfig {
  int n = 0;
  int ell = 1;
  double p1_sent = 1.0;     // single-photon emission probability
  double ph_noclick = 0.0;  // honest no-click probability
  double pd_noclick = 0.0;  // vacuum probability (no-click for a perfect detector)
  double ph_err = 0.0;      // honest bit-error probability on clicked rounds
  double eps = 1e-3;        // security target; sets the default zeta
  std::optional<double> zeta;

  double zeta_value() const;
  /// Nominal |I_c| = ceil((1 - ph_noclick) n / 2).
  int nominal_half() const;
  void validate() const;
};

enum class RobustBobKind {
  kHonest,
  // Perfect detector; reports every vacuum round plus `extra_missing`
  // single-photon rounds as missing, reads multi-photon rounds for free and
  // stores the remaining single-photon qubits.
  kErasureReporting,
};

struct RobustBob {
  RobustBobKind kind = RobustBobKind::kHonest;
  int extra_missing = 0;
  double storage_r = 1.0;
};

struct RobustTranscript {
  RotTranscript rot;  // index sets refer to positions within `remain`
  double p1_sent = 0.0;
  double ph_noclick = 0.0;
  double pd_noclick = 0.0;
  double ph_err = 0.0;
  double zeta = 0.0;
  BitVector click;      // per time slot, as reported by Bob
  BitVector multi;      // per time slot, multi-photon emission
  IndexSet remain;
  double accept_low = 0.0;
  double accept_high = 0.0;
  bool aborted = false;
  BitVector syn0;
  BitVector syn1;
  BitVector x_cor;
  bool decoded = false;  // x_cor equals x restricted to I_c
};

/// Block-syndrome error correction with `code` as the base block; each
/// x|I_b is zero-padded to whole blocks covering max(|I_b|, nominal_half()).
RobustTranscript run_robust_rot(const RobustConfig& config, const LinearCode& code, std::uint8_t c,
                                const RobustBob& bob, Rng& rng);

/// Chernoff fluctuation sqrt(ln(2/eps) / (2 n)).
double default_zeta(double eps, int n);

// ---------------------------------------------------------------------------
// Password-based identification.

struct QidTranscript {
  int n = 0;
  int ell = 0;
  int w_a = 0;
  int w_b = 0;
  BitVector x;
  BasisString theta;
  BasisString theta_hat;
  BitVector x_hat;
  BasisString kappa;
  IndexSet i_w;         // Alice's set, from w_a
  IndexSet i_w_server;  // Bob's set, from w_b
  ToeplitzHash f;
  ToeplitzHash g;
  BitVector z;
  BitVector expected;
  bool accept = false;
};

struct QidOptions {
  std::optional<BasisString> theta;
  std::optional<BasisString> theta_hat;
};

/// Honest noiseless run. F and G are affine Toeplitz families with domains
/// max(n, ell) and max(k, ell) bits.
QidTranscript run_qid(int w_a, int w_b, const QidCode& code, int ell, Rng& rng, const QidOptions& options = {});

/// String length tied to the impersonation analysis: floor(gamma nu d / 3)
/// for the code's distance d, at least 1.
int default_qid_ell(const QidCode& code, const StorageModel& storage, double delta);

// ---------------------------------------------------------------------------
// Individual-storage leakage.

inline constexpr int kMaxLeakageQubits = 24;
inline constexpr int kMaxLeakageOutputBits = 12;

struct LeakageConfig {
  int n = 16;
  int ell = 1;
  double r = 0.3;
  double delta = 0.1;  // only enters the ROT security bound
  int trials = 1000;
};

struct LeakageReport {
  int trials = 0;
  std::int64_t bits = 0;          // guessed bits on mismatched positions
  std::int64_t correct = 0;
  double guess_rate = 0.0;
  double guess_std_error = 0.0;
  double expected_rate = 0.0;     // (1 + r) / 2
  double mean_nonuniformity = 0.0;
  double max_nonuniformity = 0.0;
  double nonuniformity_std_error = 0.0;
  double ot_bound = 0.0;          // 2 eps of the ROT security statement, capped at 1
  double mean_pa_bound = 0.0;     // privacy-amplification bound with exact H_min
  bool within_ot_bound = false;
  bool within_pa_bound = false;
};

/// Exact distance from uniform of h(E), E i.i.d. Bernoulli(q) on the first
/// `bits` input positions, zero elsewhere.
double hashed_noise_nonuniformity(const ToeplitzHash& h, int bits, double q);

LeakageReport estimate_leakage(const LeakageConfig& config, Rng& rng);

}  // namespace nqs
