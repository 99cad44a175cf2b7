#include "nqs/protocols.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "nqs/errors.hpp"

namespace nqs {

namespace {

BitVector xor_bits(const BitVector& a, const BitVector& b) {
  return a.binaryExpr(b, [](std::uint8_t u, std::uint8_t v) -> std::uint8_t { return u ^ v; });
}

std::vector<DensityMatrix> prepare_all(const BitVector& x, const BasisString& theta) {
  std::vector<DensityMatrix> qubits;
  qubits.reserve(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) qubits.push_back(bb84_prepare(x(static_cast<Eigen::Index>(i)), theta[i]));
  return qubits;
}

void check_bases(const std::optional<BasisString>& forced, int n, const char* what) {
  if (forced) require(static_cast<int>(forced->size()) == n, std::string(what) + " must have n entries");
}

BasisString restrict_bases(const BasisString& b, const IndexSet& positions) {
  BasisString out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(b[static_cast<std::size_t>(p)]);
  return out;
}

void check_index_set(const IndexSet& s, int n) {
  for (int i : s) require(i >= 0 && i < n, "index set entry out of range");
}

std::uint8_t helstrom_guess(const DensityMatrix& stored, Basis basis, double r, Rng& rng) {
  const DensityMatrix rho0 = depolarize(bb84_prepare(0, basis), r);
  const DensityMatrix rho1 = depolarize(bb84_prepare(1, basis), r);
  return measure_projector(stored, helstrom_projector(rho0, rho1, 0.5), rng);
}

}  // namespace

WaitRecord IndividualStorageBob::receive(const std::vector<DensityMatrix>& qubits, Rng& rng) const {
  WaitRecord rec;
  rec.positions.resize(qubits.size());
  for (std::size_t i = 0; i < qubits.size(); ++i) rec.positions[i] = static_cast<int>(i);
  rec.qubits = qubits;
  rec.classical = random_bits(static_cast<Eigen::Index>(qubits.size()), rng);  // cover bases
  return rec;
}

BobReply IndividualStorageBob::after_wait(const PostWaitView& view, Rng& rng) const {
  BobReply reply;
  const auto sets = rot_index_sets(view.theta, bases_from_bits(view.classical), c_);
  reply.i0 = sets.first;
  reply.i1 = sets.second;
  reply.guess = BitVector::Zero(static_cast<Eigen::Index>(view.theta.size()));
  for (std::size_t k = 0; k < view.positions.size(); ++k) {
    const int i = view.positions[k];
    reply.guess(i) = helstrom_guess(view.stored[k], view.theta[static_cast<std::size_t>(i)], r_, rng);
  }
  return reply;
}

std::pair<IndexSet, IndexSet> rot_index_sets(const BasisString& theta, const BasisString& theta_hat,
                                             std::uint8_t c) {
  require(theta.size() == theta_hat.size(), "basis strings must have equal length");
  require(c <= 1, "choice bit must be 0 or 1");
  IndexSet match;
  IndexSet differ;
  for (std::size_t i = 0; i < theta.size(); ++i) (theta[i] == theta_hat[i] ? match : differ).push_back(static_cast<int>(i));
  if (c == 0) return {match, differ};
  return {differ, match};
}

RotTranscript run_rot(int n, int ell, std::uint8_t c, Rng& rng, const RotOptions& options) {
  require(n >= 1, "n must be >= 1");
  require(ell >= 1 && ell <= n, "ell must lie in [1, n]");
  require(c <= 1, "choice bit must be 0 or 1");
  check_bases(options.theta, n, "forced theta");
  check_bases(options.theta_hat, n, "forced theta_hat");
  require(options.storage_r >= 0.0 && options.storage_r <= 1.0, "storage noise r must lie in [0, 1]");

  const Rng run = rng.split(rng());
  Rng alice = run.split(1);
  Rng bob = run.split(2);
  Rng alice_hash = run.split(3);
  const Rng measurement = run.split(4);

  RotTranscript t;
  t.n = n;
  t.ell = ell;
  t.c = c;
  t.x = random_bits(n, alice);
  t.theta = options.theta ? *options.theta : random_bases(static_cast<std::size_t>(n), alice);
  const std::vector<DensityMatrix> qubits = prepare_all(t.x, t.theta);

  if (options.bob == nullptr) {
    t.theta_hat = options.theta_hat ? *options.theta_hat : random_bases(static_cast<std::size_t>(n), bob);
    t.x_hat.resize(n);
    for (int i = 0; i < n; ++i) {
      Rng round = measurement.split(static_cast<std::uint64_t>(i));
      t.x_hat(i) = measure(qubits[static_cast<std::size_t>(i)], t.theta_hat[static_cast<std::size_t>(i)], round);
    }
    // Wait; Alice announces theta.
    std::tie(t.i0, t.i1) = rot_index_sets(t.theta, t.theta_hat, c);
  } else {
    t.adversarial = true;
    WaitRecord rec = options.bob->receive(qubits, bob);
    require(rec.positions.size() == rec.qubits.size(), "stored positions and qubits must match");
    check_index_set(rec.positions, n);
    for (auto& q : rec.qubits) q = depolarize(q, options.storage_r);
    const PostWaitView view{rec.positions, rec.qubits, rec.classical, t.theta};
    BobReply reply = options.bob->after_wait(view, bob);
    check_index_set(reply.i0, n);
    check_index_set(reply.i1, n);
    t.i0 = std::move(reply.i0);
    t.i1 = std::move(reply.i1);
    t.bob_guess = std::move(reply.guess);
  }

  t.f0 = ToeplitzHash::random(n, ell, alice_hash);
  t.f1 = ToeplitzHash::random(n, ell, alice_hash);
  t.s0 = t.f0(restrict_to(t.x, t.i0));
  t.s1 = t.f1(restrict_to(t.x, t.i1));

  const IndexSet& ic = c == 0 ? t.i0 : t.i1;
  t.choice_set_empty = ic.empty();
  if (!t.adversarial) t.y = (c == 0 ? t.f0 : t.f1)(restrict_to(t.x_hat, ic));
  return t;
}

double default_zeta(double eps, int n) {
  require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
  require(n >= 1, "n must be >= 1");
  return std::sqrt(std::log(2.0 / eps) / (2.0 * n));
}

double RobustConfig::zeta_value() const { return zeta ? *zeta : default_zeta(eps, n); }

int RobustConfig::nominal_half() const {
  return std::max(1, static_cast<int>(std::ceil((1.0 - ph_noclick) * n / 2.0)));
}

void RobustConfig::validate() const {
  require(n >= 1, "n must be >= 1");
  require(ell >= 1 && ell <= n, "ell must lie in [1, n]");
  auto prob = [](double p, const char* name) {
    require(p >= 0.0 && p <= 1.0, std::string(name) + " must lie in [0, 1]");
  };
  prob(p1_sent, "p1_sent");
  prob(ph_noclick, "ph_noclick");
  prob(pd_noclick, "pd_noclick");
  prob(ph_err, "ph_err");
  require(ph_noclick < 1.0, "ph_noclick must be < 1");
  require(pd_noclick <= ph_noclick, "pd_noclick must not exceed ph_noclick");
  require(p1_sent + pd_noclick <= 1.0 + 1e-12, "p1_sent + pd_noclick must not exceed 1");
  require(ph_err < 0.5, "ph_err must be < 1/2");
  require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
  if (zeta) require(*zeta >= 0.0, "zeta must be >= 0");
}

RobustTranscript run_robust_rot(const RobustConfig& config, const LinearCode& code, std::uint8_t c,
                                const RobustBob& bob, Rng& rng) {
  config.validate();
  require(c <= 1, "choice bit must be 0 or 1");
  require(bob.extra_missing >= 0, "extra_missing must be >= 0");
  require(bob.storage_r >= 0.0 && bob.storage_r <= 1.0, "storage noise r must lie in [0, 1]");
  const int n = config.n;
  const int block = code.length();
  require(block <= config.nominal_half(), "base code is longer than the nominal block length");

  const Rng run = rng.split(rng());
  Rng alice = run.split(1);
  Rng bob_rng = run.split(2);
  Rng channel = run.split(3);
  Rng alice_hash = run.split(4);

  RobustTranscript t;
  t.p1_sent = config.p1_sent;
  t.ph_noclick = config.ph_noclick;
  t.pd_noclick = config.pd_noclick;
  t.ph_err = config.ph_err;
  t.zeta = config.zeta_value();
  RotTranscript& rot = t.rot;
  rot.n = n;
  rot.ell = config.ell;
  rot.c = c;
  rot.adversarial = bob.kind != RobustBobKind::kHonest;
  rot.x = random_bits(n, alice);
  rot.theta = random_bases(static_cast<std::size_t>(n), alice);
  rot.theta_hat = random_bases(static_cast<std::size_t>(n), bob_rng);  // cover bases for the adversary

  enum class Source { kVacuum, kSingle, kMulti };
  std::vector<Source> source(static_cast<std::size_t>(n));
  for (auto& s : source) {
    const double u = channel.uniform();
    s = u < config.pd_noclick ? Source::kVacuum
        : u < config.pd_noclick + config.p1_sent ? Source::kSingle
                                                 : Source::kMulti;
  }
  t.multi = BitVector::Zero(n);
  for (int i = 0; i < n; ++i) t.multi(i) = source[static_cast<std::size_t>(i)] == Source::kMulti;

  t.click = BitVector::Zero(n);
  BitVector x_hat = BitVector::Zero(n);
  if (bob.kind == RobustBobKind::kHonest) {
    const double p_click = config.pd_noclick < 1.0 ? (1.0 - config.ph_noclick) / (1.0 - config.pd_noclick) : 0.0;
    for (int i = 0; i < n; ++i) {
      const auto si = static_cast<std::size_t>(i);
      if (source[si] == Source::kVacuum || !channel.bernoulli(p_click)) continue;
      t.click(i) = 1;
      Rng round = channel.split(static_cast<std::uint64_t>(i));
      std::uint8_t out = measure(bb84_prepare(rot.x(i), rot.theta[si]), rot.theta_hat[si], round);
      if (round.bernoulli(config.ph_err)) out ^= 1;
      x_hat(i) = out;
    }
  } else {
    int extra = bob.extra_missing;
    for (int i = 0; i < n; ++i) {
      const Source s = source[static_cast<std::size_t>(i)];
      if (s == Source::kVacuum) continue;
      if (s == Source::kSingle && extra > 0) {
        --extra;
        continue;
      }
      t.click(i) = 1;
    }
  }

  for (int i = 0; i < n; ++i) {
    if (t.click(i)) t.remain.push_back(i);
  }
  const double m = static_cast<double>(t.remain.size());
  t.accept_low = (1.0 - config.ph_noclick - t.zeta) * n;
  t.accept_high = (1.0 - config.ph_noclick + t.zeta) * n;
  t.aborted = m < t.accept_low || m > t.accept_high;
  if (t.aborted) return t;

  // Wait; Alice announces the bases of the remaining rounds.
  const BasisString theta_rem = restrict_bases(rot.theta, t.remain);
  const BasisString theta_hat_rem = restrict_bases(rot.theta_hat, t.remain);
  std::tie(rot.i0, rot.i1) = rot_index_sets(theta_rem, theta_hat_rem, c);

  const BitVector x_rem = restrict_to(rot.x, t.remain);
  const IndexSet& ic = c == 0 ? rot.i0 : rot.i1;
  BitVector bob_rem;
  if (bob.kind == RobustBobKind::kHonest) {
    rot.x_hat = restrict_to(x_hat, t.remain);
  } else {
    bob_rem.resize(static_cast<Eigen::Index>(t.remain.size()));
    for (std::size_t k = 0; k < t.remain.size(); ++k) {
      const int i = t.remain[k];
      if (t.multi(i)) {
        bob_rem(static_cast<Eigen::Index>(k)) = rot.x(i);
        continue;
      }
      Rng round = bob_rng.split(static_cast<std::uint64_t>(i));
      const DensityMatrix stored = depolarize(bb84_prepare(rot.x(i), rot.theta[static_cast<std::size_t>(i)]), bob.storage_r);
      bob_rem(static_cast<Eigen::Index>(k)) = helstrom_guess(stored, theta_rem[k], bob.storage_r, round);
    }
    rot.bob_guess = bob_rem;
  }

  rot.f0 = ToeplitzHash::random(n, config.ell, alice_hash);
  rot.f1 = ToeplitzHash::random(n, config.ell, alice_hash);
  const BitVector x0 = restrict_to(x_rem, rot.i0);
  const BitVector x1 = restrict_to(x_rem, rot.i1);
  rot.s0 = rot.f0(x0);
  rot.s1 = rot.f1(x1);
  auto padded_length = [&](Eigen::Index size) {
    const Eigen::Index target = std::max<Eigen::Index>(size, config.nominal_half());
    return block * ((target + block - 1) / block);
  };
  t.syn0 = block_syndrome(code, zero_pad(x0, padded_length(x0.size())));
  t.syn1 = block_syndrome(code, zero_pad(x1, padded_length(x1.size())));

  rot.choice_set_empty = ic.empty();
  const auto size_c = static_cast<Eigen::Index>(ic.size());
  if (bob.kind == RobustBobKind::kHonest) {
    const SyndromeDecoder decoder(code);
    const BitVector received = zero_pad(restrict_to(rot.x_hat, ic), padded_length(size_c));
    t.x_cor = block_decode(decoder, received, c == 0 ? t.syn0 : t.syn1).head(size_c);
    t.decoded = t.x_cor == (c == 0 ? x0 : x1);
  } else {
    t.x_cor = restrict_to(bob_rem, ic);
  }
  rot.y = (c == 0 ? rot.f0 : rot.f1)(t.x_cor);
  return t;
}

QidTranscript run_qid(int w_a, int w_b, const QidCode& code, int ell, Rng& rng, const QidOptions& options) {
  require(w_a >= 1 && w_a <= code.passwords, "w_a must lie in {1..m}");
  require(w_b >= 1 && w_b <= code.passwords, "w_b must lie in {1..m}");
  require(ell >= 1, "ell must be >= 1");
  const int n = code.code.length();
  const int k = code.code.dimension();
  check_bases(options.theta, n, "forced theta");
  check_bases(options.theta_hat, n, "forced theta_hat");

  const Rng run = rng.split(rng());
  Rng alice = run.split(1);
  Rng bob = run.split(2);
  const Rng measurement = run.split(3);

  QidTranscript t;
  t.n = n;
  t.ell = ell;
  t.w_a = w_a;
  t.w_b = w_b;
  t.x = random_bits(n, alice);
  t.theta = options.theta ? *options.theta : random_bases(static_cast<std::size_t>(n), alice);
  t.theta_hat = options.theta_hat ? *options.theta_hat : random_bases(static_cast<std::size_t>(n), bob);
  t.x_hat.resize(n);
  for (int i = 0; i < n; ++i) {
    Rng round = measurement.split(static_cast<std::uint64_t>(i));
    const auto si = static_cast<std::size_t>(i);
    t.x_hat(i) = measure(bb84_prepare(t.x(i), t.theta[si]), t.theta_hat[si], round);
  }

  // Wait; Bob announces kappa with theta_hat = c(w_b) xor kappa.
  t.kappa = xor_bases(code.bases(w_b), t.theta_hat);
  const BasisString shifted_a = xor_bases(code.bases(w_a), t.kappa);
  const BasisString shifted_b = xor_bases(code.bases(w_b), t.kappa);
  for (int i = 0; i < n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    if (t.theta[si] == shifted_a[si]) t.i_w.push_back(i);
    if (t.theta[si] == shifted_b[si]) t.i_w_server.push_back(i);
  }

  t.f = ToeplitzHash::random(std::max(n, ell), ell, alice, true);
  t.g = ToeplitzHash::random(std::max(k, ell), ell, bob, true);
  const auto password = [k](int w) { return bits_of(static_cast<std::uint64_t>(w - 1), k); };
  t.z = xor_bits(t.f(restrict_to(t.x, t.i_w)), t.g(password(w_a)));
  t.expected = xor_bits(t.f(restrict_to(t.x_hat, t.i_w_server)), t.g(password(w_b)));
  t.accept = t.z == t.expected;
  return t;
}

int default_qid_ell(const QidCode& code, const StorageModel& storage, double delta) {
  storage.validate();
  require(delta > 0.0 && delta < 0.25, "delta must lie in (0, 1/4)");
  const int d = code.code.min_distance();
  require(d >= 1, "code distance is unknown");
  const double gamma = strong_converse_exponent((0.25 - delta) / storage.nu, storage);
  return std::max(1, static_cast<int>(std::floor(gamma * storage.nu * d / 3.0)));
}

}  // namespace nqs
