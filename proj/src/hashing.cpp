#include "nqs/hashing.hpp"

#include <bit>
#include <cmath>
#include <vector>

#include "nqs/errors.hpp"

namespace nqs {

ToeplitzHash::ToeplitzHash(int n, int ell, BitVector seed, BitVector offset)
    : n_(n), ell_(ell), seed_(std::move(seed)), offset_(std::move(offset)) {
  require(ell_ >= 1 && ell_ <= n_, "Toeplitz hash needs 1 <= ell <= n");
  require(seed_.size() == n_ + ell_ - 1, "Toeplitz seed must have n + ell - 1 bits");
  require(offset_.size() == 0 || offset_.size() == ell_, "Toeplitz offset must have ell bits");
  require(((seed_.array() == 0) || (seed_.array() == 1)).all(), "seed entries must be bits");
}

ToeplitzHash ToeplitzHash::random(int n, int ell, Rng& rng, bool affine) {
  require(ell >= 1 && ell <= n, "Toeplitz hash needs 1 <= ell <= n");
  BitVector seed = random_bits(n + ell - 1, rng);
  BitVector offset = affine ? random_bits(ell, rng) : BitVector{};
  return ToeplitzHash(n, ell, std::move(seed), std::move(offset));
}

ToeplitzHash ToeplitzHash::from_hex(int n, int ell, const std::string& seed_hex, const std::string& offset_hex) {
  require(ell >= 1 && ell <= n, "Toeplitz hash needs 1 <= ell <= n");
  BitVector offset = offset_hex.empty() ? BitVector{} : nqs::from_hex(offset_hex, ell);
  return ToeplitzHash(n, ell, nqs::from_hex(seed_hex, n + ell - 1), std::move(offset));
}

BitMatrix ToeplitzHash::matrix() const {
  BitMatrix t(ell_, n_);
  for (int i = 0; i < ell_; ++i) {
    for (int j = 0; j < n_; ++j) t(i, j) = entry(i, j);
  }
  return t;
}

BitVector ToeplitzHash::operator()(const BitVector& x) const {
  require(x.size() <= n_, "hash input longer than the hash domain");
  BitVector out = affine() ? offset_ : BitVector(BitVector::Zero(ell_));
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (!x(j)) continue;
    for (int i = 0; i < ell_; ++i) out(i) ^= entry(i, static_cast<int>(j));
  }
  return out;
}

double collision_bound(int n, int ell) {
  require(n >= 1 && ell >= 1 && ell <= n, "collision_bound needs 1 <= ell <= n");
  if (n > kMaxCollisionInputBits || ell > kMaxCollisionOutputBits) {
    throw SizeCapExceeded("collision_bound is limited to n <= 8, ell <= 4");
  }
  const int inputs = 1 << n;
  const int seeds = 1 << (n + ell - 1);
  // collisions[x * inputs + y] counts seeds with f(x) = f(y).
  std::vector<int> collisions(static_cast<std::size_t>(inputs) * inputs, 0);
  std::vector<std::uint64_t> image(inputs);
  for (int s = 0; s < seeds; ++s) {
    const ToeplitzHash h(n, ell, bits_of(static_cast<std::uint64_t>(s), n + ell - 1));
    for (int x = 0; x < inputs; ++x) image[x] = value_of(h(bits_of(static_cast<std::uint64_t>(x), n)));
    for (int x = 0; x < inputs; ++x) {
      for (int y = x + 1; y < inputs; ++y) {
        if (image[x] == image[y]) ++collisions[static_cast<std::size_t>(x) * inputs + y];
      }
    }
  }
  int worst = 0;
  for (int x = 0; x < inputs; ++x) {
    for (int y = x + 1; y < inputs; ++y) worst = std::max(worst, collisions[static_cast<std::size_t>(x) * inputs + y]);
  }
  return static_cast<double>(worst) / seeds;
}

PaDistance pa_distance(const JointDistribution& dist, int ell, int sample_count, Rng& rng) {
  require(sample_count >= 1, "pa_distance needs at least one sample");
  const int size = dist.alphabet("X");
  require(size >= 2 && std::has_single_bit(static_cast<unsigned>(size)), "register X must have a power-of-two alphabet");
  const int n = std::countr_zero(static_cast<unsigned>(size));
  require(ell >= 1 && ell <= n, "pa_distance needs 1 <= ell <= log2|X|");

  RegisterSet rest;
  for (const auto& r : dist.registers()) {
    if (r.name != "X") rest.push_back(r.name);
  }
  const Eigen::MatrixXd pxe = dist.as_matrix({"X"}, rest);
  const double hmin = -std::log2(pxe.colwise().maxCoeff().sum());

  std::vector<BitVector> inputs(size);
  for (int x = 0; x < size; ++x) inputs[x] = bits_of(static_cast<std::uint64_t>(x), n);

  double sum = 0.0;
  double sum_sq = 0.0;
  const double share = std::exp2(-ell);
  for (int s = 0; s < sample_count; ++s) {
    const ToeplitzHash h = ToeplitzHash::random(n, ell, rng);
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(Eigen::Index{1} << ell, pxe.cols());
    for (int x = 0; x < size; ++x) out.row(static_cast<Eigen::Index>(value_of(h(inputs[x])))) += pxe.row(x);
    const Eigen::RowVectorXd col_mass = out.colwise().sum() * share;
    const double d = 0.5 * (out.rowwise() - col_mass).cwiseAbs().sum();
    sum += d;
    sum_sq += d * d;
  }
  PaDistance res;
  res.samples = sample_count;
  res.empirical = sum / sample_count;
  const double var = std::max(sum_sq / sample_count - res.empirical * res.empirical, 0.0);
  res.std_error = std::sqrt(var / sample_count);
  res.bound = std::exp2(-0.5 * (hmin - ell) - 1.0);
  return res;
}

}  // namespace nqs
