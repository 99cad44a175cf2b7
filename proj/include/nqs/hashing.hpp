#pragma once

#include <string>

#include "nqs/bits.hpp"
#include "nqs/entropy.hpp"
#include "nqs/rng.hpp"

namespace nqs {

/// Toeplitz hash {0,1}^n -> {0,1}^ell over GF(2). The matrix entry at
/// (row i, column j) is seed[j - i + ell - 1], so the seed lists the
/// diagonals from the bottom-left corner to the top-right corner. An
/// optional ell-bit offset makes the family affine, which turns the
/// two-universal Toeplitz family into a strongly two-universal one.
class ToeplitzHash {
 public:
  ToeplitzHash() = default;
  ToeplitzHash(int n, int ell, BitVector seed, BitVector offset = {});

  static ToeplitzHash random(int n, int ell, Rng& rng, bool affine = false);
  static ToeplitzHash from_hex(int n, int ell, const std::string& seed_hex, const std::string& offset_hex = {});

  int input_bits() const { return n_; }
  int output_bits() const { return ell_; }
  const BitVector& seed() const { return seed_; }
  const BitVector& offset() const { return offset_; }
  bool affine() const { return offset_.size() > 0; }

  std::uint8_t entry(int row, int col) const { return seed_(col - row + ell_ - 1); }
  BitMatrix matrix() const;

  std::string seed_hex() const { return to_hex(seed_); }
  std::string offset_hex() const { return to_hex(offset_); }

  /// Inputs shorter than n are zero-padded on the right.
  BitVector operator()(const BitVector& x) const;

 private:
  int n_ = 0;
  int ell_ = 0;
  BitVector seed_;
  BitVector offset_;
};

inline BitVector hash_apply(const ToeplitzHash& h, const BitVector& x) { return h(x); }

/// Caps for collision_bound.
inline constexpr int kMaxCollisionInputBits = 8;
inline constexpr int kMaxCollisionOutputBits = 4;

/// max over x != y of Pr_seed[f(x) = f(y)], exhaustively over all seeds.
double collision_bound(int n, int ell);

struct PaDistance {
  double empirical = 0.0;  // mean over sampled seeds of d(F(X) | F = f, rest)
  double std_error = 0.0;
  double bound = 0.0;      // 2^(-(H_min(X | rest) - ell)/2 - 1)
  int samples = 0;
};

/// Privacy-amplification check on a table with register "X" of size 2^n
/// (bit strings, value v <-> bits_of(v, n)) and any classical side
/// information in the remaining registers.
PaDistance pa_distance(const JointDistribution& dist, int ell, int sample_count, Rng& rng);

}  // namespace nqs
