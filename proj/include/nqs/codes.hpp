#pragma once

#include <cstdint>
#include <vector>

#include "nqs/bits.hpp"
#include "nqs/rng.hpp"

namespace nqs {

inline constexpr int kMaxDistanceDimension = 20;
inline constexpr int kMaxCosetSyndromeBits = 24;

/// Binary [n, k] linear code. The parity-check matrix is derived from the
/// generator; the minimum distance is computed exhaustively at construction
/// when k <= 20 (otherwise it is reported as -1).
class LinearCode {
 public:
  static LinearCode from_generator(BitMatrix generator);

  static LinearCode repetition(int n);
  static LinearCode identity(int n);
  static LinearCode hamming74();
  static LinearCode extended_hamming84();
  /// Systematic [I | A] generator with uniformly random A.
  static LinearCode random_systematic(int n, int k, Rng& rng);

  int length() const { return static_cast<int>(generator_.cols()); }
  int dimension() const { return static_cast<int>(generator_.rows()); }
  int redundancy() const { return length() - dimension(); }
  const BitMatrix& generator() const { return generator_; }
  const BitMatrix& parity() const { return parity_; }
  int min_distance() const { return min_distance_; }

 private:
  LinearCode(BitMatrix generator, BitMatrix parity);

  BitMatrix generator_;
  BitMatrix parity_;
  int min_distance_ = -1;
};

BitVector encode(const LinearCode& code, const BitVector& message);
BitVector syndrome(const LinearCode& code, const BitVector& word);

/// Exhaustive minimum weight over the 2^k - 1 nonzero codewords.
int min_distance(const LinearCode& code);

/// Coset-leader table for a code with n - k <= 24 and n <= 63. Leaders are
/// minimum weight; among equal weights the lexicographically smallest bit
/// string (reading position 0 first) wins. Immutable once built.
class SyndromeDecoder {
 public:
  explicit SyndromeDecoder(const LinearCode& code);

  const LinearCode& code() const { return code_; }
  BitVector leader(const BitVector& syndrome) const;

  /// Word nearest to `received` whose syndrome equals `target`.
  BitVector decode(const BitVector& received, const BitVector& target) const;

 private:
  std::uint32_t syndrome_index(std::uint64_t mask) const;

  LinearCode code_;
  std::vector<std::uint32_t> column_syndromes_;
  std::vector<std::uint64_t> leaders_;
};

BitVector syndrome_decode(const LinearCode& code, const BitVector& received, const BitVector& target);

/// Syndromes of consecutive length-n blocks (direct sum of copies of `code`).
BitVector block_syndrome(const LinearCode& code, const BitVector& word);
BitVector block_decode(const SyndromeDecoder& decoder, const BitVector& received, const BitVector& target);

/// Code and password map for the identification protocol. Password w in
/// {1..m} is encoded as the k-bit big-endian value w - 1 and read as a basis
/// string (0 -> rectilinear, 1 -> diagonal).
struct QidCode {
  LinearCode code;
  int passwords = 0;

  BitVector codeword(int w) const;
  BasisString bases(int w) const;
};

/// Picks a code with k = ceil(log2 m) at length n from the catalog
/// (repetition, identity, Hamming [7,4], extended Hamming [8,4], best of a
/// deterministic batch of random systematic codes). Throws if its exact
/// distance is below `required_distance`, reporting the achievable one.
QidCode qid_code(int m, int n, int required_distance = 0);

struct GvParameters {
  double mu = 0.0;
  double d_asymptotic = 0.0;
};

GvParameters gv_parameters(double n, double m);

struct SyndromeBudget {
  double syndrome_bits = 0.0;
  double budget_bits = 0.0;
  bool within_budget = false;
};

/// Compares n - k with the 1.2 h(p_err) n one-way reconciliation budget.
SyndromeBudget syndrome_budget(const LinearCode& code, double p_err);

}  // namespace nqs
