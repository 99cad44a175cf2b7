#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "nqs/rng.hpp"

namespace nqs {

/// Column vector over GF(2); each entry is 0 or 1.
using BitVector = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, 1>;
/// Dense matrix over GF(2).
using BitMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// BB84 encoding basis. Rectilinear (+) is the computational basis,
/// diagonal (x) the Hadamard basis. Numeric values double as the bit
/// interpretation used when XOR-ing basis strings.
enum class Basis : std::uint8_t { kRectilinear = 0, kDiagonal = 1 };

using BasisString = std::vector<Basis>;
using IndexSet = std::vector<int>;

BitVector random_bits(Eigen::Index n, Rng& rng);
BasisString random_bases(std::size_t n, Rng& rng);

/// x restricted to the listed positions, in list order.
BitVector restrict_to(const BitVector& x, std::span<const int> positions);

/// Right-pads with zeros to `length`; throws if x is longer.
BitVector zero_pad(const BitVector& x, Eigen::Index length);

BasisString xor_bases(const BasisString& a, const BasisString& b);
BasisString bases_from_bits(const BitVector& bits);
BitVector bits_from_bases(const BasisString& bases);

/// Matrix-vector product over GF(2).
BitVector gf2_mul(const BitMatrix& a, const BitVector& v);
/// Matrix product over GF(2).
BitMatrix gf2_mul(const BitMatrix& a, const BitMatrix& b);
int gf2_rank(BitMatrix m);

int weight(const BitVector& v);

std::string to_string(const BitVector& v);
std::string to_string(const BasisString& b);
BitVector bits_from_string(std::string_view s);

/// Packs bits MSB-first (bit 0 is the high bit of the first nibble);
/// the tail nibble is zero-padded.
std::string to_hex(const BitVector& v);
BitVector from_hex(std::string_view hex, Eigen::Index length);

/// Bits of `value` as a length-`width` vector, most significant first.
BitVector bits_of(std::uint64_t value, int width);
std::uint64_t value_of(const BitVector& v);

}  // namespace nqs
