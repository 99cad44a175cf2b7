#include "nqs/bits.hpp"

#include "nqs/errors.hpp"

namespace nqs {

BitVector random_bits(Eigen::Index n, Rng& rng) {
  BitVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.bit();
  return v;
}

BasisString random_bases(std::size_t n, Rng& rng) {
  BasisString b(n);
  for (auto& e : b) e = static_cast<Basis>(rng.bit());
  return b;
}

BitVector restrict_to(const BitVector& x, std::span<const int> positions) {
  BitVector out(static_cast<Eigen::Index>(positions.size()));
  for (std::size_t i = 0; i < positions.size(); ++i) {
    require(positions[i] >= 0 && positions[i] < x.size(), "restrict_to: position out of range");
    out(static_cast<Eigen::Index>(i)) = x(positions[i]);
  }
  return out;
}

BitVector zero_pad(const BitVector& x, Eigen::Index length) {
  require(x.size() <= length, "zero_pad: input longer than target length");
  BitVector out = BitVector::Zero(length);
  out.head(x.size()) = x;
  return out;
}

BasisString xor_bases(const BasisString& a, const BasisString& b) {
  require(a.size() == b.size(), "xor_bases: length mismatch");
  BasisString out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = static_cast<Basis>(static_cast<std::uint8_t>(a[i]) ^ static_cast<std::uint8_t>(b[i]));
  }
  return out;
}

BasisString bases_from_bits(const BitVector& bits) {
  BasisString out(static_cast<std::size_t>(bits.size()));
  for (Eigen::Index i = 0; i < bits.size(); ++i) out[static_cast<std::size_t>(i)] = static_cast<Basis>(bits(i) & 1);
  return out;
}

BitVector bits_from_bases(const BasisString& bases) {
  BitVector out(static_cast<Eigen::Index>(bases.size()));
  for (std::size_t i = 0; i < bases.size(); ++i) out(static_cast<Eigen::Index>(i)) = static_cast<std::uint8_t>(bases[i]);
  return out;
}

BitVector gf2_mul(const BitMatrix& a, const BitVector& v) {
  require(a.cols() == v.size(), "gf2_mul: dimension mismatch");
  BitVector out = BitVector::Zero(a.rows());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    if (v(j)) out = out.binaryExpr(a.col(j), [](std::uint8_t p, std::uint8_t q) -> std::uint8_t { return p ^ q; });
  }
  return out;
}

BitMatrix gf2_mul(const BitMatrix& a, const BitMatrix& b) {
  require(a.cols() == b.rows(), "gf2_mul: dimension mismatch");
  BitMatrix out(a.rows(), b.cols());
  for (Eigen::Index j = 0; j < b.cols(); ++j) out.col(j) = gf2_mul(a, BitVector(b.col(j)));
  return out;
}

int gf2_rank(BitMatrix m) {
  int rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < m.rows(); ++r) {
      if (m(r, col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(rank));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r != rank && m(r, col)) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) ^= m(rank, c);
      }
    }
    ++rank;
  }
  return rank;
}

int weight(const BitVector& v) {
  int w = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) w += v(i) ? 1 : 0;
  return w;
}

std::string to_string(const BitVector& v) {
  std::string s(static_cast<std::size_t>(v.size()), '0');
  for (Eigen::Index i = 0; i < v.size(); ++i) s[static_cast<std::size_t>(i)] = v(i) ? '1' : '0';
  return s;
}

std::string to_string(const BasisString& b) {
  std::string s(b.size(), '+');
  for (std::size_t i = 0; i < b.size(); ++i) s[i] = b[i] == Basis::kRectilinear ? '+' : 'x';
  return s;
}

BitVector bits_from_string(std::string_view s) {
  BitVector v(static_cast<Eigen::Index>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    require(s[i] == '0' || s[i] == '1', "bits_from_string: expected only '0' and '1'");
    v(static_cast<Eigen::Index>(i)) = s[i] == '1';
  }
  return v;
}

std::string to_hex(const BitVector& v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); i += 4) {
    int nibble = 0;
    for (int b = 0; b < 4; ++b) {
      nibble <<= 1;
      if (i + b < v.size() && v(i + b)) nibble |= 1;
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

BitVector from_hex(std::string_view hex, Eigen::Index length) {
  require(static_cast<Eigen::Index>(hex.size()) == (length + 3) / 4, "from_hex: digit count does not match bit length");
  BitVector v = BitVector::Zero(length);
  for (std::size_t d = 0; d < hex.size(); ++d) {
    const char ch = hex[d];
    int nibble;
    if (ch >= '0' && ch <= '9') nibble = ch - '0';
    else if (ch >= 'a' && ch <= 'f') nibble = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') nibble = ch - 'A' + 10;
    else throw InvalidParameter("from_hex: invalid hex digit");
    for (int b = 0; b < 4; ++b) {
      const Eigen::Index i = static_cast<Eigen::Index>(4 * d) + b;
      const bool set = (nibble >> (3 - b)) & 1;
      if (i < length) v(i) = set;
      else require(!set, "from_hex: nonzero padding bits");
    }
  }
  return v;
}

BitVector bits_of(std::uint64_t value, int width) {
  require(width >= 0 && width <= 64, "bits_of: width out of range");
  BitVector v(width);
  for (int i = 0; i < width; ++i) v(i) = (value >> (width - 1 - i)) & 1;
  return v;
}

std::uint64_t value_of(const BitVector& v) {
  require(v.size() <= 64, "value_of: more than 64 bits");
  std::uint64_t x = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) x = (x << 1) | (v(i) & 1);
  return x;
}

}  // namespace nqs
