#include "nqs/codes.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "nqs/bounds.hpp"
#include "nqs/errors.hpp"

namespace nqs {

namespace {

using Words = std::vector<std::uint64_t>;

Words pack(const BitVector& v) {
  Words w(static_cast<std::size_t>((v.size() + 63) / 64), 0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i)) w[static_cast<std::size_t>(i / 64)] |= std::uint64_t{1} << (i % 64);
  }
  return w;
}

int exhaustive_min_distance(const BitMatrix& g) {
  const int k = static_cast<int>(g.rows());
  if (k == 0) return static_cast<int>(g.cols()) + 1;
  std::vector<Words> rows;
  for (int i = 0; i < k; ++i) rows.push_back(pack(BitVector(g.row(i).transpose())));
  Words current(rows[0].size(), 0);
  int best = static_cast<int>(g.cols()) + 1;
  // Gray-code walk: step s flips message bit countr_zero(s).
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t s = 1; s < total; ++s) {
    const auto& row = rows[static_cast<std::size_t>(std::countr_zero(s))];
    int w = 0;
    for (std::size_t j = 0; j < current.size(); ++j) {
      current[j] ^= row[j];
      w += std::popcount(current[j]);
    }
    if (w < best) best = w;
  }
  return best;
}

// Parity-check matrix from the reduced row-echelon form of the generator.
BitMatrix derive_parity(const BitMatrix& generator) {
  BitMatrix rref = generator;
  const Eigen::Index k = rref.rows();
  const Eigen::Index n = rref.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < k; ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index r = row; r < k; ++r) {
      if (rref(r, col)) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    rref.row(p).swap(rref.row(row));
    for (Eigen::Index r = 0; r < k; ++r) {
      if (r != row && rref(r, col)) {
        for (Eigen::Index c = 0; c < n; ++c) rref(r, c) ^= rref(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  require(static_cast<Eigen::Index>(pivots.size()) == k, "generator rows are linearly dependent");
  BitMatrix h = BitMatrix::Zero(n - k, n);
  Eigen::Index hr = 0;
  std::size_t next_pivot = 0;
  for (Eigen::Index col = 0; col < n; ++col) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == col) {
      ++next_pivot;
      continue;
    }
    h(hr, col) = 1;
    for (Eigen::Index i = 0; i < k; ++i) h(hr, pivots[static_cast<std::size_t>(i)]) = rref(i, col);
    ++hr;
  }
  return h;
}

}  // namespace

LinearCode::LinearCode(BitMatrix generator, BitMatrix parity)
    : generator_(std::move(generator)), parity_(std::move(parity)) {
  require(generator_.cols() >= 1, "code length must be >= 1");
  require(parity_.cols() == generator_.cols() && parity_.rows() == generator_.cols() - generator_.rows(),
          "parity-check matrix has the wrong shape");
  require(gf2_rank(generator_) == generator_.rows(), "generator rows are linearly dependent");
  require(gf2_rank(parity_) == parity_.rows(), "parity-check rows are linearly dependent");
  require(gf2_mul(parity_, BitMatrix(generator_.transpose())).isZero(), "parity * generator^T must vanish");
  if (generator_.rows() <= kMaxDistanceDimension) min_distance_ = exhaustive_min_distance(generator_);
}

LinearCode LinearCode::from_generator(BitMatrix generator) {
  require(generator.cols() >= 1, "code length must be >= 1");
  require(((generator.array() == 0) || (generator.array() == 1)).all(), "generator entries must be bits");
  BitMatrix parity = derive_parity(generator);
  return LinearCode(std::move(generator), std::move(parity));
}

LinearCode LinearCode::repetition(int n) {
  require(n >= 1, "repetition code length must be >= 1");
  return from_generator(BitMatrix::Ones(1, n));
}

LinearCode LinearCode::identity(int n) {
  require(n >= 1, "identity code length must be >= 1");
  return from_generator(BitMatrix::Identity(n, n));
}

LinearCode LinearCode::hamming74() {
  // Column j of the parity-check matrix is j + 1 in binary, so a single
  // error at (1-based) position j has syndrome j.
  BitMatrix g(4, 7);
  g << 1, 1, 1, 0, 0, 0, 0,
       1, 0, 0, 1, 1, 0, 0,
       0, 1, 0, 1, 0, 1, 0,
       1, 1, 0, 1, 0, 0, 1;
  BitMatrix h(3, 7);
  for (int j = 0; j < 7; ++j) {
    for (int r = 0; r < 3; ++r) h(r, j) = ((j + 1) >> (2 - r)) & 1;
  }
  return LinearCode(std::move(g), std::move(h));
}

LinearCode LinearCode::extended_hamming84() {
  const LinearCode base = hamming74();
  BitMatrix g(4, 8);
  g.leftCols(7) = base.generator();
  for (int i = 0; i < 4; ++i) g(i, 7) = static_cast<std::uint8_t>(weight(BitVector(base.generator().row(i).transpose())) & 1);
  BitMatrix h = BitMatrix::Zero(4, 8);
  h.topLeftCorner(3, 7) = base.parity();
  h.row(3).setOnes();
  return LinearCode(std::move(g), std::move(h));
}

LinearCode LinearCode::random_systematic(int n, int k, Rng& rng) {
  require(k >= 1 && k <= n, "random code needs 1 <= k <= n");
  BitMatrix g = BitMatrix::Zero(k, n);
  g.leftCols(k).setIdentity();
  for (int i = 0; i < k; ++i) {
    for (int j = k; j < n; ++j) g(i, j) = rng.bit();
  }
  return from_generator(std::move(g));
}

BitVector encode(const LinearCode& code, const BitVector& message) {
  require(message.size() == code.dimension(), "message length must equal the code dimension");
  return gf2_mul(BitMatrix(code.generator().transpose()), message);
}

BitVector syndrome(const LinearCode& code, const BitVector& word) {
  require(word.size() == code.length(), "word length must equal the code length");
  return gf2_mul(code.parity(), word);
}

int min_distance(const LinearCode& code) {
  if (code.dimension() > kMaxDistanceDimension) {
    throw SizeCapExceeded("minimum distance search is limited to k <= 20");
  }
  return code.min_distance();
}

SyndromeDecoder::SyndromeDecoder(const LinearCode& code) : code_(code) {
  const int n = code.length();
  const int r = code.redundancy();
  if (r > kMaxCosetSyndromeBits || n > 63) {
    throw SizeCapExceeded("coset-leader decoding is limited to n - k <= 24 and n <= 63");
  }
  column_syndromes_.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::uint32_t s = 0;
    for (int row = 0; row < r; ++row) s = (s << 1) | code.parity()(row, j);
    column_syndromes_[static_cast<std::size_t>(j)] = s;
  }
  const std::uint64_t cosets = std::uint64_t{1} << r;
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  leaders_.assign(cosets, kUnset);
  std::uint64_t filled = 0;
  // Patterns are enumerated as numbers whose most significant bit is
  // position 0, so increasing numeric order is increasing lexicographic order.
  auto to_positions = [n](std::uint64_t v) {
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i) {
      if (v >> (n - 1 - i) & 1) mask |= std::uint64_t{1} << i;
    }
    return mask;
  };
  for (int w = 0; w <= n && filled < cosets; ++w) {
    if (w == 0) {
      leaders_[0] = 0;
      ++filled;
      continue;
    }
    std::uint64_t v = (std::uint64_t{1} << w) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (v < limit && filled < cosets) {
      const std::uint64_t mask = to_positions(v);
      const std::uint32_t s = syndrome_index(mask);
      if (leaders_[s] == kUnset) {
        leaders_[s] = mask;
        ++filled;
      }
      // Gosper's hack: next larger integer with the same popcount.
      const std::uint64_t c = v & (~v + 1);
      const std::uint64_t rr = v + c;
      v = (((rr ^ v) >> 2) / c) | rr;
    }
  }
}

std::uint32_t SyndromeDecoder::syndrome_index(std::uint64_t mask) const {
  std::uint32_t s = 0;
  while (mask) {
    s ^= column_syndromes_[static_cast<std::size_t>(std::countr_zero(mask))];
    mask &= mask - 1;
  }
  return s;
}

BitVector SyndromeDecoder::leader(const BitVector& syn) const {
  require(syn.size() == code_.redundancy(), "syndrome length must equal n - k");
  const std::uint64_t mask = leaders_[static_cast<std::size_t>(value_of(syn))];
  BitVector e(code_.length());
  for (int i = 0; i < code_.length(); ++i) e(i) = (mask >> i) & 1;
  return e;
}

BitVector SyndromeDecoder::decode(const BitVector& received, const BitVector& target) const {
  require(received.size() == code_.length(), "received word length must equal the code length");
  require(target.size() == code_.redundancy(), "target syndrome length must equal n - k");
  const BitVector diff = syndrome(code_, received).binaryExpr(
      target, [](std::uint8_t a, std::uint8_t b) -> std::uint8_t { return a ^ b; });
  const BitVector e = leader(diff);
  return received.binaryExpr(e, [](std::uint8_t a, std::uint8_t b) -> std::uint8_t { return a ^ b; });
}

BitVector syndrome_decode(const LinearCode& code, const BitVector& received, const BitVector& target) {
  return SyndromeDecoder(code).decode(received, target);
}

BitVector block_syndrome(const LinearCode& code, const BitVector& word) {
  const int n = code.length();
  const int r = code.redundancy();
  require(word.size() % n == 0, "word length must be a multiple of the block length");
  const Eigen::Index blocks = word.size() / n;
  BitVector out(blocks * r);
  for (Eigen::Index b = 0; b < blocks; ++b) out.segment(b * r, r) = syndrome(code, BitVector(word.segment(b * n, n)));
  return out;
}

BitVector block_decode(const SyndromeDecoder& decoder, const BitVector& received, const BitVector& target) {
  const int n = decoder.code().length();
  const int r = decoder.code().redundancy();
  require(received.size() % n == 0, "received length must be a multiple of the block length");
  const Eigen::Index blocks = received.size() / n;
  require(target.size() == blocks * r, "syndrome length does not match the block count");
  BitVector out(received.size());
  for (Eigen::Index b = 0; b < blocks; ++b) {
    out.segment(b * n, n) = decoder.decode(BitVector(received.segment(b * n, n)), BitVector(target.segment(b * r, r)));
  }
  return out;
}

BitVector QidCode::codeword(int w) const {
  require(w >= 1 && w <= passwords, "password must lie in {1..m}");
  return encode(code, bits_of(static_cast<std::uint64_t>(w - 1), code.dimension()));
}

BasisString QidCode::bases(int w) const { return bases_from_bits(codeword(w)); }

QidCode qid_code(int m, int n, int required_distance) {
  require(m >= 2, "number of passwords m must be >= 2");
  const int k = std::bit_width(static_cast<unsigned>(m - 1));
  require(n >= k, "code length n must be >= ceil(log2 m) = " + std::to_string(k));
  auto pick = [&]() -> LinearCode {
    if (k == 1) return LinearCode::repetition(n);
    if (n == k) return LinearCode::identity(n);
    if (k == 4 && n == 7) return LinearCode::hamming74();
    if (k == 4 && n == 8) return LinearCode::extended_hamming84();
    if (k > kMaxDistanceDimension) throw SizeCapExceeded("cannot certify the distance of codes with k > 20");
    Rng rng(0x51d0c0de00000000ULL ^ (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(k));
    const int tries = k <= 10 ? 200 : (k <= 16 ? 32 : 4);
    LinearCode best = LinearCode::random_systematic(n, k, rng);
    for (int t = 1; t < tries; ++t) {
      LinearCode c = LinearCode::random_systematic(n, k, rng);
      if (c.min_distance() > best.min_distance()) best = std::move(c);
    }
    return best;
  };
  QidCode out{pick(), m};
  if (out.code.min_distance() < required_distance) {
    throw Infeasible("no catalog code of length " + std::to_string(n) + " reaches distance " +
                     std::to_string(required_distance) + "; achievable distance is " +
                     std::to_string(out.code.min_distance()));
  }
  return out;
}

GvParameters gv_parameters(double n, double m) {
  require(std::isfinite(n) && n >= 1.0 && std::isfinite(m) && m >= 1.0, "gv_parameters needs n >= 1 and m >= 1");
  const double rate = std::log2(m) / n;
  require(rate < 1.0, "log2 m must be < n");
  GvParameters gv;
  gv.mu = inv_binary_entropy(1.0 - rate);
  gv.d_asymptotic = gv.mu * n;
  return gv;
}

SyndromeBudget syndrome_budget(const LinearCode& code, double p_err) {
  SyndromeBudget b;
  b.syndrome_bits = code.redundancy();
  b.budget_bits = 1.2 * binary_entropy(p_err) * code.length();
  b.within_budget = b.syndrome_bits <= b.budget_bits;
  return b;
}

}  // namespace nqs
