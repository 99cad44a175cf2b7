#include "nqs/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>

#include "nqs/errors.hpp"

namespace nqs {

namespace {

constexpr double kNormTolerance = 1e-12;

// Mixed-radix strides for the listed registers, last fastest.
std::vector<Eigen::Index> strides_for(const std::vector<int>& sizes) {
  std::vector<Eigen::Index> strides(sizes.size(), 1);
  for (int i = static_cast<int>(sizes.size()) - 2; i >= 0; --i) {
    strides[i] = strides[i + 1] * sizes[i + 1];
  }
  return strides;
}

void check_disjoint(const RegisterSet& target, const RegisterSet& given) {
  require(!target.empty(), "target register set is empty");
  std::set<std::string> seen;
  for (const auto& n : target) require(seen.insert(n).second, "register '" + n + "' listed twice");
  for (const auto& n : given) require(seen.insert(n).second, "register '" + n + "' is in both target and given sets");
}

}  // namespace

ProbabilityTable::ProbabilityTable(std::vector<Register> registers, Eigen::VectorXd probs)
    : registers_(std::move(registers)), probs_(std::move(probs)) {
  Eigen::Index cells = 1;
  std::set<std::string> names;
  std::vector<int> sizes;
  for (const auto& r : registers_) {
    require(!r.name.empty(), "register names must be nonempty");
    require(names.insert(r.name).second, "duplicate register name '" + r.name + "'");
    require(r.size >= 1, "register '" + r.name + "' has empty alphabet");
    cells *= r.size;
    if (cells > kMaxTableCells) throw SizeCapExceeded("joint table exceeds 2^16 cells");
    sizes.push_back(r.size);
  }
  require(probs_.size() == cells, "table size does not equal the product of alphabet sizes");
  require((probs_.array() >= 0.0).all() && probs_.allFinite(), "table entries must be finite and nonnegative");
  strides_ = strides_for(sizes);
}

int ProbabilityTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    if (registers_[i].name == name) return static_cast<int>(i);
  }
  throw InvalidParameter("unknown register '" + std::string(name) + "'");
}

bool ProbabilityTable::has(std::string_view name) const {
  return std::any_of(registers_.begin(), registers_.end(), [&](const Register& r) { return r.name == name; });
}

std::vector<int> ProbabilityTable::unflatten(Eigen::Index cell) const {
  std::vector<int> values(registers_.size());
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    values[i] = static_cast<int>((cell / strides_[i]) % registers_[i].size);
  }
  return values;
}

Eigen::Index ProbabilityTable::flatten(const std::vector<int>& values) const {
  require(values.size() == registers_.size(), "flatten: wrong number of register values");
  Eigen::Index cell = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(values[i] >= 0 && values[i] < registers_[i].size, "flatten: value outside alphabet");
    cell += values[i] * strides_[i];
  }
  return cell;
}

ProbabilityTable ProbabilityTable::marginal(const RegisterSet& keep) const {
  std::vector<Register> regs;
  std::vector<int> idx;
  std::vector<int> sizes;
  for (const auto& name : keep) {
    idx.push_back(index_of(name));
    regs.push_back(registers_[idx.back()]);
    sizes.push_back(regs.back().size);
  }
  const auto out_strides = strides_for(sizes);
  Eigen::Index out_cells = 1;
  for (int s : sizes) out_cells *= s;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(out_cells);
  for (Eigen::Index cell = 0; cell < probs_.size(); ++cell) {
    if (probs_(cell) == 0.0) continue;
    Eigen::Index o = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      o += ((cell / strides_[idx[k]]) % registers_[idx[k]].size) * out_strides[k];
    }
    out(o) += probs_(cell);
  }
  return ProbabilityTable(std::move(regs), std::move(out));
}

Eigen::MatrixXd ProbabilityTable::as_matrix(const RegisterSet& target, const RegisterSet& given) const {
  check_disjoint(target, given);
  RegisterSet keep = target;
  keep.insert(keep.end(), given.begin(), given.end());
  const ProbabilityTable m = marginal(keep);
  Eigen::Index rows = 1;
  for (std::size_t i = 0; i < target.size(); ++i) rows *= m.registers()[i].size;
  const Eigen::Index cols = m.cells() / rows;
  // Row-major flat layout: target tuple is the slow index.
  Eigen::MatrixXd out(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) out(r, c) = m.probs()(r * cols + c);
  }
  return out;
}

JointDistribution::JointDistribution(std::vector<Register> registers, Eigen::VectorXd probs)
    : ProbabilityTable(std::move(registers), std::move(probs)) {
  require(std::abs(mass() - 1.0) <= kNormTolerance, "probabilities must sum to 1 within 1e-12");
}

JointDistribution::JointDistribution(ProbabilityTable table)
    : JointDistribution(table.registers(), table.probs()) {}

JointDistribution JointDistribution::uniform(std::vector<Register> registers) {
  Eigen::Index cells = 1;
  for (const auto& r : registers) cells *= std::max(r.size, 1);
  return JointDistribution(std::move(registers), Eigen::VectorXd::Constant(cells, 1.0 / static_cast<double>(cells)));
}

JointDistribution JointDistribution::with_independent(Register reg, const Eigen::VectorXd& marginal) const {
  require(marginal.size() == reg.size, "independent register marginal has wrong size");
  require(std::abs(marginal.sum() - 1.0) <= kNormTolerance, "independent register marginal must sum to 1");
  std::vector<Register> regs = registers();
  regs.push_back(std::move(reg));
  Eigen::VectorXd out(probs().size() * marginal.size());
  for (Eigen::Index c = 0; c < probs().size(); ++c) {
    out.segment(c * marginal.size(), marginal.size()) = probs()(c) * marginal;
  }
  return JointDistribution(std::move(regs), std::move(out));
}

double guessing_probability(const ProbabilityTable& dist, const RegisterSet& target, const RegisterSet& given) {
  return dist.as_matrix(target, given).colwise().maxCoeff().sum();
}

double guessing_probability(const ProbabilityTable& dist, std::string_view target, const RegisterSet& given) {
  return guessing_probability(dist, RegisterSet{std::string(target)}, given);
}

namespace {

// Per-column water levels t_y minimizing sum_y t_y subject to
// sum_{x,y} (p(x,y) - t_y)^+ <= eps. Each column's removal cost is convex
// and piecewise linear in its level, with slope equal to the number of
// entries at or above the level, so lowering the column with the fewest
// such entries first is optimal.
Eigen::VectorXd water_levels(const Eigen::MatrixXd& m, double eps) {
  const Eigen::Index cols = m.cols();
  std::vector<std::vector<double>> sorted(cols);
  Eigen::VectorXd level(cols);
  std::vector<Eigen::Index> at_top(cols);
  for (Eigen::Index y = 0; y < cols; ++y) {
    auto& col = sorted[y];
    col.assign(m.col(y).data(), m.col(y).data() + m.rows());
    std::sort(col.begin(), col.end(), std::greater<>());
    col.push_back(0.0);
    level(y) = col[0];
    Eigen::Index k = 1;
    while (k < m.rows() && col[k] >= level(y)) ++k;
    at_top[y] = k;
  }

  using Entry = std::pair<Eigen::Index, Eigen::Index>;  // (entries at level, column)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (Eigen::Index y = 0; y < cols; ++y) {
    if (level(y) > 0.0) queue.emplace(at_top[y], y);
  }

  double budget = eps;
  while (budget > 0.0 && !queue.empty()) {
    const auto [k, y] = queue.top();
    queue.pop();
    const double next = sorted[y][k];
    const double cost = static_cast<double>(k) * (level(y) - next);
    if (cost <= budget) {
      budget -= cost;
      level(y) = next;
      Eigen::Index kk = k;
      while (kk < m.rows() && sorted[y][kk] >= next) ++kk;
      at_top[y] = kk;
      if (next > 0.0) queue.emplace(kk, y);
    } else {
      level(y) -= budget / static_cast<double>(k);
      budget = 0.0;
    }
  }
  return level;
}

void check_eps(const ProbabilityTable& dist, double eps) {
  require(std::isfinite(eps) && eps >= 0.0, "smoothing parameter must be >= 0");
  require(eps < 1.0, "smoothing parameter must be < 1");
  require(eps < dist.mass(), "smoothing parameter must be below the total mass");
}

}  // namespace

double min_entropy(const ProbabilityTable& dist, const RegisterSet& target, const RegisterSet& given, double eps) {
  check_eps(dist, eps);
  const Eigen::MatrixXd m = dist.as_matrix(target, given);
  if (eps == 0.0) return -std::log2(m.colwise().maxCoeff().sum());
  return -std::log2(water_levels(m, eps).sum());
}

double min_entropy(const ProbabilityTable& dist, std::string_view target, const RegisterSet& given, double eps) {
  return min_entropy(dist, RegisterSet{std::string(target)}, given, eps);
}

SubDistribution smooth(const ProbabilityTable& dist, const RegisterSet& target, const RegisterSet& given,
                       double eps) {
  check_eps(dist, eps);
  RegisterSet keep = target;
  keep.insert(keep.end(), given.begin(), given.end());
  const ProbabilityTable joint = dist.marginal(keep);
  const Eigen::MatrixXd m = dist.as_matrix(target, given);
  const Eigen::VectorXd level = water_levels(m, eps);
  Eigen::VectorXd q(joint.cells());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) q(r * m.cols() + c) = std::min(m(r, c), level(c));
  }
  const double mass = q.sum();
  return SubDistribution{ProbabilityTable(joint.registers(), std::move(q)), mass};
}

double nonuniformity(const ProbabilityTable& dist, const RegisterSet& target, const RegisterSet& given) {
  const Eigen::MatrixXd m = dist.as_matrix(target, given);
  const Eigen::RowVectorXd share = m.colwise().sum() / static_cast<double>(m.rows());
  return 0.5 * (m.rowwise() - share).cwiseAbs().sum();
}

double nonuniformity(const ProbabilityTable& dist, std::string_view target, const RegisterSet& given) {
  return nonuniformity(dist, RegisterSet{std::string(target)}, given);
}

SplitResult split_binary(const JointDistribution& dist, double alpha) {
  require(dist.registers().size() == 3 && dist.has("X0") && dist.has("X1") && dist.has("Z"),
          "split_binary expects exactly the registers X0, X1, Z");
  require(std::isfinite(alpha), "alpha must be finite");
  const int ix0 = dist.index_of("X0");
  const int ix1 = dist.index_of("X1");
  const int iz = dist.index_of("Z");
  const int n0 = dist.registers()[ix0].size;
  const int n1 = dist.registers()[ix1].size;
  const int nz = dist.registers()[iz].size;
  const double threshold = std::exp2(-alpha / 2.0);

  const Eigen::MatrixXd x0z = dist.as_matrix({"X0"}, {"Z"});
  const Eigen::RowVectorXd pz = x0z.colwise().sum();
  // D(x0, z) = 0 iff P(x0|z) < threshold, written without dividing by P(z).
  Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic> d(n0, nz);
  for (int x = 0; x < n0; ++x) {
    for (int z = 0; z < nz; ++z) d(x, z) = x0z(x, z) < threshold * pz(z) ? 0 : 1;
  }

  std::vector<Register> regs = dist.registers();
  regs.push_back({"D", 2});
  Eigen::VectorXd aug = Eigen::VectorXd::Zero(dist.cells() * 2);
  // Selected string X_D over the larger of the two alphabets, jointly with (D, Z).
  const int nsel = std::max(n0, n1);
  Eigen::VectorXd sel = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(nsel) * 2 * nz);
  for (Eigen::Index cell = 0; cell < dist.cells(); ++cell) {
    const double p = dist.probs()(cell);
    if (p == 0.0) continue;
    const auto v = dist.unflatten(cell);
    const int dv = d(v[ix0], v[iz]);
    aug(cell * 2 + dv) = p;
    const int xd = dv == 0 ? v[ix0] : v[ix1];
    sel((static_cast<Eigen::Index>(xd) * 2 + dv) * nz + v[iz]) += p;
  }
  const ProbabilityTable selected({{"XD", nsel}, {"D", 2}, {"Z", nz}}, std::move(sel));
  return SplitResult{JointDistribution(std::move(regs), std::move(aug)), alpha,
                     min_entropy(selected, "XD", RegisterSet{"D", "Z"}), alpha / 2.0 - 1.0};
}

SplitResult split_multi(const JointDistribution& dist, double alpha) {
  const int m = static_cast<int>(dist.registers().size()) - 1;
  require(m >= 2, "split_multi needs at least two strings X1..Xm");
  require(dist.has("Z"), "split_multi expects a register Z");
  require(std::isfinite(alpha), "alpha must be finite");
  std::vector<int> ix(m);
  int nx = 0;
  for (int j = 0; j < m; ++j) {
    const std::string name = "X" + std::to_string(j + 1);
    require(dist.has(name), "split_multi expects registers X1..Xm; missing " + name);
    ix[j] = dist.index_of(name);
    nx = std::max(nx, dist.registers()[ix[j]].size);
  }
  const int iz = dist.index_of("Z");
  const int nz = dist.registers()[iz].size;
  const double threshold = std::exp2(-alpha / 2.0);

  std::vector<Eigen::MatrixXd> xz(m);
  for (int j = 0; j < m; ++j) xz[j] = dist.as_matrix({"X" + std::to_string(j + 1)}, {"Z"});
  const Eigen::RowVectorXd pz = xz[0].colwise().sum();

  std::vector<Register> regs = dist.registers();
  regs.push_back({"V", m});
  Eigen::VectorXd aug = Eigen::VectorXd::Zero(dist.cells() * m);
  // Joint table of (X_W, V, W, Z) restricted to V != W, W uniform and independent.
  Eigen::VectorXd sel = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(nx) * m * m * nz);
  for (Eigen::Index cell = 0; cell < dist.cells(); ++cell) {
    const double p = dist.probs()(cell);
    if (p == 0.0) continue;
    const auto v = dist.unflatten(cell);
    const int z = v[iz];
    int chosen = m - 1;
    for (int j = 0; j + 1 < m; ++j) {
      if (xz[j](v[ix[j]], z) >= threshold * pz(z)) {
        chosen = j;
        break;
      }
    }
    aug(cell * m + chosen) = p;
    for (int w = 0; w < m; ++w) {
      if (w == chosen) continue;
      const Eigen::Index o = ((static_cast<Eigen::Index>(v[ix[w]]) * m + chosen) * m + w) * nz + z;
      sel(o) += p / m;
    }
  }
  const double pr_differ = sel.sum();
  require(pr_differ > 0.0, "split_multi: event V != W has zero probability");
  const ProbabilityTable selected({{"XW", nx}, {"V", m}, {"W", m}, {"Z", nz}}, sel / pr_differ);
  return SplitResult{JointDistribution(std::move(regs), std::move(aug)), alpha,
                     min_entropy(selected, "XW", RegisterSet{"V", "W", "Z"}), alpha / 2.0 - std::log2(m) - 1.0};
}

double psucc_classical(const Eigen::MatrixXd& channel, int k) {
  const Eigen::Index outputs = channel.rows();
  const Eigen::Index inputs = channel.cols();
  require(outputs >= 1 && inputs >= 1, "channel matrix is empty");
  require((channel.array() >= 0.0).all() && channel.allFinite(), "channel entries must be nonnegative");
  for (Eigen::Index a = 0; a < inputs; ++a) {
    require(std::abs(channel.col(a).sum() - 1.0) <= 1e-9, "channel columns must be probability vectors");
  }
  if (inputs > kMaxChannelAlphabet || outputs > kMaxChannelAlphabet || k > kMaxCodeBits) {
    throw SizeCapExceeded("psucc_classical is limited to 8x8 channels and k <= 3");
  }
  if (k <= 0) return 1.0;
  const int messages = 1 << k;
  // Under ML decoding, an encoder's success depends only on its image S:
  // 2^-k * sum_y max_{a in S} W(y|a). Enumerate images of size <= 2^k.
  double best = 0.0;
  for (unsigned s = 1; s < (1u << inputs); ++s) {
    if (std::popcount(s) > messages) continue;
    double total = 0.0;
    for (Eigen::Index y = 0; y < outputs; ++y) {
      double mx = 0.0;
      for (Eigen::Index a = 0; a < inputs; ++a) {
        if (s & (1u << a)) mx = std::max(mx, channel(y, a));
      }
      total += mx;
    }
    best = std::max(best, total);
  }
  return best / messages;
}

}  // namespace nqs
