#include <cmath>

#include "doctest.h"
#include "nqs/entropy.hpp"
#include "nqs/errors.hpp"
#include "oracles.hpp"

using namespace nqs;

namespace {

// P(x0, x1) = 1/2 [x0 = 0] 2^-4 + 1/2 2^-4 [x1 = 0] on 4-bit halves.
JointDistribution mixture4() {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(256);
  for (int x0 = 0; x0 < 16; ++x0) {
    for (int x1 = 0; x1 < 16; ++x1) {
      double v = 0.0;
      if (x0 == 0) v += 0.5 / 16.0;
      if (x1 == 0) v += 0.5 / 16.0;
      p(x0 * 16 + x1) = v;
    }
  }
  return JointDistribution({{"X0", 16}, {"X1", 16}}, p);
}

}  // namespace

TEST_SUITE("entropy") {

TEST_CASE("table validation") {
  CHECK_THROWS_AS(JointDistribution({{"X", 2}}, Eigen::Vector2d(0.5, 0.4)), InvalidParameter);
  CHECK_THROWS_AS(JointDistribution({{"X", 2}}, Eigen::Vector2d(1.5, -0.5)), InvalidParameter);
  CHECK_THROWS_AS(JointDistribution({{"X", 2}, {"X", 2}}, Eigen::Vector4d::Constant(0.25)), InvalidParameter);
  CHECK_THROWS_AS(JointDistribution({{"X", 3}}, Eigen::Vector2d(0.5, 0.5)), InvalidParameter);
  CHECK_THROWS_AS(JointDistribution::uniform({{"A", 256}, {"B", 256}, {"C", 2}}), SizeCapExceeded);
}

TEST_CASE("guessing probability examples") {
  const auto u = JointDistribution::uniform({{"X", 4}});
  CHECK(guessing_probability(u, "X", {}) == doctest::Approx(0.25));

  Eigen::Vector4d copy(0.5, 0.0, 0.0, 0.5);
  const JointDistribution xy({{"X", 2}, {"Y", 2}}, copy);
  CHECK(guessing_probability(xy, "X", {"Y"}) == doctest::Approx(1.0));

  const auto mix = mixture4();
  CHECK(guessing_probability(mix, RegisterSet{"X0", "X1"}, {}) == doctest::Approx(1.0 / 16.0));
  CHECK(min_entropy(mix, RegisterSet{"X0", "X1"}, {}) == doctest::Approx(4.0));
  CHECK(guessing_probability(mix, "X0", {}) == doctest::Approx(0.5 + 1.0 / 32.0));
}

TEST_CASE("smooth min-entropy examples") {
  const auto bit = JointDistribution::uniform({{"X", 2}});
  CHECK(min_entropy(bit, "X", {}) == doctest::Approx(1.0));
  CHECK(min_entropy(bit, "X", {}, 0.5) == doctest::Approx(2.0));
  const auto sub = smooth(bit, {"X"}, {}, 0.5);
  CHECK(sub.mass == doctest::Approx(0.5));
  CHECK(sub.table.probs()(0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(min_entropy(bit, "X", {}, -0.1), InvalidParameter);
  CHECK_THROWS_AS(min_entropy(bit, "X", {}, 1.0), InvalidParameter);
  CHECK_THROWS_AS(min_entropy(bit, "X", {"X"}), InvalidParameter);
}

TEST_CASE("water-filling equals the LP optimum") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const int nx = 1 + static_cast<int>(rng.below(6));
    const int ny = 1 + static_cast<int>(rng.below(5));
    const auto d = oracle::random_table({{"X", nx}, {"Y", ny}}, rng);
    const double eps = rng.uniform() * 0.6;
    const double lp = oracle::smooth_guess_lp(d.as_matrix({"X"}, {"Y"}), eps);
    CHECK(min_entropy(d, "X", {"Y"}, eps) == doctest::Approx(-std::log2(lp)).epsilon(1e-9));
  }
}

TEST_CASE("smooth chain rule on random tables") {
  Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    const int ny = 1 + static_cast<int>(rng.below(4));
    const auto d = oracle::random_table({{"X", 4}, {"Y", ny}, {"E", 3}}, rng);
    const double eps = rng.uniform() * 0.3;
    CHECK(min_entropy(d, "X", {"Y", "E"}, eps) >= min_entropy(d, "X", {"E"}, eps) - std::log2(ny) - 1e-9);
  }
}

TEST_CASE("nonuniformity examples") {
  const auto ind = JointDistribution::uniform({{"X", 2}, {"Y", 3}});
  CHECK(nonuniformity(ind, "X", {"Y"}) == doctest::Approx(0.0));
  const JointDistribution copy({{"X", 2}, {"Y", 2}}, Eigen::Vector4d(0.5, 0.0, 0.0, 0.5));
  CHECK(nonuniformity(copy, "X", {"Y"}) == doctest::Approx(0.5));
  const auto extended = copy.with_independent({"E", 3}, Eigen::Vector3d(0.2, 0.3, 0.5));
  CHECK(nonuniformity(extended, "X", {"Y", "E"}) == doctest::Approx(0.5));
}

TEST_CASE("binary split examples") {
  const auto u = JointDistribution::uniform({{"X0", 2}, {"X1", 2}, {"Z", 1}});
  const auto s = split_binary(u, 2.0);
  CHECK(s.guarantee == doctest::Approx(0.0));
  CHECK(s.achieved >= s.guarantee - 1e-12);

  // The 4-bit mixture with a trivial Z.
  const auto mix = mixture4();
  Eigen::VectorXd p = mix.probs();
  const JointDistribution withz({{"X0", 16}, {"X1", 16}, {"Z", 1}}, p);
  const auto m = split_binary(withz, 4.0);
  CHECK(m.guarantee == doctest::Approx(1.0));
  CHECK(m.achieved >= 1.0 - 1e-12);
  CHECK_THROWS_AS(split_binary(JointDistribution::uniform({{"X0", 2}, {"Z", 2}}), 1.0), InvalidParameter);
}

TEST_CASE("multi split examples") {
  const auto iid = JointDistribution::uniform({{"X1", 8}, {"X2", 8}, {"X3", 8}, {"Z", 1}});
  const auto s = split_multi(iid, 6.0);
  CHECK(s.guarantee == doctest::Approx(3.0 - std::log2(3.0) - 1.0));
  CHECK(s.guarantee == doctest::Approx(0.415).epsilon(1e-3));
  CHECK(s.achieved >= s.guarantee - 1e-12);

  Eigen::VectorXd p = Eigen::VectorXd::Zero(8);
  p(0) = 1.0;
  const JointDistribution constant({{"X1", 2}, {"X2", 2}, {"X3", 2}, {"Z", 1}}, p);
  const auto c = split_multi(constant, 0.0);
  CHECK(c.guarantee < 0.0);
  CHECK(c.achieved >= c.guarantee);
}

TEST_CASE("m = 2 split agrees with the binary split") {
  // Same table under both naming schemes: V = 0 (v = 1) picks X1 exactly when
  // D = 1 picks X1 in the binary construction, since both test P(first | z).
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto d = oracle::random_table({{"X0", 3}, {"X1", 4}, {"Z", 2}}, rng);
    const auto renamed = JointDistribution({{"X1", 3}, {"X2", 4}, {"Z", 2}}, d.probs());
    const double alpha = min_entropy(d, RegisterSet{"X0", "X1"}, {"Z"});
    const auto b = split_binary(d, alpha);
    const auto m = split_multi(renamed, alpha);
    const Eigen::VectorXd& pb = b.augmented.probs();
    const Eigen::VectorXd& pm = m.augmented.probs();
    for (Eigen::Index cell = 0; cell < d.cells(); ++cell) {
      CHECK(pb(2 * cell + 1) == pm(2 * cell));
      CHECK(pb(2 * cell) == pm(2 * cell + 1));
    }
    CHECK(b.achieved >= b.guarantee - 1e-9);
    CHECK(m.achieved >= m.guarantee - 1e-9);
    CHECK(m.guarantee == doctest::Approx(b.guarantee - 1.0));
  }
}

TEST_CASE("psucc_classical examples") {
  CHECK(psucc_classical(Eigen::Matrix2d::Identity(), 1) == doctest::Approx(1.0));
  CHECK(psucc_classical(Eigen::Matrix2d::Constant(0.5), 1) == doctest::Approx(0.5));
  Eigen::Matrix2d bsc;
  bsc << 0.9, 0.1, 0.1, 0.9;
  CHECK(psucc_classical(bsc, 1) == doctest::Approx(0.9));
  CHECK(psucc_classical(bsc, 0) == 1.0);
  CHECK_THROWS_AS(psucc_classical(Eigen::MatrixXd::Identity(9, 9), 1), SizeCapExceeded);
  CHECK_THROWS_AS(psucc_classical(Eigen::Matrix2d::Constant(0.3), 1), InvalidParameter);
}

TEST_CASE("psucc_classical matches literal enumeration") {
  Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    const int in = 2 + static_cast<int>(rng.below(3));
    const int out = 2 + static_cast<int>(rng.below(3));
    const int k = 1 + static_cast<int>(rng.below(3));
    Eigen::MatrixXd w(out, in);
    for (int a = 0; a < in; ++a) {
      for (int y = 0; y < out; ++y) w(y, a) = rng.uniform();
      w.col(a) /= w.col(a).sum();
    }
    CHECK(psucc_classical(w, k) == doctest::Approx(oracle::psucc_literal(w, k)).epsilon(1e-12));
  }
}

}
