#pragma once

#include <cstdint>
#include <string>

#include "nqs/io.hpp"
#include "nqs/rng.hpp"

namespace nqs::verify {

struct Report {
  std::string suite;
  std::int64_t checks = 0;
  std::int64_t violations = 0;
  Json details = Json::object();
};

Json to_json(const Report& r);

/// Splitting constructions on random tables with alpha = exact joint min-entropy.
Report split(int trials, Rng& rng);
/// Exhaustive two-universality for n <= max_n, ell <= min(n, max_ell).
Report hashing(int max_n, int max_ell);
/// Sampled privacy-amplification distance against its bound on random tables.
Report pa(int trials, int samples, Rng& rng);
/// Min-entropy after a classical storage channel against the P_succ bound,
/// with and without smoothing.
Report lemma4(int trials, Rng& rng);
/// Catalog and random codes: distance certification and exhaustive decoding.
Report codes(int trials, Rng& rng);

/// Random table over the given registers; roughly a quarter of the cells are zero.
JointDistribution random_distribution(std::vector<Register> registers, Rng& rng);

}  // namespace nqs::verify
