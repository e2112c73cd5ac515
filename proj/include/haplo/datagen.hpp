#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "haplo/types.hpp"

namespace haplo::datagen {

/// Parameters of a synthetic instance.  Ranges are enforced at construction:
/// m, n >= 1, pd in (0, 1], err_ratio in [0, 1).
struct InstanceSpec {
  int m;
  int n;
  double pd;
  double err_ratio;
  std::uint64_t seed;

  InstanceSpec(int m, int n, double pd, double err_ratio, std::uint64_t seed);
};

struct Instance {
  GroundTruth gt;
  ReadMatrix rm;
  std::vector<std::pair<int, int>> omega_e;  // flipped entries, sorted
};

/// Draws h and c uniformly over {-1,+1}, observes each entry independently
/// with probability pd, and flips the signs of a uniformly random subset of
/// Omega of size round(err_ratio * |Omega|).
///
/// Determinism: all draws come from mt19937_64 generators seeded through a
/// splitmix64 finalizer, one independent substream per stage (h, c, Omega,
/// Omega_E), so identical specs produce bit-identical instances on any
/// platform and adding a stage never perturbs earlier draws.
///
/// If sampling leaves Omega empty the generator retries with seed+1 up to 8
/// times, then throws EmptyObservationError.
Instance generate(const InstanceSpec& spec);

}  // namespace haplo::datagen
