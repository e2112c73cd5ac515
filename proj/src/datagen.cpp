#include "haplo/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace haplo::datagen {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer; used to derive independent substream seeds so that
// adding a stage never perturbs earlier draws.
std::uint64_t mix(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stage) {
  return std::mt19937_64(mix(seed + stage * kGolden));
}

// Uniform double in [0, 1) from the top 53 bits; avoids the
// implementation-defined std distributions so output is identical on every
// platform.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased uniform index in [0, n) by fixed-width rejection.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t scale = UINT64_MAX / n;
  const std::uint64_t limit = scale * n;
  std::uint64_t x = rng();
  while (x >= limit) {
    x = rng();
  }
  return x / scale;
}

VectorXi random_signs(std::mt19937_64& rng, int size) {
  VectorXi out(size);
  for (int k = 0; k < size; ++k) {
    out(k) = (rng() & 1ULL) != 0 ? 1 : -1;
  }
  return out;
}

}  // namespace

InstanceSpec::InstanceSpec(int m_in, int n_in, double pd_in, double err_in,
                           std::uint64_t seed_in)
    : m(m_in), n(n_in), pd(pd_in), err_ratio(err_in), seed(seed_in) {
  if (m < 1 || n < 1) {
    throw InvalidArgumentError("instance dimensions must be >= 1");
  }
  if (!(pd > 0.0 && pd <= 1.0)) {
    throw InvalidArgumentError("pd must lie in (0, 1]");
  }
  if (!(err_ratio >= 0.0 && err_ratio < 1.0)) {
    throw InvalidArgumentError("err_ratio must lie in [0, 1)");
  }
}

Instance generate(const InstanceSpec& spec) {
  constexpr int kMaxReseeds = 8;
  for (int attempt = 0; attempt <= kMaxReseeds; ++attempt) {
    const std::uint64_t seed = spec.seed + static_cast<std::uint64_t>(attempt);

    std::mt19937_64 rng_h = substream(seed, 1);
    std::mt19937_64 rng_c = substream(seed, 2);
    std::mt19937_64 rng_omega = substream(seed, 3);
    std::mt19937_64 rng_err = substream(seed, 4);

    VectorXi h = random_signs(rng_h, spec.n);
    VectorXi c = random_signs(rng_c, spec.m);

    std::vector<Entry> entries;
    for (int i = 0; i < spec.m; ++i) {
      for (int j = 0; j < spec.n; ++j) {
        if (uniform01(rng_omega) < spec.pd) {
          entries.push_back(Entry{i, j, c(i) * h(j)});
        }
      }
    }
    if (entries.empty()) {
      continue;  // retry with seed+1
    }

    const auto omega = static_cast<std::uint64_t>(entries.size());
    const auto flips = static_cast<std::uint64_t>(
        std::llround(spec.err_ratio * static_cast<double>(omega)));
    std::vector<std::uint64_t> order(omega);
    for (std::uint64_t k = 0; k < omega; ++k) {
      order[k] = k;
    }
    for (std::uint64_t k = 0; k < flips; ++k) {
      const std::uint64_t pick = k + uniform_index(rng_err, omega - k);
      std::swap(order[k], order[pick]);
    }

    std::vector<std::pair<int, int>> omega_e;
    omega_e.reserve(flips);
    for (std::uint64_t k = 0; k < flips; ++k) {
      Entry& e = entries[order[k]];
      e.v = -e.v;
      omega_e.emplace_back(e.i, e.j);
    }
    std::sort(omega_e.begin(), omega_e.end());

    return Instance{GroundTruth(std::move(h), std::move(c)),
                    ReadMatrix(spec.m, spec.n, std::move(entries)),
                    std::move(omega_e)};
  }
  throw EmptyObservationError("observation set empty after 8 reseeds");
}

}  // namespace haplo::datagen
