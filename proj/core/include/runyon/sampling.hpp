#pragma once

#include "runyon/multipoly.hpp"

#include <cstdint>
#include <vector>

namespace runyon {

struct SamplingPolicy {
  long max_abs_numerator = 12;
  long max_denominator = 8;
};

/// Deterministic rational sample points (x, α, β). Points where any of
/// α-β, x-α, x-β, α, β, x vanishes are rejected and redrawn. The same seed
/// gives the same points on every platform.
std::vector<alg::PointAssignment> sample_points(std::uint64_t seed, std::size_t count, SamplingPolicy policy = {});

}  // namespace runyon
