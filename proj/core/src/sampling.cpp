#include "runyon/sampling.hpp"

#include <random>

namespace runyon {

std::vector<alg::PointAssignment> sample_points(std::uint64_t seed, std::size_t count, SamplingPolicy policy) {
  // mt19937_64 output is fixed by the standard; the distributions are not,
  // so values are mapped by hand.
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t span) { return static_cast<long>(rng() % span); };
  auto rational = [&] {
    const long num = draw(static_cast<std::uint64_t>(2 * policy.max_abs_numerator + 1)) - policy.max_abs_numerator;
    const long den = draw(static_cast<std::uint64_t>(policy.max_denominator)) + 1;
    return Rational(num, den);
  };
  std::vector<alg::PointAssignment> out;
  out.reserve(count);
  while (out.size() < count) {
    Rational x = rational();
    Rational a = rational();
    Rational b = rational();
    if (x.is_zero() || a.is_zero() || b.is_zero() || a == b || x == a || x == b) {
      continue;
    }
    out.emplace_back(std::move(x), std::move(a), std::move(b));
  }
  return out;
}

}  // namespace runyon
