#pragma once

#include "schurder/scalar.hpp"

#include <cstdint>
#include <random>

namespace schurder {

/// Engine used by every sampling step of the oracles. Reseeding makes all
/// randomized decisions reproducible.
std::mt19937_64& oracle_rng();
void seed_oracle(std::uint64_t seed);

/// Uniform integer in [-bound, bound] as a rational.
Rational random_rational(long long bound);

}  // namespace schurder
