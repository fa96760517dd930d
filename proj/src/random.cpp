#include "schurder/random.hpp"

namespace schurder {

std::mt19937_64& oracle_rng() {
    static thread_local std::mt19937_64 rng(20240521ULL);
    return rng;
}

void seed_oracle(std::uint64_t seed) { oracle_rng().seed(seed); }

Rational random_rational(long long bound) {
    std::uniform_int_distribution<long long> d(-bound, bound);
    return Rational(d(oracle_rng()));
}

}  // namespace schurder
