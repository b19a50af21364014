#pragma once

#include <cstdint>
#include <random>

#include "raywig/state.hpp"

namespace raywig {

/// RNG state is always explicit and caller-owned; the library never touches a
/// global generator.
using Rng = std::mt19937_64;

/// Derive a per-trial seed from (run seed, trial index), splitmix64-style, so
/// independent trials can run in any order or in parallel with identical
/// results.
std::uint64_t subseed(std::uint64_t seed, std::uint64_t index);

/// Amplitudes i.i.d. standard complex Gaussian, then normalized. The induced
/// ray distribution is the uniform (Fubini-Study) measure.
StateVector random_state(Index dim, Rng& rng);

Ray random_ray(Index dim, Rng& rng, const Tolerances& tol = {});

/// Unit-modulus complex number with uniformly distributed argument.
Complex random_phase(Rng& rng);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the R
/// diagonal rotated positive.
Matrix haar_unitary(Index dim, Rng& rng);

}  // namespace raywig
