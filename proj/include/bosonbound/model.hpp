#pragma once

#include <cstdint>

#include "bosonbound/errors.hpp"

namespace bosonbound {

enum class ModelVariant {
  RelativisticOscillator,  // massless kinetic terms, oscillator pair potential
  NonrelativisticLinear    // p^2/2m kinetic terms, linear pair potential
};

// Problem definition for a system of N identical bosons.  Natural units
// (hbar = c = 1) throughout: couplings carry energy/length^2 (gamma) or
// energy/length (lambda).
struct SystemSpec {
  std::int64_t n_particles = 2;
  ModelVariant variant = ModelVariant::RelativisticOscillator;
  double gamma = 1.0;   // oscillator pair coupling, RelativisticOscillator only
  double lambda = 0.0;  // linear pair coupling, NonrelativisticLinear only
  double mass = 0.0;    // constituent mass, NonrelativisticLinear only

  static SystemSpec relativistic_oscillator(std::int64_t n, double gamma);
  static SystemSpec nonrelativistic_linear(std::int64_t n, double lambda, double mass);
};

// N(N-1) and the number of interacting pairs N(N-1)/2.
struct PairCount {
  std::int64_t alpha;
  std::int64_t pairs;
};

// Cap on N: keeps alpha = N(N-1) well inside the exact integer range and the
// squared pair counts used by the bound formulas inside double range.
inline constexpr std::int64_t kMaxParticles = 1'000'000;

// Returns the spec unchanged iff every invariant holds; throws
// NonPhysicalParameter naming the offending field otherwise.
const SystemSpec& validate_system(const SystemSpec& spec);

PairCount pair_count(std::int64_t n_particles);

// Factor by which every energy of the system scales when the coupling
// strength is multiplied by `scale` (gamma -> s*gamma for the oscillator
// model, lambda^2/(4m) -> s*lambda^2/(4m) for the linear model): s^(1/3).
double coupling_scale_factor(const SystemSpec& spec, double scale);

}  // namespace bosonbound
