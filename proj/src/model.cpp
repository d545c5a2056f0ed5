#include "bosonbound/model.hpp"

#include <cmath>

namespace bosonbound {

SystemSpec SystemSpec::relativistic_oscillator(std::int64_t n, double gamma) {
  SystemSpec spec;
  spec.n_particles = n;
  spec.variant = ModelVariant::RelativisticOscillator;
  spec.gamma = gamma;
  return spec;
}

SystemSpec SystemSpec::nonrelativistic_linear(std::int64_t n, double lambda, double mass) {
  SystemSpec spec;
  spec.n_particles = n;
  spec.variant = ModelVariant::NonrelativisticLinear;
  spec.gamma = 0.0;
  spec.lambda = lambda;
  spec.mass = mass;
  return spec;
}

const SystemSpec& validate_system(const SystemSpec& spec) {
  if (spec.n_particles < 2) {
    throw NonPhysicalParameter("n_particles", "need at least two particles to form a pair");
  }
  if (spec.n_particles > kMaxParticles) {
    throw NonPhysicalParameter("n_particles", "exceeds supported maximum of 10^6");
  }
  switch (spec.variant) {
    case ModelVariant::RelativisticOscillator:
      if (!(spec.gamma > 0.0) || !std::isfinite(spec.gamma)) {
        throw NonPhysicalParameter("gamma", "oscillator coupling must be positive and finite");
      }
      break;
    case ModelVariant::NonrelativisticLinear:
      if (!(spec.lambda > 0.0) || !std::isfinite(spec.lambda)) {
        throw NonPhysicalParameter("lambda", "linear coupling must be positive and finite");
      }
      if (!(spec.mass > 0.0) || !std::isfinite(spec.mass)) {
        throw NonPhysicalParameter("mass", "mass must be positive and finite");
      }
      break;
  }
  return spec;
}

PairCount pair_count(std::int64_t n_particles) {
  if (n_particles < 2) {
    throw NonPhysicalParameter("n_particles", "need at least two particles to form a pair");
  }
  if (n_particles > kMaxParticles) {
    throw NonPhysicalParameter("n_particles", "exceeds supported maximum of 10^6");
  }
  const std::int64_t alpha = n_particles * (n_particles - 1);
  return PairCount{alpha, alpha / 2};
}

double coupling_scale_factor(const SystemSpec& spec, double scale) {
  validate_system(spec);
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw NonPhysicalParameter("scale", "coupling scale must be positive and finite");
  }
  return std::cbrt(scale);
}

}  // namespace bosonbound
