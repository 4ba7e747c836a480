#ifndef NEUTRO_AXIOMS_HPP
#define NEUTRO_AXIOMS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace neutro {

struct AxiomCheck {
  std::string name;
  std::string description;
  bool passed = false;
  std::size_t samples = 0;
  double worst_error = 0.0;  // largest observed violation, 0 when exact
};

inline constexpr double kAxiomTolerance = 1e-12;
inline constexpr std::size_t kDefaultAxiomSamples = 10000;

// Sampled checks of the entropy axioms and the algebraic identities of the
// component construction. Each check draws from its own generator seeded
// with `seed`, so results are reproducible one check at a time.
AxiomCheck check_certainty_corners();
AxiomCheck check_balanced_maximum(std::uint64_t seed, std::size_t samples);
AxiomCheck check_truth_falsity_symmetry(std::uint64_t seed, std::size_t samples);
AxiomCheck check_monotonicity(std::uint64_t seed, std::size_t samples);
AxiomCheck check_escort_normalization(std::uint64_t seed, std::size_t samples);
AxiomCheck check_component_identities(std::uint64_t seed, std::size_t samples);

std::vector<AxiomCheck> run_axioms(std::uint64_t seed, std::size_t samples = kDefaultAxiomSamples);

}  // namespace neutro

#endif  // NEUTRO_AXIOMS_HPP
