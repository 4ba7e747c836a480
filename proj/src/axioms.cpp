#include "neutro/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "neutro/core.hpp"

namespace neutro {

namespace {

class UnitSampler {
 public:
  explicit UnitSampler(std::uint64_t seed) : engine_(seed) {}
  double operator()() { return dist_(engine_); }
  NeutroTriple<double> triple() {
    const double t = (*this)(), i = (*this)(), f = (*this)();
    return {t, i, f};
  }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> dist_{0.0, 1.0};
};

AxiomCheck make(std::string name, std::string description) {
  AxiomCheck c;
  c.name = std::move(name);
  c.description = std::move(description);
  return c;
}

void finish(AxiomCheck& c, double tolerance) { c.passed = c.worst_error <= tolerance; }

}  // namespace

AxiomCheck check_certainty_corners() {
  auto c = make("certainty_corners", "e(1,0,0) = e(0,0,1) = 0");
  const double a = neutro_entropy(1.0, 0.0, 0.0);
  const double b = neutro_entropy(0.0, 0.0, 1.0);
  c.samples = 2;
  c.worst_error = std::max(std::abs(a), std::abs(b));
  c.passed = a == 0.0 && b == 0.0;
  return c;
}

AxiomCheck check_balanced_maximum(std::uint64_t seed, std::size_t samples) {
  auto c = make("balanced_maximum", "e(T,I,T) = 1");
  UnitSampler u(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = u(), i = u();
    c.worst_error = std::max(c.worst_error, std::abs(neutro_entropy(t, i, t) - 1.0));
  }
  c.samples = samples;
  finish(c, kAxiomTolerance);
  return c;
}

AxiomCheck check_truth_falsity_symmetry(std::uint64_t seed, std::size_t samples) {
  auto c = make("truth_falsity_symmetry", "e(T,I,F) = e(F,I,T) exactly");
  UnitSampler u(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const auto s = u.triple();
    const double lhs = neutro_entropy(s.truth, s.neutrality, s.falsity);
    const double rhs = neutro_entropy(s.falsity, s.neutrality, s.truth);
    c.worst_error = std::max(c.worst_error, std::abs(lhs - rhs));
  }
  c.samples = samples;
  finish(c, 0.0);
  return c;
}

AxiomCheck check_monotonicity(std::uint64_t seed, std::size_t samples) {
  auto c = make("monotonicity",
                "e1 <= e2 when |T1-F1| >= |T2-F2|, |T1+F1-1| <= |T2+F2-1|, I1 <= I2");
  UnitSampler u(seed);
  std::size_t accepted = 0;
  const std::size_t max_draws = 1000 * std::max<std::size_t>(samples, 1);
  for (std::size_t draws = 0; accepted < samples && draws < max_draws; ++draws) {
    const auto a = u.triple();
    const auto b = u.triple();
    const bool sharper = std::abs(a.truth - a.falsity) >= std::abs(b.truth - b.falsity);
    const bool less_bifuzzy =
        std::abs(a.truth + a.falsity - 1.0) <= std::abs(b.truth + b.falsity - 1.0);
    const bool less_neutral = a.neutrality <= b.neutrality;
    if (!(sharper && less_bifuzzy && less_neutral)) continue;
    ++accepted;
    const double excess = neutro_entropy(a.truth, a.neutrality, a.falsity) -
                          neutro_entropy(b.truth, b.neutrality, b.falsity);
    c.worst_error = std::max(c.worst_error, excess);
  }
  c.samples = accepted;
  finish(c, kAxiomTolerance);
  c.passed = c.passed && accepted == samples;
  return c;
}

AxiomCheck check_escort_normalization(std::uint64_t seed, std::size_t samples) {
  auto c = make("escort_normalization", "p_T + p_F = 1");
  UnitSampler u(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const auto s = u.triple();
    const auto p = escort(s.truth, s.neutrality, s.falsity);
    c.worst_error = std::max(c.worst_error, std::abs(p.p_truth + p.p_falsity - 1.0));
  }
  c.samples = samples;
  finish(c, kAxiomTolerance);
  return c;
}

AxiomCheck check_component_identities(std::uint64_t seed, std::size_t samples) {
  auto c = make("no_contradiction",
                "C = 0, U = 1-T-F, |T+F-1| = C+U and p_T + p_F = 1 for constructed triples");
  UnitSampler u(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const double x = u(), v1 = u(), v2 = u(), t = u();
    const auto tif = neutro_components(x, v1, v2, t);
    const auto bf = bifuzzy(tif.truth, tif.falsity);
    const auto p = escort(tif.truth, tif.neutrality, tif.falsity);
    const double sum = tif.truth + tif.falsity;
    const double err = std::max({
        bf.contradiction,
        std::abs(bf.undefinedness - (1.0 - sum)),
        std::abs(std::abs(sum - 1.0) - (bf.contradiction + bf.undefinedness)),
        std::abs(p.p_truth + p.p_falsity - 1.0),
    });
    c.worst_error = std::max(c.worst_error, err);
  }
  c.samples = samples;
  finish(c, kAxiomTolerance);
  return c;
}

std::vector<AxiomCheck> run_axioms(std::uint64_t seed, std::size_t samples) {
  return {
      check_certainty_corners(),
      check_balanced_maximum(seed, samples),
      check_truth_falsity_symmetry(seed + 1, samples),
      check_monotonicity(seed + 2, samples),
      check_escort_normalization(seed + 3, samples),
      check_component_identities(seed + 4, samples),
  };
}

}  // namespace neutro
