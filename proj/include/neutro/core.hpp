#ifndef NEUTRO_CORE_HPP
#define NEUTRO_CORE_HPP

#include <algorithm>
#include <cmath>
#include <numbers>

// Scalar mathematics of neutrosophic gray-level information. Every quantity
// lives in the unit interval; callers are responsible for passing values in
// [0,1]. All functions are pure.
namespace neutro {

template <typename Scalar>
struct NeutroTriple {
  Scalar truth;
  Scalar neutrality;
  Scalar falsity;
};

template <typename Scalar>
struct BifuzzyPair {
  Scalar undefinedness;
  Scalar contradiction;
};

template <typename Scalar>
struct EscortPair {
  Scalar p_truth;
  Scalar p_falsity;
};

/// Bounded dissimilarity between two gray levels,
/// 2|x-y| / (1 + |x-0.5| + |y-0.5|). Symmetric, zero iff x == y, and never
/// exceeds 1 on the unit square.
template <typename Scalar>
inline Scalar dissimilarity(Scalar x, Scalar y) {
  using std::abs;
  const Scalar half(0.5);
  // Grouped so that swapping the arguments is bit-exact.
  return Scalar(2) * abs(x - y) / (Scalar(1) + (abs(x - half) + abs(y - half)));
}

/// Truth, neutrality and falsity of gray level `x` with respect to the class
/// means `v1` (dark side), `v2` (bright side) and the threshold `t`.
///
/// Truth measures membership in the dark class, falsity in the bright class,
/// and neutrality the closeness to the threshold compared with the closeness
/// to the nearer class mean. Degenerate 0/0 cases resolve as:
///   x == v1 == v2        ->  truth = falsity = 1/2
///   x == t and x == v_i  ->  neutrality = 1
template <typename Scalar>
NeutroTriple<Scalar> neutro_components(Scalar x, Scalar v1, Scalar v2, Scalar t) {
  const Scalar d1 = dissimilarity(x, v1);
  const Scalar d2 = dissimilarity(x, v2);
  const Scalar dt = dissimilarity(x, t);
  const Scalar dv = std::min(d1, d2);

  NeutroTriple<Scalar> out{};

  // d1 + d2 - d1*d2 = 1 - (1-d1)(1-d2), zero only when both vanish.
  const Scalar class_den = d1 + d2 - d1 * d2;
  if (class_den == Scalar(0)) {
    out.truth = Scalar(0.5);
    out.falsity = Scalar(0.5);
  } else {
    out.truth = (d2 - d1 * d2) / class_den;
    out.falsity = (d1 - d1 * d2) / class_den;
  }

  const Scalar neutral_den = dt + dv - dt * dv;
  out.neutrality = neutral_den == Scalar(0) ? Scalar(1) : (dv - dt * dv) / neutral_den;
  return out;
}

template <typename Scalar>
inline BifuzzyPair<Scalar> bifuzzy(Scalar truth, Scalar falsity) {
  // T + F is formed once so that swapping the arguments is bit-exact.
  const Scalar sum = truth + falsity;
  return {std::max(Scalar(0), Scalar(1) - sum), std::max(Scalar(0), sum - Scalar(1))};
}

/// Escort probabilities of truth and falsity. They always sum to one.
template <typename Scalar>
EscortPair<Scalar> escort(Scalar truth, Scalar neutrality, Scalar falsity) {
  const auto bf = bifuzzy(truth, falsity);
  const Scalar shared = bf.undefinedness + neutrality / Scalar(2);
  const Scalar den = Scalar(1) + neutrality + bf.undefinedness + bf.contradiction;
  return {(truth + shared) / den, (falsity + shared) / den};
}

namespace detail {

// -p ln p with 0 ln 0 = 0.
template <typename Scalar>
inline Scalar shannon_term(Scalar p) {
  using std::log;
  return p > Scalar(0) ? -p * log(p) : Scalar(0);
}

}  // namespace detail

/// Binary Shannon entropy (base 2) of the escort pair, clamped to [0,1].
template <typename Scalar>
Scalar neutro_entropy(Scalar truth, Scalar neutrality, Scalar falsity) {
  const auto p = escort(truth, neutrality, falsity);
  const Scalar h = (detail::shannon_term(p.p_truth) + detail::shannon_term(p.p_falsity)) /
                   Scalar(std::numbers::ln2_v<double>);
  return std::clamp(h, Scalar(0), Scalar(1));
}

template <typename Scalar>
inline Scalar neutro_entropy(const NeutroTriple<Scalar>& tif) {
  return neutro_entropy(tif.truth, tif.neutrality, tif.falsity);
}

}  // namespace neutro

#endif  // NEUTRO_CORE_HPP
