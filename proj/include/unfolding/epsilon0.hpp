// Certified deviation-gap floor for the modified Matching Pennies family.
//
// For G_delta with 0 < delta < 1/2, computes the exact minimum of the
// deviation gap f_G over the region of profiles at L-inf distance >= eps from
// the unique equilibrium ((delta,1-delta),(delta,1-delta)). Parametrizing
// profiles by (p, q) = (weight of H for each player), f_G is the maximum of
// four bilinear pieces, so on any axis-aligned rectangle contained in one
// sign regime its minimum is attained on the rectangle's edges; restricted to
// an edge each piece is linear, so the minimum sits at an endpoint or at a
// crossing of two pieces. That finite candidate set is evaluated exactly.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "unfolding/game.hpp"
#include "unfolding/rational.hpp"

namespace unfolding {

namespace detail {

struct GapCandidateSet {
  std::vector<std::pair<Rational, Rational>> points;
};

inline void add_edge_candidates(const Rational& delta, std::pair<Rational, Rational> lo,
                                std::pair<Rational, Rational> hi, GapCandidateSet& out) {
  out.points.push_back(lo);
  out.points.push_back(hi);
  // The four linear-on-this-edge pieces of f_G.
  auto pieces = [&delta](const std::pair<Rational, Rational>& pt) {
    const Rational& p = pt.first;
    const Rational& q = pt.second;
    return std::vector<Rational>{(1 - p) * (q - delta), p * (delta - q), (1 - q) * (delta - p),
                                 q * (p - delta)};
  };
  const std::vector<Rational> at_lo = pieces(lo);
  const std::vector<Rational> at_hi = pieces(hi);
  for (std::size_t i = 0; i < at_lo.size(); ++i) {
    for (std::size_t j = i + 1; j < at_lo.size(); ++j) {
      const Rational denom = (at_hi[i] - at_lo[i]) - (at_hi[j] - at_lo[j]);
      if (denom == 0) continue;
      const Rational s = (at_lo[j] - at_lo[i]) / denom;
      if (s < 0 || s > 1) continue;
      out.points.emplace_back(lo.first + s * (hi.first - lo.first),
                              lo.second + s * (hi.second - lo.second));
    }
  }
}

}  // namespace detail

// Exact positive lower bound on f_G over { ||(r,c) - (r*,c*)||_inf >= eps }.
// Requires 0 < delta < 1/2 (interior, nondegenerate equilibrium) and eps > 0.
inline Rational epsilon0_estimate(const Rational& delta, const Rational& eps) {
  if (delta <= 0 || delta >= Rational(1, 2))
    throw std::invalid_argument("epsilon0_estimate requires 0 < delta < 1/2");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");

  const NormalFormGame game = modified_matching_pennies(delta);
  auto clamp01 = [](Rational v) {
    if (v < 0) return Rational(0);
    if (v > 1) return Rational(1);
    return v;
  };
  const Rational hole_lo = clamp01(delta - eps);
  const Rational hole_hi = clamp01(delta + eps);

  std::vector<Rational> cuts{Rational(0), hole_lo, delta, hole_hi, Rational(1)};
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  detail::GapCandidateSet candidates;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
      const Rational& p0 = cuts[i];
      const Rational& p1 = cuts[i + 1];
      const Rational& q0 = cuts[j];
      const Rational& q1 = cuts[j + 1];
      const bool in_hole = p0 >= hole_lo && p1 <= hole_hi && q0 >= hole_lo && q1 <= hole_hi;
      if (in_hole) continue;
      detail::add_edge_candidates(delta, {p0, q0}, {p1, q0}, candidates);
      detail::add_edge_candidates(delta, {p0, q1}, {p1, q1}, candidates);
      detail::add_edge_candidates(delta, {p0, q0}, {p0, q1}, candidates);
      detail::add_edge_candidates(delta, {p1, q0}, {p1, q1}, candidates);
    }
  }
  if (candidates.points.empty())
    throw std::domain_error("eps so large that the region is empty");

  bool first = true;
  Rational minimum = 0;
  for (const auto& [p, q] : candidates.points) {
    MixedProfile profile{MixedStrategy{{p, 1 - p}}, MixedStrategy{{q, 1 - q}}};
    const Rational f = max_deviation(game, profile);
    if (first || f < minimum) {
      minimum = f;
      first = false;
    }
  }
  if (minimum <= 0)
    throw std::logic_error("gap minimization returned a non-positive bound");
  return minimum;
}

}  // namespace unfolding
