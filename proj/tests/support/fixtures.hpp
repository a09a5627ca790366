#pragma once

#include <vector>

#include "ccs/core/pseudo_configuration.hpp"
#include "oracles.hpp"

namespace fixtures {

inline ccs::PseudoConfiguration from_ipoints(const std::vector<oracle::IPoint>& pts) {
  std::vector<ccs::Point> out;
  for (const auto& p : pts) out.push_back({ccs::Rational(p.x), ccs::Rational(p.y)});
  return ccs::PseudoConfiguration::from_points(out);
}

inline std::vector<ccs::Label> iota(int n) {
  std::vector<ccs::Label> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Square with corners 0..3 counterclockwise, side 40.
inline const std::vector<oracle::IPoint> kSquare40{{0, 0}, {40, 0}, {40, 40}, {0, 40}};

// Vertical chain below the bottom edge of kSquare40, convex together with the
// top-left corner (0,40) and never with the top-right corner.
inline const std::vector<oracle::IPoint> kLeftTower{{20, -10}, {19, -124}, {18, -140}, {13, -183}, {11, -200}};

}  // namespace fixtures
