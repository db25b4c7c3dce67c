#pragma once
// Indistinct pairs by direct distance comparison, independent of the segment code.

#include <vector>

#include "metdim/geometry.hpp"

namespace metdim::testing {

inline std::vector<LatticePoint> brute_pairs(const GeometryContext& ctx, Vertex s, int first_track, int second_track) {
  const auto& A = ctx.track(first_track);
  const auto& B = ctx.track(second_track);
  std::vector<LatticePoint> out;
  for (int a = A.first; a <= A.last; ++a)
    for (int b = B.first; b <= B.last; ++b) {
      Vertex x = A.vertex_at(a), y = B.vertex_at(b);
      if (x != y && ctx.distance(s, x) == ctx.distance(s, y)) out.push_back({a, b});
    }
  return out;  // already sorted
}

}  // namespace metdim::testing
