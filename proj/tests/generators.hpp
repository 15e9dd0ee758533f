#pragma once

#include "arck0/arc.hpp"
#include "arck0/integer_matrix.hpp"
#include "arck0/tilting.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace gen {

using Rng = std::mt19937_64;

inline constexpr int kCases = 500;
inline constexpr std::uint64_t kSeed = 0x5eed'a0c1u;

inline std::int64_t uniform(Rng &rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline arck0::PointIndex point(Rng &rng, int n, int window) {
  return {static_cast<int>(uniform(rng, 0, n - 1)), uniform(rng, -window, window)};
}

inline arck0::Arc arc(Rng &rng, int n, int window) {
  for (;;)
    if (auto a = arck0::Arc::make(point(rng, n, window), point(rng, n, window)))
      return *a;
}

inline std::vector<std::int64_t> anchors(Rng &rng, int n, int spread) {
  std::vector<std::int64_t> out;
  for (int i = 0; i < n; ++i)
    out.push_back(uniform(rng, -spread, spread));
  return out;
}

inline arck0::StandardTilting tilting(Rng &rng, int max_n = 4, int max_depth = 4) {
  const int n = static_cast<int>(uniform(rng, 1, max_n));
  const int depth = static_cast<int>(uniform(rng, 1, max_depth));
  return arck0::StandardTilting::build(n, anchors(rng, n, 4), depth);
}

inline std::size_t interior_index(Rng &rng, const arck0::StandardTilting &t) {
  std::vector<std::size_t> ok;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.is_interior(i))
      ok.push_back(i);
  return ok[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(ok.size()) - 1))];
}

inline arck0::IntMatrix matrix(Rng &rng, int max_dim, int bound) {
  const auto r = uniform(rng, 1, max_dim);
  const auto c = uniform(rng, 1, max_dim);
  arck0::IntMatrix m(r, c);
  // some sparse and some low-rank draws so zeros and torsion both show up
  const int mode = static_cast<int>(uniform(rng, 0, 3));
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j)
      m(i, j) = (mode == 1 && uniform(rng, 0, 2) != 0) ? 0 : uniform(rng, -bound, bound);
  if (mode == 2 && r > 1)
    for (Eigen::Index j = 0; j < c; ++j)
      m(r - 1, j) = 2 * m(0, j);
  if (mode == 3)
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j)
        m(i, j) *= 2 + (i % 2);
  return m;
}

} // namespace gen
