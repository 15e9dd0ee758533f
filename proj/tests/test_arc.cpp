#include "arck0/arc.hpp"

#include <doctest.h>

using namespace arck0;

namespace {
Arc arc(int s0, std::int64_t o0, int s1, std::int64_t o1) {
  return Arc({s0, o0}, {s1, o1});
}
} // namespace

TEST_CASE("arc validity") {
  CHECK_THROWS_AS(arc(0, 1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(arc(0, 1, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(arc(0, 2, 0, 1), std::invalid_argument);
  CHECK_FALSE(Arc::make({0, 1}, {0, 0}).has_value());
  CHECK(Arc::make({0, 1}, {0, 3}).has_value());
  // neighbours across an accumulation point are far apart
  CHECK(Arc::make({0, 5}, {1, -5}).has_value());

  const Arc a = arc(1, 4, 0, -2);
  CHECK(a.lo() == PointIndex{0, -2});
  CHECK(a.hi() == PointIndex{1, 4});
  CHECK(a == arc(0, -2, 1, 4));
  CHECK_FALSE(a.same_segment());
}

TEST_CASE("crossing") {
  CHECK(ext1_dim(arc(0, 0, 0, 4), arc(0, 2, 0, 6)) == 1);
  CHECK(ext1_dim(arc(0, 0, 0, 4), arc(0, 1, 0, 3)) == 0);
  CHECK(ext1_dim(arc(0, 0, 0, 4), arc(0, 4, 0, 8)) == 0);
  CHECK(ext1_dim(arc(0, 0, 0, 4), arc(0, 0, 0, 2)) == 0);
  // interleaving through the wrap
  CHECK(crosses(arc(0, 0, 1, 0), arc(0, 3, 2, 0)));
  CHECK_FALSE(crosses(arc(0, 0, 1, 0), arc(1, 3, 2, 0)));
}

TEST_CASE("suspension") {
  CHECK(suspend(arc(0, 3, 1, 5), 1) == arc(0, 2, 1, 4));
  const Arc a = arc(0, -1, 2, 7);
  CHECK(suspend(a, 0) == a);
  CHECK(suspend(suspend(a, 1), -1) == a);
  CHECK(suspend(a, -3) == arc(0, 2, 2, 10));
}

TEST_CASE("quadrilateral sides") {
  auto sides = quadrilateral_sides(arc(0, 0, 0, 2), arc(0, 1, 0, 4));
  CHECK_FALSE(sides[0]);
  CHECK_FALSE(sides[1]);
  CHECK(sides[2] == arc(0, 2, 0, 4));
  CHECK(sides[3] == arc(0, 0, 0, 4));

  sides = quadrilateral_sides(arc(0, 0, 0, 4), arc(0, 2, 0, 6));
  CHECK(sides[0] == arc(0, 0, 0, 2));
  CHECK(sides[1] == arc(0, 2, 0, 4));
  CHECK(sides[2] == arc(0, 4, 0, 6));
  CHECK(sides[3] == arc(0, 0, 0, 6));

  // Z1 = {z^-, z^+} against its flip: only {z^+, z^--} survives
  sides = quadrilateral_sides(arc(0, -1, 0, 1), arc(0, -2, 0, 0));
  CHECK_FALSE(sides[0]);
  CHECK_FALSE(sides[1]);
  CHECK(sides[2] == arc(0, -2, 0, 1));
  CHECK_FALSE(sides[3]);

  CHECK_THROWS_AS(quadrilateral_sides(arc(0, 0, 0, 4), arc(0, 1, 0, 3)),
                  std::invalid_argument);
}

TEST_CASE("induced triangles") {
  const Arc m = arc(0, 0, 0, 4);
  const Arc n = arc(0, 2, 0, 6);
  auto [first, second] = induced_triangles(m, n);
  CHECK(first.first == m);
  CHECK(first.third == n);
  CHECK(first.middle == std::vector<Arc>{arc(0, 2, 0, 4), arc(0, 0, 0, 6)});
  CHECK(second.first == n);
  CHECK(second.third == m);
  CHECK(second.middle == std::vector<Arc>{arc(0, 0, 0, 2), arc(0, 4, 0, 6)});

  // two degenerate sides, one arc per middle
  auto [a, b] = induced_triangles(arc(0, 0, 0, 2), arc(0, 1, 0, 4));
  CHECK(a.middle == std::vector<Arc>{arc(0, 0, 0, 4)});
  CHECK(b.middle == std::vector<Arc>{arc(0, 2, 0, 4)});
  // a 4-gon of consecutive points keeps only the long side
  auto [p, q] = induced_triangles(arc(0, 0, 0, 2), arc(0, 1, 0, 3));
  CHECK(p.middle == std::vector<Arc>{arc(0, 0, 0, 3)});
  CHECK(q.middle.empty());

  auto [c, d] = induced_triangles(arc(0, -1, 0, 1), arc(0, -2, 0, 0));
  CHECK(c.middle.empty());
  CHECK(d.middle == std::vector<Arc>{arc(0, -2, 0, 1)});
}

TEST_CASE("to_string") {
  CHECK(to_string(arc(1, 3, 0, -2)) == "{(0,-2),(1,3)}");
  CHECK(to_string(MaybeArc{}) == "0");
}
