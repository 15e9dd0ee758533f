#include "arck0/circle_model.hpp"

#include <doctest.h>

using namespace arck0;

TEST_CASE("step moves within a segment") {
  const CircleModel m(3);
  CHECK(m.step({0, 3}, 1) == PointIndex{0, 4});
  CHECK(m.step({2, 0}, -2) == PointIndex{2, -2});
  for (std::int64_t o : {-7, 0, 12})
    CHECK(m.step(m.step({1, o}, 5), -5) == PointIndex{1, o});
}

TEST_CASE("model needs at least one segment") {
  CHECK_THROWS_AS(CircleModel(0), std::invalid_argument);
  CHECK_THROWS_AS(CircleModel(-2), std::invalid_argument);
}

TEST_CASE("open interval follows the anticlockwise order") {
  const CircleModel two(2);
  CHECK(two.in_open_interval({0, 5}, {1, -3}, {0, 2}));
  CHECK_FALSE(two.in_open_interval({0, 2}, {1, -3}, {0, 5}));
  CHECK(two.in_open_interval({0, 5}, {0, 9}, {0, 2}));

  const CircleModel one(1);
  CHECK(one.in_open_interval({0, 0}, {0, 3}, {0, 7}));
  CHECK_FALSE(one.in_open_interval({0, 0}, {0, 9}, {0, 7}));
  CHECK(one.in_open_interval({0, 7}, {0, 9}, {0, 0}));
  CHECK(one.in_open_interval({0, 7}, {0, -4}, {0, 0}));
  // endpoints are excluded
  CHECK_FALSE(one.in_open_interval({0, 0}, {0, 0}, {0, 7}));
  CHECK_FALSE(one.in_open_interval({0, 0}, {0, 7}, {0, 7}));
  CHECK_THROWS_AS(one.in_open_interval({0, 1}, {0, 2}, {0, 1}), std::invalid_argument);
}

TEST_CASE("interior count") {
  const CircleModel m(2);
  CHECK(m.interior_count({0, 0}, {0, 2}) == 1);
  CHECK(m.interior_count({0, 0}, {0, 1}) == 0);
  CHECK(m.interior_count({1, 4}, {1, -3}) == 6);
  CHECK_FALSE(m.interior_count({0, 0}, {1, 0}).has_value());
  CHECK_THROWS_AS(m.interior_count({1, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("points outside the model are rejected") {
  const CircleModel m(2);
  CHECK_FALSE(m.contains({2, 0}));
  CHECK_FALSE(m.contains({-1, 0}));
  CHECK_THROWS(m.step({2, 0}, 1));
}

TEST_CASE("lexicographic order is the cut cyclic order") {
  CHECK(PointIndex{0, 100} < PointIndex{1, -100});
  CHECK(PointIndex{1, -3} < PointIndex{1, 2});
  CHECK(adjacent_or_equal({0, 3}, {0, 4}));
  CHECK(adjacent_or_equal({0, 3}, {0, 3}));
  CHECK_FALSE(adjacent_or_equal({0, 3}, {0, 5}));
  CHECK_FALSE(adjacent_or_equal({0, 3}, {1, 3}));
}
