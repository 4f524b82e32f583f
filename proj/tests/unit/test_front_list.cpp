#include <doctest.h>

#include "dfmo/front_list.hpp"

using namespace dfmo;

namespace {

FrontEntry entry(std::int64_t id, ObjectiveVector z) {
  FrontEntry e;
  e.x = MixedPoint{{0.0}, {id}};
  e.f = z;
  e.z = std::move(z);
  return e;
}

std::vector<std::int64_t> ids(const FrontList& list) {
  std::vector<std::int64_t> out;
  for (const FrontEntry& e : list.entries()) out.push_back(e.x.integer[0]);
  return out;
}

}  // namespace

TEST_CASE("add_and_filter drops entries the candidate dominates") {
  FrontList list(0.1, 2);
  list.add_and_filter(entry(1, {2, 2}));
  list.add_and_filter(entry(2, {1, 1}));
  CHECK(ids(list) == std::vector<std::int64_t>{2});
}

TEST_CASE("add_and_filter keeps incomparable entries") {
  FrontList list(0.1, 2);
  list.add_and_filter(entry(1, {1, 3}));
  list.add_and_filter(entry(2, {3, 1}));
  CHECK(ids(list) == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("add_and_filter keeps a dominated candidate") {
  FrontList list(0.1, 2);
  list.add_and_filter(entry(1, {0, 0}));
  list.add_and_filter(entry(2, {1, 1}));
  CHECK(ids(list) == std::vector<std::int64_t>{1, 2});
  const auto front = final_front(list);
  REQUIRE(front.size() == 1);
  CHECK(front[0].x.integer[0] == 1);
}

TEST_CASE("a candidate at a known point is ignored") {
  FrontList list(0.1, 2);
  FrontEntry a = entry(1, {1, 1});
  a.xi = 0.25;
  list.add_and_filter(a);
  const auto revision = list.revision();
  FrontEntry again = entry(1, {1, 1});
  again.xi = 1.0;
  list.add_and_filter(again);
  CHECK(list.size() == 1);
  CHECK(list[0].xi == 0.25);
  CHECK(list.revision() == revision);
}

TEST_CASE("find and replace_entry") {
  FrontList list(0.1, 2);
  list.add_and_filter(entry(1, {1, 3}));
  list.add_and_filter(entry(2, {3, 1}));
  const FrontEntry old = *list.find(MixedPoint{{0.0}, {2}});
  FrontEntry updated = old;
  updated.alpha_c = 0.5;
  CHECK(list.replace_entry(old, updated));
  CHECK(list.find(old.x)->alpha_c == 0.5);

  // The old tuple is gone, so a second replace is a no-op.
  FrontEntry other = old;
  other.alpha_c = 0.125;
  CHECK_FALSE(list.replace_entry(old, other));
  CHECK(list.find(old.x)->alpha_c == 0.5);
  CHECK_FALSE(list.replace_entry(entry(9, {0, 0}), entry(9, {0, 0})));
  CHECK(list.find(MixedPoint{{0.0}, {9}}) == nullptr);

  // Moving an entry to a new point updates the index.
  FrontEntry moved = *list.find(old.x);
  const FrontEntry before = moved;
  moved.x = MixedPoint{{0.0}, {5}};
  CHECK(list.replace_entry(before, moved));
  CHECK(list.find(before.x) == nullptr);
  CHECK(list.find(moved.x) != nullptr);
}

TEST_CASE("replace_entry refreshes the dominance matrix") {
  FrontList list(0.1, 2);
  list.add_and_filter(entry(1, {5, 5}));
  CHECK_FALSE(list.any_beats_by_margin(std::vector<double>{4, 4}, 0.0));
  FrontEntry better = list[0];
  better.z = {1, 1};
  CHECK(list.replace_entry(list[0], better));
  CHECK(list.any_beats_by_margin(std::vector<double>{4, 4}, 0.0));
}

TEST_CASE("point snapshots ignore tuple changes but see point changes") {
  FrontList list(0.1, 2);
  list.add_and_filter(entry(1, {1, 3}));
  list.add_and_filter(entry(2, {3, 1}));
  const PointSnapshot snap = list.snapshot_points();
  FrontEntry e = list[0];
  e.xi = 0.5;
  list.replace_entry(list[0], e);
  CHECK(list.same_points(snap));
  list.add_and_filter(entry(3, {2, 2}));
  CHECK_FALSE(list.same_points(snap));
}

TEST_CASE("list comparison modes") {
  FrontList a(0.1, 2);
  a.add_and_filter(entry(1, {1, 3}));
  a.add_and_filter(entry(2, {3, 1}));
  FrontList b = a;
  CHECK(lists_equal(a, b, ListComparison::points));
  CHECK(lists_equal(a, b, ListComparison::tuples));

  FrontEntry e = b[1];
  e.xi = 0.5;
  b.replace_entry(b[1], e);
  CHECK(lists_equal(a, b, ListComparison::points));
  CHECK_FALSE(lists_equal(a, b, ListComparison::tuples));

  b.add_and_filter(entry(3, {2, 2}));
  CHECK_FALSE(lists_equal(a, b, ListComparison::points));
  CHECK_FALSE(lists_equal(a, b, ListComparison::tuples));
}

TEST_CASE("final front") {
  FrontList empty(0.1, 2);
  CHECK(final_front(empty).empty());

  FrontList incomparable(0.1, 2);
  incomparable.add_and_filter(entry(1, {1, 3}));
  incomparable.add_and_filter(entry(2, {2, 2}));
  incomparable.add_and_filter(entry(3, {3, 1}));
  CHECK(final_front(incomparable).size() == 3);
}

TEST_CASE("reset_steps and step defaults") {
  FrontList list(0.1, 2);
  FrontEntry e = entry(1, {1, 1});
  e.set_step(3, 8);
  CHECK(e.step(3) == 8);
  CHECK(e.step(10) == 1);
  CHECK_THROWS_AS(e.set_step(0, 0), UsageError);
  list.add_and_filter(e);
  list.reset_steps(2, 5);
  CHECK(list[0].step(3) == 1);
}

TEST_CASE("constructor checks") {
  CHECK_THROWS_AS(FrontList(0.0, 2), UsageError);
  CHECK_THROWS_AS(FrontList(0.1, 0), UsageError);
  FrontList list(0.1, 2);
  CHECK_THROWS_AS(list.add_and_filter(entry(1, {1, 2, 3})), UsageError);
}
