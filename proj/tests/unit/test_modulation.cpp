#include "doctest.h"
#include "eon/modulation.hpp"

using eon::ModulationTable;

TEST_CASE("standard table reach and per-slot rate") {
  const auto t = ModulationTable::standard();
  CHECK(t.reach(2) == 9600);
  CHECK(t.reach(4) == 4800);
  CHECK(t.reach(8) == 2400);
  CHECK(t.reach(16) == 1200);
  CHECK(t.rate_per_slot(2) == 12.5);
  CHECK(t.rate_per_slot(4) == 25);
  CHECK(t.rate_per_slot(8) == 37.5);
  CHECK(t.rate_per_slot(16) == 50);
  CHECK(t.default_level() == 2);
  CHECK_THROWS(t.reach(32));
  CHECK_THROWS(t.reach(3));
}

TEST_CASE("best level for distance") {
  const auto t = ModulationTable::standard();
  CHECK(t.best_level_for_distance(1000) == 16);
  CHECK(t.best_level_for_distance(1200) == 16);
  CHECK(t.best_level_for_distance(1200.1) == 8);
  CHECK(t.best_level_for_distance(4800.5) == 2);
  CHECK(t.best_level_for_distance(9600) == 2);
  CHECK_FALSE(t.best_level_for_distance(9600.1).has_value());
}

TEST_CASE("slots for a rate") {
  const auto t = ModulationTable::standard();
  CHECK(t.slots_for(150, 16) == 3);
  CHECK(t.slots_for(150, 2) == 12);
  CHECK(t.slots_for(150, 8) == 4);
  CHECK(t.slots_for(151, 8) == 5);
  CHECK(t.slots_for(5, 4) == 1);
}
