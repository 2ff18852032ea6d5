#include <filesystem>

#include "doctest.h"
#include "eon/topology.hpp"

using eon::load_topology;
using eon::ParseError;

namespace {
int error_line(std::string_view text) {
  try {
    load_topology(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}
}  // namespace

TEST_CASE("minimal topology creates both directions") {
  auto net = load_topology("nodes 2 slots 10\nlink 0 1 100\n");
  CHECK(net.node_count() == 2);
  CHECK(net.slots() == 10);
  REQUIRE(net.fibers().size() == 2);
  const auto f = net.find_fiber(0, 1);
  const auto b = net.find_fiber(1, 0);
  REQUIRE(f);
  REQUIRE(b);
  CHECK(net.fiber(*f).length_km == 100);
  CHECK(net.fiber(*b).length_km == 100);
  CHECK(net.fiber(*f).spectrum.free_count() == 10);
}

TEST_CASE("comments, blank lines and slot override") {
  auto net = load_topology("# hi\n\nnodes 3 slots 10  # trailing\nlink 0 1 5\nlink 1 2 7\n", 60);
  CHECK(net.slots() == 60);
  CHECK(net.fibers().size() == 4);
}

TEST_CASE("parse errors carry the line number") {
  CHECK(error_line("nodes 2 slots 10\nlink 0 0 5\n") == 2);
  CHECK(error_line("nodes 2 slots 10\nlink 0 1 -5\n") == 2);
  CHECK(error_line("nodes 2 slots 10\nlink 0 1 0\n") == 2);
  CHECK(error_line("nodes 2 slots 10\nlink 0 1 5\nlink 1 0 6\n") == 3);
  CHECK(error_line("link 0 1 5\n") == 1);
  CHECK(error_line("nodes 2 slots 10\nlink 0 2 5\n") == 2);
  CHECK(error_line("nodes 2 slots 10\nfoo 1\n") == 2);
  CHECK(error_line("nodes 2 slots 10\nlink 0 1 5 9\n") == 2);
  CHECK(error_line("nodes 2 slots 10\nlink 0 1 abc\n") == 2);
  CHECK_THROWS_AS(load_topology(""), ParseError);
}

TEST_CASE("bundled USNet") {
  const auto path = std::filesystem::path(EON_DATA_DIR) / "usnet.topo";
  auto net = eon::load_topology_file(path);
  CHECK(net.node_count() == 24);
  CHECK(net.fibers().size() == 86);
  CHECK(net.slots() == 300);
  for (const auto& f : net.fibers()) CHECK(f.length_km > 0);
  CHECK_THROWS(eon::load_topology_file("/nonexistent/file.topo"));
}
