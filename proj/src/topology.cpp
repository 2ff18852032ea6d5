#include "eon/topology.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace eon {

MultiLayerNet load_topology(std::string_view text, int slots_override) {
  std::istringstream in{std::string(text)};
  std::optional<MultiLayerNet> net;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;

    if (keyword == "nodes") {
      if (net) throw ParseError(line_no, "duplicate header");
      std::string slots_kw;
      long long n = 0, b = 0;
      if (!(fields >> n >> slots_kw >> b) || slots_kw != "slots") {
        throw ParseError(line_no, "expected 'nodes <N> slots <B>'");
      }
      if (n < 1 || b < 1) throw ParseError(line_no, "node and slot counts must be positive");
      net.emplace(static_cast<int>(n), slots_override > 0 ? slots_override : static_cast<int>(b));
    } else if (keyword == "link") {
      if (!net) throw ParseError(line_no, "link before 'nodes' header");
      long long u = -1, v = -1;
      double km = 0;
      if (!(fields >> u >> v >> km)) throw ParseError(line_no, "expected 'link <u> <v> <length_km>'");
      if (u < 0 || v < 0 || u >= net->node_count() || v >= net->node_count()) {
        throw ParseError(line_no, "node id out of range");
      }
      if (u == v) throw ParseError(line_no, "self-loop link");
      if (!(km > 0)) throw ParseError(line_no, "link length must be positive");
      try {
        net->add_fiber(static_cast<NodeId>(u), static_cast<NodeId>(v), km);
        net->add_fiber(static_cast<NodeId>(v), static_cast<NodeId>(u), km);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    } else {
      throw ParseError(line_no, "unknown keyword '" + keyword + "'");
    }
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "trailing field '" + extra + "'");
  }
  if (!net) throw ParseError(line_no, "missing 'nodes' header");
  return std::move(*net);
}

MultiLayerNet load_topology_file(const std::filesystem::path& path, int slots_override) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open topology file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_topology(buf.str(), slots_override);
}

}  // namespace eon
