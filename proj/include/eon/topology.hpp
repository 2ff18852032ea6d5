#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eon/network.hpp"

namespace eon {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Format:
//   # comment
//   nodes <N> slots <B>
//   link <u> <v> <length_km>      (creates u->v and v->u)
// `slots_override` > 0 replaces the file's slot count.
MultiLayerNet load_topology(std::string_view text, int slots_override = 0);
MultiLayerNet load_topology_file(const std::filesystem::path& path, int slots_override = 0);

}  // namespace eon
