#pragma once

#include <cstdint>
#include <string_view>

namespace eon {

using NodeId = std::int32_t;
using FiberId = std::int64_t;
using LightpathId = std::int64_t;
using RequestId = std::int64_t;

// Ids of links in a routable layer: fiber ids in the optical layer,
// lightpath ids in the electric layer.
using LinkId = std::int64_t;

enum class Layer { kElectric, kOptical };

constexpr std::string_view to_string(Layer layer) {
  return layer == Layer::kElectric ? "electric" : "optical";
}

}  // namespace eon
