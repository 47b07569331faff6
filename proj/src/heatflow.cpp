#include "invwalk/heatflow.hpp"

namespace invwalk::heat {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::full_grid_cross_diagonal:
      return "full-grid-cross-diagonal";
    case Variant::grid_hot_diagonal:
      return "grid-hot-diagonal";
    case Variant::triangle_hot_boundary:
      return "triangle-hot-boundary";
    case Variant::diamond_hot_boundary:
      return "diamond-hot-boundary";
    case Variant::semi_infinite:
      return "semi-infinite";
  }
  return "unknown";
}

}  // namespace invwalk::heat
