#pragma once

#include <string>
#include <vector>

#include "lozenge/path_ensemble.hpp"

namespace lozenge {

enum class RenderMode { paths, lozenges };
enum class RenderFormat { ascii, svg };

/// The three rhombus orientations. `stay` and `jump` carry a walker step;
/// `empty` covers a vertical edge no walker uses.
enum class LozengeType { stay, jump, empty };

/// A lozenge in the skewed square lattice (time t horizontally, position x
/// vertically). Each lozenge owns exactly one "upper" unit triangle, the one
/// with corners (t, x), (t, x+1), (t+1, x+1); `t` and `x` name that triangle.
///   stay : corners (t,x) (t+1,x) (t+1,x+1) (t,x+1)
///   jump : corners (t,x) (t+1,x+1) (t+1,x+2) (t,x+1)
///   empty: corners (t-1,x) (t,x) (t+1,x+1) (t,x+1)
struct Lozenge {
  LozengeType type;
  Int t;
  Int x;
  friend auto operator<=>(const Lozenge&, const Lozenge&) = default;
};

/// Vertical extent [lo, hi] of the tiled region at time t. Boundary times use
/// the start/end positions themselves; interior times span from the lowest
/// reachable position of walker 1 to the highest of walker n.
std::pair<Int, Int> region_column(const EnsembleSpec& spec, Int t);

/// Lozenges of the tiling matching `c`, sorted by (t, x). Every unit triangle
/// of the region is covered exactly once.
std::vector<Lozenge> lozenges(const EnsembleSpec& spec, const Configuration& c);

/// Deterministic drawing.
///   paths/ascii    : the serialized configuration (parse_configuration inverts it)
///   lozenges/ascii : one character per lozenge cell, '-' stay, '/' jump, 'o' empty
///   paths/svg      : walker polylines in the 60-degree picture
///   lozenges/svg   : one filled polygon per lozenge in the 60-degree picture
std::string render(const EnsembleSpec& spec, const Configuration& c, RenderMode mode,
                   RenderFormat format);

}  // namespace lozenge
