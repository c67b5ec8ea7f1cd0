#pragma once

#include <string>

#include "cflow/point_sequence.hpp"

namespace cflow {

struct RenderSpec {
  double scale = 120.0;  // pixels per unit length
  bool show_labels = true;
  bool show_circles = true;
  bool arrowheads = true;
};

// Standalone SVG picture of a point sequence: the unit circle and the radius
// lambda circle, the points p_j with labels, and the directed chords
// p_{j-1} -> p_j.  The y axis is flipped so anticlockwise in the plane is
// anticlockwise on screen.  Output is deterministic: identical inputs yield
// identical bytes.  Requires scale > 0 and lambda >= max point norm - 1e-9.
std::string render_sequence(const PointSequence& seq, double lambda,
                            const RenderSpec& spec = {});

}  // namespace cflow
