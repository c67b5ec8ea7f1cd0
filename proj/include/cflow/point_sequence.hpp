#pragma once

#include <string>

#include "cflow/types.hpp"

namespace cflow {

// Cyclic sequence of complex points p_0..p_{n-1}, n >= 3.  The chord
// z_j = p_j - p_{j-1} (indices mod n) is the value the sequence induces on
// spoke j of a wheel; the point p_j itself goes on rim edge v_j -> v_{j+1}.
// Entries must be finite.  Coincident consecutive points are representable
// (the induced flow then has a zero spoke and fails verification).
class PointSequence {
 public:
  explicit PointSequence(ComplexVector points);

  int size() const { return static_cast<int>(points_.size()); }
  const ComplexVector& points() const { return points_; }
  Complex point(int j) const { return points_[j]; }

  // z_j = p_j - p_{j-1}, cyclic.
  Complex chord(int j) const {
    const int n = size();
    return points_[j] - points_[(j + n - 1) % n];
  }

 private:
  ComplexVector points_;
};

RealVector point_norms(const PointSequence& seq);
RealVector chord_norms(const PointSequence& seq);

// JSON array of [re, im] pairs.
PointSequence read_points_file(const std::string& path);
void write_points_file(const std::string& path, const PointSequence& seq);

}  // namespace cflow
