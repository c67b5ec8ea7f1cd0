#include "cflow/point_sequence.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "cflow/errors.hpp"

namespace cflow {

PointSequence::PointSequence(ComplexVector points) : points_(std::move(points)) {
  if (points_.size() < 3)
    throw std::invalid_argument("point sequence: need at least 3 points");
  for (Eigen::Index j = 0; j < points_.size(); ++j)
    if (!std::isfinite(points_[j].real()) || !std::isfinite(points_[j].imag()))
      throw std::invalid_argument("point sequence: non-finite point");
}

RealVector point_norms(const PointSequence& seq) { return seq.points().cwiseAbs(); }

RealVector chord_norms(const PointSequence& seq) {
  const int n = seq.size();
  RealVector out(n);
  for (int j = 0; j < n; ++j) out[j] = std::abs(seq.chord(j));
  return out;
}

PointSequence read_points_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!j.is_array()) throw ParseError(path + ": expected an array of [re, im] pairs");
  ComplexVector pts(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& entry = j[i];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      throw ParseError(path + ": point " + std::to_string(i) + " is not [re, im]");
    pts[static_cast<Eigen::Index>(i)] =
        Complex(entry[0].get<double>(), entry[1].get<double>());
  }
  try {
    return PointSequence(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_points_file(const std::string& path, const PointSequence& seq) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < seq.size(); ++i)
    j.push_back({seq.point(i).real(), seq.point(i).imag()});
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open " + path + " for writing");
  f << j.dump(1) << '\n';
}

}  // namespace cflow
