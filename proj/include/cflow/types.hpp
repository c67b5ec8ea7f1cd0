#pragma once

#include <complex>

#include <Eigen/Dense>

namespace cflow {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

}  // namespace cflow
