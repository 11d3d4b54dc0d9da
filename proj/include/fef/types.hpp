#pragma once

#include <complex>

#include <Eigen/Dense>

namespace fef {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;

}  // namespace fef
