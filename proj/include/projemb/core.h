#pragma once
#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace projemb {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;

inline constexpr double bohr_per_angstrom = 1.0 / 0.52917721092;

// Error kinds map one-to-one onto CLI exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const { return 1; }
};

/// Malformed input or an invalid request (bad geometry, bad config,
/// unsupported element, improper active set).
class InputError : public Error {
public:
  using Error::Error;
  int exit_code() const override { return 2; }
};

/// An iterative procedure did not reach its stated tolerance.
class ConvergenceError : public Error {
public:
  using Error::Error;
  int exit_code() const override { return 3; }
};

/// The active/environment split broke down: ambiguous partition, empty
/// active set, or environment orbitals leaking into the embedded solution.
class ProjectionError : public Error {
public:
  using Error::Error;
  int exit_code() const override { return 4; }
};

} // namespace projemb
