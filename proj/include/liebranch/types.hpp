#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "liebranch/rational.hpp"

namespace liebranch {

/// Integer Dynkin labels across all factors of a semi-simple algebra.
using Weight = Eigen::VectorXi;
using IntMatrix = Eigen::MatrixXi;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Complex = std::complex<double>;

/// A rational point of the weight space. Character evaluation applies the
/// phase convention exp(-2*pi*i*(weight, point)), so a point representing
/// -2*pi*i*(b+rho)/(k+gv) is stored as the plain rational vector
/// (b+rho)/(k+gv).
using RationalPoint = RatVector;

class error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad user input: unknown algebra, rank mismatch, out-of-range level, ...
class validation_error : public error {
  using error::error;
};

/// A label violates a parity or range selection rule.
class selection_error : public validation_error {
  using validation_error::validation_error;
};

/// A should-be-integer quantity failed its rounding tolerance, or an
/// adaptive scheme did not converge.
class numeric_error : public error {
  using error::error;
};

/// The projection matrix does not describe a subalgebra (detected through
/// negative or non-integral multiplicities).
class embedding_error : public error {
  using error::error;
};

/// A finite window is too small for the requested truncated check.
class window_error : public error {
  using error::error;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(w[i]));
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct WeightEq {
  bool operator()(const Weight& a, const Weight& b) const {
    return a.size() == b.size() && a == b;
  }
};

/// Lexicographic order, shorter vectors first.
struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

inline bool is_dominant(const Weight& w) {
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w[i] < 0) return false;
  return true;
}

inline RatVector to_rational(const Weight& w) { return w.cast<Rational>(); }

std::string format_weight(const Weight& w);

/// Parses a weight literal like "[1,0]"; whitespace around labels allowed.
/// Throws validation_error on malformed input or label-count mismatch.
Weight parse_weight(const std::string& text, Eigen::Index expected_rank);

}  // namespace liebranch
