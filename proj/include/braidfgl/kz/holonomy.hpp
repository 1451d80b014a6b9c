#pragma once

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "braidfgl/kz/system.hpp"

namespace braidfgl::kz {

using Configuration = std::vector<std::complex<double>>;

// The default base point (0, 1, ..., n - 1).
Configuration base_configuration(int points);

// A closed path in configuration space, made of smooth pieces that share
// endpoints. Every piece is traversed in unit time; the holonomy does not
// depend on the parametrisation.
class LoopPath {
 public:
  struct Line {
    Configuration from;
    Configuration to;
  };
  // Point `index` (1-based) runs once counter-clockwise around `center`,
  // starting at center + offset; the other points stay at `rest`.
  struct Arc {
    Configuration rest;
    int index = 1;
    std::complex<double> center;
    std::complex<double> offset;
  };
  using Piece = std::variant<Line, Arc>;

  // Lasso from the base point: z_i moves straight towards z_j until it is
  // radius_factor * |z_i - z_j| away, circles z_j once, and comes back.
  // radius_factor == 1 gives the bare circle.
  static LoopPath circle(int points, int i, int j, double radius_factor);
  // z_i runs around a circle of radius radius_factor * (distance to its
  // nearest neighbour) that passes through z_i and lies above it; for
  // radius_factor < 1/2 it encloses no other point.
  static LoopPath offset_circle(int points, int i, double radius_factor);
  // Piecewise-linear loop through the given configurations. Throws
  // DomainError unless the first and last vertices coincide.
  static LoopPath polyline(std::vector<Configuration> vertices);

  // This loop followed by `next`; both must start at the same point.
  LoopPath then(const LoopPath& next) const;

  int points() const { return points_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  Configuration start() const;

 private:
  int points_ = 0;
  std::vector<Piece> pieces_;
};

struct HolonomyOptions {
  bool allow_nonflat = false;
  // Minimum |z_i - z_j| along the path, relative to the largest pairwise
  // distance at the starting point.
  double min_clearance = 1e-6;
};

struct HolonomyResult {
  Eigen::MatrixXcd matrix;
  std::size_t step_count = 0;
  // max |entry| of W(steps) - W(2 * steps).
  double error_estimate = 0.0;
};

// Solves W' = Gamma(z(t))[z'(t)] W, W(0) = I, along the loop with classical
// fixed-step RK4 and returns W(1). `steps` (>= 16) is spread evenly over the
// pieces. Throws DomainError for a non-flat system (unless allowed) or when
// the path comes too close to a diagonal.
HolonomyResult holonomy(const InfinitesimalSystem& sys, const LoopPath& loop, std::size_t steps,
                        const HolonomyOptions& options = {});

}  // namespace braidfgl::kz
