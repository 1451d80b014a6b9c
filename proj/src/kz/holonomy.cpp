#include "braidfgl/kz/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "braidfgl/error.hpp"
#include "braidfgl/kz/relations.hpp"

namespace braidfgl::kz {

namespace {

using cd = std::complex<double>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct Sample {
  Configuration z;
  Configuration dz;
};

Sample evaluate(const LoopPath::Piece& piece, double s) {
  return std::visit(
      overloaded{
          [s](const LoopPath::Line& l) {
            Sample out{l.from, Configuration(l.from.size())};
            for (std::size_t k = 0; k < l.from.size(); ++k) {
              out.dz[k] = l.to[k] - l.from[k];
              out.z[k] = l.from[k] + s * out.dz[k];
            }
            return out;
          },
          [s](const LoopPath::Arc& a) {
            Sample out{a.rest, Configuration(a.rest.size(), cd(0.0, 0.0))};
            const cd turn = std::polar(1.0, kTwoPi * s);
            const auto k = static_cast<std::size_t>(a.index - 1);
            out.z[k] = a.center + a.offset * turn;
            out.dz[k] = cd(0.0, kTwoPi) * a.offset * turn;
            return out;
          },
      },
      piece);
}

Configuration piece_start(const LoopPath::Piece& piece) { return evaluate(piece, 0.0).z; }
Configuration piece_end(const LoopPath::Piece& piece) { return evaluate(piece, 1.0).z; }

bool same_configuration(const Configuration& a, const Configuration& b) {
  if (a.size() != b.size()) return false;
  double scale = 1.0;
  for (const auto& v : a) scale = std::max(scale, std::abs(v));
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > 1e-12 * scale) return false;
  }
  return true;
}

void check_index(int points, int i, const char* what) {
  if (i < 1 || i > points) {
    throw DomainError(std::string(what) + " index " + std::to_string(i) + " outside 1.." +
                      std::to_string(points));
  }
}

}  // namespace

Configuration base_configuration(int points) {
  Configuration z(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) z[static_cast<std::size_t>(k)] = cd(k, 0.0);
  return z;
}

LoopPath LoopPath::circle(int points, int i, int j, double radius_factor) {
  check_index(points, i, "moving point");
  check_index(points, j, "centre point");
  if (i == j) throw DomainError("a point cannot circle itself");
  if (!(radius_factor > 0.0)) throw DomainError("radius factor must be positive");
  const Configuration base = base_configuration(points);
  const auto ki = static_cast<std::size_t>(i - 1);
  const cd center = base[static_cast<std::size_t>(j - 1)];
  const cd offset = radius_factor * (base[ki] - center);

  LoopPath loop;
  loop.points_ = points;
  Configuration near = base;
  near[ki] = center + offset;
  const bool lasso = radius_factor != 1.0;
  if (lasso) loop.pieces_.emplace_back(Line{base, near});
  loop.pieces_.emplace_back(Arc{base, i, center, offset});
  if (lasso) loop.pieces_.emplace_back(Line{near, base});
  return loop;
}

LoopPath LoopPath::offset_circle(int points, int i, double radius_factor) {
  check_index(points, i, "moving point");
  if (points < 2) throw DomainError("offset circle needs at least two points");
  if (!(radius_factor > 0.0)) throw DomainError("radius factor must be positive");
  const Configuration base = base_configuration(points);
  const auto ki = static_cast<std::size_t>(i - 1);
  double nearest = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < base.size(); ++k) {
    if (k != ki) nearest = std::min(nearest, std::abs(base[k] - base[ki]));
  }
  const double r = radius_factor * nearest;
  LoopPath loop;
  loop.points_ = points;
  loop.pieces_.emplace_back(Arc{base, i, base[ki] + cd(0.0, r), cd(0.0, -r)});
  return loop;
}

LoopPath LoopPath::polyline(std::vector<Configuration> vertices) {
  if (vertices.size() < 2) throw DomainError("a polyline loop needs at least two vertices");
  const std::size_t n = vertices.front().size();
  for (const auto& v : vertices) {
    if (v.size() != n) throw DomainError("polyline vertices have different numbers of points");
  }
  if (!same_configuration(vertices.front(), vertices.back())) {
    throw DomainError("polyline loop is not closed: first and last vertices differ");
  }
  LoopPath loop;
  loop.points_ = static_cast<int>(n);
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
    loop.pieces_.emplace_back(Line{vertices[k], vertices[k + 1]});
  }
  return loop;
}

LoopPath LoopPath::then(const LoopPath& next) const {
  if (points_ != next.points_) throw DomainError("concatenating loops with different point counts");
  if (!same_configuration(start(), next.start())) {
    throw DomainError("concatenated loops do not share a base point");
  }
  LoopPath out = *this;
  out.pieces_.insert(out.pieces_.end(), next.pieces_.begin(), next.pieces_.end());
  return out;
}

Configuration LoopPath::start() const {
  return pieces_.empty() ? Configuration{} : piece_start(pieces_.front());
}

namespace {

struct PairMatrix {
  std::size_t i;
  std::size_t j;
  Eigen::MatrixXcd a;
};

class Integrator {
 public:
  Integrator(const InfinitesimalSystem& sys, const LoopPath& loop, double clearance)
      : loop_(loop), clearance_(clearance), d_(static_cast<Eigen::Index>(sys.dim())) {
    for (const auto& [pair, m] : sys.matrices()) {
      if (m.is_zero()) continue;
      Eigen::MatrixXcd a(d_, d_);
      for (Eigen::Index r = 0; r < d_; ++r) {
        for (Eigen::Index c = 0; c < d_; ++c) {
          a(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).get_d();
        }
      }
      terms_.push_back({static_cast<std::size_t>(pair.i - 1), static_cast<std::size_t>(pair.j - 1), a});
    }
  }

  Eigen::MatrixXcd run(std::size_t steps_per_piece) const {
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Identity(d_, d_);
    const double h = 1.0 / static_cast<double>(steps_per_piece);
    for (const auto& piece : loop_.pieces()) {
      for (std::size_t step = 0; step < steps_per_piece; ++step) {
        const double s = static_cast<double>(step) * h;
        const Eigen::MatrixXcd m0 = coefficient(piece, s);
        const Eigen::MatrixXcd mh = coefficient(piece, s + 0.5 * h);
        const Eigen::MatrixXcd m1 = coefficient(piece, s + h);
        const Eigen::MatrixXcd k1 = m0 * w;
        const Eigen::MatrixXcd k2 = mh * (w + 0.5 * h * k1);
        const Eigen::MatrixXcd k3 = mh * (w + 0.5 * h * k2);
        const Eigen::MatrixXcd k4 = m1 * (w + h * k3);
        w += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
    }
    return w;
  }

 private:
  // Gamma(z(s))[z'(s)] = sum A_ij (dz_i - dz_j) / (z_i - z_j).
  Eigen::MatrixXcd coefficient(const LoopPath::Piece& piece, double s) const {
    const Sample p = evaluate(piece, s);
    check_clearance(p.z);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d_, d_);
    for (const auto& t : terms_) {
      const cd num = p.dz[t.i] - p.dz[t.j];
      if (num == cd(0.0, 0.0)) continue;
      m += (num / (p.z[t.i] - p.z[t.j])) * t.a;
    }
    return m;
  }

  void check_clearance(const Configuration& z) const {
    for (std::size_t a = 0; a < z.size(); ++a) {
      for (std::size_t b = a + 1; b < z.size(); ++b) {
        if (std::abs(z[a] - z[b]) < clearance_) {
          throw DomainError("loop passes within " + std::to_string(clearance_) +
                            " of the diagonal z_" + std::to_string(a + 1) + " = z_" +
                            std::to_string(b + 1));
        }
      }
    }
  }

  const LoopPath& loop_;
  double clearance_;
  Eigen::Index d_;
  std::vector<PairMatrix> terms_;
};

}  // namespace

HolonomyResult holonomy(const InfinitesimalSystem& sys, const LoopPath& loop, std::size_t steps,
                        const HolonomyOptions& options) {
  if (steps < 16) throw DomainError("holonomy needs at least 16 steps");
  if (loop.points() != sys.points()) {
    throw DomainError("loop moves " + std::to_string(loop.points()) + " points, system has " +
                      std::to_string(sys.points()));
  }
  if (loop.pieces().empty()) throw DomainError("empty loop");
  const auto& pieces_list = loop.pieces();
  for (std::size_t k = 0; k < pieces_list.size(); ++k) {
    const auto& next = pieces_list[(k + 1) % pieces_list.size()];
    if (!same_configuration(piece_end(pieces_list[k]), piece_start(next))) {
      throw DomainError("loop is not closed or has a gap after piece " + std::to_string(k));
    }
  }
  if (!options.allow_nonflat && !curvature_is_zero(sys).flat) {
    throw DomainError("system is not flat; holonomy is path dependent (override with allow_nonflat)");
  }
  const Configuration start = loop.start();
  double scale = 0.0;
  for (std::size_t a = 0; a < start.size(); ++a) {
    for (std::size_t b = a + 1; b < start.size(); ++b) scale = std::max(scale, std::abs(start[a] - start[b]));
  }
  const Integrator integrator(sys, loop, options.min_clearance * std::max(scale, 1e-300));

  const std::size_t pieces = loop.pieces().size();
  const std::size_t per_piece = (steps + pieces - 1) / pieces;
  HolonomyResult result;
  result.matrix = integrator.run(per_piece);
  result.step_count = per_piece * pieces;
  const Eigen::MatrixXcd finer = integrator.run(2 * per_piece);
  result.error_estimate = (result.matrix - finer).cwiseAbs().maxCoeff();
  return result;
}

}  // namespace braidfgl::kz
