#include "braidfgl/kz/system.hpp"

#include <stdexcept>
#include <string>

#include "braidfgl/error.hpp"

namespace braidfgl::kz {

InfinitesimalSystem::InfinitesimalSystem(int points, std::size_t dim,
                                         std::map<PairIndex, RationalMatrix> matrices)
    : points_(points), dim_(dim), matrices_(std::move(matrices)) {
  if (points_ < 2) throw std::invalid_argument("an infinitesimal system needs n >= 2 points");
  if (dim_ < 1) throw std::invalid_argument("an infinitesimal system needs dimension >= 1");
  const auto pairs = all_pairs(points_);
  if (matrices_.size() != pairs.size()) {
    throw std::invalid_argument("expected " + std::to_string(pairs.size()) + " matrices, got " +
                                std::to_string(matrices_.size()));
  }
  for (const auto& p : pairs) {
    auto it = matrices_.find(p);
    if (it == matrices_.end()) {
      throw std::invalid_argument("missing A_" + std::to_string(p.i) + "," + std::to_string(p.j));
    }
    if (it->second.rows() != dim_ || it->second.cols() != dim_) {
      throw std::invalid_argument("A_" + std::to_string(p.i) + "," + std::to_string(p.j) +
                                  " is not " + std::to_string(dim_) + "x" + std::to_string(dim_));
    }
  }
}

std::vector<PairIndex> all_pairs(int points) {
  std::vector<PairIndex> pairs;
  for (int i = 1; i <= points; ++i) {
    for (int j = i + 1; j <= points; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

InfinitesimalSystem scalar_system(int points, const std::map<PairIndex, Rational>& lambdas) {
  std::map<PairIndex, RationalMatrix> m;
  for (const auto& [pair, value] : lambdas) m.emplace(pair, RationalMatrix::scalar(1, value));
  return InfinitesimalSystem(points, 1, std::move(m));
}

InfinitesimalSystem transposition_system(int points, std::size_t dim, std::size_t max_total_dim) {
  if (points < 2 || dim < 1) throw std::invalid_argument("transposition_system needs n >= 2, d >= 1");
  std::size_t total = 1;
  for (int k = 0; k < points; ++k) {
    total *= dim;
    if (total > max_total_dim) {
      throw LimitError("tensor power dimension " + std::to_string(dim) + "^" +
                       std::to_string(points) + " exceeds the limit " +
                       std::to_string(max_total_dim));
    }
  }
  // stride[k] is the weight of tensor factor k+1 in the flat basis index.
  std::vector<std::size_t> stride(static_cast<std::size_t>(points));
  for (std::size_t k = stride.size(), s = 1; k-- > 0; s *= dim) stride[k] = s;

  std::map<PairIndex, RationalMatrix> m;
  for (const auto& p : all_pairs(points)) {
    RationalMatrix swap(total, total);
    const std::size_t si = stride[static_cast<std::size_t>(p.i - 1)];
    const std::size_t sj = stride[static_cast<std::size_t>(p.j - 1)];
    for (std::size_t col = 0; col < total; ++col) {
      const std::size_t a = (col / si) % dim;
      const std::size_t b = (col / sj) % dim;
      const std::size_t row = col - a * si - b * sj + b * si + a * sj;
      swap(row, col) = 1;
    }
    m.emplace(p, std::move(swap));
  }
  return InfinitesimalSystem(points, total, std::move(m));
}

InfinitesimalSystem conjugate(const InfinitesimalSystem& sys, const RationalMatrix& g) {
  const RationalMatrix g_inv = g.inverse();
  std::map<PairIndex, RationalMatrix> m;
  for (const auto& [pair, a] : sys.matrices()) m.emplace(pair, g * a * g_inv);
  return InfinitesimalSystem(sys.points(), sys.dim(), std::move(m));
}

InfinitesimalSystem perturb_entry(const InfinitesimalSystem& sys, PairIndex pair, std::size_t row,
                                  std::size_t col, const Rational& delta) {
  auto m = sys.matrices();
  auto it = m.find(pair);
  if (it == m.end() || row >= sys.dim() || col >= sys.dim()) {
    throw std::out_of_range("perturbation outside the system");
  }
  it->second(row, col) += delta;
  return InfinitesimalSystem(sys.points(), sys.dim(), std::move(m));
}

}  // namespace braidfgl::kz
