#include "hypermap/angular_objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "hypermap/geometry.hpp"
#include "hypermap/parallel.hpp"

namespace hypermap {
namespace {

constexpr std::int64_t kTopBlock = 64;
constexpr std::int64_t kLeafBlock = 8;
constexpr std::int64_t kFanout = 4;

struct Block {
  double bound;
  std::int64_t lo;
  std::int64_t hi;  // exclusive
};

struct BlockOrder {
  bool operator()(const Block& a, const Block& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.lo > b.lo;
  }
};

// Bounds and point values come from different summation orders under
// fast-math; the slack absorbs that rounding and nothing else.
double prune_slack(double best) { return 1e-8 * (1.0 + std::fabs(best)); }

double block_bound(const AngularObjective& f, std::int64_t lo, std::int64_t hi, std::int64_t n) {
  const double a = grid_angle(lo, n);
  const double b = grid_angle(hi - 1, n);
  return f.upper_bound(0.5 * (a + b), 0.5 * (b - a));
}

void consider(GridMaximum& best, std::int64_t k, double v) {
  if (v > best.value || (v == best.value && k < best.index)) {
    best.value = v;
    best.index = k;
  }
}

}  // namespace

void AngularObjective::clear() {
  theta_.clear();
  base_.clear();
  scale_.clear();
  offset_.clear();
  sign_.clear();
}

void AngularObjective::reserve(std::size_t n) {
  theta_.reserve(n);
  base_.reserve(n);
  scale_.reserve(n);
  offset_.reserve(n);
  sign_.reserve(n);
}

void AngularObjective::add(double theta, double base, double scale, double offset, bool linked) {
  theta_.push_back(theta);
  base_.push_back(base);
  scale_.push_back(scale);
  offset_.push_back(offset);
  sign_.push_back(linked ? 1.0 : -1.0);
}

double grid_angle(std::int64_t k, std::int64_t n) {
  return kTwoPi * static_cast<double>(k) / static_cast<double>(n);
}

GridMaximum maximize_on_grid(const AngularObjective& f, std::int64_t n, GridSearch search, int threads) {
  GridMaximum best;
  best.value = -std::numeric_limits<double>::infinity();
  best.index = n;
  if (n <= 0) return best;

  if (search == GridSearch::kExhaustive || n <= kTopBlock) {
    std::vector<double> values(static_cast<std::size_t>(n));
    parallel_for(values.size(), threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t k = lo; k < hi; ++k) {
        values[k] = f.value(grid_angle(static_cast<std::int64_t>(k), n));
      }
    });
    for (std::int64_t k = 0; k < n; ++k) consider(best, k, values[static_cast<std::size_t>(k)]);
    best.theta = grid_angle(best.index, n);
    best.evaluations = n;
    return best;
  }

  const std::int64_t blocks = (n + kTopBlock - 1) / kTopBlock;
  std::vector<Block> top(static_cast<std::size_t>(blocks));
  parallel_for(top.size(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t b = lo; b < hi; ++b) {
      const std::int64_t a = static_cast<std::int64_t>(b) * kTopBlock;
      const std::int64_t e = std::min(n, a + kTopBlock);
      top[b] = {block_bound(f, a, e, n), a, e};
    }
  });
  std::int64_t evaluations = blocks;
  std::priority_queue<Block, std::vector<Block>, BlockOrder> queue(BlockOrder{}, std::move(top));

  while (!queue.empty()) {
    const Block blk = queue.top();
    queue.pop();
    if (blk.bound < best.value - prune_slack(best.value)) break;
    const std::int64_t size = blk.hi - blk.lo;
    if (size <= kLeafBlock) {
      for (std::int64_t k = blk.lo; k < blk.hi; ++k) consider(best, k, f.value(grid_angle(k, n)));
      evaluations += size;
      continue;
    }
    const std::int64_t step = (size + kFanout - 1) / kFanout;
    for (std::int64_t a = blk.lo; a < blk.hi; a += step) {
      const std::int64_t e = std::min(blk.hi, a + step);
      const double bound = block_bound(f, a, e, n);
      ++evaluations;
      if (bound >= best.value - prune_slack(best.value)) queue.push({bound, a, e});
    }
  }
  best.theta = grid_angle(best.index, n);
  best.evaluations = evaluations;
  return best;
}

}  // namespace hypermap
