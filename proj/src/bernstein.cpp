#include "bezinv/bernstein.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

namespace bezinv {

namespace {

struct BinomialCache {
  std::shared_mutex mutex;
  // deque: growth never moves existing rows, so handed-out spans stay valid.
  std::deque<std::vector<Integer>> rows;
};

BinomialCache& cache() {
  static BinomialCache c;
  return c;
}

}  // namespace

std::span<const Integer> binomial_row(int n) {
  if (n < 0) throw DegreeMismatchError("negative binomial order");
  auto& c = cache();
  {
    std::shared_lock lock(c.mutex);
    if (static_cast<std::size_t>(n) < c.rows.size()) return c.rows[n];
  }
  std::unique_lock lock(c.mutex);
  if (c.rows.empty()) c.rows.push_back({Integer(1)});
  while (c.rows.size() <= static_cast<std::size_t>(n)) {
    const auto& prev = c.rows.back();
    std::vector<Integer> next(prev.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t k = 1; k + 1 < next.size(); ++k) next[k] = prev[k - 1] + prev[k];
    c.rows.push_back(std::move(next));
  }
  return c.rows[n];
}

}  // namespace bezinv
