#include "relmap/core.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace relmap {

void parallel_rows(Index rows, int threads, const std::function<void(Index, Index)>& body) {
  if (threads <= 1 || rows <= 1) {
    body(0, rows);
    return;
  }
  const Index n = std::min<Index>(threads, rows);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(n));
  const Index chunk = (rows + n - 1) / n;
  for (Index i = 0; i < n; ++i) {
    const Index begin = i * chunk;
    const Index end = std::min(rows, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace relmap
