#include "jchroma/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace jchroma {

int default_thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

void parallel_chunks(std::uint64_t total, int threads,
                     const std::function<void(std::uint64_t, std::uint64_t,
                                              int)>& body) {
  if (total == 0) return;
  std::uint64_t workers =
      std::min<std::uint64_t>(std::max(threads, 1), total);
  if (workers == 1) {
    body(0, total, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::uint64_t chunk = total / workers;
  std::uint64_t extra = total % workers;
  std::uint64_t begin = 0;
  for (std::uint64_t w = 0; w < workers; ++w) {
    std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
    pool.emplace_back(body, begin, end, static_cast<int>(w));
    begin = end;
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace jchroma
