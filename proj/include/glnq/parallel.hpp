#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include "glnq/error.hpp"

namespace glnq {

// Deterministic reduction over [begin, end): the range is cut into one
// contiguous shard per worker, shard(lo, hi) folds its piece left to right
// and returns a partial result, and partials are merged in shard order.
// With an associative merge the total is independent of the worker count,
// so a run with eight threads is byte-for-byte the run with one.  Each
// shard call owns its piece exclusively and may keep local mutable state
// (lookup tables and the like) without synchronization.
template <class R, class Shard, class Merge>
R sharded_reduce(std::uint64_t begin, std::uint64_t end, int threads, R init, Shard&& shard,
                 Merge&& merge) {
  require(threads >= 1, errc::range_error, "thread count must be positive");
  const std::uint64_t len = end > begin ? end - begin : 0;
  if (len == 0) return init;
  const std::uint64_t nshard = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), len);
  if (nshard == 1) return merge(std::move(init), shard(begin, end));

  std::vector<R> partial(static_cast<std::size_t>(nshard), init);
  std::vector<std::thread> pool;
  for (std::uint64_t s = 0; s < nshard; ++s)
    pool.emplace_back([&, s] {
      std::uint64_t lo = begin + len * s / nshard;
      std::uint64_t hi = begin + len * (s + 1) / nshard;
      partial[static_cast<std::size_t>(s)] = shard(lo, hi);
    });
  for (auto& t : pool) t.join();
  R acc = std::move(init);
  for (std::uint64_t s = 0; s < nshard; ++s)
    acc = merge(std::move(acc), std::move(partial[static_cast<std::size_t>(s)]));
  return acc;
}

}  // namespace glnq
