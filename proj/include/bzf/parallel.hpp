#ifndef BZF_PARALLEL_HPP_
#define BZF_PARALLEL_HPP_

#include <algorithm>  // for min
#include <cstddef>    // for size_t
#include <exception>  // for exception_ptr, rethrow_exception
#include <thread>     // for jthread
#include <vector>     // for vector

namespace bzf::detail {

  // Splits [0, count) into `threads` contiguous ranges, in order, and calls
  // fn(chunk, begin, end) for each on its own thread. The first exception
  // (by chunk) is rethrown after all workers have finished.
  template <typename Fn>
  void for_each_chunk(std::size_t count, unsigned threads, Fn&& fn) {
    std::size_t const workers
        = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
    if (workers == 1) {
      fn(std::size_t{0}, std::size_t{0}, count);
      return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        std::size_t const begin = count * w / workers;
        std::size_t const end   = count * (w + 1) / workers;
        pool.emplace_back([&fn, &errors, w, begin, end] {
          try {
            fn(w, begin, end);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

}  // namespace bzf::detail

#endif  // BZF_PARALLEL_HPP_
