#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cmfield {

/// out[i] = fn(in[i]) on up to `threads` workers. Output order follows input
/// order; the first exception (by index) is rethrown after all workers join.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& in, Fn fn, unsigned threads = 1) {
  using Out = decltype(fn(in.front()));
  std::vector<Out> out(in.size());
  std::vector<std::exception_ptr> errors(in.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < in.size();) {
      try {
        out[i] = fn(in[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(in.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace cmfield
