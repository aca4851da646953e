// Copyright 2026 The discourse-lens Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISCOURSE_LENS_PARALLEL_H_
#define DISCOURSE_LENS_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace discourse_lens {

struct Parallelism {
  unsigned threads = 1;
};

// Splits [0, n) into at most `threads` contiguous chunks, runs
// `map(begin, end)` for each chunk on its own thread and folds the partial
// results in chunk order with `merge(acc, std::move(part))`. With commutative
// merges (count addition) the result does not depend on the thread count.
template <typename Result, typename MapFn, typename MergeFn>
Result map_reduce(std::size_t n, Parallelism parallelism, MapFn map, MergeFn merge) {
  const std::size_t chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(parallelism.threads, n));
  if (chunks == 1) return map(std::size_t{0}, n);

  std::vector<Result> partial(chunks);
  std::vector<std::exception_ptr> failures(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      const std::size_t begin = n * c / chunks;
      const std::size_t end = n * (c + 1) / chunks;
      workers.emplace_back([&, c, begin, end] {
        try {
          partial[c] = map(begin, end);
        } catch (...) {
          failures[c] = std::current_exception();
        }
      });
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  Result acc = std::move(partial[0]);
  for (std::size_t c = 1; c < chunks; ++c) merge(acc, std::move(partial[c]));
  return acc;
}

// Runs independent tasks on up to `threads` workers; results keep task order.
template <typename Result, typename Task>
std::vector<Result> run_tasks(const std::vector<Task>& tasks, Parallelism parallelism) {
  return map_reduce<std::vector<Result>>(
      tasks.size(), parallelism,
      [&](std::size_t begin, std::size_t end) {
        std::vector<Result> out;
        out.reserve(end - begin);
        for (std::size_t i = begin; i < end; ++i) out.push_back(tasks[i]());
        return out;
      },
      [](std::vector<Result>& acc, std::vector<Result>&& part) {
        for (auto& r : part) acc.push_back(std::move(r));
      });
}

}  // namespace discourse_lens

#endif  // DISCOURSE_LENS_PARALLEL_H_
