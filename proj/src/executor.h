// Copyright 2026 The fairdist Authors
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

#ifndef FAIRDIST_EXECUTOR_H_
#define FAIRDIST_EXECUTOR_H_

#include <cstddef>
#include <functional>

namespace fairdist {

// Fixed-width fork/join runner. ParallelFor hands out task indices
// dynamically; callers write per-index results and merge them in index order,
// so output never depends on the worker count.
class Executor {
 public:
  // 0 selects std::thread::hardware_concurrency().
  explicit Executor(unsigned threads = 1);

  unsigned threads() const { return threads_; }

  // Runs task(i) for every i in [0, count). The first exception thrown by a
  // task is rethrown on the calling thread after all workers stop.
  void ParallelFor(std::size_t count,
                   const std::function<void(std::size_t)>& task) const;

  static const Executor& Serial();

 private:
  unsigned threads_;
};

}  // namespace fairdist

#endif  // FAIRDIST_EXECUTOR_H_
