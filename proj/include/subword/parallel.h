// Copyright 2026 The Subword Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBWORD_PARALLEL_H_
#define SUBWORD_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace subword {

// Worker count: SUBWORD_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t thread_count();

// Runs fn(i) for i in [0, n) over thread_count() workers in contiguous
// blocks. fn must only write state owned by index i, which keeps results
// independent of the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace subword

#endif  // SUBWORD_PARALLEL_H_
