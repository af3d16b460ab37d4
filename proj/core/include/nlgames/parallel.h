// Copyright 2026 The nlgames Authors
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

#ifndef NLGAMES_PARALLEL_H_
#define NLGAMES_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace nlgames {

// Worker count: TOOLKIT_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
std::size_t max_threads();

// Runs body(worker, begin, end) over a contiguous split of [0, count).
// Chunks are fixed by (count, workers), never by timing.
void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body,
                     std::size_t workers = 0);

}  // namespace nlgames

#endif  // NLGAMES_PARALLEL_H_
