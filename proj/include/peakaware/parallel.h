/*
Copyright 2026 The peakaware Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// A minimal fork-join helper for independent jobs.

#ifndef PEAKAWARE_PARALLEL_H_
#define PEAKAWARE_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace peakaware {

// Runs fn(0..count-1) on up to `threads` workers (0: hardware concurrency).
// Jobs are handed out in index order. The first exception thrown by any call
// is rethrown once all workers have stopped.
void ParallelFor(std::size_t count, int threads,
                 const std::function<void(std::size_t)>& fn);

}  // namespace peakaware

#endif  // PEAKAWARE_PARALLEL_H_
