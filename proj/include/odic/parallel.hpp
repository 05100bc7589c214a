// Copyright 2026 The ODIC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace odic {

// Worker count from ODIC_THREADS (default 1). It only controls scheduling;
// every caller writes results by index so outputs never depend on it.
int WorkerCount();

// Runs fn(0..n-1) over WorkerCount() threads. If any call throws, the
// exception from the lowest failing index is rethrown after all workers join.
void ParallelFor(size_t n, const std::function<void(size_t)>& fn);

}  // namespace odic
