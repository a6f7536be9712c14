// Copyright 2026 The gbit Authors
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

#include "gbit/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gbit {

int worker_count_from_env() {
    if (const char* env = std::getenv("GBIT_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
            // fall through to the hardware default
        }
    }
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

}  // namespace gbit
