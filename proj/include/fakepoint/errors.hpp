/**
 * Copyright 2026 FakePoint Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#ifndef FAKEPOINT_ERRORS_HPP
#define FAKEPOINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fakepoint {

// CLI exit codes: 0 success, 1 validation, 2 input data, 3 divergence.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct TrainingDivergence : std::runtime_error {
  TrainingDivergence(const std::string& msg, std::size_t epoch)
      : std::runtime_error(msg), epoch(epoch) {}
  std::size_t epoch;
};

}  // namespace fakepoint

#endif  // FAKEPOINT_ERRORS_HPP
