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

#ifndef FAKEPOINT_TEXT_CHECKS_HPP
#define FAKEPOINT_TEXT_CHECKS_HPP

#include <string>

namespace fakepoint {

// Canadian postal format: letter digit letter, space, digit letter digit.
bool is_valid_postal_code(const std::string& s);

// Ten digits after stripping separators, or eleven with a leading 1.
bool is_valid_phone(const std::string& s);

// Optional http(s) scheme, dotted host of [a-z0-9-] labels, optional path.
bool is_valid_website(const std::string& s);

std::string to_lower(const std::string& s);

}  // namespace fakepoint

#endif  // FAKEPOINT_TEXT_CHECKS_HPP
