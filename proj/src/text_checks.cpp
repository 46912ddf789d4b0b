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

#include "fakepoint/text_checks.hpp"

#include <cctype>

namespace fakepoint {

namespace {
bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_host_char(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'z') || c == '-';
}
}  // namespace

std::string to_lower(const std::string& s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_valid_postal_code(const std::string& s) {
  if (s.size() != 7) return false;
  return is_letter(s[0]) && is_digit(s[1]) && is_letter(s[2]) && s[3] == ' ' &&
         is_digit(s[4]) && is_letter(s[5]) && is_digit(s[6]);
}

bool is_valid_phone(const std::string& s) {
  std::string digits;
  for (char c : s) {
    if (is_digit(c)) {
      digits.push_back(c);
    } else if (c != ' ' && c != '-' && c != '(' && c != ')' && c != '.' &&
               c != '+') {
      return false;
    }
  }
  if (digits.size() == 10) return true;
  return digits.size() == 11 && digits[0] == '1';
}

bool is_valid_website(const std::string& s) {
  std::string t = to_lower(s);
  if (t.empty()) return false;
  std::size_t pos = 0;
  if (t.rfind("http://", 0) == 0) pos = 7;
  else if (t.rfind("https://", 0) == 0) pos = 8;

  std::size_t host_end = t.find('/', pos);
  std::string host = t.substr(pos, host_end == std::string::npos
                                       ? std::string::npos
                                       : host_end - pos);
  if (host.empty()) return false;

  // Dotted labels, each nonempty, no leading/trailing '-'.
  std::size_t dots = 0;
  std::size_t label_start = 0;
  for (std::size_t i = 0; i <= host.size(); ++i) {
    if (i == host.size() || host[i] == '.') {
      if (i == label_start) return false;
      if (host[label_start] == '-' || host[i - 1] == '-') return false;
      if (i < host.size()) ++dots;
      label_start = i + 1;
    } else if (!is_host_char(host[i])) {
      return false;
    }
  }
  if (dots < 1) return false;

  if (host_end != std::string::npos) {
    for (std::size_t i = host_end; i < t.size(); ++i) {
      if (t[i] == ' ') return false;
    }
  }
  return true;
}

}  // namespace fakepoint
