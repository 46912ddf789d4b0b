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

#ifndef FAKEPOINT_CSV_HPP
#define FAKEPOINT_CSV_HPP

#include <string>
#include <vector>

namespace fakepoint {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Column index by header name, -1 when absent.
  int column(const std::string& name) const;
};

// RFC-4180 style reader: quoted fields, escaped quotes, newlines in quotes.
// Throws DataError for a missing file or a row whose field count does not
// match the header (the message carries the 1-based data row number).
CsvTable read_csv_file(const std::string& path);

// Minimal quoting: fields are quoted only when they contain , " or newline.
void write_csv_file(const std::string& path,
                    const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows);

std::string csv_escape(const std::string& field);

// Shortest decimal form that round-trips the exact double value.
std::string format_double(double v);

}  // namespace fakepoint

#endif  // FAKEPOINT_CSV_HPP
