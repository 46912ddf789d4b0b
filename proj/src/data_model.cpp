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

#include "fakepoint/data_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "fakepoint/csv.hpp"
#include "fakepoint/errors.hpp"
#include "fakepoint/rng.hpp"

namespace fakepoint {

bool is_known_attribute(const std::string& name) {
  for (const char* a : kAttributeNames) {
    if (name == a) return true;
  }
  return false;
}

std::string PoiRecord::attribute(const std::string& name) const {
  if (name == "LM_ID") return lm_id;
  if (name == "X") return x ? format_double(*x) : std::string();
  if (name == "Y") return y ? format_double(*y) : std::string();
  if (name == "LM_NAME") return lm_name;
  if (name == "CATE") return cate;
  if (name == "STR_ADD") return str_add;
  if (name == "U") return unit;
  if (name == "MUN") return mun;
  if (name == "PR") return pr;
  if (name == "PC") return pc;
  if (name == "PHONE") return phone;
  if (name == "WEBSITE") return website;
  throw ValidationError("unknown attribute: " + name);
}

std::size_t Dataset::count_label(int label) const {
  std::size_t n = 0;
  for (const auto& r : records) n += (r.label == label) ? 1 : 0;
  return n;
}

namespace {

std::optional<double> parse_coordinate(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

void set_attribute(PoiRecord& rec, const std::string& name,
                   const std::string& value) {
  if (name == "LM_ID") rec.lm_id = value;
  else if (name == "X") rec.x = parse_coordinate(value);
  else if (name == "Y") rec.y = parse_coordinate(value);
  else if (name == "LM_NAME") rec.lm_name = value;
  else if (name == "CATE") rec.cate = value;
  else if (name == "STR_ADD") rec.str_add = value;
  else if (name == "U") rec.unit = value;
  else if (name == "MUN") rec.mun = value;
  else if (name == "PR") rec.pr = value;
  else if (name == "PC") rec.pc = value;
  else if (name == "PHONE") rec.phone = value;
  else if (name == "WEBSITE") rec.website = value;
}

}  // namespace

Dataset load_csv(const std::string& path,
                 const std::vector<std::string>& schema, int default_label) {
  std::vector<std::string> required(schema);
  if (required.empty()) {
    required.assign(kAttributeNames.begin(), kAttributeNames.end());
  }
  CsvTable table = read_csv_file(path);
  for (const auto& name : required) {
    if (table.column(name) < 0) {
      throw DataError("missing mandatory column \"" + name + "\" in " + path);
    }
  }

  std::vector<std::pair<std::string, int>> attr_cols;
  for (const char* name : kAttributeNames) {
    int col = table.column(name);
    if (col >= 0) attr_cols.emplace_back(name, col);
  }
  const int label_col = table.column("LABEL");

  Dataset ds;
  ds.provenance = Provenance::Bundled;
  ds.records.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    PoiRecord rec;
    for (const auto& [name, col] : attr_cols) {
      set_attribute(rec, name, row[static_cast<std::size_t>(col)]);
    }
    if (label_col >= 0) {
      const std::string& cell = row[static_cast<std::size_t>(label_col)];
      if (cell == "0") rec.label = kLabelFake;
      else if (cell == "1") rec.label = kLabelReal;
      else
        throw DataError("malformed CSV row " + std::to_string(i + 1) + " in " +
                        path + ": LABEL must be 0 or 1, got \"" + cell + "\"");
    } else {
      rec.label = default_label;
    }
    ds.records.push_back(std::move(rec));
  }
  return ds;
}

void write_csv(const Dataset& ds, const std::string& path, bool include_label) {
  std::vector<std::string> header(kAttributeNames.begin(),
                                  kAttributeNames.end());
  if (include_label) header.push_back("LABEL");
  std::vector<std::vector<std::string>> rows;
  rows.reserve(ds.size());
  for (const auto& rec : ds.records) {
    std::vector<std::string> row;
    row.reserve(header.size());
    for (const char* name : kAttributeNames) row.push_back(rec.attribute(name));
    if (include_label) row.push_back(std::to_string(rec.label));
    rows.push_back(std::move(row));
  }
  write_csv_file(path, header, rows);
}

std::size_t CleaningLog::count(const std::string& action) const {
  std::size_t n = 0;
  for (const auto& a : actions) n += (a.action == action) ? 1 : 0;
  return n;
}

void CleaningLog::append(const CleaningLog& other) {
  actions.insert(actions.end(), other.actions.begin(), other.actions.end());
}

void CleaningLog::write_jsonl(std::ostream& out) const {
  for (const auto& a : actions) {
    nlohmann::ordered_json j;
    j["action"] = a.action;
    j["row"] = a.row;
    j["attribute"] = a.attribute;
    j["detail"] = a.detail;
    out << j.dump() << '\n';
  }
}

void CleaningLog::write_jsonl_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  write_jsonl(out);
}

double median_of(std::vector<double> values) {
  if (values.empty()) throw ValidationError("median of empty range");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

namespace {

// Text attributes subject to sentinel replacement (everything but X/Y).
constexpr std::array<const char*, 10> kTextAttributes = {
    "LM_ID", "LM_NAME", "CATE", "STR_ADD", "U",
    "MUN",   "PR",      "PC",   "PHONE",   "WEBSITE"};

std::string* text_field(PoiRecord& rec, const std::string& name) {
  if (name == "LM_ID") return &rec.lm_id;
  if (name == "LM_NAME") return &rec.lm_name;
  if (name == "CATE") return &rec.cate;
  if (name == "STR_ADD") return &rec.str_add;
  if (name == "U") return &rec.unit;
  if (name == "MUN") return &rec.mun;
  if (name == "PR") return &rec.pr;
  if (name == "PC") return &rec.pc;
  if (name == "PHONE") return &rec.phone;
  if (name == "WEBSITE") return &rec.website;
  return nullptr;
}

bool dedupable_id(const std::string& id) {
  return !id.empty() && id != kMissingSentinel;
}

}  // namespace

CleanResult clean(const Dataset& ds, const CleaningPolicy& policy) {
  CleanResult result;
  result.dataset.provenance = ds.provenance;
  auto& out = result.dataset.records;
  auto& log = result.log.actions;

  std::vector<long> origin_row;  // input row index of each kept record
  std::unordered_map<std::string, std::size_t> first_seen;
  for (std::size_t i = 0; i < ds.records.size(); ++i) {
    const PoiRecord& rec = ds.records[i];
    if (policy.deduplicate && dedupable_id(rec.lm_id)) {
      auto it = first_seen.find(rec.lm_id);
      if (it != first_seen.end()) {
        const PoiRecord& kept = ds.records[it->second];
        log.push_back({"duplicate_removed", static_cast<long>(i), "LM_ID",
                       "duplicate of row " + std::to_string(it->second)});
        if (kept.x != rec.x || kept.y != rec.y) {
          log.push_back({"duplicate_conflict", static_cast<long>(i), "LM_ID",
                         "coordinates differ from kept row " +
                             std::to_string(it->second)});
        }
        continue;
      }
      first_seen.emplace(rec.lm_id, i);
    }
    out.push_back(rec);
    origin_row.push_back(static_cast<long>(i));
  }

  if (policy.replace_missing_text) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (const char* name : kTextAttributes) {
        std::string* field = text_field(out[i], name);
        if (field->empty()) {
          *field = kMissingSentinel;
          log.push_back({"missing_replaced", origin_row[i], name,
                         kMissingSentinel});
        }
      }
    }
  }

  if (policy.impute != CoordinateImputation::Skip) {
    double mx = policy.fixed_x;
    double my = policy.fixed_y;
    bool need_x = false;
    bool need_y = false;
    for (const auto& rec : out) {
      need_x |= !rec.x.has_value();
      need_y |= !rec.y.has_value();
    }
    if (policy.impute == CoordinateImputation::DatasetMedian) {
      std::vector<double> xs, ys;
      for (const auto& rec : out) {
        if (rec.x) xs.push_back(*rec.x);
        if (rec.y) ys.push_back(*rec.y);
      }
      if (need_x && xs.empty()) {
        throw DataError("cannot impute X: no observed values");
      }
      if (need_y && ys.empty()) {
        throw DataError("cannot impute Y: no observed values");
      }
      if (need_x) mx = median_of(xs);
      if (need_y) my = median_of(ys);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!out[i].x) {
        out[i].x = mx;
        log.push_back({"coordinate_imputed", origin_row[i], "X",
                       format_double(mx)});
      }
      if (!out[i].y) {
        out[i].y = my;
        log.push_back({"coordinate_imputed", origin_row[i], "Y",
                       format_double(my)});
      }
    }
  }

  if (out.empty()) throw DataError("dataset empty after cleaning");
  return result;
}

namespace {

// Integer part sizes summing to `total`, each within one of total*ratio.
std::array<std::size_t, 3> apportion(std::size_t total,
                                     const std::array<double, 3>& ratios) {
  std::array<std::size_t, 3> sizes{};
  std::array<double, 3> frac{};
  std::size_t assigned = 0;
  for (int p = 0; p < 3; ++p) {
    double exact = static_cast<double>(total) * ratios[p];
    sizes[p] = static_cast<std::size_t>(std::floor(exact));
    frac[p] = exact - std::floor(exact);
    assigned += sizes[p];
  }
  while (assigned < total) {
    int best = 0;
    for (int p = 1; p < 3; ++p) {
      if (frac[p] > frac[best]) best = p;
    }
    ++sizes[best];
    frac[best] = -1.0;
    ++assigned;
  }
  return sizes;
}

}  // namespace

SplitIndices split_dataset(const Dataset& ds, const SplitRatios& ratios,
                           std::uint64_t seed) {
  const std::size_t n = ds.size();
  if (n < 20) throw ValidationError("split requires at least 20 records");
  const double sum = ratios.train + ratios.validation + ratios.test;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ValidationError("split ratios must sum to 1");
  }

  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < n; ++i) {
    int label = ds.records[i].label;
    by_class[static_cast<std::size_t>(label)].push_back(i);
  }
  if (by_class[0].empty() || by_class[1].empty()) {
    throw ValidationError("split requires both labels present");
  }
  for (int c = 0; c < 2; ++c) {
    if (by_class[c].size() < 3) {
      throw ValidationError("label class " + std::to_string(c) +
                            " too small to stratify");
    }
    Rng rng(mix_seed({seed, kStreamSplit, static_cast<std::uint64_t>(c)}));
    rng.shuffle(by_class[c]);
  }

  const std::array<double, 3> r = {ratios.train, ratios.validation,
                                   ratios.test};
  const auto desired = apportion(n, r);

  // Per-class apportionment, then a fix-up pass so the overall part sizes
  // hit the desired totals exactly.
  std::array<std::array<std::size_t, 3>, 2> cell{};
  for (int c = 0; c < 2; ++c) cell[c] = apportion(by_class[c].size(), r);

  auto column = [&cell](int p) { return cell[0][p] + cell[1][p]; };
  for (int guard = 0; guard < 16; ++guard) {
    int over = -1, under = -1;
    for (int p = 0; p < 3; ++p) {
      if (column(p) > desired[p]) over = p;
      if (column(p) < desired[p]) under = p;
    }
    if (over < 0 || under < 0) break;
    // Move one record of the class that currently overshoots its own
    // proportional share of the `over` part the most.
    double best_excess = -1e18;
    int best_class = 0;
    for (int c = 0; c < 2; ++c) {
      if (cell[c][over] == 0) continue;
      double share = static_cast<double>(by_class[c].size()) * r[over];
      double excess = static_cast<double>(cell[c][over]) - share;
      if (excess > best_excess) {
        best_excess = excess;
        best_class = c;
      }
    }
    --cell[best_class][over];
    ++cell[best_class][under];
  }

  SplitIndices out;
  for (int c = 0; c < 2; ++c) {
    const auto& pool = by_class[c];
    std::size_t pos = 0;
    for (std::size_t i = 0; i < cell[c][0]; ++i) out.train.push_back(pool[pos++]);
    for (std::size_t i = 0; i < cell[c][1]; ++i) {
      out.validation.push_back(pool[pos++]);
    }
    while (pos < pool.size()) out.test.push_back(pool[pos++]);
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.validation.begin(), out.validation.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

FoldAssignment kfold(const Dataset& ds, int k, std::uint64_t seed) {
  const std::size_t n = ds.size();
  if (k < 2) throw ValidationError("kfold requires k >= 2");
  if (n < static_cast<std::size_t>(k)) {
    throw ValidationError("kfold requires at least k records");
  }

  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < n; ++i) {
    by_class[static_cast<std::size_t>(ds.records[i].label)].push_back(i);
  }
  if (by_class[0].empty() || by_class[1].empty()) {
    throw ValidationError("kfold requires both labels present");
  }
  for (int c = 0; c < 2; ++c) {
    if (by_class[c].size() < static_cast<std::size_t>(k)) {
      throw ValidationError("label class " + std::to_string(c) +
                            " smaller than fold count");
    }
  }

  FoldAssignment out;
  out.k = k;
  out.fold_of.assign(n, 0);
  // Round-robin dealing per class; the starting fold rotates between
  // classes so overall fold sizes differ by at most one.
  std::size_t offset = 0;
  for (int c = 0; c < 2; ++c) {
    auto& pool = by_class[c];
    Rng rng(mix_seed({seed, kStreamFold, static_cast<std::uint64_t>(c)}));
    rng.shuffle(pool);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      out.fold_of[pool[i]] = static_cast<int>((offset + i) % k);
    }
    offset = (offset + pool.size()) % k;
  }
  return out;
}

}  // namespace fakepoint
