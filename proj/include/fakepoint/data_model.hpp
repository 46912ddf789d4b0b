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

#ifndef FAKEPOINT_DATA_MODEL_HPP
#define FAKEPOINT_DATA_MODEL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fakepoint {

inline constexpr int kLabelFake = 0;
inline constexpr int kLabelReal = 1;
inline constexpr const char* kMissingSentinel = "<MISSING>";

// Column order of the POI snapshot CSV schema (LABEL is appended last).
inline constexpr std::array<const char*, 12> kAttributeNames = {
    "LM_ID", "X",   "Y",  "LM_NAME", "CATE",  "STR_ADD",
    "U",     "MUN", "PR", "PC",      "PHONE", "WEBSITE"};

bool is_known_attribute(const std::string& name);

// One landmark row. Coordinates are optional until cleaning has imputed
// them; every text field uses "" for absent input and kMissingSentinel
// after cleaning.
struct PoiRecord {
  std::string lm_id;
  std::optional<double> x;
  std::optional<double> y;
  std::string lm_name;
  std::string cate;
  std::string str_add;
  std::string unit;
  std::string mun;
  std::string pr;
  std::string pc;
  std::string phone;
  std::string website;
  int label = kLabelReal;

  std::string attribute(const std::string& name) const;
};

enum class Provenance { Bundled, Generated, Merged };

struct Dataset {
  std::vector<PoiRecord> records;
  Provenance provenance = Provenance::Bundled;

  std::size_t size() const { return records.size(); }
  std::size_t count_label(int label) const;
};

// Loads a snapshot CSV. `schema` lists the attribute columns that must be
// present (defaults to all twelve). A LABEL column is honored when present;
// otherwise `default_label` is assigned. Unparseable coordinates load as
// missing rather than failing the row.
Dataset load_csv(const std::string& path,
                 const std::vector<std::string>& schema = {},
                 int default_label = kLabelReal);

void write_csv(const Dataset& ds, const std::string& path,
               bool include_label = true);

struct CleaningAction {
  std::string action;
  long row = -1;  // index into the input dataset, -1 for dataset-wide actions
  std::string attribute;
  std::string detail;
};

struct CleaningLog {
  std::vector<CleaningAction> actions;

  std::size_t count(const std::string& action) const;
  void append(const CleaningLog& other);
  // One JSON object per line: {action, row, attribute, detail}.
  void write_jsonl(std::ostream& out) const;
  void write_jsonl_file(const std::string& path) const;
};

enum class CoordinateImputation { DatasetMedian, FixedValue, Skip };

struct CleaningPolicy {
  bool deduplicate = true;
  bool replace_missing_text = true;
  CoordinateImputation impute = CoordinateImputation::DatasetMedian;
  double fixed_x = 0.0;
  double fixed_y = 0.0;
};

struct CleanResult {
  Dataset dataset;
  CleaningLog log;
};

// Dedup on lm_id (first kept, conflicts logged), sentinel insertion for
// missing text, coordinate imputation per policy. Idempotent.
CleanResult clean(const Dataset& ds, const CleaningPolicy& policy = {});

// Median of the non-missing values; even counts average the two middles.
double median_of(std::vector<double> values);

struct SplitRatios {
  double train = 0.70;
  double validation = 0.15;
  double test = 0.15;
};

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> validation;
  std::vector<std::size_t> test;
};

// Stratified 70/15/15 split; deterministic per seed. Parts partition the
// index range, sizes land within one record of the exact ratios, and each
// part's label mix stays within two points of the whole.
SplitIndices split_dataset(const Dataset& ds, const SplitRatios& ratios,
                           std::uint64_t seed);

struct FoldAssignment {
  std::vector<int> fold_of;
  int k = 0;
};

// Stratified k-fold assignment; fold sizes differ by at most one.
FoldAssignment kfold(const Dataset& ds, int k, std::uint64_t seed);

}  // namespace fakepoint

#endif  // FAKEPOINT_DATA_MODEL_HPP
