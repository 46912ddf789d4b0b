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

#ifndef FAKEPOINT_SYNTH_HPP
#define FAKEPOINT_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fakepoint/data_model.hpp"

namespace fakepoint {

// Knobs for the fake-record generator. Rates are marginal probabilities;
// the coordinate box bounds the region treated as plausible.
struct FakeProfile {
  double x_min = 43.45;
  double x_max = 43.85;
  double y_min = -80.20;
  double y_max = -79.55;
  double out_of_box_rate = 0.55;
  double valid_postal_rate = 0.50;
  double valid_phone_rate = 0.60;
  std::vector<std::string> category_pool;
  std::vector<std::string> name_adjectives;
  std::vector<std::string> name_nouns;
  std::vector<std::string> name_kinds;
  std::vector<std::string> street_names;
  std::vector<std::string> street_types;
  std::vector<std::string> municipality_pool;
  std::vector<std::string> province_pool;
  std::vector<std::string> domain_tlds;

  static FakeProfile defaults();
  static FakeProfile from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  // Throws ValidationError when a rate leaves [0,1] or the box is empty.
  void validate() const;
};

// Exactly n records, all labeled fake, every attribute populated,
// deterministic per (n, profile, seed). Generated ids live in the "F-"
// namespace and never collide within one call.
Dataset generate_fake(std::size_t n, const FakeProfile& profile,
                      std::uint64_t seed);

// Builder for the bundled sample of plausible real records (label 1).
// Mimics the snapshot schema: in-box coordinates, valid contact fields,
// a small number of missing cells and duplicate ids to exercise cleaning.
Dataset generate_real_sample(std::size_t n, const FakeProfile& profile,
                             std::uint64_t seed);

// Concatenates real then fake. Requires clean label sides and both
// nonempty; the result carries merged provenance.
Dataset merge_labeled(const Dataset& real, const Dataset& fake);

}  // namespace fakepoint

#endif  // FAKEPOINT_SYNTH_HPP
