// Copyright 2026 The Ventalloc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "ventalloc/model/directory.hpp"
#include "ventalloc/model/milp_model.hpp"

namespace ventalloc {

// Column and row names are single tokens valid in both LP and MPS files:
// `x(NY,5,3)` is x for region "NY", period 5, scenario 3 and `s(5,3)` is the
// central inventory. Region ids are escaped so that characters outside
// [A-Za-z0-9_.] become `~XX` (two hex digits).
std::string escape_region(std::string_view region_id);
std::string unescape_region(std::string_view token);

// `region_ids[n]` supplies the region text for key.region == n.
std::string encode_column_name(const VariableKey& key, std::span<const std::string> region_ids);
std::string encode_row_name(const RowTag& tag, std::span<const std::string> region_ids);

// Inverse of encode_column_name; region ids are resolved against
// `region_ids`. Returns nullopt for tokens that are not variable names.
std::optional<VariableKey> decode_column_name(std::string_view name,
                                              std::span<const std::string> region_ids);
std::optional<RowTag> decode_row_name(std::string_view name,
                                      std::span<const std::string> region_ids);

}  // namespace ventalloc
