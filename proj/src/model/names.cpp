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

#include "ventalloc/model/names.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

namespace ventalloc {
namespace {

bool plain_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '.';
}

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

// Splits `head(a,b,c)` into head and its comma-separated arguments.
std::optional<std::pair<std::string_view, std::vector<std::string_view>>> split_call(
    std::string_view name) {
  const auto open = name.find('(');
  if (open == std::string_view::npos || name.empty() || name.back() != ')') return std::nullopt;
  std::vector<std::string_view> args;
  std::string_view inner = name.substr(open + 1, name.size() - open - 2);
  while (true) {
    const auto comma = inner.find(',');
    args.push_back(inner.substr(0, comma));
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  return std::make_pair(name.substr(0, open), std::move(args));
}

std::optional<int> resolve_region(std::string_view token, std::span<const std::string> region_ids) {
  const std::string id = unescape_region(token);
  auto it = std::find(region_ids.begin(), region_ids.end(), id);
  if (it == region_ids.end()) return std::nullopt;
  return static_cast<int>(it - region_ids.begin());
}

std::string region_text(int n, std::span<const std::string> region_ids) {
  if (n >= 0 && n < static_cast<int>(region_ids.size())) return escape_region(region_ids[n]);
  return "r" + std::to_string(n);
}

}  // namespace

std::string escape_region(std::string_view region_id) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (char c : region_id) {
    if (plain_char(c)) {
      out += c;
    } else {
      const auto byte = static_cast<unsigned char>(c);
      out += '~';
      out += kHex[byte >> 4];
      out += kHex[byte & 0xF];
    }
  }
  return out;
}

std::string unescape_region(std::string_view token) {
  std::string out;
  for (std::size_t i = 0; i < token.size(); ++i) {
    if (token[i] == '~' && i + 2 < token.size()) {
      unsigned value = 0;
      std::from_chars(token.data() + i + 1, token.data() + i + 3, value, 16);
      out += static_cast<char>(value);
      i += 2;
    } else {
      out += token[i];
    }
  }
  return out;
}

std::string encode_column_name(const VariableKey& key, std::span<const std::string> region_ids) {
  std::string out(1, kind_letter(key.kind));
  out += '(';
  if (key.region) out += region_text(*key.region, region_ids) + ",";
  out += std::to_string(key.period) + "," + std::to_string(key.scenario) + ")";
  return out;
}

std::string encode_row_name(const RowTag& tag, std::span<const std::string> region_ids) {
  std::string out(row_kind_name(tag.kind));
  out += '(';
  if (tag.region) out += region_text(*tag.region, region_ids) + ",";
  out += std::to_string(tag.period) + "," + std::to_string(tag.scenario) + ")";
  return out;
}

std::optional<VariableKey> decode_column_name(std::string_view name,
                                              std::span<const std::string> region_ids) {
  auto call = split_call(name);
  if (!call || call->first.size() != 1) return std::nullopt;
  auto kind = kind_from_letter(call->first[0]);
  if (!kind) return std::nullopt;
  const auto& args = call->second;
  VariableKey key;
  key.kind = *kind;
  std::size_t next = 0;
  if (*kind != VarKind::kS) {
    if (args.size() != 3) return std::nullopt;
    key.region = resolve_region(args[0], region_ids);
    if (!key.region) return std::nullopt;
    next = 1;
  } else if (args.size() != 2) {
    return std::nullopt;
  }
  auto period = parse_int(args[next]);
  auto scenario = parse_int(args[next + 1]);
  if (!period || !scenario) return std::nullopt;
  key.period = *period;
  key.scenario = *scenario;
  return key;
}

std::optional<RowTag> decode_row_name(std::string_view name,
                                      std::span<const std::string> region_ids) {
  auto call = split_call(name);
  if (!call) return std::nullopt;
  auto kind = row_kind_from_name(call->first);
  if (!kind) return std::nullopt;
  const auto& args = call->second;
  RowTag tag;
  tag.kind = *kind;
  std::size_t next = 0;
  if (args.size() == 3) {
    tag.region = resolve_region(args[0], region_ids);
    if (!tag.region) return std::nullopt;
    next = 1;
  } else if (args.size() != 2) {
    return std::nullopt;
  }
  auto period = parse_int(args[next]);
  auto scenario = parse_int(args[next + 1]);
  if (!period || !scenario) return std::nullopt;
  tag.period = *period;
  tag.scenario = *scenario;
  return tag;
}

}  // namespace ventalloc
