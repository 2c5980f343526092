// Copyright 2026 The sentivec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sentivec::io {

/// Reads a whole file; throws Error(module, ...) naming the path on failure.
std::string read_file(const std::string& path, const std::string& module);

/// Offset of the first byte that breaks UTF-8 well-formedness, if any.
std::optional<std::size_t> find_invalid_utf8(std::string_view text) noexcept;

/// Writes through `body` into a temporary sibling file and renames it over
/// `path`, so readers never observe a partial file.
void write_atomic(const std::string& path, const std::function<void(std::ostream&)>& body,
                  const std::string& module);

/// Splits on `sep`, dropping empty fields.
std::vector<std::string_view> split_nonempty(std::string_view text, char sep);

/// Splits into lines; a trailing '\r' is stripped from each.
std::vector<std::string_view> lines(std::string_view text);

std::optional<double> parse_double(std::string_view s) noexcept;
std::optional<std::int64_t> parse_int(std::string_view s) noexcept;

/// Fixed-point with `decimals` digits, locale independent.
void append_fixed(std::string& out, double value, int decimals);
/// Shortest text that round-trips to the same double.
std::string format_shortest(double value);

}  // namespace sentivec::io
