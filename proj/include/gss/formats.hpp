#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gss/schemes.hpp"

namespace gss {

/// GSF/1 graph file:
///   line 1: "GSF 1 <n> <k>"
///   line 2: structure bits, ASCII 0/1, length n(n-1)/2 (empty for n = 1)
///   line 3: n space-separated color digits (present only when k > 1)
/// Newline-terminated lines, no trailing whitespace. parse and render are
/// exact inverses on canonical files.
std::string render_gsf(const ColoredGraph& cg);
ColoredGraph parse_gsf(std::string_view text);

/// GSH/1 share file: "key=value" lines in a fixed key order. Unknown keys
/// are rejected. Shamir payloads are lowercase hex, 16 chars per block;
/// kgh payloads are space-separated decimal digits.
std::string render_gsh(const Share& share);
Share parse_gsh(std::string_view text);

ColoredGraph read_gsf_file(const std::filesystem::path& path);
Share read_gsh_file(const std::filesystem::path& path);

/// Write-temp-then-rename so a crashed run never leaves a half-written file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace gss
