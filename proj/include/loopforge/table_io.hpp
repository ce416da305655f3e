#pragma once

#include <istream>
#include <string>

#include "loopforge/loop_table.hpp"

namespace loopforge {

/// Text format for Cayley tables: `#` starts a comment, blank lines are
/// skipped, the first value is the order n, followed by n*n entries in
/// row-major order using 1-based element labels.  Entries may wrap lines.
LoopTable read_table(std::istream& in);
LoopTable read_table_text(const std::string& text);
LoopTable read_table_file(const std::string& path);

/// Canonical form: one comment-free row per line, 1-based, space separated.
std::string format_table(const LoopTable& L);
void write_table_file(const std::string& path, const LoopTable& L);

}  // namespace loopforge
