#pragma once

#include <iosfwd>
#include <string>

#include "recolor/kernel.hpp"

namespace recolor {
namespace io {

// Coloring file: `v: c` lines, '#' comments.
Coloring parse_coloring(std::istream& in, int universe);
Coloring parse_coloring_text(const std::string& text, int universe);
std::string serialize_coloring(const Coloring& phi);

// Sequence file: `v -> c` lines, '#' comments.  Lines starting with "plan"
// (the plan-file header) are skipped so plan files verify directly.
Sequence parse_sequence(std::istream& in);
Sequence parse_sequence_text(const std::string& text);
std::string serialize_sequence(const Sequence& s);

// Lists file: `v: c1 c2 ...` lines.
ListAssignment parse_lists(std::istream& in, int universe);
ListAssignment parse_lists_text(const std::string& text, int universe);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace io
}  // namespace recolor
