/**
 * Text serialization of posets.
 *
 * Format (LF line endings, `#` starts a comment anywhere on a line):
 *
 *     poset <n>
 *     cover <i> <j>        # one line per covering pair
 *     label <i> <name>     # optional display names
 *
 * Writing emits the covering relation of the full order, covers sorted
 * lexicographically, so output is byte-stable; reading accepts any
 * relation pairs (redundant ones are absorbed by transitive closure).
 */
#ifndef FINSPACE_IO_HPP
#define FINSPACE_IO_HPP

#include <iosfwd>
#include <string>

#include "finspace/poset.hpp"

namespace finspace {

struct ParseError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

/** Parse one poset from a stream. Throws ParseError on malformed input. */
Poset read_poset(std::istream& in);
Poset read_poset_string(const std::string& text);
Poset read_poset_file(const std::string& path);

void write_poset(std::ostream& out, const Poset& p);
std::string poset_to_string(const Poset& p);
void write_poset_file(const std::string& path, const Poset& p);

}  // namespace finspace

#endif  // FINSPACE_IO_HPP
