#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sft/pattern_core.hpp"

namespace sft {

// Character range of a construct in the source text, for diagnostics.
struct SourceSpan {
    int line = 1; // 1-based
    int col = 1;  // 1-based
    int length = 0;
};

struct SpecDocument {
    std::string source;
    SftSpec spec;
    std::vector<SourceSpan> forbid_spans; // one per forbid block, source order
};

// Grammar:
//   sft { dim <int> ; alphabet <sym>+ ; (forbid { (<int>,<int>[,<int>]*) = <sym> ( ... )* })* }
// Whitespace-insensitive; the semicolons are optional separators; `#`
// starts a comment running to end of line. Symbols are alphanumeric words;
// `sft`, `dim`, `alphabet` and `forbid` are reserved. Throws ParseError
// with line/column on syntax errors and on semantic ones (unknown symbol,
// coordinate arity mismatches, duplicate cells in one block).
SpecDocument parse_spec(std::string_view source);

// Canonical textual form; parsing it again yields an equal spec.
std::string print_spec(const SftSpec& spec);

} // namespace sft
