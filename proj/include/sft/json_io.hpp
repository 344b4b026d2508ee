#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "sft/block_graph.hpp"
#include "sft/matrix_engine.hpp"
#include "sft/strip_engine.hpp"
#include "sft/torus_oracle.hpp"

namespace sft {

// Ordered maps keep every serialization bit-identical across runs.
using Json = nlohmann::ordered_json;

// Rows top-down (row 0 is the topmost, y = height - 1), each row an array
// of symbol names left to right. 2-d grids only.
Json grid_rows(const Grid& g, const Alphabet& a);
Grid grid_from_rows(const Json& rows, const Alphabet& a);

Json to_json(const SftSpec& spec);
SftSpec spec_from_json(const Json& j);

// {height, period, rows}
Json to_json(const PeriodicStrip& s, const Alphabet& a);

// {type, pruned, dimension, strips, rows (bit strings), phases}
Json to_json(const StripMatrix& m, const Alphabet& a);

// {type, dimension, pairs, rows (bit strings)}
Json to_json(const HMatrix& m, const Alphabet& a);

// {type, alphabet, periods, cells, verified} + human-readable rows at d=2
Json to_json(const PeriodicPoint& p, const Alphabet& a);
// Reads back what to_json emits; also recovers the alphabet.
std::pair<PeriodicPoint, Alphabet> point_from_json(const Json& j);

// {type, status, witness_n, certificate, budgets, diagnostic, timings};
// timings is null here — drivers that measure may fill it in afterwards.
Json to_json(const AnalysisReport& r, const Alphabet& a);

std::string to_dot(const StripMatrix& m);
std::string to_dot(const HMatrix& m);

// One display character per symbol: first character of the name, collisions
// replaced by index digits.
std::vector<char> symbol_chars(const Alphabet& a);

// Evenly spaced hues, one RGB triple per symbol.
std::vector<std::array<unsigned char, 3>> symbol_palette(int count);

// width×height view of the unrolled configuration, reads wrapped modulo the
// periods. "ascii" gives one character per cell, rows top-down; "ppm" gives
// a binary P6 image. Throws UnknownFormat otherwise; 2-d points only.
std::string render_point(const PeriodicPoint& p, const Alphabet& a, int width, int height,
                         const std::string& format);

} // namespace sft
