#pragma once

#include <cstdint>
#include <vector>

#include "sft/block_graph.hpp"
#include "sft/pattern_core.hpp"

namespace sft {

inline constexpr std::uint64_t kDefaultStripCandidateCap = std::uint64_t{1} << 20;

// A horizontally periodic strip of height l: one period of cells, wrapped
// horizontally, unbounded repetition to both sides.
struct PeriodicStrip {
    Grid cells; // shape {period, height}
    bool canonical = false;

    int period() const { return cells.shape()[0]; }
    int height() const { return cells.shape()[1]; }

    friend bool operator==(const PeriodicStrip&, const PeriodicStrip&) = default;
    friend auto operator<=>(const PeriodicStrip&, const PeriodicStrip&) = default;
};

// Reduces to the primitive period and picks the lexicographically least
// horizontal rotation. Idempotent.
PeriodicStrip canonicalize_strip(const PeriodicStrip& s);

// The strip rotated so its column r becomes column 0.
PeriodicStrip rotate_strip(const PeriodicStrip& s, int r);

// True iff the strip, read with horizontal wraparound, contains no
// forbidden occurrence.
bool strip_admissible(const SftSpec& spec, const PeriodicStrip& s);

// All canonical strips generated by cyclic block sequences of length up to
// max_period in the block horizontal-adjacency digraph, wrapped, verified
// and deduplicated; canonically ordered (period, then content). Throws
// CapExceeded when the candidate count passes candidate_cap.
std::vector<PeriodicStrip> enumerate_strips(const SftSpec& spec,
                                            const std::vector<Block>& blocks, int max_period,
                                            std::uint64_t candidate_cap = kDefaultStripCandidateCap,
                                            std::uint64_t pair_cap = kDefaultBlockPairCap);

// True iff `upper` stacked directly above `lower` at the given horizontal
// phase (upper's column 0 over lower's column phase) is admissible as a
// doubly infinite strip of height 2l.
bool stack_admissible(const SftSpec& spec, const PeriodicStrip& upper, const PeriodicStrip& lower,
                      int phase);

// Phase-0 stacking test: a over b.
bool strip_vertical_compatible(const SftSpec& spec, const PeriodicStrip& a,
                               const PeriodicStrip& b);

// All phases in [0, upper.period()) at which the stack is admissible.
std::vector<int> compatible_phases(const SftSpec& spec, const PeriodicStrip& upper,
                                   const PeriodicStrip& lower);

// The strip unrolled to `copies` periods as a plain grid.
Grid unroll_strip(const PeriodicStrip& s, int copies);

} // namespace sft
