#pragma once

#include <cstdint>
#include <vector>

#include "sft/pattern_core.hpp"

namespace sft {

inline constexpr std::uint64_t kDefaultBlockPairCap = std::uint64_t{1} << 22;

// An allowed l×l window, d = 2.
using Block = Grid;

// Two blocks stacked vertically (top above bottom) whose combined 2l×l
// window is locally admissible.
struct VPair {
    Block top;
    Block bottom;

    friend bool operator==(const VPair&, const VPair&) = default;
    friend auto operator<=>(const VPair&, const VPair&) = default;
};

// Horizontal transition matrix over vertical pairs: entry (i, j) = 1 iff
// pair j placed directly right of pair i forms an admissible 2l×2l window.
struct HMatrix {
    std::vector<VPair> indices;
    std::vector<std::vector<std::uint8_t>> entries;
};

// whole := bottom rows then top rows; both blocks must share a width.
Grid stack_vertical(const Grid& top, const Grid& bottom);
// whole := left columns then right columns; both must share a height.
Grid concat_horizontal(const Grid& left, const Grid& right);

// The allowed cubes reinterpreted as blocks (d = 2 only), canonical order.
std::vector<Block> build_blocks(const SftSpec& spec, const CubeSystem& cubes);

// All admissible stacked pairs, ordered lexicographically by
// (top, bottom) block content.
std::vector<VPair> build_vpairs(const SftSpec& spec, const std::vector<Block>& blocks);

HMatrix build_hmatrix(const SftSpec& spec, const std::vector<VPair>& vpairs);

// adjacency[u][v] = 1 iff the l×2l window [u | v] (v to the right) is
// admissible. Throws CapExceeded when blocks² exceeds pair_cap.
std::vector<std::vector<std::uint8_t>> block_adjacency(
    const SftSpec& spec, const std::vector<Block>& blocks,
    std::uint64_t pair_cap = kDefaultBlockPairCap);

} // namespace sft
