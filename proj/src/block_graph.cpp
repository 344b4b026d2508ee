#include "sft/block_graph.hpp"

#include <stdexcept>
#include <string>

namespace sft {

Grid stack_vertical(const Grid& top, const Grid& bottom) {
    if (top.dim() != 2 || bottom.dim() != 2)
        throw DimensionMismatch("stacking is two-dimensional");
    if (top.shape()[0] != bottom.shape()[0])
        throw DimensionMismatch("stacked grids must share a width");
    const int w = top.shape()[0];
    const int hb = bottom.shape()[1];
    const int ht = top.shape()[1];
    Grid out({w, hb + ht}, 0);
    for (int x = 0; x < w; ++x) {
        for (int y = 0; y < hb; ++y) out.at2(x, y) = bottom.at2(x, y);
        for (int y = 0; y < ht; ++y) out.at2(x, hb + y) = top.at2(x, y);
    }
    return out;
}

Grid concat_horizontal(const Grid& left, const Grid& right) {
    if (left.dim() != 2 || right.dim() != 2)
        throw DimensionMismatch("concatenation is two-dimensional");
    if (left.shape()[1] != right.shape()[1])
        throw DimensionMismatch("concatenated grids must share a height");
    const int h = left.shape()[1];
    const int wl = left.shape()[0];
    const int wr = right.shape()[0];
    Grid out({wl + wr, h}, 0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < wl; ++x) out.at2(x, y) = left.at2(x, y);
        for (int x = 0; x < wr; ++x) out.at2(wl + x, y) = right.at2(x, y);
    }
    return out;
}

std::vector<Block> build_blocks(const SftSpec& spec, const CubeSystem& cubes) {
    if (spec.dim != 2 || cubes.dim != 2)
        throw DimensionMismatch("blocks are defined for two-dimensional specs only");
    return cubes.allowed;
}

std::vector<VPair> build_vpairs(const SftSpec& spec, const std::vector<Block>& blocks) {
    if (spec.dim != 2)
        throw DimensionMismatch("vertical pairs are defined for two-dimensional specs only");
    std::vector<VPair> out;
    for (const auto& top : blocks) {
        for (const auto& bottom : blocks) {
            if (window_admissible(spec, stack_vertical(top, bottom)))
                out.push_back(VPair{top, bottom});
        }
    }
    return out;
}

HMatrix build_hmatrix(const SftSpec& spec, const std::vector<VPair>& vpairs) {
    if (spec.dim != 2)
        throw DimensionMismatch("the horizontal matrix is two-dimensional only");
    HMatrix m;
    m.indices = vpairs;
    const std::size_t n = vpairs.size();
    m.entries.assign(n, std::vector<std::uint8_t>(n, 0));
    std::vector<Grid> columns;
    columns.reserve(n);
    for (const auto& p : vpairs) columns.push_back(stack_vertical(p.top, p.bottom));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (window_admissible(spec, concat_horizontal(columns[i], columns[j])))
                m.entries[i][j] = 1;
        }
    }
    return m;
}

std::vector<std::vector<std::uint8_t>> block_adjacency(const SftSpec& spec,
                                                       const std::vector<Block>& blocks,
                                                       std::uint64_t pair_cap) {
    if (spec.dim != 2)
        throw DimensionMismatch("block adjacency is two-dimensional only");
    const std::size_t n = blocks.size();
    if (static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) > pair_cap)
        throw CapExceeded("block pair count exceeds the cap of " + std::to_string(pair_cap));
    std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (window_admissible(spec, concat_horizontal(blocks[u], blocks[v])))
                adj[u][v] = 1;
        }
    }
    return adj;
}

} // namespace sft
