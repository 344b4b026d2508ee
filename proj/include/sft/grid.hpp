#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sft {

using Symbol = std::int32_t;
using Coord = std::vector<int>;

// Floor modulus: result lies in [0, m) for m > 0, also for negative a.
inline int floor_mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

// Dense d-dimensional array of symbol indices over the box [0, shape).
// Cells are linearized in the canonical order used everywhere in this
// project: lexicographic by coordinate, last axis fastest.
class Grid {
public:
    Grid() = default;
    explicit Grid(std::vector<int> shape, Symbol fill = 0);

    int dim() const { return static_cast<int>(shape_.size()); }
    const std::vector<int>& shape() const { return shape_; }
    std::int64_t size() const { return static_cast<std::int64_t>(cells_.size()); }

    bool in_bounds(std::span<const int> c) const;

    Symbol at(std::span<const int> c) const { return cells_[index_of(c)]; }
    Symbol& at(std::span<const int> c) { return cells_[index_of(c)]; }
    // Reads with every axis reduced mod shape; accepts any integer coordinates.
    Symbol at_wrapped(std::span<const int> c) const;

    // 2-d accessors; axis 0 is x (horizontal), axis 1 is y (vertical, up).
    Symbol at2(int x, int y) const { return cells_[static_cast<std::size_t>(x) * shape_[1] + y]; }
    Symbol& at2(int x, int y) { return cells_[static_cast<std::size_t>(x) * shape_[1] + y]; }

    const std::vector<Symbol>& cells() const { return cells_; }
    std::vector<Symbol>& cells() { return cells_; }

    friend bool operator==(const Grid&, const Grid&) = default;
    // Orders by shape, then by cell content; this is the canonical order on
    // equally-shaped grids.
    friend std::strong_ordering operator<=>(const Grid& a, const Grid& b);

private:
    std::size_t index_of(std::span<const int> c) const;

    std::vector<int> shape_;
    std::vector<Symbol> cells_;
};

inline Grid make_grid2(int width, int height, Symbol fill = 0) {
    return Grid({width, height}, fill);
}

} // namespace sft
