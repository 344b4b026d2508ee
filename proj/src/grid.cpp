#include "sft/grid.hpp"

#include <stdexcept>

namespace sft {

Grid::Grid(std::vector<int> shape, Symbol fill) : shape_(std::move(shape)) {
    std::size_t n = 1;
    for (int e : shape_) {
        if (e <= 0) throw std::invalid_argument("grid extents must be positive");
        n *= static_cast<std::size_t>(e);
    }
    cells_.assign(n, fill);
}

bool Grid::in_bounds(std::span<const int> c) const {
    if (c.size() != shape_.size()) return false;
    for (std::size_t a = 0; a < shape_.size(); ++a)
        if (c[a] < 0 || c[a] >= shape_[a]) return false;
    return true;
}

std::size_t Grid::index_of(std::span<const int> c) const {
    std::size_t idx = 0;
    for (std::size_t a = 0; a < shape_.size(); ++a)
        idx = idx * static_cast<std::size_t>(shape_[a]) + static_cast<std::size_t>(c[a]);
    return idx;
}

Symbol Grid::at_wrapped(std::span<const int> c) const {
    std::size_t idx = 0;
    for (std::size_t a = 0; a < shape_.size(); ++a)
        idx = idx * static_cast<std::size_t>(shape_[a]) +
              static_cast<std::size_t>(floor_mod(c[a], shape_[a]));
    return cells_[idx];
}

std::strong_ordering operator<=>(const Grid& a, const Grid& b) {
    if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
    return a.cells_ <=> b.cells_;
}

} // namespace sft
