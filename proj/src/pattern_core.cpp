#include "sft/pattern_core.hpp"

#include <algorithm>
#include <stdexcept>

namespace sft {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw std::invalid_argument("alphabet must not be empty");
    for (const auto& s : symbols_) {
        if (s.empty()) throw std::invalid_argument("alphabet symbol must not be empty");
    }
    auto sorted = symbols_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("alphabet symbols must be distinct");
}

std::optional<Symbol> Alphabet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == name) return static_cast<Symbol>(i);
    return std::nullopt;
}

Coord FinitePattern::min_corner() const {
    Coord lo = cells.front().first;
    for (const auto& [c, s] : cells)
        for (int a = 0; a < dim; ++a) lo[a] = std::min(lo[a], c[a]);
    return lo;
}

std::vector<int> FinitePattern::extents() const {
    Coord lo = cells.front().first, hi = cells.front().first;
    for (const auto& [c, s] : cells) {
        for (int a = 0; a < dim; ++a) {
            lo[a] = std::min(lo[a], c[a]);
            hi[a] = std::max(hi[a], c[a]);
        }
    }
    std::vector<int> ext(static_cast<std::size_t>(dim));
    for (int a = 0; a < dim; ++a) ext[a] = hi[a] - lo[a] + 1;
    return ext;
}

FinitePattern FinitePattern::normal_form() const {
    Coord lo = min_corner();
    FinitePattern q;
    q.dim = dim;
    q.cells.reserve(cells.size());
    for (const auto& [c, s] : cells) {
        Coord t(static_cast<std::size_t>(dim));
        for (int a = 0; a < dim; ++a) t[a] = c[a] - lo[a];
        q.cells.emplace_back(std::move(t), s);
    }
    std::sort(q.cells.begin(), q.cells.end());
    return q;
}

FinitePattern make_pattern(int dim, std::vector<std::pair<Coord, Symbol>> cells) {
    if (dim < 1) throw std::invalid_argument("pattern dimension must be positive");
    if (cells.empty()) throw std::invalid_argument("pattern must have at least one cell");
    for (const auto& [c, s] : cells) {
        if (static_cast<int>(c.size()) != dim)
            throw std::invalid_argument("pattern cell arity does not match dimension");
    }
    std::sort(cells.begin(), cells.end());
    for (std::size_t i = 1; i < cells.size(); ++i)
        if (cells[i].first == cells[i - 1].first)
            throw std::invalid_argument("pattern assigns one cell twice");
    FinitePattern p;
    p.dim = dim;
    p.cells = std::move(cells);
    return p;
}

SftSpec make_spec(Alphabet alphabet, int dim, std::vector<FinitePattern> forbidden) {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    std::vector<FinitePattern> norm;
    norm.reserve(forbidden.size());
    for (const auto& p : forbidden) {
        if (p.dim != dim) throw DimensionMismatch("forbidden pattern dimension does not match spec");
        if (p.cells.empty()) throw std::invalid_argument("forbidden pattern must have cells");
        for (const auto& [c, s] : p.cells) {
            if (s < 0 || s >= alphabet.size())
                throw std::invalid_argument("forbidden pattern uses a symbol outside the alphabet");
        }
        norm.push_back(p.normal_form());
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    SftSpec spec;
    spec.alphabet = std::move(alphabet);
    spec.dim = dim;
    spec.forbidden = std::move(norm);
    return spec;
}

int width(const FinitePattern& p) {
    int w = 1;
    for (int e : p.extents()) w = std::max(w, e);
    return w;
}

int normalization_length(const SftSpec& spec) {
    int l = 1;
    for (const auto& p : spec.forbidden) l = std::max(l, width(p));
    return l;
}

bool occurs(const FinitePattern& p, const Grid& window, const Coord& offset) {
    if (p.dim != window.dim() || static_cast<int>(offset.size()) != p.dim)
        throw DimensionMismatch("pattern, window and offset dimensions must agree");
    Coord q(static_cast<std::size_t>(p.dim));
    for (const auto& [c, s] : p.cells) {
        for (int a = 0; a < p.dim; ++a) q[a] = c[a] + offset[a];
        if (!window.in_bounds(q))
            throw std::out_of_range("offset places a pattern cell outside the window");
        if (window.at(q) != s) return false;
    }
    return true;
}

namespace {

// Scans all placements of one normal-form pattern over the window.
// On wrapped axes every base coordinate is a placement and reads reduce
// mod the extent; on the others the support must fit inside.
bool pattern_occurs_anywhere(const FinitePattern& p, const Grid& window,
                             const std::vector<bool>& wrap) {
    const int d = window.dim();
    const auto& shape = window.shape();
    auto ext = p.extents();
    std::vector<int> limit(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        limit[a] = wrap[a] ? shape[a] : shape[a] - ext[a] + 1;
        if (limit[a] <= 0) return false; // does not fit along a rigid axis
    }
    Coord off(static_cast<std::size_t>(d), 0);
    Coord q(static_cast<std::size_t>(d));
    for (;;) {
        bool match = true;
        for (const auto& [c, s] : p.cells) {
            for (int a = 0; a < d; ++a) q[a] = c[a] + off[a];
            Symbol got = [&] {
                bool inside = window.in_bounds(q);
                if (inside) return window.at(q);
                return window.at_wrapped(q);
            }();
            if (got != s) { match = false; break; }
        }
        if (match) return true;
        int a = d - 1;
        while (a >= 0) {
            if (++off[a] < limit[a]) break;
            off[a] = 0;
            --a;
        }
        if (a < 0) return false;
    }
}

} // namespace

bool window_admissible(const SftSpec& spec, const Grid& window) {
    std::vector<bool> wrap(static_cast<std::size_t>(window.dim()), false);
    return window_admissible_wrapped(spec, window, wrap);
}

bool window_admissible_wrapped(const SftSpec& spec, const Grid& window,
                               const std::vector<bool>& wrap) {
    if (spec.dim != window.dim())
        throw DimensionMismatch("spec and window dimensions must agree");
    for (const auto& p : spec.forbidden)
        if (pattern_occurs_anywhere(p, window, wrap)) return false;
    return true;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    if (base == 0) return exp == 0 ? 1 : 0;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

CubeSystem normalize_to_cubes(const SftSpec& spec, std::uint64_t cap) {
    const int l = normalization_length(spec);
    const int d = spec.dim;
    std::uint64_t cells = 1;
    for (int a = 0; a < d; ++a) {
        if (cells > (std::uint64_t{1} << 40) / static_cast<std::uint64_t>(l))
            throw CapExceeded("cube cell count overflows the enumeration budget");
        cells *= static_cast<std::uint64_t>(l);
    }
    const auto k = static_cast<std::uint64_t>(spec.alphabet.size());
    std::uint64_t total = saturating_pow(k, cells, cap);
    if (total > cap)
        throw CapExceeded("cube enumeration would exceed the cap of " + std::to_string(cap) +
                          " cubes");

    CubeSystem sys;
    sys.side = l;
    sys.dim = d;
    std::vector<int> shape(static_cast<std::size_t>(d), l);
    Grid cube(shape, 0);
    // Odometer over the canonical cell order, last cell fastest, so cubes
    // come out in ascending canonical order without an extra sort.
    for (;;) {
        if (window_admissible(spec, cube)) sys.allowed.push_back(cube);
        auto& cs = cube.cells();
        std::size_t i = cs.size();
        while (i > 0) {
            --i;
            if (++cs[i] < static_cast<Symbol>(k)) break;
            cs[i] = 0;
            if (i == 0) {
                sys.forbidden_count = total - static_cast<std::uint64_t>(sys.allowed.size());
                return sys;
            }
        }
    }
}

} // namespace sft
