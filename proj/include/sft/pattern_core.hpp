#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sft/errors.hpp"
#include "sft/grid.hpp"

namespace sft {

inline constexpr std::uint64_t kDefaultCubeCap = std::uint64_t{1} << 20;

// Ordered list of distinct symbol names. The position of a name is its
// Symbol index, and that ordering fixes every canonical enumeration
// downstream, so it is part of the spec's identity.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    const std::string& name(Symbol s) const { return symbols_[static_cast<std::size_t>(s)]; }
    std::optional<Symbol> index_of(std::string_view name) const;
    const std::vector<std::string>& symbols() const { return symbols_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> symbols_;
};

// Finite-support pattern: finitely many cells, each holding a symbol.
// Cells are kept sorted by coordinate; coordinates may be negative.
struct FinitePattern {
    int dim = 0;
    std::vector<std::pair<Coord, Symbol>> cells;

    Coord min_corner() const;
    // Per-axis extent of the bounding box (max - min + 1).
    std::vector<int> extents() const;
    // Translated so the bounding box's minimal corner is the origin.
    FinitePattern normal_form() const;

    friend bool operator==(const FinitePattern&, const FinitePattern&) = default;
    friend auto operator<=>(const FinitePattern&, const FinitePattern&) = default;
};

// Validates arity and duplicate coordinates, sorts the cells.
FinitePattern make_pattern(int dim, std::vector<std::pair<Coord, Symbol>> cells);

// A subshift of finite type: alphabet, dimension, and the finite list of
// forbidden patterns (stored in normal form, sorted, deduplicated).
struct SftSpec {
    Alphabet alphabet;
    int dim = 0;
    std::vector<FinitePattern> forbidden;

    friend bool operator==(const SftSpec&, const SftSpec&) = default;
};

SftSpec make_spec(Alphabet alphabet, int dim, std::vector<FinitePattern> forbidden);

// The equivalent forbidden family normalized to cubes of one fixed side:
// kept as the complementary list of *allowed* fully-assigned side^dim cubes,
// plus the count of excluded ones.
struct CubeSystem {
    int side = 1;
    int dim = 0;
    std::vector<Grid> allowed; // canonically ordered, deduplicated
    std::uint64_t forbidden_count = 0; // number of excluded cubes
};

// base^exp, saturating to cap + 1 as soon as the product passes cap.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap);

// Largest axis extent of the pattern's bounding box.
int width(const FinitePattern& p);

// Common cube side for the spec: max pattern width, or 1 with no patterns.
int normalization_length(const SftSpec& spec);

// True iff every support cell of p, translated by offset, matches the
// window. Throws std::out_of_range if any translated cell leaves the window.
bool occurs(const FinitePattern& p, const Grid& window, const Coord& offset);

// True iff no forbidden pattern of the spec occurs anywhere in the window
// (no wraparound; placements that do not fit are not occurrences).
bool window_admissible(const SftSpec& spec, const Grid& window);

// Same, but axes flagged in `wrap` are read modulo the window extent, so
// every base offset along those axes is a placement.
bool window_admissible_wrapped(const SftSpec& spec, const Grid& window,
                               const std::vector<bool>& wrap);

// Enumerates every side^dim cube over the alphabet (side = normalization
// length) and keeps those in which no forbidden pattern occurs. Throws
// CapExceeded when |alphabet|^(side^dim) exceeds cap.
CubeSystem normalize_to_cubes(const SftSpec& spec, std::uint64_t cap = kDefaultCubeCap);

} // namespace sft
