#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sft/pattern_core.hpp"

namespace sft {

inline constexpr std::uint64_t kDefaultTorusCellCap = 64;

// A fully assigned configuration on the torus Z^d / (periods); unrolling it
// periodically gives a configuration of the full space.
struct TorusConfig {
    Grid cells; // shape == periods

    int dim() const { return cells.dim(); }
    const std::vector<int>& periods() const { return cells.shape(); }

    friend bool operator==(const TorusConfig&, const TorusConfig&) = default;
    friend auto operator<=>(const TorusConfig&, const TorusConfig&) = default;
};

struct PeriodicPoint {
    TorusConfig torus;
    bool verified = false; // set only after an is_admissible_on_torus recheck
};

// True iff no forbidden pattern occurs at any base offset with all
// coordinates read mod periods (so patterns wider than a period wrap and
// are still caught).
bool is_admissible_on_torus(const SftSpec& spec, const TorusConfig& t);

// All admissible configurations on the given torus, canonically ordered
// (lexicographic by cell content). Throws CapExceeded when the product of
// periods exceeds cell_cap.
std::vector<PeriodicPoint> enumerate_torus_configs(const SftSpec& spec,
                                                   const std::vector<int>& periods,
                                                   std::uint64_t cell_cap = kDefaultTorusCellCap);

// First admissible configuration in canonical order, if any.
std::optional<PeriodicPoint> find_torus_config(const SftSpec& spec,
                                               const std::vector<int>& periods,
                                               std::uint64_t cell_cap = kDefaultTorusCellCap);

// Number of locally admissible n^d windows (no wraparound), by backtracking
// over cells in canonical order with earliest-violation pruning.
std::uint64_t count_admissible_squares(const SftSpec& spec, int n,
                                       std::uint64_t cell_cap = kDefaultTorusCellCap);

// True iff at least one admissible n^d window exists; stops at the first.
bool exists_admissible_square(const SftSpec& spec, int n,
                              std::uint64_t cell_cap = kDefaultTorusCellCap);

// Same count via a row-by-row transfer scan (d = 2 only). Handles loosely
// constrained specs whose window counts are astronomically larger than
// anything backtracking could visit. Cross-checked against
// count_admissible_squares in the tests.
std::uint64_t count_admissible_squares_transfer(const SftSpec& spec, int n);

// Count of n×n windows in which every side×side subwindow is one of the
// allowed cubes — the cube-occurrence admissibility test (d = 2 only).
// Windows smaller than the cube side are vacuously admissible.
std::uint64_t count_cube_admissible_squares(const CubeSystem& cubes, int alphabet_size, int n);

// Scans n = 1..n_max; engaged result holds the least n with zero admissible
// n^d windows, which certifies emptiness by compactness. Disengaged means
// inconclusive at this budget. Sizes beyond cell_cap are not scanned.
struct EmptinessResult {
    std::optional<int> witness_n;
    int scanned_up_to = 0; // largest n actually checked
};
EmptinessResult emptiness_semidecision(const SftSpec& spec, int n_max,
                                       std::uint64_t cell_cap = kDefaultTorusCellCap);

// The shift action: result cell at k holds the input's cell at k + a
// (read mod periods). Verification status carries over.
PeriodicPoint shift_point(const PeriodicPoint& p, const Coord& a);

// Reads the box [lo, lo + extent) out of the unrolled configuration as a
// total finite pattern at those absolute coordinates.
FinitePattern extract_pattern(const PeriodicPoint& p, const Coord& lo,
                              const std::vector<int>& extent);

} // namespace sft
