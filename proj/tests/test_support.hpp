#pragma once

// Shared helpers for the test binaries: small spec builders, independent
// brute-force admissibility/counting (deliberately written from scratch
// here, not calling the library's window scanners), and seeded random
// generators for specs and matrices.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "sft/block_graph.hpp"
#include "sft/matrix_engine.hpp"
#include "sft/pattern_core.hpp"
#include "sft/strip_engine.hpp"
#include "sft/torus_oracle.hpp"

namespace testsup {

using namespace sft;

inline SftSpec spec2(std::vector<std::string> symbols,
                     std::vector<std::vector<std::tuple<int, int, Symbol>>> patterns) {
    Alphabet a(std::move(symbols));
    std::vector<FinitePattern> forbidden;
    for (auto& cells : patterns) {
        std::vector<std::pair<Coord, Symbol>> out;
        for (auto& [x, y, s] : cells) out.emplace_back(Coord{x, y}, s);
        forbidden.push_back(make_pattern(2, std::move(out)));
    }
    return make_spec(std::move(a), 2, std::move(forbidden));
}

// no two orthogonally adjacent 1s
inline SftSpec hard_square() {
    return spec2({"0", "1"}, {{{0, 0, 1}, {1, 0, 1}}, {{0, 0, 1}, {0, 1, 1}}});
}

// no two equal orthogonal neighbours
inline SftSpec checkerboard() {
    return spec2({"a", "b"}, {{{0, 0, 0}, {1, 0, 0}},
                              {{0, 0, 1}, {1, 0, 1}},
                              {{0, 0, 0}, {0, 1, 0}},
                              {{0, 0, 1}, {0, 1, 1}}});
}

// horizontal 00, horizontal 01 and vertical 11 all forbidden: no 2x2
// window survives, although single cells do
inline SftSpec contradiction_spec() {
    return spec2({"0", "1"}, {{{0, 0, 0}, {1, 0, 0}},
                              {{0, 0, 0}, {1, 0, 1}},
                              {{0, 0, 1}, {0, 1, 1}}});
}

inline SftSpec forbid_all_singles() {
    return spec2({"0", "1"}, {{{0, 0, 0}}, {{0, 0, 1}}});
}

inline SftSpec full_shift2() { return spec2({"0", "1"}, {}); }

// every cell equals its upper-right neighbour: rows shift left going up
inline SftSpec diagonal_shift() {
    return spec2({"a", "b"}, {{{0, 0, 0}, {1, 1, 1}}, {{0, 0, 1}, {1, 1, 0}}});
}

// d = 2, forbid only the vertical domino of 1s
inline SftSpec golden_mean_vertical() {
    return spec2({"0", "1"}, {{{0, 0, 1}, {0, 1, 1}}});
}

// d = 1, forbid 11
inline SftSpec golden_mean_1d() {
    Alphabet a({"0", "1"});
    std::vector<FinitePattern> forbidden;
    forbidden.push_back(make_pattern(1, {{Coord{0}, 1}, {Coord{1}, 1}}));
    return make_spec(std::move(a), 1, std::move(forbidden));
}

// --- independent brute force ---------------------------------------------

// Occurrence test written directly against the pattern cells; `base` may
// place cells outside the window, in which case the pattern does not occur
// (rigid reading), except along axes flagged in `wrap`, which read modulo.
inline bool naive_occurs(const FinitePattern& p, const Grid& w, const Coord& base,
                         const std::vector<bool>& wrap) {
    for (const auto& [rel, sym] : p.cells) {
        Coord c(w.dim());
        for (int a = 0; a < w.dim(); ++a) {
            c[a] = base[a] + rel[a];
            if (wrap[static_cast<std::size_t>(a)]) {
                c[a] = floor_mod(c[a], w.shape()[a]);
            } else if (c[a] < 0 || c[a] >= w.shape()[a]) {
                return false;
            }
        }
        if (w.at(c) != sym) return false;
    }
    return true;
}

inline bool naive_admissible(const SftSpec& spec, const Grid& w, const std::vector<bool>& wrap) {
    Coord base(w.dim(), 0);
    for (;;) {
        for (const auto& p : spec.forbidden)
            if (naive_occurs(p, w, base, wrap)) return false;
        int a = w.dim() - 1;
        for (; a >= 0; --a) {
            if (++base[a] < w.shape()[a]) break;
            base[a] = 0;
        }
        if (a < 0) return true;
    }
}

inline bool naive_admissible(const SftSpec& spec, const Grid& w, bool wrap) {
    return naive_admissible(spec, w, std::vector<bool>(static_cast<std::size_t>(w.dim()), wrap));
}

// Counts admissible fillings of the given shape by plain enumeration of
// all |A|^cells assignments. Keep the shape tiny.
inline std::uint64_t naive_count(const SftSpec& spec, const std::vector<int>& shape, bool wrap) {
    Grid g(shape);
    std::uint64_t count = 0;
    auto& cells = g.cells();
    int k = spec.alphabet.size();
    for (;;) {
        if (naive_admissible(spec, g, wrap)) ++count;
        std::size_t i = cells.size();
        while (i > 0) {
            --i;
            if (++cells[i] < k) break;
            cells[i] = 0;
            if (i == 0) return count;
        }
    }
}

// --- random inputs --------------------------------------------------------

// d = 2 spec in which every forbidden pattern has the same width, so the
// window-count comparison against the cube system is exact at every n.
inline SftSpec random_uniform_spec(std::mt19937& rng) {
    int k = 2 + static_cast<int>(rng() % 2);
    int w = 1 + static_cast<int>(rng() % (k == 2 ? 3 : 2));
    int npat = 1 + static_cast<int>(rng() % 4);
    std::vector<std::string> symbols;
    for (int s = 0; s < k; ++s) symbols.push_back(std::string(1, static_cast<char>('a' + s)));
    std::set<std::vector<std::pair<Coord, Symbol>>> seen;
    std::vector<FinitePattern> forbidden;
    for (int i = 0; i < npat; ++i) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            int ncells = w == 1 ? 1 : 1 + static_cast<int>(rng() % 4);
            std::map<Coord, Symbol> cells;
            for (int c = 0; c < ncells; ++c) {
                Coord at{static_cast<int>(rng() % w), static_cast<int>(rng() % w)};
                cells.emplace(std::move(at), static_cast<Symbol>(rng() % k));
            }
            int lo[2] = {w, w}, hi[2] = {-1, -1};
            for (const auto& [at, sym] : cells)
                for (int a = 0; a < 2; ++a) {
                    lo[a] = std::min(lo[a], at[a]);
                    hi[a] = std::max(hi[a], at[a]);
                }
            if (std::max(hi[0] - lo[0], hi[1] - lo[1]) + 1 != w) continue;
            std::vector<std::pair<Coord, Symbol>> flat(cells.begin(), cells.end());
            auto pattern = make_pattern(2, flat);
            if (!seen.insert(pattern.cells).second) continue;
            forbidden.push_back(std::move(pattern));
            break;
        }
    }
    return make_spec(Alphabet(std::move(symbols)), 2, std::move(forbidden));
}

inline std::vector<std::vector<std::uint8_t>> random_matrix(std::mt19937& rng, int dim,
                                                            double density) {
    std::vector<std::vector<std::uint8_t>> m(dim, std::vector<std::uint8_t>(dim, 0));
    auto threshold = static_cast<std::uint32_t>(density * 4294967295.0);
    for (auto& row : m)
        for (auto& e : row) e = rng() < threshold ? 1 : 0;
    return m;
}

// Fixpoint of "delete an index with an empty row or column", taking the
// deletions in the order the shuffled candidate list suggests; written
// independently of the library's pruning loop.
inline std::vector<int> ordered_prune(const std::vector<std::vector<std::uint8_t>>& entries,
                                      std::mt19937& rng) {
    int dim = static_cast<int>(entries.size());
    std::vector<bool> alive(dim, true);
    for (;;) {
        std::vector<int> defaulting;
        for (int i = 0; i < dim; ++i) {
            if (!alive[i]) continue;
            bool has_up = false, has_down = false;
            for (int j = 0; j < dim; ++j) {
                if (!alive[j]) continue;
                if (entries[j][i]) has_up = true;
                if (entries[i][j]) has_down = true;
            }
            if (!has_up || !has_down) defaulting.push_back(i);
        }
        if (defaulting.empty()) break;
        std::shuffle(defaulting.begin(), defaulting.end(), rng);
        alive[defaulting.front()] = false; // one at a time, random choice
    }
    std::vector<int> kept;
    for (int i = 0; i < dim; ++i)
        if (alive[i]) kept.push_back(i);
    return kept;
}

} // namespace testsup
