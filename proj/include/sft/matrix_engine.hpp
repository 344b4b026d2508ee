#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sft/strip_engine.hpp"
#include "sft/torus_oracle.hpp"

namespace sft {

// Vertical transition matrix over periodic strips. Row b, column a holds 1
// iff strip a can sit directly above strip b at some horizontal phase; the
// first admissible phase is recorded for certificate construction.
struct StripMatrix {
    std::vector<PeriodicStrip> indices;
    std::vector<std::vector<std::uint8_t>> entries; // [lower][upper]
    std::vector<std::vector<int>> phases;           // phase for 1-entries, -1 otherwise
    bool pruned = false;

    int dimension() const { return static_cast<int>(indices.size()); }
};

// A directed cycle in the matrix read as a digraph (edge b -> a iff entry
// (b, a) = 1): nodes[i+1] stacks above nodes[i], wrapping at the end.
// phases[i] is the recorded phase of that edge.
struct Cycle {
    std::vector<int> nodes;
    std::vector<int> phases;
};

struct Budgets {
    int max_period = 4;
    int n_max = 8;
    std::uint64_t max_cubes = kDefaultCubeCap;
    std::uint64_t max_window_cells = kDefaultTorusCellCap;
    std::uint64_t max_strip_candidates = kDefaultStripCandidateCap;
    std::uint64_t max_block_pairs = kDefaultBlockPairCap;
    std::uint64_t max_matrix_pairs = std::uint64_t{1} << 22;
};

enum class Verdict { Nonempty, Empty, Unknown };

std::string to_string(Verdict v);

struct AnalysisReport {
    Verdict verdict = Verdict::Unknown;
    std::optional<PeriodicPoint> certificate; // NONEMPTY: a verified point
    std::optional<int> empty_witness_n;       // EMPTY: least window size with no window
    Budgets budgets;
    std::string diagnostic; // cap overruns and other budget notes
};

StripMatrix build_strip_matrix(const SftSpec& spec, const std::vector<PeriodicStrip>& strips);

// Indices j whose entry (j, i) is 1: everything i can sit above.
std::vector<int> u_related(const StripMatrix& m, int i);
// Indices j whose entry (i, j) is 1: everything i can sit below.
std::vector<int> d_related(const StripMatrix& m, int i);

// The unique maximal index family in which every member keeps at least one
// 1 in its row and one in its column, computed by deleting defaulting
// indices to a fixpoint. Deletion order cannot change the result.
std::vector<int> complementary_support(const std::vector<std::vector<std::uint8_t>>& entries);

// The matrix restricted to its complementary support.
StripMatrix prune(const StripMatrix& m);

bool is_complementary(const StripMatrix& m, const std::vector<int>& subset);

// A shortest directed cycle, deterministically chosen; disengaged only on
// an edgeless (in particular zero-dimensional) matrix.
std::optional<Cycle> find_cycle(const StripMatrix& m);

// Stacks the cycle's strips at their recorded phases into a doubly periodic
// configuration and verifies it. Horizontal phase drift around the cycle
// stretches the vertical period by the drift's order in the width's cyclic
// group; the result is reduced to primitive rectangular periods.
PeriodicPoint synthesize_periodic_point(const SftSpec& spec, const StripMatrix& m,
                                        const Cycle& cycle);

// Full pipeline: emptiness scan, then (d = 2) normalization, strips,
// matrix, prune, cycle, certificate; other dimensions fall back to a small
// torus sweep for the positive side. Budget overruns degrade to UNKNOWN,
// never to a wrong verdict.
AnalysisReport analyze(const SftSpec& spec, const Budgets& budgets = {});

// The strip pipeline alone (no emptiness scan): NONEMPTY or UNKNOWN.
AnalysisReport find_periodic(const SftSpec& spec, const Budgets& budgets = {});

} // namespace sft
