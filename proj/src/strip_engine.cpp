#include "sft/strip_engine.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace sft {

PeriodicStrip rotate_strip(const PeriodicStrip& s, int r) {
    const int q = s.period();
    const int h = s.height();
    r = floor_mod(r, q);
    Grid out({q, h}, 0);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < h; ++y) out.at2(x, y) = s.cells.at2((x + r) % q, y);
    return PeriodicStrip{std::move(out), false};
}

PeriodicStrip canonicalize_strip(const PeriodicStrip& s) {
    const int q = s.period();
    const int h = s.height();
    // Primitive period: smallest divisor p of q with rotation by p acting
    // as the identity; then the strip is the repetition of its first p
    // columns.
    int prim = q;
    for (int p = 1; p < q; ++p) {
        if (q % p != 0) continue;
        bool same = true;
        for (int x = 0; x < q && same; ++x)
            for (int y = 0; y < h; ++y)
                if (s.cells.at2(x, y) != s.cells.at2((x + p) % q, y)) { same = false; break; }
        if (same) { prim = p; break; }
    }
    Grid base({prim, h}, 0);
    for (int x = 0; x < prim; ++x)
        for (int y = 0; y < h; ++y) base.at2(x, y) = s.cells.at2(x, y);
    PeriodicStrip reduced{std::move(base), false};
    // Least rotation; with a primitive period the minimizer is unique.
    PeriodicStrip best = reduced;
    for (int r = 1; r < prim; ++r) {
        auto cand = rotate_strip(reduced, r);
        if (cand.cells < best.cells) best = std::move(cand);
    }
    best.canonical = true;
    return best;
}

bool strip_admissible(const SftSpec& spec, const PeriodicStrip& s) {
    return window_admissible_wrapped(spec, s.cells, {true, false});
}

bool stack_admissible(const SftSpec& spec, const PeriodicStrip& upper, const PeriodicStrip& lower,
                      int phase) {
    if (upper.height() != lower.height())
        throw std::invalid_argument("stacked strips must share a height");
    const int h = lower.height();
    const int width = std::lcm(lower.period(), upper.period());
    Grid g({width, 2 * h}, 0);
    for (int x = 0; x < width; ++x) {
        for (int y = 0; y < h; ++y) {
            g.at2(x, y) = lower.cells.at2(x % lower.period(), y);
            g.at2(x, h + y) = upper.cells.at2(floor_mod(x - phase, upper.period()), y);
        }
    }
    return window_admissible_wrapped(spec, g, {true, false});
}

bool strip_vertical_compatible(const SftSpec& spec, const PeriodicStrip& a,
                               const PeriodicStrip& b) {
    return stack_admissible(spec, a, b, 0);
}

std::vector<int> compatible_phases(const SftSpec& spec, const PeriodicStrip& upper,
                                   const PeriodicStrip& lower) {
    std::vector<int> out;
    for (int phase = 0; phase < upper.period(); ++phase)
        if (stack_admissible(spec, upper, lower, phase)) out.push_back(phase);
    return out;
}

Grid unroll_strip(const PeriodicStrip& s, int copies) {
    if (copies < 1) throw std::invalid_argument("need at least one copy");
    const int q = s.period();
    const int h = s.height();
    Grid out({q * copies, h}, 0);
    for (int x = 0; x < q * copies; ++x)
        for (int y = 0; y < h; ++y) out.at2(x, y) = s.cells.at2(x % q, y);
    return out;
}

namespace {

// True iff seq is strictly smaller than each of its proper rotations, i.e.
// it is the canonical representative of a primitive cyclic sequence.
bool strictly_least_rotation(const std::vector<int>& seq) {
    const std::size_t k = seq.size();
    for (std::size_t r = 1; r < k; ++r) {
        for (std::size_t i = 0; i < k; ++i) {
            const int a = seq[i];
            const int b = seq[(i + r) % k];
            if (a != b) {
                if (a > b) return false;
                break;
            }
            if (i + 1 == k) return false; // equal rotation: not primitive
        }
    }
    return true;
}

} // namespace

std::vector<PeriodicStrip> enumerate_strips(const SftSpec& spec, const std::vector<Block>& blocks,
                                            int max_period, std::uint64_t candidate_cap,
                                            std::uint64_t pair_cap) {
    if (spec.dim != 2)
        throw DimensionMismatch("strip enumeration is two-dimensional only");
    if (max_period < 1) throw std::invalid_argument("max_period must be positive");
    if (blocks.empty()) return {};
    const int l = blocks.front().shape()[0];
    auto adj = block_adjacency(spec, blocks, pair_cap);
    const int nb = static_cast<int>(blocks.size());
    std::vector<std::vector<int>> next(nb);
    for (int u = 0; u < nb; ++u)
        for (int v = 0; v < nb; ++v)
            if (adj[u][v]) next[u].push_back(v);

    std::uint64_t candidates = 0;
    std::set<Grid> seen;
    std::vector<PeriodicStrip> out;

    auto emit = [&](const std::vector<int>& seq) {
        if (++candidates > candidate_cap)
            throw CapExceeded("strip candidate count exceeds the cap of " +
                              std::to_string(candidate_cap));
        const int k = static_cast<int>(seq.size());
        Grid g({k * l, l}, 0);
        for (int j = 0; j < k; ++j)
            for (int dx = 0; dx < l; ++dx)
                for (int y = 0; y < l; ++y) g.at2(j * l + dx, y) = blocks[seq[j]].at2(dx, y);
        PeriodicStrip strip{std::move(g), false};
        // Pairwise admissible neighbours already cover every placement of a
        // width ≤ l pattern, so this recheck only guards against bugs.
        if (!strip_admissible(spec, strip))
            throw VerificationFailed("assembled strip failed its wrapped recheck");
        auto canon = canonicalize_strip(strip);
        if (seen.insert(canon.cells).second) out.push_back(std::move(canon));
    };

    // Cyclic block sequences, one representative per primitive necklace:
    // the strictly least rotation, enumerated in lexicographic order.
    std::vector<int> seq;
    for (int k = 1; k <= max_period; ++k) {
        seq.assign(static_cast<std::size_t>(k), 0);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == k) {
                if (adj[seq[k - 1]][seq[0]] && strictly_least_rotation(seq)) emit(seq);
                return;
            }
            for (int v : next[seq[pos - 1]]) {
                if (v < seq[0]) continue; // the least element must lead
                seq[pos] = v;
                self(self, pos + 1);
            }
        };
        for (int s = 0; s < nb; ++s) {
            seq[0] = s;
            if (k == 1) {
                if (adj[s][s]) emit(seq);
            } else {
                rec(rec, 1);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace sft
