#include "sft/matrix_engine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace sft {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Nonempty: return "NONEMPTY";
        case Verdict::Empty: return "EMPTY";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

StripMatrix build_strip_matrix(const SftSpec& spec, const std::vector<PeriodicStrip>& strips) {
    StripMatrix m;
    m.indices = strips;
    const std::size_t n = strips.size();
    m.entries.assign(n, std::vector<std::uint8_t>(n, 0));
    m.phases.assign(n, std::vector<int>(n, -1));
    for (std::size_t lower = 0; lower < n; ++lower) {
        for (std::size_t upper = 0; upper < n; ++upper) {
            for (int phase = 0; phase < strips[upper].period(); ++phase) {
                if (stack_admissible(spec, strips[upper], strips[lower], phase)) {
                    m.entries[lower][upper] = 1;
                    m.phases[lower][upper] = phase;
                    break;
                }
            }
        }
    }
    return m;
}

std::vector<int> u_related(const StripMatrix& m, int i) {
    std::vector<int> out;
    for (int j = 0; j < m.dimension(); ++j)
        if (m.entries[j][i]) out.push_back(j);
    return out;
}

std::vector<int> d_related(const StripMatrix& m, int i) {
    std::vector<int> out;
    for (int j = 0; j < m.dimension(); ++j)
        if (m.entries[i][j]) out.push_back(j);
    return out;
}

std::vector<int> complementary_support(const std::vector<std::vector<std::uint8_t>>& entries) {
    const int n = static_cast<int>(entries.size());
    std::vector<char> alive(n, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            bool row = false, col = false;
            for (int j = 0; j < n && !(row && col); ++j) {
                if (!alive[j]) continue;
                row = row || entries[i][j] != 0;
                col = col || entries[j][i] != 0;
            }
            if (!row || !col) {
                alive[i] = 0;
                changed = true;
            }
        }
    }
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (alive[i]) out.push_back(i);
    return out;
}

StripMatrix prune(const StripMatrix& m) {
    auto keep = complementary_support(m.entries);
    StripMatrix out;
    out.pruned = true;
    out.indices.reserve(keep.size());
    for (int i : keep) out.indices.push_back(m.indices[i]);
    const std::size_t n = keep.size();
    out.entries.assign(n, std::vector<std::uint8_t>(n, 0));
    out.phases.assign(n, std::vector<int>(n, -1));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            out.entries[a][b] = m.entries[keep[a]][keep[b]];
            out.phases[a][b] = m.phases[keep[a]][keep[b]];
        }
    }
    return out;
}

bool is_complementary(const StripMatrix& m, const std::vector<int>& subset) {
    for (int i : subset) {
        bool up = false, down = false;
        for (int j : subset) {
            up = up || m.entries[j][i] != 0;
            down = down || m.entries[i][j] != 0;
        }
        if (!up || !down) return false;
    }
    return true;
}

std::optional<Cycle> find_cycle(const StripMatrix& m) {
    const int n = m.dimension();
    std::optional<std::vector<int>> best;
    for (int s = 0; s < n; ++s) {
        // BFS over edges i -> j (j above i) for the shortest path back to s.
        std::vector<int> parent(n, -2);
        std::deque<int> queue;
        parent[s] = -1;
        queue.push_back(s);
        std::optional<std::vector<int>> found;
        while (!queue.empty() && !found) {
            int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < n; ++j) {
                if (!m.entries[i][j]) continue;
                if (j == s) {
                    std::vector<int> path;
                    for (int v = i; v != -1; v = parent[v]) path.push_back(v);
                    std::reverse(path.begin(), path.end());
                    found = std::move(path);
                    break;
                }
                if (parent[j] == -2) {
                    parent[j] = i;
                    queue.push_back(j);
                }
            }
        }
        if (found && (!best || found->size() < best->size())) best = std::move(found);
    }
    if (!best) return std::nullopt;
    Cycle c;
    c.nodes = *best;
    const int k = static_cast<int>(c.nodes.size());
    c.phases.resize(k);
    for (int i = 0; i < k; ++i) c.phases[i] = m.phases[c.nodes[i]][c.nodes[(i + 1) % k]];
    return c;
}

PeriodicPoint synthesize_periodic_point(const SftSpec& spec, const StripMatrix& m,
                                        const Cycle& cycle) {
    if (cycle.nodes.empty()) throw std::invalid_argument("cycle must be non-empty");
    const int c = static_cast<int>(cycle.nodes.size());
    for (int i = 0; i < c; ++i) {
        if (!m.entries[cycle.nodes[i]][cycle.nodes[(i + 1) % c]])
            throw std::invalid_argument("cycle uses a zero entry of the matrix");
    }
    const int l = m.indices[cycle.nodes[0]].height();

    // Anchor of band k: the cumulative phase of the edges below it.
    std::vector<int> anchor(static_cast<std::size_t>(c) + 1, 0);
    for (int k = 0; k < c; ++k) anchor[k + 1] = anchor[k] + cycle.phases[k];
    const int drift = anchor[c];

    std::int64_t width = 1;
    for (int k = 0; k < c; ++k) {
        width = std::lcm(width, static_cast<std::int64_t>(m.indices[cycle.nodes[k]].period()));
        if (width > (std::int64_t{1} << 24))
            throw CapExceeded("stacked strip widths have an unreasonably large common period");
    }
    const auto q = static_cast<int>(width);

    // After one trip around the cycle each band returns shifted by the
    // drift; repeating the cycle r times closes up vertically once
    // r * drift vanishes mod the common width.
    const int d = floor_mod(drift, q);
    const int reps = d == 0 ? 1 : q / std::gcd(d, q);
    const int height = c * l * reps;
    if (static_cast<std::int64_t>(q) * height > (std::int64_t{1} << 24))
        throw CapExceeded("synthesized torus would be unreasonably large");

    Grid g({q, height}, 0);
    for (int rep = 0; rep < reps; ++rep) {
        for (int k = 0; k < c; ++k) {
            const auto& strip = m.indices[cycle.nodes[k]];
            const int base = (rep * c + k) * l;
            const int a = anchor[k] + rep * drift;
            for (int x = 0; x < q; ++x)
                for (int y = 0; y < l; ++y)
                    g.at2(x, base + y) = strip.cells.at2(floor_mod(x - a, strip.period()), y);
        }
    }

    TorusConfig torus{std::move(g)};
    if (!is_admissible_on_torus(spec, torus))
        throw VerificationFailed("synthesized periodic point failed verification");

    // Reduce to primitive rectangular periods: the smallest divisor of each
    // period that still shifts the configuration to itself.
    auto horizontal_period = [&](int p) {
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < height; ++y)
                if (torus.cells.at2(x, y) != torus.cells.at2((x + p) % q, y)) return false;
        return true;
    };
    auto vertical_period = [&](int p) {
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < height; ++y)
                if (torus.cells.at2(x, y) != torus.cells.at2(x, (y + p) % height)) return false;
        return true;
    };
    int qx = q, qy = height;
    for (int p = 1; p < q; ++p)
        if (q % p == 0 && horizontal_period(p)) { qx = p; break; }
    for (int p = 1; p < height; ++p)
        if (height % p == 0 && vertical_period(p)) { qy = p; break; }

    Grid reduced({qx, qy}, 0);
    for (int x = 0; x < qx; ++x)
        for (int y = 0; y < qy; ++y) reduced.at2(x, y) = torus.cells.at2(x, y);
    TorusConfig small{std::move(reduced)};
    if (!is_admissible_on_torus(spec, small))
        throw VerificationFailed("reduced periodic point failed verification");
    return PeriodicPoint{std::move(small), true};
}

namespace {

AnalysisReport strip_pipeline(const SftSpec& spec, const Budgets& budgets,
                              AnalysisReport report) {
    try {
        auto cubes = normalize_to_cubes(spec, budgets.max_cubes);
        auto blocks = build_blocks(spec, cubes);
        auto strips = enumerate_strips(spec, blocks, budgets.max_period,
                                       budgets.max_strip_candidates, budgets.max_block_pairs);
        const auto s = static_cast<std::uint64_t>(strips.size());
        if (s * s > budgets.max_matrix_pairs)
            throw CapExceeded("strip matrix pair count exceeds the cap of " +
                              std::to_string(budgets.max_matrix_pairs));
        auto matrix = prune(build_strip_matrix(spec, strips));
        if (matrix.dimension() > 0) {
            auto cycle = find_cycle(matrix);
            if (cycle) {
                report.certificate = synthesize_periodic_point(spec, matrix, *cycle);
                report.verdict = Verdict::Nonempty;
                return report;
            }
        }
        report.verdict = Verdict::Unknown;
    } catch (const CapExceeded& e) {
        report.verdict = Verdict::Unknown;
        report.diagnostic = e.what();
    }
    return report;
}

AnalysisReport torus_sweep(const SftSpec& spec, const Budgets& budgets, AnalysisReport report) {
    for (int p = 1;; ++p) {
        std::uint64_t cells = 1;
        bool over = false;
        for (int a = 0; a < spec.dim; ++a) {
            cells *= static_cast<std::uint64_t>(p);
            if (cells > budgets.max_window_cells) { over = true; break; }
        }
        if (over) break;
        std::vector<int> periods(static_cast<std::size_t>(spec.dim), p);
        auto found = find_torus_config(spec, periods, budgets.max_window_cells);
        if (found) {
            report.certificate = std::move(*found);
            report.verdict = Verdict::Nonempty;
            return report;
        }
    }
    report.verdict = Verdict::Unknown;
    return report;
}

} // namespace

AnalysisReport analyze(const SftSpec& spec, const Budgets& budgets) {
    AnalysisReport report;
    report.budgets = budgets;
    auto empt = emptiness_semidecision(spec, budgets.n_max, budgets.max_window_cells);
    if (empt.witness_n) {
        report.verdict = Verdict::Empty;
        report.empty_witness_n = empt.witness_n;
        return report;
    }
    if (spec.dim == 2) return strip_pipeline(spec, budgets, std::move(report));
    return torus_sweep(spec, budgets, std::move(report));
}

AnalysisReport find_periodic(const SftSpec& spec, const Budgets& budgets) {
    AnalysisReport report;
    report.budgets = budgets;
    if (spec.dim == 2) return strip_pipeline(spec, budgets, std::move(report));
    return torus_sweep(spec, budgets, std::move(report));
}

} // namespace sft
