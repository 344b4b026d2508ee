#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sft/matrix_engine.hpp"
#include "test_support.hpp"

using namespace sft;
using namespace testsup;

namespace {

StripMatrix matrix_for(const SftSpec& spec, int max_period) {
    auto blocks = build_blocks(spec, normalize_to_cubes(spec));
    return build_strip_matrix(spec, enumerate_strips(spec, blocks, max_period));
}

StripMatrix matrix_of(std::vector<std::vector<std::uint8_t>> entries) {
    StripMatrix m;
    m.entries = std::move(entries);
    int dim = static_cast<int>(m.entries.size());
    m.indices.resize(static_cast<std::size_t>(dim));
    for (auto& s : m.indices) s.cells = Grid({1, 1});
    m.phases.assign(static_cast<std::size_t>(dim), std::vector<int>(dim, -1));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (m.entries[i][j]) m.phases[i][j] = 0;
    return m;
}

// shortest directed cycle length by per-start breadth-first search
int naive_shortest_cycle(const std::vector<std::vector<std::uint8_t>>& e) {
    int dim = static_cast<int>(e.size()), best = -1;
    for (int s = 0; s < dim; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(dim), -1);
        std::vector<int> queue{s};
        dist[static_cast<std::size_t>(s)] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (int v = 0; v < dim; ++v) {
                if (!e[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
                if (v == s) {
                    int len = dist[static_cast<std::size_t>(u)] + 1;
                    if (best < 0 || len < best) best = len;
                }
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return best;
}

} // namespace

TEST_CASE("checkerboard strip matrix is a single self-loop at phase 0") {
    auto m = matrix_for(checkerboard(), 2);
    REQUIRE(m.dimension() == 1);
    CHECK(m.entries[0][0] == 1);
    CHECK(m.phases[0][0] == 0);
    CHECK_FALSE(m.pruned);
}

TEST_CASE("hard-square matrix at period budget 1 is all ones") {
    auto m = matrix_for(hard_square(), 1);
    REQUIRE(m.dimension() == 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(m.entries[i][j] == 1);
            CHECK(m.phases[i][j] >= 0);
        }
}

TEST_CASE("matrix entries against direct stacking checks") {
    for (const auto& spec : {hard_square(), diagonal_shift()}) {
        auto blocks = build_blocks(spec, normalize_to_cubes(spec));
        auto strips = enumerate_strips(spec, blocks, 2);
        auto m = build_strip_matrix(spec, strips);
        for (std::size_t lo = 0; lo < strips.size(); ++lo)
            for (std::size_t up = 0; up < strips.size(); ++up) {
                auto phases = compatible_phases(spec, strips[up], strips[lo]);
                CHECK(static_cast<bool>(m.entries[lo][up]) == !phases.empty());
                CHECK(m.phases[lo][up] == (phases.empty() ? -1 : phases.front()));
            }
    }
}

TEST_CASE("u_related and d_related read the two matrix directions") {
    auto m = matrix_of({{0, 1, 1}, {0, 0, 1}, {1, 0, 0}});
    CHECK(u_related(m, 0) == std::vector<int>{2});    // entries (j, 0)
    CHECK(u_related(m, 1) == std::vector<int>{0});
    CHECK(u_related(m, 2) == std::vector<int>{0, 1});
    CHECK(d_related(m, 0) == std::vector<int>{1, 2}); // entries (0, j)
    CHECK(d_related(m, 2) == std::vector<int>{0});
}

TEST_CASE("complementary support examples") {
    CHECK(complementary_support({{0, 1}, {0, 0}}).empty());
    CHECK(complementary_support({{1, 0}, {0, 0}}) == std::vector<int>{0});
    CHECK(complementary_support({{1, 0}, {0, 1}}) == std::vector<int>{0, 1});
    // chain without a return edge collapses entirely
    CHECK(complementary_support({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}).empty());
    // cycle plus a dangling index keeps only the cycle
    CHECK(complementary_support({{0, 1, 1}, {1, 0, 0}, {0, 0, 0}}) == std::vector<int>{0, 1});
}

TEST_CASE("prune compacts the matrix and sets the flag") {
    auto m = matrix_of({{0, 1, 1}, {1, 0, 0}, {0, 0, 0}});
    auto p = prune(m);
    CHECK(p.pruned);
    REQUIRE(p.dimension() == 2);
    CHECK(p.entries == std::vector<std::vector<std::uint8_t>>{{0, 1}, {1, 0}});
    CHECK(p.phases[0][1] == 0);
    CHECK(p.phases[1][0] == 0);
    CHECK(p.phases[0][0] == -1);
    CHECK(is_complementary(p, {0, 1}));
    // already-complementary matrices survive unchanged
    auto q = prune(p);
    CHECK(q.entries == p.entries);
}

TEST_CASE("pruning reaches the same fixpoint under any deletion order") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int dim = 1 + static_cast<int>(rng() % 10);
        auto e = random_matrix(rng, dim, 0.25 + 0.5 * (trial % 3));
        auto fix = complementary_support(e);
        for (int order = 0; order < 6; ++order) CHECK(ordered_prune(e, rng) == fix);
        StripMatrix m = matrix_of(e);
        if (!fix.empty()) CHECK(is_complementary(m, fix));
        // every deleted index breaks complementarity when re-added
        std::set<int> kept(fix.begin(), fix.end());
        for (int i = 0; i < dim; ++i) {
            if (kept.count(i)) continue;
            auto with = fix;
            with.push_back(i);
            std::sort(with.begin(), with.end());
            CHECK_FALSE(is_complementary(m, with));
        }
    }
}

TEST_CASE("find_cycle prefers the shortest cycle, then the earliest start") {
    auto m = matrix_of({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    auto c = find_cycle(m);
    REQUIRE(c.has_value());
    CHECK(c->nodes == std::vector<int>{2}); // the self-loop beats the 2-cycle
    CHECK(c->phases == std::vector<int>{0});

    auto two = find_cycle(matrix_of({{0, 1}, {1, 0}}));
    REQUIRE(two.has_value());
    CHECK(two->nodes == std::vector<int>{0, 1});

    CHECK_FALSE(find_cycle(matrix_of({{0, 1}, {0, 0}})).has_value());
    CHECK_FALSE(find_cycle(StripMatrix{}).has_value());
}

TEST_CASE("find_cycle length is minimal on random matrices") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 80; ++trial) {
        int dim = 1 + static_cast<int>(rng() % 9);
        auto m = matrix_of(random_matrix(rng, dim, 0.2));
        auto c = find_cycle(m);
        int naive = naive_shortest_cycle(m.entries);
        if (!c) {
            CHECK(naive == -1);
            continue;
        }
        CHECK(static_cast<int>(c->nodes.size()) == naive);
        for (std::size_t i = 0; i < c->nodes.size(); ++i) {
            int from = c->nodes[i];
            int to = c->nodes[(i + 1) % c->nodes.size()];
            CHECK(m.entries[from][to] == 1);
            CHECK(c->phases[i] == m.phases[from][to]);
        }
    }
}

TEST_CASE("synthesis: checkerboard certificate has primitive periods 2x2") {
    auto spec = checkerboard();
    auto m = prune(matrix_for(spec, 2));
    auto cycle = find_cycle(m);
    REQUIRE(cycle.has_value());
    auto point = synthesize_periodic_point(spec, m, *cycle);
    CHECK(point.verified);
    CHECK(point.torus.periods() == std::vector<int>{2, 2});
    CHECK(is_admissible_on_torus(spec, point.torus));
}

TEST_CASE("synthesis: hard-square certificate collapses to the zero point") {
    auto spec = hard_square();
    auto m = prune(matrix_for(spec, 2));
    auto cycle = find_cycle(m);
    REQUIRE(cycle.has_value());
    auto point = synthesize_periodic_point(spec, m, *cycle);
    CHECK(point.verified);
    CHECK(point.torus.periods() == std::vector<int>{1, 1});
    CHECK(point.torus.cells.cells() == std::vector<Symbol>{0});
}

TEST_CASE("synthesis follows nonzero phase drift around the cycle") {
    // all cells equal their upper-right neighbour; the primitive period-4
    // strip only stacks on itself two columns over, so the synthesized
    // torus must shear accordingly
    auto spec = diagonal_shift();
    auto blocks = build_blocks(spec, normalize_to_cubes(spec));
    auto strips = enumerate_strips(spec, blocks, 2);
    auto m = build_strip_matrix(spec, strips);
    int target = -1;
    for (int i = 0; i < m.dimension(); ++i)
        if (m.indices[i].cells.cells() == std::vector<Symbol>{0, 0, 0, 0, 1, 0, 0, 1})
            target = i;
    REQUIRE(target >= 0);
    REQUIRE(m.entries[target][target] == 1);
    CHECK(m.phases[target][target] == 2);
    Cycle cycle;
    cycle.nodes = {target};
    cycle.phases = {m.phases[target][target]};
    auto point = synthesize_periodic_point(spec, m, cycle);
    CHECK(point.verified);
    CHECK(point.torus.periods() == std::vector<int>{4, 4});
    CHECK(is_admissible_on_torus(spec, point.torus));
}

TEST_CASE("synthesis rejects empty cycles and cycles over zero entries") {
    auto m = matrix_of({{0, 1}, {1, 0}});
    CHECK_THROWS_AS(synthesize_periodic_point(full_shift2(), m, Cycle{}), std::invalid_argument);
    Cycle bad;
    bad.nodes = {0};
    bad.phases = {0};
    CHECK_THROWS_AS(synthesize_periodic_point(full_shift2(), m, bad), std::invalid_argument);
}

TEST_CASE("analyze: named specs") {
    auto hs = analyze(hard_square());
    CHECK(hs.verdict == Verdict::Nonempty);
    REQUIRE(hs.certificate.has_value());
    CHECK(hs.certificate->verified);
    CHECK(hs.certificate->torus.periods() == std::vector<int>{1, 1});

    auto cb = analyze(checkerboard());
    CHECK(cb.verdict == Verdict::Nonempty);
    CHECK(cb.certificate->torus.periods() == std::vector<int>{2, 2});
    CHECK(is_admissible_on_torus(checkerboard(), cb.certificate->torus));

    auto e1 = analyze(contradiction_spec());
    CHECK(e1.verdict == Verdict::Empty);
    CHECK(e1.empty_witness_n == 2);
    CHECK_FALSE(e1.certificate.has_value());

    auto e2 = analyze(forbid_all_singles());
    CHECK(e2.verdict == Verdict::Empty);
    CHECK(e2.empty_witness_n == 1);

    auto fs = analyze(full_shift2());
    CHECK(fs.verdict == Verdict::Nonempty);
    CHECK(fs.certificate->torus.periods() == std::vector<int>{1, 1});

    auto diag = analyze(diagonal_shift());
    CHECK(diag.verdict == Verdict::Nonempty);
    CHECK(diag.certificate->verified);
}

TEST_CASE("analyze beyond two dimensions falls back to the torus sweep") {
    auto gm = analyze(golden_mean_1d());
    CHECK(gm.verdict == Verdict::Nonempty);
    REQUIRE(gm.certificate.has_value());
    CHECK(gm.certificate->torus.periods() == std::vector<int>{1});
    CHECK(gm.certificate->torus.cells.cells() == std::vector<Symbol>{0});

    Alphabet a({"0", "1"});
    std::vector<FinitePattern> f;
    f.push_back(make_pattern(3, {{Coord{0, 0, 0}, 0}, {Coord{0, 0, 1}, 0}}));
    f.push_back(make_pattern(3, {{Coord{0, 0, 0}, 1}, {Coord{0, 0, 1}, 1}}));
    auto spec3 = make_spec(std::move(a), 3, std::move(f));
    auto r3 = analyze(spec3);
    CHECK(r3.verdict == Verdict::Nonempty);
    CHECK(r3.certificate->torus.periods() == std::vector<int>{2, 2, 2});
    CHECK(is_admissible_on_torus(spec3, r3.certificate->torus));
}

TEST_CASE("budget overruns degrade to UNKNOWN, never to a verdict") {
    Budgets tiny;
    tiny.max_cubes = 1;
    auto r = analyze(hard_square(), tiny);
    CHECK(r.verdict == Verdict::Unknown);
    CHECK_FALSE(r.diagnostic.empty());
    CHECK_FALSE(r.certificate.has_value());

    Budgets starved;
    starved.max_window_cells = 1; // emptiness scan cannot reach n = 2
    auto c = analyze(contradiction_spec(), starved);
    CHECK(c.verdict == Verdict::Unknown); // the true EMPTY is out of reach
}

TEST_CASE("find_periodic skips the emptiness scan") {
    auto r = find_periodic(contradiction_spec());
    CHECK(r.verdict == Verdict::Unknown); // zero strips, no cycle, no verdict
    CHECK_FALSE(r.certificate.has_value());
    auto hs = find_periodic(hard_square());
    CHECK(hs.verdict == Verdict::Nonempty);
    CHECK(hs.certificate->verified);
}

TEST_CASE("verdict names") {
    CHECK(to_string(Verdict::Nonempty) == "NONEMPTY");
    CHECK(to_string(Verdict::Empty) == "EMPTY");
    CHECK(to_string(Verdict::Unknown) == "UNKNOWN");
}
