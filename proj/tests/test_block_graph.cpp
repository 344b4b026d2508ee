#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sft/block_graph.hpp"
#include "test_support.hpp"

using namespace sft;
using namespace testsup;

TEST_CASE("stack_vertical and concat_horizontal") {
    Grid top = make_grid2(2, 1);
    top.cells() = {2, 3}; // (0,0)=2 (1,0)=3
    Grid bottom = make_grid2(2, 1);
    bottom.cells() = {0, 1};
    auto stacked = stack_vertical(top, bottom);
    CHECK(stacked.shape() == std::vector<int>{2, 2});
    CHECK(stacked.at2(0, 0) == 0);
    CHECK(stacked.at2(0, 1) == 2);
    CHECK(stacked.at2(1, 0) == 1);
    CHECK(stacked.at2(1, 1) == 3);

    auto side = concat_horizontal(bottom, top);
    CHECK(side.shape() == std::vector<int>{4, 1});
    CHECK(side.cells() == std::vector<Symbol>{0, 1, 2, 3});

    CHECK_THROWS_AS(stack_vertical(make_grid2(2, 1), make_grid2(3, 1)), DimensionMismatch);
    CHECK_THROWS_AS(concat_horizontal(make_grid2(1, 2), make_grid2(1, 3)), DimensionMismatch);
}

TEST_CASE("hard-square blocks are the 7 allowed squares") {
    auto spec = hard_square();
    auto blocks = build_blocks(spec, normalize_to_cubes(spec));
    REQUIRE(blocks.size() == 7);
    for (const auto& b : blocks) CHECK(naive_admissible(spec, b, false));
    CHECK(std::is_sorted(blocks.begin(), blocks.end()));
}

TEST_CASE("build_blocks is two-dimensional only") {
    auto spec = golden_mean_1d();
    CHECK_THROWS_AS(build_blocks(spec, normalize_to_cubes(spec)), DimensionMismatch);
}

TEST_CASE("hard-square vpairs: every admissible 2x4 stack") {
    auto spec = hard_square();
    auto blocks = build_blocks(spec, normalize_to_cubes(spec));
    auto vpairs = build_vpairs(spec, blocks);
    CHECK(vpairs.size() == 41); // brute-force count of 2-wide 4-tall windows
    for (const auto& p : vpairs)
        CHECK(naive_admissible(spec, stack_vertical(p.top, p.bottom), false));
    CHECK(std::is_sorted(vpairs.begin(), vpairs.end()));
}

TEST_CASE("checkerboard vpairs are the two self-stacks") {
    auto spec = checkerboard();
    auto blocks = build_blocks(spec, normalize_to_cubes(spec));
    REQUIRE(blocks.size() == 2);
    auto vpairs = build_vpairs(spec, blocks);
    REQUIRE(vpairs.size() == 2);
    CHECK(vpairs[0].top == vpairs[0].bottom); // each tile only stacks on itself
    CHECK(vpairs[1].top == vpairs[1].bottom);
    CHECK(vpairs[0].top == blocks[0]);
    CHECK(vpairs[1].top == blocks[1]);
}

TEST_CASE("checkerboard h-matrix is the identity: tiles continue themselves") {
    auto spec = checkerboard();
    auto blocks = build_blocks(spec, normalize_to_cubes(spec));
    auto m = build_hmatrix(spec, build_vpairs(spec, blocks));
    REQUIRE(m.indices.size() == 2);
    REQUIRE(m.entries.size() == 2);
    int ones = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ones += m.entries[i][j];
    CHECK(ones == 2);
    CHECK(m.entries[0][0] == 1);
    CHECK(m.entries[1][1] == 1);
}

TEST_CASE("h-matrix entries match the naive window check") {
    auto spec = hard_square();
    auto blocks = build_blocks(spec, normalize_to_cubes(spec));
    auto vpairs = build_vpairs(spec, blocks);
    auto m = build_hmatrix(spec, vpairs);
    REQUIRE(m.indices.size() == vpairs.size());
    for (std::size_t i = 0; i < vpairs.size(); ++i)
        for (std::size_t j = 0; j < vpairs.size(); ++j) {
            auto window = concat_horizontal(stack_vertical(vpairs[i].top, vpairs[i].bottom),
                                            stack_vertical(vpairs[j].top, vpairs[j].bottom));
            CHECK(static_cast<bool>(m.entries[i][j]) == naive_admissible(spec, window, false));
        }
}

TEST_CASE("full shift: every block pairs with every block") {
    auto spec = full_shift2();
    auto blocks = build_blocks(spec, normalize_to_cubes(spec));
    REQUIRE(blocks.size() == 2);
    auto vpairs = build_vpairs(spec, blocks);
    REQUIRE(vpairs.size() == 4);
    auto m = build_hmatrix(spec, vpairs);
    for (const auto& row : m.entries)
        for (auto e : row) CHECK(e == 1);
}

TEST_CASE("block adjacency against the naive check, with cap") {
    auto spec = hard_square();
    auto blocks = build_blocks(spec, normalize_to_cubes(spec));
    auto adj = block_adjacency(spec, blocks);
    REQUIRE(adj.size() == blocks.size());
    std::uint64_t ones = 0;
    for (std::size_t u = 0; u < blocks.size(); ++u)
        for (std::size_t v = 0; v < blocks.size(); ++v) {
            auto window = concat_horizontal(blocks[u], blocks[v]);
            CHECK(static_cast<bool>(adj[u][v]) == naive_admissible(spec, window, false));
            ones += adj[u][v];
        }
    CHECK(ones == 41); // brute-force count of 4-wide 2-tall windows
    CHECK_THROWS_AS(block_adjacency(spec, blocks, 48), CapExceeded);
}
