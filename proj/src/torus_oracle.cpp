#include "sft/torus_oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace sft {

namespace {

// One pattern placement, compiled to (flat cell, required symbol) pairs.
// Placements are attached to their last touched cell in canonical order, so
// during a canonical-order fill every referenced cell is already assigned
// when the placement is checked.
struct Placement {
    std::vector<std::pair<std::uint32_t, Symbol>> need;
};

struct SearchPlan {
    std::vector<std::vector<Placement>> ending_at; // indexed by flat cell
};

std::uint32_t flat_index(const std::vector<int>& shape, const Coord& c) {
    std::uint32_t idx = 0;
    for (std::size_t a = 0; a < shape.size(); ++a)
        idx = idx * static_cast<std::uint32_t>(shape[a]) + static_cast<std::uint32_t>(c[a]);
    return idx;
}

SearchPlan build_plan(const SftSpec& spec, const std::vector<int>& shape, bool wrap) {
    const int d = static_cast<int>(shape.size());
    std::size_t total = 1;
    for (int e : shape) total *= static_cast<std::size_t>(e);
    SearchPlan plan;
    plan.ending_at.resize(total);

    for (const auto& p : spec.forbidden) {
        auto ext = p.extents();
        std::vector<int> limit(static_cast<std::size_t>(d));
        bool fits = true;
        for (int a = 0; a < d; ++a) {
            limit[a] = wrap ? shape[a] : shape[a] - ext[a] + 1;
            if (limit[a] <= 0) { fits = false; break; }
        }
        if (!fits) continue;

        Coord off(static_cast<std::size_t>(d), 0);
        for (;;) {
            Placement pl;
            bool contradictory = false;
            Coord q(static_cast<std::size_t>(d));
            for (const auto& [c, s] : p.cells) {
                for (int a = 0; a < d; ++a) {
                    q[a] = c[a] + off[a];
                    if (wrap) q[a] = floor_mod(q[a], shape[a]);
                }
                auto f = flat_index(shape, q);
                pl.need.emplace_back(f, s);
            }
            std::sort(pl.need.begin(), pl.need.end());
            // Wrapped placements can alias one cell twice; a placement that
            // demands two symbols of one cell can never match.
            for (std::size_t i = 0; i + 1 < pl.need.size() && !contradictory; ++i) {
                if (pl.need[i].first == pl.need[i + 1].first &&
                    pl.need[i].second != pl.need[i + 1].second)
                    contradictory = true;
            }
            if (!contradictory) {
                pl.need.erase(std::unique(pl.need.begin(), pl.need.end()), pl.need.end());
                plan.ending_at[pl.need.back().first].push_back(std::move(pl));
            }
            int a = d - 1;
            while (a >= 0) {
                if (++off[a] < limit[a]) break;
                off[a] = 0;
                --a;
            }
            if (a < 0) break;
        }
    }
    // Identical placements (possible under wrap aliasing) are redundant.
    for (auto& v : plan.ending_at) {
        std::sort(v.begin(), v.end(),
                  [](const Placement& a, const Placement& b) { return a.need < b.need; });
        v.erase(std::unique(v.begin(), v.end(),
                            [](const Placement& a, const Placement& b) { return a.need == b.need; }),
                v.end());
    }
    return plan;
}

// Fills cells in canonical order, trying symbols ascending, pruning as soon
// as a placement ending at the just-assigned cell fully matches. The
// visitor returns false to stop the search.
template <class Visitor>
bool backtrack(Grid& g, const SearchPlan& plan, int alphabet_size, std::size_t i, Visitor&& visit) {
    auto& cells = g.cells();
    if (i == cells.size()) return visit(g);
    for (Symbol s = 0; s < alphabet_size; ++s) {
        cells[i] = s;
        bool violated = false;
        for (const auto& pl : plan.ending_at[i]) {
            bool all = true;
            for (const auto& [f, need] : pl.need) {
                if (cells[f] != need) { all = false; break; }
            }
            if (all) { violated = true; break; }
        }
        if (!violated && !backtrack(g, plan, alphabet_size, i + 1, visit)) return false;
    }
    return true;
}

std::uint64_t cell_product(const std::vector<int>& shape) {
    std::uint64_t n = 1;
    for (int e : shape) {
        if (e <= 0) throw std::invalid_argument("periods and window sizes must be positive");
        n *= static_cast<std::uint64_t>(e);
    }
    return n;
}

} // namespace

bool is_admissible_on_torus(const SftSpec& spec, const TorusConfig& t) {
    if (spec.dim != t.dim())
        throw DimensionMismatch("spec and torus dimensions must agree");
    std::vector<bool> wrap(static_cast<std::size_t>(spec.dim), true);
    return window_admissible_wrapped(spec, t.cells, wrap);
}

std::vector<PeriodicPoint> enumerate_torus_configs(const SftSpec& spec,
                                                   const std::vector<int>& periods,
                                                   std::uint64_t cell_cap) {
    if (static_cast<int>(periods.size()) != spec.dim)
        throw DimensionMismatch("period vector arity does not match spec dimension");
    if (cell_product(periods) > cell_cap)
        throw CapExceeded("torus cell count exceeds the cap of " + std::to_string(cell_cap));
    auto plan = build_plan(spec, periods, true);
    Grid g(periods, 0);
    std::vector<PeriodicPoint> out;
    backtrack(g, plan, spec.alphabet.size(), 0, [&](const Grid& full) {
        TorusConfig t{full};
        PeriodicPoint p{t, false};
        p.verified = is_admissible_on_torus(spec, t);
        out.push_back(std::move(p));
        return true;
    });
    return out;
}

std::optional<PeriodicPoint> find_torus_config(const SftSpec& spec,
                                               const std::vector<int>& periods,
                                               std::uint64_t cell_cap) {
    if (static_cast<int>(periods.size()) != spec.dim)
        throw DimensionMismatch("period vector arity does not match spec dimension");
    if (cell_product(periods) > cell_cap)
        throw CapExceeded("torus cell count exceeds the cap of " + std::to_string(cell_cap));
    auto plan = build_plan(spec, periods, true);
    Grid g(periods, 0);
    std::optional<PeriodicPoint> found;
    backtrack(g, plan, spec.alphabet.size(), 0, [&](const Grid& full) {
        TorusConfig t{full};
        PeriodicPoint p{t, false};
        p.verified = is_admissible_on_torus(spec, t);
        found = std::move(p);
        return false;
    });
    return found;
}

std::uint64_t count_admissible_squares(const SftSpec& spec, int n, std::uint64_t cell_cap) {
    if (n < 1) throw std::invalid_argument("window size must be positive");
    std::vector<int> shape(static_cast<std::size_t>(spec.dim), n);
    if (cell_product(shape) > cell_cap)
        throw CapExceeded("window cell count exceeds the cap of " + std::to_string(cell_cap));
    auto plan = build_plan(spec, shape, false);
    Grid g(shape, 0);
    std::uint64_t count = 0;
    backtrack(g, plan, spec.alphabet.size(), 0, [&](const Grid&) {
        ++count;
        return true;
    });
    return count;
}

bool exists_admissible_square(const SftSpec& spec, int n, std::uint64_t cell_cap) {
    if (n < 1) throw std::invalid_argument("window size must be positive");
    std::vector<int> shape(static_cast<std::size_t>(spec.dim), n);
    if (cell_product(shape) > cell_cap)
        throw CapExceeded("window cell count exceeds the cap of " + std::to_string(cell_cap));
    auto plan = build_plan(spec, shape, false);
    Grid g(shape, 0);
    bool found = false;
    backtrack(g, plan, spec.alphabet.size(), 0, [&](const Grid&) {
        found = true;
        return false;
    });
    return found;
}

EmptinessResult emptiness_semidecision(const SftSpec& spec, int n_max, std::uint64_t cell_cap) {
    EmptinessResult r;
    for (int n = 1; n <= n_max; ++n) {
        std::uint64_t cells = 1;
        bool over = false;
        for (int a = 0; a < spec.dim; ++a) {
            cells *= static_cast<std::uint64_t>(n);
            if (cells > cell_cap) { over = true; break; }
        }
        if (over) break;
        if (!exists_admissible_square(spec, n, cell_cap)) {
            r.witness_n = n;
            r.scanned_up_to = n;
            return r;
        }
        r.scanned_up_to = n;
    }
    return r;
}

PeriodicPoint shift_point(const PeriodicPoint& p, const Coord& a) {
    const auto& periods = p.torus.periods();
    if (a.size() != periods.size())
        throw DimensionMismatch("shift vector arity does not match torus dimension");
    Grid out(periods, 0);
    const int d = p.torus.dim();
    Coord c(static_cast<std::size_t>(d), 0), q(static_cast<std::size_t>(d));
    for (;;) {
        for (int ax = 0; ax < d; ++ax) q[ax] = c[ax] + a[ax];
        out.at(c) = p.torus.cells.at_wrapped(q);
        int ax = d - 1;
        while (ax >= 0) {
            if (++c[ax] < periods[ax]) break;
            c[ax] = 0;
            --ax;
        }
        if (ax < 0) break;
    }
    return PeriodicPoint{TorusConfig{std::move(out)}, p.verified};
}

FinitePattern extract_pattern(const PeriodicPoint& p, const Coord& lo,
                              const std::vector<int>& extent) {
    const int d = p.torus.dim();
    if (static_cast<int>(lo.size()) != d || static_cast<int>(extent.size()) != d)
        throw DimensionMismatch("box arity does not match torus dimension");
    for (int e : extent)
        if (e <= 0) throw std::invalid_argument("box extents must be positive");
    std::vector<std::pair<Coord, Symbol>> cells;
    Coord off(static_cast<std::size_t>(d), 0), q(static_cast<std::size_t>(d));
    for (;;) {
        for (int a = 0; a < d; ++a) q[a] = lo[a] + off[a];
        cells.emplace_back(q, p.torus.cells.at_wrapped(q));
        int a = d - 1;
        while (a >= 0) {
            if (++off[a] < extent[a]) break;
            off[a] = 0;
            --a;
        }
        if (a < 0) break;
    }
    return make_pattern(d, std::move(cells));
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw CapExceeded("window count overflows 64 bits");
    return a + b;
}

// Row codes are base-k integers, digit x = the symbol in column x.
std::vector<std::vector<Symbol>> decode_rows(std::uint64_t row_count, int n, int k) {
    std::vector<std::vector<Symbol>> digits(row_count, std::vector<Symbol>(n));
    for (std::uint64_t code = 0; code < row_count; ++code) {
        auto c = code;
        for (int x = 0; x < n; ++x) {
            digits[code][x] = static_cast<Symbol>(c % static_cast<std::uint64_t>(k));
            c /= static_cast<std::uint64_t>(k);
        }
    }
    return digits;
}

} // namespace

std::uint64_t count_admissible_squares_transfer(const SftSpec& spec, int n) {
    if (spec.dim != 2)
        throw DimensionMismatch("transfer counting is two-dimensional only");
    if (n < 1) throw std::invalid_argument("window size must be positive");
    const int k = spec.alphabet.size();
    std::uint64_t row_count = saturating_pow(static_cast<std::uint64_t>(k),
                                             static_cast<std::uint64_t>(n), 1u << 16);
    if (row_count > (1u << 16))
        throw CapExceeded("row state space too large for the transfer scan");
    auto digits = decode_rows(row_count, n, k);

    // Only patterns that fit the window can occur in it.
    std::vector<const FinitePattern*> pats;
    int h = 1;
    for (const auto& p : spec.forbidden) {
        auto ext = p.extents();
        if (ext[0] <= n && ext[1] <= n) {
            pats.push_back(&p);
            h = std::max(h, ext[1]);
        }
    }
    const int keep = h - 1; // rows of memory the scan carries

    // Appending row y = m to the kept rows: every placement whose topmost
    // row is m must miss. Rows below come from the key (most recent last).
    auto row_sym = [&](const std::vector<std::uint32_t>& key, std::uint32_t next, int back,
                       int x) -> Symbol {
        // back = 0 is the new row, back = j is j rows earlier
        if (back == 0) return digits[next][x];
        return digits[key[key.size() - static_cast<std::size_t>(back)]][x];
    };
    auto can_append = [&](const std::vector<std::uint32_t>& key, std::uint32_t next,
                          int rows_done) -> bool {
        for (const auto* p : pats) {
            auto ext = p->extents();
            const int hp = ext[1];
            if (hp > rows_done + 1) continue;
            for (int ox = 0; ox + ext[0] <= n; ++ox) {
                bool all = true;
                for (const auto& [c, s] : p->cells) {
                    const int back = (hp - 1) - c[1];
                    if (row_sym(key, next, back, ox + c[0]) != s) { all = false; break; }
                }
                if (all) return false;
            }
        }
        return true;
    };

    std::map<std::vector<std::uint32_t>, std::uint64_t> states;
    states[{}] = 1;
    std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> memo;
    for (int m = 0; m < n; ++m) {
        std::map<std::vector<std::uint32_t>, std::uint64_t> next_states;
        for (const auto& [key, cnt] : states) {
            auto it = memo.find(key);
            if (it == memo.end()) {
                std::vector<std::uint32_t> ok;
                for (std::uint32_t r = 0; r < row_count; ++r)
                    if (can_append(key, r, m)) ok.push_back(r);
                it = memo.emplace(key, std::move(ok)).first;
            }
            for (std::uint32_t r : it->second) {
                auto nk = key;
                nk.push_back(r);
                if (static_cast<int>(nk.size()) > keep)
                    nk.erase(nk.begin(), nk.begin() + (static_cast<int>(nk.size()) - keep));
                auto& slot = next_states[nk];
                slot = checked_add(slot, cnt);
            }
        }
        states = std::move(next_states);
        if (states.empty()) return 0;
    }
    std::uint64_t total = 0;
    for (const auto& [key, cnt] : states) total = checked_add(total, cnt);
    return total;
}

std::uint64_t count_cube_admissible_squares(const CubeSystem& cubes, int alphabet_size, int n) {
    if (cubes.dim != 2)
        throw DimensionMismatch("cube-occurrence counting is two-dimensional only");
    if (n < 1) throw std::invalid_argument("window size must be positive");
    const int k = alphabet_size;
    const int l = cubes.side;
    if (n < l) {
        auto v = saturating_pow(static_cast<std::uint64_t>(k),
                                static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n),
                                std::numeric_limits<std::uint64_t>::max() - 1);
        if (v > std::numeric_limits<std::uint64_t>::max() - 1)
            throw CapExceeded("window count overflows 64 bits");
        return v; // no cube fits, every window is vacuously admissible
    }
    std::uint64_t row_count = saturating_pow(static_cast<std::uint64_t>(k),
                                             static_cast<std::uint64_t>(n), 1u << 16);
    if (row_count > (1u << 16))
        throw CapExceeded("row state space too large for the transfer scan");
    auto digits = decode_rows(row_count, n, k);

    // Pack each allowed cube into a base-k code over its canonical cell
    // order for O(1) membership checks.
    const std::uint64_t code_space = saturating_pow(
        static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(l) * static_cast<std::uint64_t>(l),
        std::numeric_limits<std::uint64_t>::max() - 1);
    if (code_space > std::numeric_limits<std::uint64_t>::max() - 1)
        throw CapExceeded("cube code space too large");
    std::unordered_set<std::uint64_t> allowed;
    allowed.reserve(cubes.allowed.size() * 2);
    for (const auto& c : cubes.allowed) {
        std::uint64_t code = 0;
        for (auto it = c.cells().rbegin(); it != c.cells().rend(); ++it)
            code = code * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(*it);
        allowed.insert(code);
    }

    // The kept rows are the last l-1; appending row m completes, for every
    // viable x, the l×l window with top row m, which must be allowed.
    auto can_append = [&](const std::vector<std::uint32_t>& key, std::uint32_t next,
                          int rows_done) -> bool {
        if (rows_done + 1 < l) return true;
        for (int ox = 0; ox + l <= n; ++ox) {
            std::uint64_t code = 0;
            // canonical cell order: x-major, y fastest; build from the
            // highest index down so each digit lands at weight k^i
            for (int dx = l - 1; dx >= 0; --dx) {
                for (int dy = l - 1; dy >= 0; --dy) {
                    const int back = (l - 1) - dy;
                    Symbol s = back == 0
                                   ? digits[next][ox + dx]
                                   : digits[key[key.size() - static_cast<std::size_t>(back)]][ox + dx];
                    code = code * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(s);
                }
            }
            if (!allowed.contains(code)) return false;
        }
        return true;
    };

    const int keep = l - 1;
    std::map<std::vector<std::uint32_t>, std::uint64_t> states;
    states[{}] = 1;
    std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> memo;
    for (int m = 0; m < n; ++m) {
        std::map<std::vector<std::uint32_t>, std::uint64_t> next_states;
        for (const auto& [key, cnt] : states) {
            auto it = memo.find(key);
            if (it == memo.end()) {
                std::vector<std::uint32_t> ok;
                for (std::uint32_t r = 0; r < row_count; ++r)
                    if (can_append(key, r, m)) ok.push_back(r);
                it = memo.emplace(key, std::move(ok)).first;
            }
            for (std::uint32_t r : it->second) {
                auto nk = key;
                nk.push_back(r);
                if (static_cast<int>(nk.size()) > keep)
                    nk.erase(nk.begin(), nk.begin() + (static_cast<int>(nk.size()) - keep));
                auto& slot = next_states[nk];
                slot = checked_add(slot, cnt);
            }
        }
        states = std::move(next_states);
        if (states.empty()) return 0;
    }
    std::uint64_t total = 0;
    for (const auto& [key, cnt] : states) total = checked_add(total, cnt);
    return total;
}

} // namespace sft
