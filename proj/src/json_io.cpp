#include "sft/json_io.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "sft/errors.hpp"

namespace sft {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw UnknownFormat("malformed document: " + what);
}

Symbol symbol_from_name(const Json& name, const Alphabet& a) {
    require(name.is_string(), "symbol name must be a string");
    auto idx = a.index_of(name.get<std::string>());
    require(idx.has_value(), "unknown symbol '" + name.get<std::string>() + "'");
    return *idx;
}

Json bit_rows(const std::vector<std::vector<std::uint8_t>>& entries) {
    Json rows = Json::array();
    for (const auto& row : entries) {
        std::string bits;
        bits.reserve(row.size());
        for (auto b : row) bits.push_back(b ? '1' : '0');
        rows.push_back(bits);
    }
    return rows;
}

} // namespace

Json grid_rows(const Grid& g, const Alphabet& a) {
    if (g.dim() != 2) throw DimensionMismatch("row serialization needs a 2-d grid");
    Json rows = Json::array();
    for (int y = g.shape()[1] - 1; y >= 0; --y) {
        Json row = Json::array();
        for (int x = 0; x < g.shape()[0]; ++x) row.push_back(a.name(g.at2(x, y)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Grid grid_from_rows(const Json& rows, const Alphabet& a) {
    require(rows.is_array() && !rows.empty(), "rows must be a non-empty array");
    int height = static_cast<int>(rows.size());
    require(rows[0].is_array() && !rows[0].empty(), "each row must be a non-empty array");
    int width = static_cast<int>(rows[0].size());
    Grid g({width, height});
    for (int r = 0; r < height; ++r) {
        require(rows[r].is_array() && static_cast<int>(rows[r].size()) == width,
                "rows must share one width");
        for (int x = 0; x < width; ++x)
            g.at2(x, height - 1 - r) = symbol_from_name(rows[r][x], a);
    }
    return g;
}

Json to_json(const SftSpec& spec) {
    Json j;
    j["type"] = "sft_spec";
    j["dim"] = spec.dim;
    j["alphabet"] = spec.alphabet.symbols();
    Json forbidden = Json::array();
    for (const auto& p : spec.forbidden) {
        Json cells = Json::array();
        for (const auto& [c, s] : p.cells) {
            Json cell;
            cell["at"] = c;
            cell["is"] = spec.alphabet.name(s);
            cells.push_back(std::move(cell));
        }
        forbidden.push_back(std::move(cells));
    }
    j["forbidden"] = std::move(forbidden);
    return j;
}

SftSpec spec_from_json(const Json& j) {
    require(j.is_object() && j.value("type", "") == "sft_spec", "expected an sft_spec document");
    require(j.contains("dim") && j["dim"].is_number_integer(), "dim must be an integer");
    int dim = j["dim"].get<int>();
    require(j.contains("alphabet") && j["alphabet"].is_array(), "alphabet must be an array");
    Alphabet alphabet(j["alphabet"].get<std::vector<std::string>>());
    std::vector<FinitePattern> forbidden;
    for (const auto& cells : j.value("forbidden", Json::array())) {
        require(cells.is_array(), "each forbidden pattern must be an array of cells");
        std::vector<std::pair<Coord, Symbol>> out;
        for (const auto& cell : cells) {
            require(cell.is_object() && cell.contains("at") && cell.contains("is"),
                    "cells must carry 'at' and 'is'");
            out.emplace_back(cell["at"].get<Coord>(), symbol_from_name(cell["is"], alphabet));
        }
        forbidden.push_back(make_pattern(dim, std::move(out)));
    }
    return make_spec(std::move(alphabet), dim, std::move(forbidden));
}

Json to_json(const PeriodicStrip& s, const Alphabet& a) {
    Json j;
    j["height"] = s.height();
    j["period"] = s.period();
    j["rows"] = grid_rows(s.cells, a);
    return j;
}

Json to_json(const StripMatrix& m, const Alphabet& a) {
    Json j;
    j["type"] = "strip_matrix";
    j["pruned"] = m.pruned;
    j["dimension"] = m.dimension();
    Json strips = Json::array();
    for (const auto& s : m.indices) strips.push_back(to_json(s, a));
    j["strips"] = std::move(strips);
    j["rows"] = bit_rows(m.entries);
    j["phases"] = m.phases;
    return j;
}

Json to_json(const HMatrix& m, const Alphabet& a) {
    Json j;
    j["type"] = "h_matrix";
    j["dimension"] = static_cast<int>(m.indices.size());
    Json pairs = Json::array();
    for (const auto& p : m.indices) {
        Json pair;
        pair["top"] = grid_rows(p.top, a);
        pair["bottom"] = grid_rows(p.bottom, a);
        pairs.push_back(std::move(pair));
    }
    j["pairs"] = std::move(pairs);
    j["rows"] = bit_rows(m.entries);
    return j;
}

Json to_json(const PeriodicPoint& p, const Alphabet& a) {
    Json j;
    j["type"] = "periodic_point";
    j["alphabet"] = a.symbols();
    j["periods"] = p.torus.periods();
    Json cells = Json::array();
    for (auto s : p.torus.cells.cells()) cells.push_back(a.name(s));
    j["cells"] = std::move(cells);
    j["verified"] = p.verified;
    if (p.torus.dim() == 2) {
        auto chars = symbol_chars(a);
        Json rows = Json::array();
        const Grid& g = p.torus.cells;
        for (int y = g.shape()[1] - 1; y >= 0; --y) {
            std::string row;
            for (int x = 0; x < g.shape()[0]; ++x)
                row.push_back(chars[static_cast<std::size_t>(g.at2(x, y))]);
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
    }
    return j;
}

std::pair<PeriodicPoint, Alphabet> point_from_json(const Json& j) {
    require(j.is_object() && j.value("type", "") == "periodic_point",
            "expected a periodic_point document");
    require(j.contains("alphabet") && j["alphabet"].is_array(), "alphabet must be an array");
    Alphabet alphabet(j["alphabet"].get<std::vector<std::string>>());
    require(j.contains("periods") && j["periods"].is_array(), "periods must be an array");
    auto periods = j["periods"].get<std::vector<int>>();
    for (int p : periods) require(p >= 1, "periods must be positive");
    Grid g(periods);
    require(j.contains("cells") && j["cells"].is_array() &&
                j["cells"].size() == static_cast<std::size_t>(g.size()),
            "cells must list one symbol per torus cell");
    auto& cells = g.cells();
    for (std::size_t i = 0; i < cells.size(); ++i)
        cells[i] = symbol_from_name(j["cells"][i], alphabet);
    PeriodicPoint point;
    point.torus.cells = std::move(g);
    point.verified = j.value("verified", false);
    return {std::move(point), std::move(alphabet)};
}

Json to_json(const AnalysisReport& r, const Alphabet& a) {
    Json j;
    j["type"] = "analysis_report";
    j["status"] = to_string(r.verdict);
    j["witness_n"] = r.empty_witness_n ? Json(*r.empty_witness_n) : Json(nullptr);
    j["certificate"] = r.certificate ? to_json(*r.certificate, a) : Json(nullptr);
    Json budgets;
    budgets["max_period"] = r.budgets.max_period;
    budgets["n_max"] = r.budgets.n_max;
    budgets["max_cubes"] = r.budgets.max_cubes;
    budgets["max_window_cells"] = r.budgets.max_window_cells;
    budgets["max_strip_candidates"] = r.budgets.max_strip_candidates;
    budgets["max_block_pairs"] = r.budgets.max_block_pairs;
    budgets["max_matrix_pairs"] = r.budgets.max_matrix_pairs;
    j["budgets"] = std::move(budgets);
    j["diagnostic"] = r.diagnostic;
    j["timings"] = nullptr;
    return j;
}

std::string to_dot(const StripMatrix& m) {
    std::ostringstream out;
    out << "digraph strip_matrix {\n  rankdir=BT;\n";
    for (int i = 0; i < m.dimension(); ++i)
        out << "  s" << i << " [label=\"s" << i << " q=" << m.indices[i].period() << "\"];\n";
    for (int lower = 0; lower < m.dimension(); ++lower)
        for (int upper = 0; upper < m.dimension(); ++upper)
            if (m.entries[lower][upper])
                out << "  s" << lower << " -> s" << upper << " [label=\""
                    << m.phases[lower][upper] << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const HMatrix& m) {
    std::ostringstream out;
    out << "digraph h_matrix {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < m.indices.size(); ++i) out << "  p" << i << ";\n";
    for (std::size_t i = 0; i < m.indices.size(); ++i)
        for (std::size_t k = 0; k < m.indices.size(); ++k)
            if (m.entries[i][k]) out << "  p" << i << " -> p" << k << ";\n";
    out << "}\n";
    return out.str();
}

std::vector<char> symbol_chars(const Alphabet& a) {
    const auto& names = a.symbols();
    std::vector<char> chars(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) chars[i] = names[i][0];
    for (std::size_t i = 0; i < chars.size(); ++i) {
        bool collides = false;
        for (std::size_t k = 0; k < chars.size(); ++k)
            if (k != i && names[k][0] == names[i][0]) collides = true;
        if (collides) chars[i] = static_cast<char>('0' + i % 10);
    }
    return chars;
}

std::vector<std::array<unsigned char, 3>> symbol_palette(int count) {
    std::vector<std::array<unsigned char, 3>> palette;
    palette.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        double h = count > 0 ? 360.0 * i / count : 0.0;
        double s = 0.7, v = 0.95;
        double c = v * s;
        double x = c * (1.0 - std::fabs(std::fmod(h / 60.0, 2.0) - 1.0));
        double m = v - c;
        double r = 0, g = 0, b = 0;
        switch (static_cast<int>(h / 60.0) % 6) {
            case 0: r = c, g = x; break;
            case 1: r = x, g = c; break;
            case 2: g = c, b = x; break;
            case 3: g = x, b = c; break;
            case 4: r = x, b = c; break;
            case 5: r = c, b = x; break;
        }
        palette.push_back({static_cast<unsigned char>(std::lround((r + m) * 255.0)),
                           static_cast<unsigned char>(std::lround((g + m) * 255.0)),
                           static_cast<unsigned char>(std::lround((b + m) * 255.0))});
    }
    return palette;
}

std::string render_point(const PeriodicPoint& p, const Alphabet& a, int width, int height,
                         const std::string& format) {
    if (p.torus.dim() != 2) throw DimensionMismatch("rendering needs a 2-d point");
    if (width < 1 || height < 1) throw UnknownFormat("render size must be positive");
    const Grid& g = p.torus.cells;
    if (format == "ascii") {
        auto chars = symbol_chars(a);
        std::string out;
        out.reserve(static_cast<std::size_t>((width + 1)) * height);
        for (int r = 0; r < height; ++r) {
            int y = height - 1 - r;
            for (int x = 0; x < width; ++x) {
                std::array<int, 2> c{x, y};
                out.push_back(chars[static_cast<std::size_t>(g.at_wrapped(c))]);
            }
            out.push_back('\n');
        }
        return out;
    }
    if (format == "ppm") {
        auto palette = symbol_palette(a.size());
        std::string out = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
        for (int r = 0; r < height; ++r) {
            int y = height - 1 - r;
            for (int x = 0; x < width; ++x) {
                std::array<int, 2> c{x, y};
                const auto& rgb = palette[static_cast<std::size_t>(g.at_wrapped(c))];
                out.push_back(static_cast<char>(rgb[0]));
                out.push_back(static_cast<char>(rgb[1]));
                out.push_back(static_cast<char>(rgb[2]));
            }
        }
        return out;
    }
    throw UnknownFormat("unknown render format '" + format + "'");
}

} // namespace sft
