#include "kohnert/serialize.hpp"

#include "kohnert/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace kohnert {

Json to_json(const Composition& a)
{
    return Json(a.vec());
}

Json to_json(const Cell& c)
{
    return Json::array({c.row, c.col});
}

Json to_json(const Diagram& d)
{
    Json j = Json::array();
    for (const Cell& c : d.cells())
        j.push_back(to_json(c));
    return j;
}

Json to_json(const LabeledDiagram& t)
{
    Json j = Json::array();
    for (const Entry& e : t.entries())
        j.push_back(Json::array({e.cell.row, e.cell.col, e.label}));
    return j;
}

Json to_json(const Polynomial& p)
{
    static const Coefficient lo = std::numeric_limits<std::int64_t>::min();
    static const Coefficient hi = std::numeric_limits<std::int64_t>::max();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json coef = (c >= lo && c <= hi) ? Json(c.convert_to<std::int64_t>()) : Json(c.str());
        terms.push_back({{"exp", e}, {"coef", coef}});
    }
    return {{"n", p.variables()}, {"terms", terms}};
}

Json to_json(const CrystalGraph& g)
{
    Json vertices = Json::array();
    for (const LabeledDiagram& v : g.vertices)
        vertices.push_back(to_json(v));
    Json edges = Json::array();
    for (const CrystalEdge& e : g.edges)
        edges.push_back(Json::array({e.source, e.target, e.color}));
    return {{"kind", std::string(to_string(g.kind))},
            {"content", to_json(g.content)},
            {"vertices", vertices},
            {"edges", edges}};
}

Json to_json(const UnlockTrace& trace)
{
    Json steps = Json::array();
    for (const UnlockStep& s : trace.steps) {
        Json swaps = Json::array();
        for (const Swap& w : s.swaps)
            swaps.push_back(Json::array({to_json(w.x_from), to_json(w.y_from), w.x_label, w.y_label}));
        steps.push_back({{"op", s.op},
                         {"chosen", Json::array({s.chosen.cell.row, s.chosen.cell.col, s.chosen.label})},
                         {"swaps", swaps},
                         {"push", Json::array({to_json(s.push_from), to_json(s.push_to)})}});
    }
    return {{"schedule", trace.schedule.indices},
            {"steps", steps},
            {"input", to_json(trace.input)},
            {"output", to_json(trace.output)}};
}

Json to_json(const VerificationReport& r)
{
    Json failures = Json::array();
    for (const Failure& f : r.failures)
        failures.push_back({{"composition", to_json(f.comp)}, {"witness", f.witness}});
    return {{"check", r.check},
            {"tested", r.tested},
            {"passed", r.passed()},
            {"failures", failures},
            {"elapsed_seconds", r.elapsed_seconds}};
}

namespace {

int int_at(const Json& j, std::size_t k, std::size_t index)
{
    if (!j[k].is_number_integer())
        throw InvalidInput("element " + std::to_string(index) + ": expected integers, got " + j.dump());
    return j[k].get<int>();
}

} // namespace

Diagram diagram_from_json(const Json& j)
{
    if (!j.is_array())
        throw InvalidInput("diagram must be an array of [row, col] pairs");
    std::vector<Cell> cells;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const Json& c = j[k];
        if (!c.is_array() || c.size() != 2)
            throw InvalidInput("element " + std::to_string(k) + ": expected [row, col], got " + c.dump());
        cells.push_back({int_at(c, 0, k), int_at(c, 1, k)});
    }
    try {
        return Diagram(std::move(cells));
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
}

LabeledDiagram labeled_from_json(const Json& j)
{
    if (!j.is_array())
        throw InvalidInput("tableau must be an array of [row, col, label] triples");
    std::vector<Entry> entries;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const Json& e = j[k];
        if (!e.is_array() || e.size() != 3)
            throw InvalidInput("element " + std::to_string(k) + ": expected [row, col, label], got " + e.dump());
        entries.push_back({{int_at(e, 0, k), int_at(e, 1, k)}, int_at(e, 2, k)});
    }
    try {
        return LabeledDiagram(std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
}

LabeledDiagram parse_labeled_diagram(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw InvalidInput("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return labeled_from_json(j);
}

namespace {

/// Grid of strings indexed [row][col], 1-based.
std::string render_grid(const std::map<Cell, std::string>& cells, int top, int width)
{
    std::size_t w = 1;
    for (const auto& [c, s] : cells)
        w = std::max(w, s.size());
    std::ostringstream os;
    for (int r = top; r >= 1; --r) {
        std::string line;
        for (int c = 1; c <= width; ++c) {
            auto it = cells.find({r, c});
            std::string s = it == cells.end() ? "." : it->second;
            if (c > 1)
                line += ' ';
            line += std::string(w - s.size(), ' ') + s;
        }
        os << line << '\n';
    }
    const std::size_t rule = width > 0 ? width * (w + 1) - 1 : 1;
    os << std::string(rule, '-') << '\n';
    return os.str();
}

} // namespace

std::string render_ascii(const Diagram& d)
{
    std::map<Cell, std::string> cells;
    for (const Cell& c : d.cells())
        cells.emplace(c, "#");
    return render_grid(cells, d.top_row(), d.max_col());
}

std::string render_ascii(const LabeledDiagram& t)
{
    std::map<Cell, std::string> cells;
    for (const Entry& e : t.entries())
        cells.emplace(e.cell, std::to_string(e.label));
    const Diagram d = t.diagram();
    return render_grid(cells, d.top_row(), d.max_col());
}

std::string compact_string(const LabeledDiagram& t)
{
    const Diagram d = t.diagram();
    if (d.empty())
        return "()";
    std::string out;
    for (int r = d.top_row(); r >= 1; --r) {
        if (r != d.top_row())
            out += '/';
        for (int c = 1; c <= d.max_col(); ++c) {
            if (c > 1)
                out += ' ';
            auto l = t.label_at({r, c});
            out += l ? std::to_string(*l) : ".";
        }
    }
    return out;
}

namespace {

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out + '"';
}

const char* edge_color(int i)
{
    static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
    return palette[(i - 1) % 8];
}

} // namespace

std::string to_dot(const CrystalGraph& g)
{
    std::ostringstream os;
    os << "digraph " << quoted(std::string(to_string(g.kind)) + " crystal " + g.content.to_string()) << " {\n";
    os << "  node [shape=box, fontname=monospace];\n";
    std::vector<std::string> ids;
    for (const LabeledDiagram& v : g.vertices) {
        ids.push_back(quoted(to_json(v).dump()));
        os << "  " << ids.back() << " [label=" << quoted(compact_string(v)) << "];\n";
    }
    for (const CrystalEdge& e : g.edges)
        os << "  " << ids[e.source] << " -> " << ids[e.target] << " [label=" << e.color
           << ", color=" << edge_color(e.color) << ", fontcolor=" << edge_color(e.color) << "];\n";
    os << "}\n";
    return os.str();
}

} // namespace kohnert
