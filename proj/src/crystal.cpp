#include "kohnert/crystal.hpp"

#include "kohnert/error.hpp"
#include "pairing.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace kohnert {

VerticalPairing vertical_pairing(const Diagram& d, int i)
{
    if (i < 1)
        throw InvalidInput("pairing index must be >= 1");
    std::vector<int> lower = d.row_cols(i);
    std::vector<int> upper = d.row_cols(i + 1);
    std::set<int> cols(lower.begin(), lower.end());
    cols.insert(upper.begin(), upper.end());

    std::vector<detail::ScanSlot> slots;
    for (int c : cols) {
        detail::ScanSlot s;
        if (std::binary_search(lower.begin(), lower.end(), c))
            s.opener = Cell{i, c};
        if (std::binary_search(upper.begin(), upper.end(), c))
            s.closer = Cell{i + 1, c};
        slots.push_back(s);
    }
    detail::Matching m = detail::match_slots(slots);
    return {std::move(m.pairs), std::move(m.unpaired_closers), std::move(m.unpaired_openers)};
}

std::optional<Diagram> raise_diagram(const Diagram& d, int i)
{
    VerticalPairing p = vertical_pairing(d, i);
    if (p.unpaired_upper.empty())
        return std::nullopt;
    const Cell from = p.unpaired_upper.back();
    return d.moved(from, {i, from.col});
}

std::optional<Diagram> lower_diagram(const Diagram& d, int i)
{
    VerticalPairing p = vertical_pairing(d, i);
    if (p.unpaired_lower.empty())
        return std::nullopt;
    const Cell from = p.unpaired_lower.front();
    return d.moved(from, {i + 1, from.col});
}

std::optional<LabeledDiagram> raise_kkt(const LabeledDiagram& t, const Composition& a, int i)
{
    auto d = raise_diagram(t.diagram(), i);
    if (!d)
        return std::nullopt;
    auto out = label_key(*d, a);
    if (!out)
        throw TheoremViolation("raising a key Kohnert tableau left KKT" + a.to_string());
    return out;
}

std::optional<LabeledDiagram> raise_lkt(const LabeledDiagram& t, const Composition& a, int i)
{
    VerticalPairing p = vertical_pairing(t.diagram(), i);
    if (p.unpaired_upper.empty())
        return std::nullopt;
    const Cell x = p.unpaired_upper.back();
    const int label = *t.label_at(x);
    for (const Entry& e : t.entries())
        if (e.cell.row == x.row && e.cell.col > x.col && e.label == label)
            return std::nullopt;

    std::vector<Entry> entries(t.entries().begin(), t.entries().end());
    for (Entry& e : entries)
        if (e.cell == x)
            e.cell.row = i;
    LabeledDiagram out(std::move(entries));
    if (!validate_lkt(out, a))
        throw TheoremViolation("lock raising rule produced an invalid lock tableau");
    return out;
}

std::optional<LabeledDiagram> lower_kkt(const LabeledDiagram& t, const Composition& a, int i)
{
    auto d = lower_diagram(t.diagram(), i);
    if (!d)
        return std::nullopt;
    auto out = label_key(*d, a);
    if (!out)
        return std::nullopt;
    if (raise_kkt(*out, a, i) != t)
        throw TheoremViolation("key lowering is not inverse to raising");
    return out;
}

std::optional<LabeledDiagram> lower_lkt(const LabeledDiagram& t, const Composition& a, int i)
{
    auto d = lower_diagram(t.diagram(), i);
    if (!d)
        return std::nullopt;
    auto out = label_lock(*d, a);
    if (!out || raise_lkt(*out, a, i) != t)
        return std::nullopt;
    return out;
}

std::string_view to_string(CrystalKind kind) noexcept
{
    return kind == CrystalKind::key ? "key" : "lock";
}

CrystalKind parse_crystal_kind(std::string_view text)
{
    if (text == "key" || text == "kkt")
        return CrystalKind::key;
    if (text == "lock" || text == "lkt")
        return CrystalKind::lock;
    throw InvalidInput("unknown crystal kind '" + std::string(text) + "'");
}

std::optional<LabeledDiagram> raise(CrystalKind kind, const LabeledDiagram& t, const Composition& a, int i)
{
    return kind == CrystalKind::key ? raise_kkt(t, a, i) : raise_lkt(t, a, i);
}

std::optional<LabeledDiagram> lower(CrystalKind kind, const LabeledDiagram& t, const Composition& a, int i)
{
    return kind == CrystalKind::key ? lower_kkt(t, a, i) : lower_lkt(t, a, i);
}

std::optional<std::size_t> CrystalGraph::index_of(const LabeledDiagram& t) const
{
    auto it = std::find(vertices.begin(), vertices.end(), t);
    if (it == vertices.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

CrystalGraph crystal_graph(const Composition& a, CrystalKind kind)
{
    CrystalGraph g;
    g.kind = kind;
    g.content = a;
    g.vertices = kind == CrystalKind::key ? enumerate_kkt(a) : enumerate_lkt(a);

    std::unordered_map<LabeledDiagram, std::size_t> index;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        index.emplace(g.vertices[v], v);

    const int n = static_cast<int>(a.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (int i = 1; i < n; ++i) {
            auto u = raise(kind, g.vertices[v], a, i);
            if (!u)
                continue;
            auto it = index.find(*u);
            if (it == index.end())
                throw TheoremViolation("raising left the vertex set of the crystal of " + a.to_string());
            g.edges.push_back({it->second, v, i});
        }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

bool is_connected(const CrystalGraph& g)
{
    const std::size_t n = g.vertices.size();
    if (n <= 1)
        return true;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = n;
    for (const CrystalEdge& e : g.edges) {
        std::size_t ra = find(e.source), rb = find(e.target);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return components == 1;
}

Polynomial character(const CrystalGraph& g)
{
    return generating_polynomial(g.vertices, static_cast<int>(g.content.size()));
}

} // namespace kohnert
