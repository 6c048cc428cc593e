#pragma once

#include "kohnert/core.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/tableau.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace kohnert {

/// Vertical i-pairing of rows i and i+1.
struct VerticalPairing {
    std::vector<std::pair<Cell, Cell>> pairs; // (cell in row i, cell in row i+1)
    std::vector<Cell> unpaired_upper;         // row i+1, left to right
    std::vector<Cell> unpaired_lower;         // row i, left to right
};

VerticalPairing vertical_pairing(const Diagram& d, int i);

/// e_i on diagrams: pushes the rightmost unpaired cell of row i+1 down to row i.
std::optional<Diagram> raise_diagram(const Diagram& d, int i);

/// f_i on diagrams: pushes the leftmost unpaired cell of row i up to row i+1.
std::optional<Diagram> lower_diagram(const Diagram& d, int i);

std::optional<LabeledDiagram> raise_kkt(const LabeledDiagram& t, const Composition& a, int i);

/// Direct rule: zero when nothing in row i+1 is unpaired, or when the
/// rightmost unpaired box shares its label with a box to its right in the same
/// row.  Otherwise the box drops one row keeping its label.
std::optional<LabeledDiagram> raise_lkt(const LabeledDiagram& t, const Composition& a, int i);

std::optional<LabeledDiagram> lower_kkt(const LabeledDiagram& t, const Composition& a, int i);
std::optional<LabeledDiagram> lower_lkt(const LabeledDiagram& t, const Composition& a, int i);

enum class CrystalKind { key, lock };

std::string_view to_string(CrystalKind kind) noexcept;
CrystalKind parse_crystal_kind(std::string_view text);

std::optional<LabeledDiagram> raise(CrystalKind kind, const LabeledDiagram& t, const Composition& a, int i);
std::optional<LabeledDiagram> lower(CrystalKind kind, const LabeledDiagram& t, const Composition& a, int i);

/// Edge source -> target means f_color(source) = target.
struct CrystalEdge {
    std::size_t source = 0;
    std::size_t target = 0;
    int color = 1;

    friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
    friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

struct CrystalGraph {
    CrystalKind kind = CrystalKind::key;
    Composition content;
    std::vector<LabeledDiagram> vertices;
    std::vector<CrystalEdge> edges; // sorted

    std::optional<std::size_t> index_of(const LabeledDiagram& t) const;
};

/// Vertices are KKT(a) or LKT(a); every vertex is probed with every raising
/// operator e_1..e_{n-1}.
CrystalGraph crystal_graph(const Composition& a, CrystalKind kind);

bool is_connected(const CrystalGraph& g);

Polynomial character(const CrystalGraph& g);

} // namespace kohnert
