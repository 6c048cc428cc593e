#pragma once

#include "kohnert/core.hpp"

#include <optional>
#include <span>
#include <vector>

namespace kohnert {

struct Entry {
    Cell cell;
    int label = 1;

    friend bool operator==(const Entry&, const Entry&) = default;
    friend auto operator<=>(const Entry&, const Entry&) = default;
};

/// Diagram with one positive label per cell, entries sorted row-major.
class LabeledDiagram {
public:
    LabeledDiagram() = default;
    explicit LabeledDiagram(std::vector<Entry> entries);
    LabeledDiagram(std::initializer_list<Entry> entries);

    std::span<const Entry> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    std::optional<int> label_at(Cell c) const noexcept;
    Diagram diagram() const;
    int max_label() const noexcept;

    /// Cells carrying `label`, ordered by column then row.
    std::vector<Cell> string_cells(int label) const;

    std::size_t hash() const noexcept;

    friend bool operator==(const LabeledDiagram&, const LabeledDiagram&) = default;
    friend auto operator<=>(const LabeledDiagram&, const LabeledDiagram&) = default;

private:
    std::vector<Entry> entries_;
};

/// Label multiplicities (c_1,...,c_n); n is max(requested, max label).
Composition content(const LabeledDiagram& t, int n = 0);

/// Key Kohnert tableau conditions: one i in each column 1..a_i and nowhere
/// else, flagged, strings weakly descending, and every inversion witnessed in
/// the next column.
bool validate_kkt(const LabeledDiagram& t, const Composition& a);

/// Lock Kohnert tableau conditions, with label i occupying columns
/// max(a)-a_i+1..max(a).
bool validate_lkt(const LabeledDiagram& t, const Composition& a);

/// Same, right justified against `width` instead of max(a).  Truncations of a
/// lock tableau keep the original right edge, so they validate against the
/// parent's width.
bool validate_lkt(const LabeledDiagram& t, const Composition& a, int width);

/// The unique key Kohnert labeling of d, or nullopt.  Searches every column
/// arrangement; a second solution throws TheoremViolation.
std::optional<LabeledDiagram> label_key(const Diagram& d, const Composition& a);

/// The unique lock Kohnert labeling of d, or nullopt.
std::optional<LabeledDiagram> label_lock(const Diagram& d, const Composition& a);
std::optional<LabeledDiagram> label_lock(const Diagram& d, const Composition& a, int width);

/// KKT(a), ordered like kohnert_closure(key_diagram(a)).
std::vector<LabeledDiagram> enumerate_kkt(const Composition& a);

/// LKT(a), ordered like kohnert_closure(lock_diagram(a)).
std::vector<LabeledDiagram> enumerate_lkt(const Composition& a);

/// T_a: the lock tableau of content a whose weight is flatten(a).
LabeledDiagram lock_source_tableau(const Composition& a);

/// Deletes every entry with label >= `label`.
LabeledDiagram truncate_below(const LabeledDiagram& t, int label);

/// (a_1,...,a_{label-1},0,...,0), same length as a.
Composition truncated_content(const Composition& a, int label);

} // namespace kohnert

template <>
struct std::hash<kohnert::LabeledDiagram> {
    std::size_t operator()(const kohnert::LabeledDiagram& t) const noexcept { return t.hash(); }
};
