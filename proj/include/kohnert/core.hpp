#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kohnert {

/// Ordered sequence of nonnegative integers.  Trailing zeros are part of the
/// value: (0,2,3) and (0,2,3,0) index different objects.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts);

    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 0-based access.
    int operator[](std::size_t i) const { return parts_[i]; }
    /// 1-based access, 0 past the end.
    int part(int i) const noexcept;

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }

    int max_part() const noexcept;
    int total() const noexcept;
    bool is_weakly_increasing() const noexcept;
    bool has_zero_part() const noexcept;
    bool is_all_zero() const noexcept;

    Composition reversed() const;

    /// "(1,0,2,1)"
    std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

/// Subsequence of strictly positive parts.
Composition flatten(const Composition& a);

/// Parses "1,0,2,1".  The empty string is the empty composition.
Composition parse_composition(std::string_view text);

/// Position in the positive quadrant.  Rows count from the bottom (row 1 is
/// lowest), columns from the left.  Ordering is row-major.
struct Cell {
    int row = 1;
    int col = 1;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Finite set of cells, stored sorted row-major.  Immutable value.
class Diagram {
public:
    Diagram() = default;
    explicit Diagram(std::vector<Cell> cells);
    Diagram(std::initializer_list<Cell> cells);

    std::span<const Cell> cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }
    bool contains(Cell c) const noexcept;

    /// Highest occupied row, 0 when empty.
    int top_row() const noexcept;
    /// Rightmost occupied column, 0 when empty.
    int max_col() const noexcept;

    /// Occupied rows of a column, ascending.
    std::vector<int> column_rows(int col) const;
    /// Occupied columns of a row, ascending.
    std::vector<int> row_cols(int row) const;

    /// Copy with the cell at `from` relocated to the empty position `to`.
    Diagram moved(Cell from, Cell to) const;

    std::size_t hash() const noexcept;

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram&, const Diagram&) = default;

private:
    std::vector<Cell> cells_;
};

/// Row counts (w_1,...,w_R) with R the highest nonempty row.
Composition weight(const Diagram& d);

/// `weight` padded with zeros to length n.  Throws if a cell lies above row n.
std::vector<int> weight_vector(const Diagram& d, int n);

/// Left justified diagram of weight a.
Diagram key_diagram(const Composition& a);

/// Right justified diagram of weight a, flush against column max(a).
Diagram lock_diagram(const Composition& a);

/// Moves the rightmost cell of `row` to the highest empty position below it in
/// its column.  nullopt if the row is empty or the column is full below.
std::optional<Diagram> kohnert_move(const Diagram& d, int row);

/// All diagrams reachable from d by Kohnert moves, d included, sorted.
std::vector<Diagram> kohnert_closure(const Diagram& d);

} // namespace kohnert

template <>
struct std::hash<kohnert::Diagram> {
    std::size_t operator()(const kohnert::Diagram& d) const noexcept { return d.hash(); }
};
