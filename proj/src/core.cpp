#include "kohnert/core.hpp"

#include "kohnert/error.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace kohnert {

// ---------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p < 0)
            throw InvalidInput("composition parts must be nonnegative");
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts))
{
}

int Composition::part(int i) const noexcept
{
    if (i < 1 || static_cast<std::size_t>(i) > parts_.size())
        return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

int Composition::max_part() const noexcept
{
    return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
}

int Composition::total() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Composition::is_weakly_increasing() const noexcept
{
    return std::is_sorted(parts_.begin(), parts_.end());
}

bool Composition::has_zero_part() const noexcept
{
    return std::find(parts_.begin(), parts_.end(), 0) != parts_.end();
}

bool Composition::is_all_zero() const noexcept
{
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 0; });
}

Composition Composition::reversed() const
{
    return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

std::string Composition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

Composition flatten(const Composition& a)
{
    std::vector<int> out;
    for (int p : a.parts())
        if (p > 0)
            out.push_back(p);
    return Composition(std::move(out));
}

Composition parse_composition(std::string_view text)
{
    std::vector<int> parts;
    if (text.empty())
        return {};
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        int value = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size())
            throw InvalidInput("cannot parse composition part '" + std::string(tok) + "'");
        if (value < 0)
            throw InvalidInput("composition parts must be nonnegative");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

// -------------------------------------------------------------------- Diagram

Diagram::Diagram(std::vector<Cell> cells) : cells_(std::move(cells))
{
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
        throw InvalidInput("diagram contains a duplicate cell");
    for (const Cell& c : cells_)
        if (c.row < 1 || c.col < 1)
            throw InvalidInput("diagram cells must have row >= 1 and col >= 1");
}

Diagram::Diagram(std::initializer_list<Cell> cells) : Diagram(std::vector<Cell>(cells)) {}

bool Diagram::contains(Cell c) const noexcept
{
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

int Diagram::top_row() const noexcept
{
    return cells_.empty() ? 0 : cells_.back().row;
}

int Diagram::max_col() const noexcept
{
    int m = 0;
    for (const Cell& c : cells_)
        m = std::max(m, c.col);
    return m;
}

std::vector<int> Diagram::column_rows(int col) const
{
    std::vector<int> rows;
    for (const Cell& c : cells_)
        if (c.col == col)
            rows.push_back(c.row);
    return rows;
}

std::vector<int> Diagram::row_cols(int row) const
{
    std::vector<int> cols;
    auto lo = std::lower_bound(cells_.begin(), cells_.end(), Cell{row, 0});
    for (auto it = lo; it != cells_.end() && it->row == row; ++it)
        cols.push_back(it->col);
    return cols;
}

Diagram Diagram::moved(Cell from, Cell to) const
{
    Diagram out;
    out.cells_.reserve(cells_.size());
    bool found = false;
    for (const Cell& c : cells_) {
        if (c == from)
            found = true;
        else
            out.cells_.push_back(c);
    }
    if (!found)
        throw InvalidInput("moved: source cell is empty");
    auto at = std::lower_bound(out.cells_.begin(), out.cells_.end(), to);
    if (at != out.cells_.end() && *at == to)
        throw InvalidInput("moved: target cell is occupied");
    if (to.row < 1 || to.col < 1)
        throw InvalidInput("moved: target outside the positive quadrant");
    out.cells_.insert(at, to);
    return out;
}

std::size_t Diagram::hash() const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const Cell& c : cells_) {
        h = (h ^ static_cast<std::size_t>(c.row)) * 0x100000001b3ULL;
        h = (h ^ static_cast<std::size_t>(c.col)) * 0x100000001b3ULL;
    }
    return h;
}

// ----------------------------------------------------------------- operations

Composition weight(const Diagram& d)
{
    std::vector<int> w(static_cast<std::size_t>(d.top_row()), 0);
    for (const Cell& c : d.cells())
        ++w[static_cast<std::size_t>(c.row - 1)];
    return Composition(std::move(w));
}

std::vector<int> weight_vector(const Diagram& d, int n)
{
    if (d.top_row() > n)
        throw InvalidInput("diagram has cells above row " + std::to_string(n));
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (const Cell& c : d.cells())
        ++w[static_cast<std::size_t>(c.row - 1)];
    return w;
}

Diagram key_diagram(const Composition& a)
{
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int c = 1; c <= a[i]; ++c)
            cells.push_back({static_cast<int>(i + 1), c});
    return Diagram(std::move(cells));
}

Diagram lock_diagram(const Composition& a)
{
    const int m = a.max_part();
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int c = m - a[i] + 1; c <= m; ++c)
            cells.push_back({static_cast<int>(i + 1), c});
    return Diagram(std::move(cells));
}

std::optional<Diagram> kohnert_move(const Diagram& d, int row)
{
    std::vector<int> cols = d.row_cols(row);
    if (cols.empty())
        return std::nullopt;
    const int col = cols.back();
    for (int r = row - 1; r >= 1; --r)
        if (!d.contains({r, col}))
            return d.moved({row, col}, {r, col});
    return std::nullopt;
}

std::vector<Diagram> kohnert_closure(const Diagram& d)
{
    std::unordered_set<Diagram> seen{d};
    std::deque<Diagram> frontier{d};
    while (!frontier.empty()) {
        Diagram cur = std::move(frontier.front());
        frontier.pop_front();
        const int top = cur.top_row();
        for (int row = 2; row <= top; ++row) {
            auto next = kohnert_move(cur, row);
            if (next && seen.insert(*next).second)
                frontier.push_back(std::move(*next));
        }
    }
    std::vector<Diagram> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace kohnert
