#include "kohnert/tableau.hpp"

#include "kohnert/error.hpp"

#include <algorithm>
#include <map>

namespace kohnert {

LabeledDiagram::LabeledDiagram(std::vector<Entry> entries) : entries_(std::move(entries))
{
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        const Entry& e = entries_[k];
        if (e.cell.row < 1 || e.cell.col < 1)
            throw InvalidInput("labeled diagram cells must have row >= 1 and col >= 1");
        if (e.label < 1)
            throw InvalidInput("labels must be positive");
        if (k > 0 && entries_[k - 1].cell == e.cell)
            throw InvalidInput("labeled diagram has two labels in one cell");
    }
}

LabeledDiagram::LabeledDiagram(std::initializer_list<Entry> entries)
    : LabeledDiagram(std::vector<Entry>(entries))
{
}

std::optional<int> LabeledDiagram::label_at(Cell c) const noexcept
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                               [](const Entry& e, const Cell& key) { return e.cell < key; });
    if (it != entries_.end() && it->cell == c)
        return it->label;
    return std::nullopt;
}

Diagram LabeledDiagram::diagram() const
{
    std::vector<Cell> cells;
    cells.reserve(entries_.size());
    for (const Entry& e : entries_)
        cells.push_back(e.cell);
    return Diagram(std::move(cells));
}

int LabeledDiagram::max_label() const noexcept
{
    int m = 0;
    for (const Entry& e : entries_)
        m = std::max(m, e.label);
    return m;
}

std::vector<Cell> LabeledDiagram::string_cells(int label) const
{
    std::vector<Cell> out;
    for (const Entry& e : entries_)
        if (e.label == label)
            out.push_back(e.cell);
    std::sort(out.begin(), out.end(), [](Cell x, Cell y) {
        return x.col != y.col ? x.col < y.col : x.row < y.row;
    });
    return out;
}

std::size_t LabeledDiagram::hash() const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const Entry& e : entries_) {
        h = (h ^ static_cast<std::size_t>(e.cell.row)) * 0x100000001b3ULL;
        h = (h ^ static_cast<std::size_t>(e.cell.col)) * 0x100000001b3ULL;
        h = (h ^ static_cast<std::size_t>(e.label)) * 0x100000001b3ULL;
    }
    return h;
}

Composition content(const LabeledDiagram& t, int n)
{
    std::vector<int> c(static_cast<std::size_t>(std::max(n, t.max_label())), 0);
    for (const Entry& e : t.entries())
        ++c[static_cast<std::size_t>(e.label - 1)];
    return Composition(std::move(c));
}

namespace {

using ColumnMap = std::map<int, std::vector<Entry>>;

ColumnMap by_column(const LabeledDiagram& t)
{
    ColumnMap cols;
    for (const Entry& e : t.entries())
        cols[e.cell.col].push_back(e); // rows ascending within a column
    return cols;
}

// Label i occupies exactly the columns first(i)..last(i), once each.
template <class Range>
bool columns_match(const LabeledDiagram& t, const Composition& a, Range&& range_of)
{
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(n) + 1);
    for (const Entry& e : t.entries()) {
        if (e.label > n)
            return false;
        cols[static_cast<std::size_t>(e.label)].push_back(e.cell.col);
    }
    for (int i = 1; i <= n; ++i) {
        auto& got = cols[static_cast<std::size_t>(i)];
        std::sort(got.begin(), got.end());
        auto [lo, hi] = range_of(i);
        if (static_cast<int>(got.size()) != std::max(0, hi - lo + 1))
            return false;
        for (std::size_t k = 0; k < got.size(); ++k)
            if (got[k] != lo + static_cast<int>(k))
                return false;
    }
    return true;
}

bool is_flagged(const LabeledDiagram& t)
{
    return std::all_of(t.entries().begin(), t.entries().end(),
                       [](const Entry& e) { return e.label >= e.cell.row; });
}

bool strings_descend(const LabeledDiagram& t)
{
    std::map<int, std::vector<Cell>> strings;
    for (const Entry& e : t.entries())
        strings[e.label].push_back(e.cell);
    for (auto& [label, cells] : strings) {
        std::sort(cells.begin(), cells.end(), [](Cell x, Cell y) { return x.col < y.col; });
        for (std::size_t k = 1; k < cells.size(); ++k)
            if (cells[k].row > cells[k - 1].row)
                return false;
    }
    return true;
}

bool inversions_witnessed(const LabeledDiagram& t)
{
    const ColumnMap cols = by_column(t);
    for (const auto& [c, col] : cols) {
        auto next = cols.find(c + 1);
        for (const Entry& upper : col)
            for (const Entry& lower : col) {
                if (!(upper.cell.row > lower.cell.row && upper.label < lower.label))
                    continue;
                bool witnessed = false;
                if (next != cols.end())
                    for (const Entry& z : next->second)
                        if (z.label == upper.label && z.cell.row > lower.cell.row)
                            witnessed = true;
                if (!witnessed)
                    return false;
            }
    }
    return true;
}

bool columns_strictly_decrease_downward(const LabeledDiagram& t)
{
    for (const auto& [c, col] : by_column(t))
        for (std::size_t k = 1; k < col.size(); ++k)
            if (col[k].label <= col[k - 1].label)
                return false;
    return true;
}

} // namespace

bool validate_kkt(const LabeledDiagram& t, const Composition& a)
{
    auto range = [&](int i) { return std::pair{1, a.part(i)}; };
    return columns_match(t, a, range) && is_flagged(t) && strings_descend(t) && inversions_witnessed(t);
}

bool validate_lkt(const LabeledDiagram& t, const Composition& a, int width)
{
    if (width < a.max_part())
        return false;
    auto range = [&](int i) { return std::pair{width - a.part(i) + 1, width}; };
    return columns_match(t, a, range) && is_flagged(t) && strings_descend(t) &&
           columns_strictly_decrease_downward(t);
}

bool validate_lkt(const LabeledDiagram& t, const Composition& a)
{
    return validate_lkt(t, a, a.max_part());
}

namespace {

// Backtracking search for key labelings.  Condition (1) fixes the label set of
// every column, so only the top-to-bottom order inside each column is free.
class KeyLabeler {
public:
    KeyLabeler(const Diagram& d, const Composition& a)
        : a_(a), n_(static_cast<int>(a.size())), m_(a.max_part())
    {
        rows_.resize(static_cast<std::size_t>(m_) + 2);
        labels_.resize(static_cast<std::size_t>(m_) + 2);
        for (int c = 1; c <= m_; ++c) {
            rows_[static_cast<std::size_t>(c)] = d.column_rows(c);
            for (int i = 1; i <= n_; ++i)
                if (a.part(i) >= c)
                    labels_[static_cast<std::size_t>(c)].push_back(i);
        }
        feasible_ = d.max_col() <= m_;
        for (int c = 1; c <= m_ && feasible_; ++c)
            feasible_ = rows_[static_cast<std::size_t>(c)].size() == labels_[static_cast<std::size_t>(c)].size();
        // pos_[i][c] = row of label i in column c, 0 if unassigned.
        pos_.assign(static_cast<std::size_t>(n_) + 1, std::vector<int>(static_cast<std::size_t>(m_) + 2, 0));
    }

    std::optional<LabeledDiagram> run()
    {
        if (!feasible_)
            return std::nullopt;
        column(1);
        return solution_;
    }

private:
    void column(int c)
    {
        if (c > m_) {
            if (m_ == 0 || inversions_ok(m_)) {
                if (solution_)
                    throw TheoremViolation("two distinct key Kohnert labelings of one diagram");
                solution_ = snapshot();
            }
            return;
        }
        used_.assign(labels_[static_cast<std::size_t>(c)].size(), false);
        place(c, 0);
    }

    // Assign a label to the k-th lowest cell of column c.
    void place(int c, std::size_t k)
    {
        const auto& rows = rows_[static_cast<std::size_t>(c)];
        const auto& labels = labels_[static_cast<std::size_t>(c)];
        if (k == rows.size()) {
            if (c == 1 || inversions_ok(c - 1)) {
                std::vector<bool> saved = used_;
                column(c + 1);
                used_ = std::move(saved);
            }
            return;
        }
        const int row = rows[k];
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (used_[j])
                continue;
            const int label = labels[j];
            if (label < row)
                continue; // flagged
            if (c > 1 && row > pos_[static_cast<std::size_t>(label)][static_cast<std::size_t>(c - 1)])
                continue; // strings weakly descend
            used_[j] = true;
            pos_[static_cast<std::size_t>(label)][static_cast<std::size_t>(c)] = row;
            place(c, k + 1);
            pos_[static_cast<std::size_t>(label)][static_cast<std::size_t>(c)] = 0;
            used_[j] = false;
        }
    }

    // Every inversion in column c needs its smaller label in column c+1,
    // strictly above the larger one.
    bool inversions_ok(int c) const
    {
        const auto& labels = labels_[static_cast<std::size_t>(c)];
        for (int i : labels)
            for (int j : labels) {
                if (i >= j)
                    continue;
                const int ri = pos_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
                const int rj = pos_[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
                if (ri <= rj)
                    continue;
                if (a_.part(i) < c + 1)
                    return false;
                if (pos_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c + 1)] <= rj)
                    return false;
            }
        return true;
    }

    LabeledDiagram snapshot() const
    {
        std::vector<Entry> entries;
        for (int i = 1; i <= n_; ++i)
            for (int c = 1; c <= a_.part(i); ++c)
                entries.push_back({{pos_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)], c}, i});
        return LabeledDiagram(std::move(entries));
    }

    const Composition& a_;
    int n_;
    int m_;
    bool feasible_ = true;
    std::vector<std::vector<int>> rows_;
    std::vector<std::vector<int>> labels_;
    std::vector<std::vector<int>> pos_;
    std::vector<bool> used_;
    std::optional<LabeledDiagram> solution_;
};

} // namespace

std::optional<LabeledDiagram> label_key(const Diagram& d, const Composition& a)
{
    auto t = KeyLabeler(d, a).run();
    if (t && !validate_kkt(*t, a))
        throw TheoremViolation("key labeler produced an invalid tableau");
    return t;
}

std::optional<LabeledDiagram> label_lock(const Diagram& d, const Composition& a, int width)
{
    const int n = static_cast<int>(a.size());
    if (d.max_col() > width)
        return std::nullopt;
    std::vector<Entry> entries;
    for (int c = 1; c <= width; ++c) {
        std::vector<int> rows = d.column_rows(c);
        std::vector<int> labels;
        for (int i = 1; i <= n; ++i)
            if (a.part(i) > 0 && width - a.part(i) + 1 <= c)
                labels.push_back(i);
        if (rows.size() != labels.size())
            return std::nullopt;
        for (std::size_t k = 0; k < rows.size(); ++k)
            entries.push_back({{rows[k], c}, labels[k]});
    }
    LabeledDiagram t(std::move(entries));
    if (!validate_lkt(t, a, width))
        return std::nullopt;
    return t;
}

std::optional<LabeledDiagram> label_lock(const Diagram& d, const Composition& a)
{
    return label_lock(d, a, a.max_part());
}

std::vector<LabeledDiagram> enumerate_kkt(const Composition& a)
{
    std::vector<LabeledDiagram> out;
    for (const Diagram& d : kohnert_closure(key_diagram(a))) {
        auto t = label_key(d, a);
        if (!t)
            throw TheoremViolation("key Kohnert diagram without a key labeling for " + a.to_string());
        out.push_back(std::move(*t));
    }
    return out;
}

std::vector<LabeledDiagram> enumerate_lkt(const Composition& a)
{
    std::vector<LabeledDiagram> out;
    for (const Diagram& d : kohnert_closure(lock_diagram(a))) {
        auto t = label_lock(d, a);
        if (!t)
            throw TheoremViolation("lock Kohnert diagram without a lock labeling for " + a.to_string());
        out.push_back(std::move(*t));
    }
    return out;
}

LabeledDiagram lock_source_tableau(const Composition& a)
{
    const int n = static_cast<int>(a.size());
    std::vector<int> target = flatten(a).vec();
    target.resize(static_cast<std::size_t>(n), 0);
    std::optional<LabeledDiagram> found;
    for (LabeledDiagram& t : enumerate_lkt(a)) {
        if (weight_vector(t.diagram(), n) != target)
            continue;
        if (found)
            throw TheoremViolation("two lock tableaux of flattened weight for " + a.to_string());
        found = std::move(t);
    }
    if (!found)
        throw TheoremViolation("no lock tableau of flattened weight for " + a.to_string());
    return *found;
}

LabeledDiagram truncate_below(const LabeledDiagram& t, int label)
{
    std::vector<Entry> kept;
    for (const Entry& e : t.entries())
        if (e.label < label)
            kept.push_back(e);
    return LabeledDiagram(std::move(kept));
}

Composition truncated_content(const Composition& a, int label)
{
    std::vector<int> parts = a.vec();
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (static_cast<int>(i) + 1 >= label)
            parts[i] = 0;
    return Composition(std::move(parts));
}

} // namespace kohnert
