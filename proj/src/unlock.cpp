#include "kohnert/unlock.hpp"

#include "kohnert/error.hpp"
#include "pairing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace kohnert {

HorizontalPairing horizontal_pairing(const Diagram& d, int i)
{
    if (i < 1)
        throw InvalidInput("pairing index must be >= 1");
    std::vector<int> left = d.column_rows(i);
    std::vector<int> right = d.column_rows(i + 1);
    std::set<int, std::greater<>> rows(left.begin(), left.end());
    rows.insert(right.begin(), right.end());

    std::vector<detail::ScanSlot> slots;
    for (int r : rows) {
        detail::ScanSlot s;
        if (std::binary_search(left.begin(), left.end(), r))
            s.opener = Cell{r, i};
        if (std::binary_search(right.begin(), right.end(), r))
            s.closer = Cell{r, i + 1};
        slots.push_back(s);
    }
    detail::Matching m = detail::match_slots(slots);
    return {std::move(m.pairs), std::move(m.unpaired_closers), std::move(m.unpaired_openers)};
}

int m_statistic(const Diagram& d, int i, int r)
{
    int value = 0;
    for (const Cell& c : d.cells()) {
        if (c.row < r)
            continue;
        if (c.col == i + 1)
            ++value;
        else if (c.col == i)
            --value;
    }
    return value;
}

int m_max(const Diagram& d, int i)
{
    int best = 0; // r = top_row + 1
    for (int r = 1; r <= d.top_row(); ++r)
        best = std::max(best, m_statistic(d, i, r));
    return best;
}

std::optional<Diagram> rectify(const Diagram& d, int i)
{
    if (i < 1)
        throw InvalidInput("rectification index must be >= 1");
    const int best = m_max(d, i);
    if (best <= 0)
        return std::nullopt;
    int row = 0;
    for (int r = d.top_row(); r >= 1; --r)
        if (m_statistic(d, i, r) == best) {
            row = r;
            break;
        }
    return d.moved({row, i + 1}, {row, i});
}

std::optional<Diagram> rectify_by_pairing(const Diagram& d, int i)
{
    HorizontalPairing p = horizontal_pairing(d, i);
    if (p.unpaired_right.empty())
        return std::nullopt;
    const Cell from = p.unpaired_right.back();
    return d.moved(from, {from.row, i});
}

Schedule build_schedule(const Composition& alpha)
{
    if (alpha.has_zero_part())
        throw InvalidInput("build_schedule: " + alpha.to_string() + " has a zero part");
    Schedule s;
    s.width = alpha.max_part();
    const int m = s.width;
    for (std::size_t p = 0; p < alpha.size(); ++p) {
        const int part = alpha[p];
        for (int k = 1; k <= part; ++k) {
            Schedule::Group g{p, k, s.indices.size(), 0};
            for (int op = m - part + k - 1; op >= k; --op)
                s.indices.push_back(op);
            g.end = s.indices.size();
            s.groups.push_back(g);
        }
    }
    return s;
}

std::optional<Diagram> apply_rectification(const Diagram& d, const Composition& alpha)
{
    std::optional<Diagram> cur = d;
    for (int op : build_schedule(alpha).indices) {
        cur = rectify(*cur, op);
        if (!cur)
            return std::nullopt;
    }
    return cur;
}

namespace {

using Grid = std::map<Cell, int>;

struct StringCells {
    std::vector<int> left;  // rows in column i
    std::vector<int> right; // rows in column i+1
};

} // namespace

std::optional<std::pair<LabeledDiagram, UnlockStep>> unlock_op(const LabeledDiagram& t, int i)
{
    if (i < 1)
        throw InvalidInput("unlock index must be >= 1");
    Grid grid;
    std::set<std::pair<int, int>> label_in_col; // (label, col)
    for (const Entry& e : t.entries()) {
        grid.emplace(e.cell, e.label);
        label_in_col.emplace(e.label, e.cell.col);
    }

    // Box of minimal label in column i+1 that is not left justified.
    std::optional<Entry> x;
    for (const Entry& e : t.entries()) {
        if (e.cell.col != i + 1)
            continue;
        bool justified = true;
        for (int c = 1; c <= i && justified; ++c)
            justified = label_in_col.count({e.label, c}) > 0;
        if (!justified && (!x || e.label < x->label))
            x = e;
    }
    if (!x)
        return std::nullopt;

    UnlockStep step;
    step.op = i;
    step.chosen = *x;
    const int label = x->label;
    int row = x->cell.row;

    while (true) {
        std::map<int, StringCells> strings;
        for (const auto& [cell, l] : grid) {
            if (l == label)
                continue;
            if (cell.col == i)
                strings[l].left.push_back(cell.row);
            else if (cell.col == i + 1)
                strings[l].right.push_back(cell.row);
        }
        // Crossed string with the highest box in column i.
        int best_left = 0;
        int cross_label = 0;
        int y_row = 0;
        for (const auto& [l, s] : strings) {
            if (s.left.empty() || s.right.empty())
                continue;
            const int top_left = *std::max_element(s.left.begin(), s.left.end());
            int below = 0;
            for (int r : s.right)
                if (r < row)
                    below = std::max(below, r);
            if (top_left >= row && below > 0 && top_left > best_left) {
                best_left = top_left;
                cross_label = l;
                y_row = below;
            }
        }
        if (cross_label == 0)
            break;
        step.swaps.push_back({{row, i + 1}, {y_row, i + 1}, label, cross_label});
        grid[{row, i + 1}] = cross_label;
        grid[{y_row, i + 1}] = label;
        row = y_row;
    }

    if (grid.count({row, i}))
        throw UnlockStuck("unlock u_" + std::to_string(i) + " cannot push label " + std::to_string(label) +
                          " from row " + std::to_string(row));
    grid.erase({row, i + 1});
    grid.emplace(Cell{row, i}, label);
    step.push_from = {row, i + 1};
    step.push_to = {row, i};

    std::vector<Entry> entries;
    entries.reserve(grid.size());
    for (const auto& [cell, l] : grid)
        entries.push_back({cell, l});
    return std::pair{LabeledDiagram(std::move(entries)), std::move(step)};
}

UnlockTrace apply_unlock(const LabeledDiagram& t, const Composition& a)
{
    if (!validate_lkt(t, a))
        throw InvalidInput("apply_unlock: input is not a lock Kohnert tableau of content " + a.to_string());
    UnlockTrace trace;
    trace.schedule = build_schedule(flatten(a));
    trace.input = t;

    LabeledDiagram cur = t;
    Diagram shadow = t.diagram();
    for (std::size_t s = 0; s < trace.schedule.indices.size(); ++s) {
        const int op = trace.schedule.indices[s];
        const std::string where = " at step " + std::to_string(s + 1) + " (u_" + std::to_string(op) + ") for " +
                                  a.to_string();
        auto rect = rectify(shadow, op);
        if (!rect)
            throw TheoremViolation("rectification vanished" + where);
        auto next = unlock_op(cur, op);
        if (!next)
            throw TheoremViolation("unlock operator vanished" + where);
        if (next->first.diagram() != *rect)
            throw TheoremViolation("unlock and rectification disagree" + where);
        shadow = std::move(*rect);
        cur = std::move(next->first);
        trace.steps.push_back(std::move(next->second));
    }
    if (!validate_kkt(cur, a))
        throw TheoremViolation("unlock image is not a key Kohnert tableau of content " + a.to_string());
    if (weight(cur.diagram()) != weight(t.diagram()))
        throw TheoremViolation("unlock changed the weight for " + a.to_string());
    trace.output = std::move(cur);
    return trace;
}

LabeledDiagram replay(const UnlockTrace& trace)
{
    Grid grid;
    for (const Entry& e : trace.input.entries())
        grid.emplace(e.cell, e.label);
    auto expect = [&](Cell c, int label) {
        auto it = grid.find(c);
        if (it == grid.end() || it->second != label)
            throw InvalidInput("trace does not match the tableau it is replayed on");
    };
    for (const UnlockStep& step : trace.steps) {
        expect(step.chosen.cell, step.chosen.label);
        for (const Swap& s : step.swaps) {
            expect(s.x_from, s.x_label);
            expect(s.y_from, s.y_label);
            grid[s.x_from] = s.y_label;
            grid[s.y_from] = s.x_label;
        }
        expect(step.push_from, step.chosen.label);
        if (grid.count(step.push_to))
            throw InvalidInput("trace pushes into an occupied cell");
        grid.erase(step.push_from);
        grid.emplace(step.push_to, step.chosen.label);
    }
    std::vector<Entry> entries;
    for (const auto& [cell, l] : grid)
        entries.push_back({cell, l});
    return LabeledDiagram(std::move(entries));
}

std::vector<LabeledDiagram> unlock_image(const Composition& a)
{
    std::vector<LabeledDiagram> keys = enumerate_kkt(a);
    std::unordered_set<LabeledDiagram> key_set(keys.begin(), keys.end());
    std::unordered_set<LabeledDiagram> seen;
    std::vector<LabeledDiagram> image;
    for (const LabeledDiagram& t : enumerate_lkt(a)) {
        LabeledDiagram u = apply_unlock(t, a).output;
        if (!key_set.count(u))
            throw TheoremViolation("unlock image outside KKT" + a.to_string());
        if (!seen.insert(u).second)
            throw TheoremViolation("unlock is not injective on LKT" + a.to_string());
        image.push_back(std::move(u));
    }
    return image;
}

} // namespace kohnert
