#pragma once

#include "kohnert/core.hpp"
#include "kohnert/tableau.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace kohnert {

/// Horizontal i-pairing of columns i and i+1, scanned top to bottom.
struct HorizontalPairing {
    std::vector<std::pair<Cell, Cell>> pairs; // (cell in column i, cell in column i+1)
    std::vector<Cell> unpaired_right;         // column i+1, top to bottom
    std::vector<Cell> unpaired_left;          // column i, top to bottom
};

HorizontalPairing horizontal_pairing(const Diagram& d, int i);

/// #{cells of column i+1 at row >= r} - #{cells of column i at row >= r}
int m_statistic(const Diagram& d, int i, int r);

/// Maximum of m_statistic over r = 1..top_row+1; never negative.
int m_max(const Diagram& d, int i);

/// Rectification operator from the M-statistic: pushes (r, i+1) to (r, i)
/// for the largest maximizing r, or nullopt when the maximum is 0.
std::optional<Diagram> rectify(const Diagram& d, int i);

/// Rectification from the pairing: pushes the lowest unpaired cell of
/// column i+1 left.  Agrees with `rectify` on every diagram.
std::optional<Diagram> rectify_by_pairing(const Diagram& d, int i);

/// Operator subscripts in application order, with the boundaries of each
/// group (one group per box of each part of alpha).
struct Schedule {
    struct Group {
        std::size_t part = 0;  // 0-based index into alpha
        int box = 1;           // k = 1..alpha_part
        std::size_t begin = 0; // [begin, end) into indices
        std::size_t end = 0;
    };

    std::vector<int> indices;
    std::vector<Group> groups;
    int width = 0; // max(alpha)
};

/// For each part alpha_p in order and k = 1..alpha_p, the subscripts
/// m-alpha_p+k-1 down to k, with m = max(alpha).  alpha must have no zeros.
Schedule build_schedule(const Composition& alpha);

/// Folds `rectify` over the schedule of alpha; nullopt as soon as a step is.
std::optional<Diagram> apply_rectification(const Diagram& d, const Composition& alpha);

struct Swap {
    Cell x_from;  // x before the swap
    Cell y_from;  // y before the swap; x takes this row, y takes x's
    int x_label = 0;
    int y_label = 0;

    friend bool operator==(const Swap&, const Swap&) = default;
};

struct UnlockStep {
    int op = 1;
    Entry chosen;            // x where it was selected
    std::vector<Swap> swaps; // in order
    Cell push_from;          // (r, op+1)
    Cell push_to;            // (r, op)

    friend bool operator==(const UnlockStep&, const UnlockStep&) = default;
};

/// One unlock operator u_i.  nullopt when every box of column i+1 is left
/// justified.  Throws UnlockStuck if the chosen box ends up blocked.
std::optional<std::pair<LabeledDiagram, UnlockStep>> unlock_op(const LabeledDiagram& t, int i);

struct UnlockTrace {
    Schedule schedule;
    std::vector<UnlockStep> steps;
    LabeledDiagram input;
    LabeledDiagram output;
};

/// The unlock map on a lock Kohnert tableau of content a.  Every step is
/// checked against rectification of the underlying diagram, and the output
/// against the key tableau conditions; any disagreement throws
/// TheoremViolation.  Throws InvalidInput if t is not in LKT(a).
UnlockTrace apply_unlock(const LabeledDiagram& t, const Composition& a);

/// Re-applies the recorded swaps and pushes to the trace input.
LabeledDiagram replay(const UnlockTrace& trace);

/// Unlock images of LKT(a), in LKT order.  Throws TheoremViolation on a
/// collision or an image outside KKT(a).
std::vector<LabeledDiagram> unlock_image(const Composition& a);

} // namespace kohnert
