#pragma once

#include "kohnert/core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace kohnert::detail {

/// One position along the scan line of a pairing.  `opener` is the cell on
/// the side that gets matched into (row i for vertical, column i for
/// horizontal), `closer` the cell on the other side.  Either may be absent;
/// when both are present they form a same-line pair.
struct ScanSlot {
    std::optional<Cell> opener;
    std::optional<Cell> closer;
};

struct Matching {
    std::vector<std::pair<Cell, Cell>> pairs; // (opener, closer)
    std::vector<Cell> unpaired_closers;       // scan order
    std::vector<Cell> unpaired_openers;       // scan order
};

/// Same-line slots pair first; every remaining closer then pairs with the
/// nearest earlier unpaired opener, provided everything in between is already
/// paired.  Iterating that rule to a fixed point is stack matching.
inline Matching match_slots(const std::vector<ScanSlot>& slots)
{
    Matching m;
    std::vector<Cell> open;
    for (const ScanSlot& s : slots) {
        if (s.opener && s.closer) {
            m.pairs.emplace_back(*s.opener, *s.closer);
        } else if (s.opener) {
            open.push_back(*s.opener);
        } else if (s.closer) {
            if (open.empty()) {
                m.unpaired_closers.push_back(*s.closer);
            } else {
                m.pairs.emplace_back(open.back(), *s.closer);
                open.pop_back();
            }
        }
    }
    m.unpaired_openers = std::move(open);
    return m;
}

} // namespace kohnert::detail
