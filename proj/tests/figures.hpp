#pragma once

// Tableaux and diagrams written the way they are drawn: top row first, one
// string per row, cells separated by spaces, '.' for an empty cell.

#include "kohnert/core.hpp"
#include "kohnert/tableau.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace figures {

inline kohnert::LabeledDiagram tableau(const std::vector<std::string>& rows)
{
    std::vector<kohnert::Entry> entries;
    const int top = static_cast<int>(rows.size());
    for (int k = 0; k < top; ++k) {
        std::istringstream in(rows[k]);
        std::string tok;
        int col = 0;
        while (in >> tok) {
            ++col;
            if (tok != ".")
                entries.push_back({{top - k, col}, std::stoi(tok)});
        }
    }
    return kohnert::LabeledDiagram(std::move(entries));
}

/// Any token other than '.' is a cell.
inline kohnert::Diagram diagram(const std::vector<std::string>& rows)
{
    std::vector<kohnert::Cell> cells;
    const int top = static_cast<int>(rows.size());
    for (int k = 0; k < top; ++k) {
        std::istringstream in(rows[k]);
        std::string tok;
        int col = 0;
        while (in >> tok) {
            ++col;
            if (tok != ".")
                cells.push_back({top - k, col});
        }
    }
    return kohnert::Diagram(std::move(cells));
}

} // namespace figures
