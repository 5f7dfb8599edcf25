#pragma once

#include <compare>
#include <ostream>

namespace towertab {

// Cell of a tower diagram, identified by its south-east corner: `col` is the
// 1-based tower index, `ht` the 0-based height above the horizontal axis.
// The main diagonal of the cell lies on the line x + y = col + ht.
struct TowerCell {
    int col = 0;
    int ht = 0;
    friend auto operator<=>(const TowerCell&, const TowerCell&) = default;
};

constexpr int diagonal(TowerCell c) { return c.col + c.ht; }

// Cell of a Rothe diagram in matrix coordinates (row 1 at the top).
struct RotheCell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const RotheCell&, const RotheCell&) = default;
};

inline std::ostream& operator<<(std::ostream& os, TowerCell c) {
    return os << '(' << c.col << ',' << c.ht << ')';
}

inline std::ostream& operator<<(std::ostream& os, RotheCell c) {
    return os << '(' << c.row << ',' << c.col << ')';
}

}  // namespace towertab
