#pragma once

#include <set>

#include "towertab/balanced.hpp"
#include "towertab/tableau.hpp"

namespace towertab {

// A standard tableau together with its virtual companion: the tableau of the
// reversed reading word.  The companion logically lives in the third
// quadrant but is stored unreflected.
struct CompleteTowerTableau {
    TowerTableau main;
    TowerTableau mirror;
    friend bool operator==(const CompleteTowerTableau&, const CompleteTowerTableau&) = default;
};

// Throws std::invalid_argument if t is not standard.
CompleteTowerTableau complete(const TowerTableau& t);

// Rothification: pair the main cell labeled k with the virtual cell labeled
// n+1-k; the pair (u, v) contributes the cell (row = col(v), col = col(u))
// labeled k.  The result is the canonical labeling of the reading word, and
// its shape is the Rothe diagram of the underlying permutation.
RotheLabeling rothify(const TowerTableau& t);

// Semi-standard Rothification: rothify the standardization, then put the
// original label of the main cell at each produced position.
// Throws std::invalid_argument if t is not semi-standard.
RotheLabeling rothify_ss(const TowerTableau& t);

// Push each column of a labeling of D_w to the towers: column j, sorted
// increasing, fills tower j bottom to top.  Inverse of rothify_ss.
// Throws std::invalid_argument unless the labeled cells are exactly D_w.
TowerTableau push_up(const RotheLabeling& l, const Permutation& w);

// Tower diagram of a permutation: tower j collects the column-j cells of the
// Rothe diagram.
TowerDiagram tower_shape(const Permutation& w);

// Hook of a tower cell: the cells above it in its tower plus the chain of
// east-adjacent cells (next diagonal, no blocking tower strictly between).
struct TowerHook {
    TowerCell vertex;
    std::set<TowerCell> members;
    friend bool operator==(const TowerHook&, const TowerHook&) = default;
};

TowerHook tower_hook(const TowerDiagram& t, TowerCell c);

// Flag tableau: repeatedly label the bottom unlabeled cell of the leftmost
// incomplete tower with its flight number, copying the label along its
// east-adjacent chain.  Coincides with the row indices of Rothification.
TowerTableau flag_tableau(const TowerDiagram& t);

}  // namespace towertab
