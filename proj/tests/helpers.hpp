#pragma once

// Test-side helpers and independent oracles.  The oracles deliberately avoid
// the code paths they check: the balanced oracle enumerates hook-label
// permutations instead of sorting into place, and the standard-tableau count
// goes through corner peeling only.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "towertab/balanced.hpp"
#include "towertab/perm.hpp"
#include "towertab/tableau.hpp"
#include "towertab/tower.hpp"

namespace towertab {

// Diagnostics for test failure output.
inline std::ostream& operator<<(std::ostream& os, const TowerDiagram& t) {
    os << "heights[";
    for (std::size_t i = 0; i < t.heights().size(); ++i) os << (i ? "," : "") << t.heights()[i];
    return os << ']';
}

inline std::ostream& operator<<(std::ostream& os, const TowerTableau& t) {
    os << "tableau{";
    for (const auto& [cell, lbl] : t.entries()) os << cell << ':' << lbl << ' ';
    return os << '}';
}

inline std::ostream& operator<<(std::ostream& os, const RotheLabeling& l) {
    os << "labeling{";
    for (const auto& [cell, lbl] : l.entries()) os << cell << ':' << lbl << ' ';
    return os << '}';
}

}  // namespace towertab

namespace towertab::testing {

inline std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline TowerTableau tableau(std::vector<std::vector<int>> cols) {
    return TowerTableau(std::move(cols));
}

inline RotheLabeling labeling(std::vector<std::tuple<int, int, int>> entries) {
    std::map<RotheCell, int> m;
    for (const auto& [row, col, lbl] : entries) m[{row, col}] = lbl;
    return RotheLabeling(std::move(m));
}

// Hook path in the order used by the balancedness definition: column cells
// bottom to top, the vertex, then row cells left to right.
inline std::vector<RotheCell> oracle_hook_path(const RotheDiagram& d, RotheCell v) {
    std::vector<RotheCell> below, right;
    for (const RotheCell& c : d.cells()) {
        if (c.col == v.col && c.row > v.row) below.push_back(c);
        if (c.row == v.row && c.col > v.col) right.push_back(c);
    }
    std::sort(below.begin(), below.end(), [](RotheCell a, RotheCell b) { return a.row > b.row; });
    std::sort(right.begin(), right.end());
    below.push_back(v);
    below.insert(below.end(), right.begin(), right.end());
    return below;
}

// Balancedness by brute force: lay every permutation of the hook labels
// along the path; among the weakly decreasing layouts, the vertex entry must
// always equal the vertex's own label.
inline bool balanced_oracle(const RotheLabeling& l) {
    const RotheDiagram d = l.diagram();
    for (const auto& [v, lbl] : l.entries()) {
        const std::vector<RotheCell> path = oracle_hook_path(d, v);
        std::size_t pos = 0;
        while (path[pos] != v) ++pos;
        std::vector<int> labels;
        for (const RotheCell& c : path) labels.push_back(l.label(c));
        std::sort(labels.begin(), labels.end());
        bool found = false, stable = true;
        do {
            bool dec = true;
            for (std::size_t i = 1; i < labels.size(); ++i) dec = dec && labels[i - 1] >= labels[i];
            if (!dec) continue;
            found = true;
            if (labels[pos] != lbl) stable = false;
        } while (std::next_permutation(labels.begin(), labels.end()));
        if (!found || !stable) return false;
    }
    return true;
}

// Number of standard tableaux of a shape, by corner peeling alone.
inline long count_standard(const TowerDiagram& t) {
    if (t.empty()) return 1;
    long n = 0;
    for (const Corner& c : corners(t)) n += count_standard(t.without_top(c.cell.col));
    return n;
}

// All tower diagrams with at most `max_cells` cells and `max_cols` towers.
inline std::vector<TowerDiagram> small_shapes(int max_cells, int max_cols) {
    std::vector<TowerDiagram> out;
    std::vector<int> hs(max_cols, 0);
    auto total = [&] { return std::accumulate(hs.begin(), hs.end(), 0); };
    std::set<std::vector<int>> seen;
    auto emit = [&] {
        TowerDiagram t(hs);
        if (seen.insert(t.heights()).second) out.push_back(std::move(t));
    };
    // counting in mixed radix over heights 0..max_cells
    for (;;) {
        if (total() <= max_cells) emit();
        int i = 0;
        while (i < max_cols) {
            if (++hs[i] > max_cells) {
                hs[i] = 0;
                ++i;
            } else {
                break;
            }
        }
        if (i == max_cols) break;
    }
    return out;
}

// Every labeling of `cells` with labels in 1..cap, in lexicographic order.
template <typename Fn>
void for_each_labeling(const std::vector<RotheCell>& cells, int cap, Fn&& fn) {
    std::vector<int> lbl(cells.size(), 1);
    for (;;) {
        std::map<RotheCell, int> m;
        for (std::size_t i = 0; i < cells.size(); ++i) m[cells[i]] = lbl[i];
        fn(RotheLabeling(std::move(m)));
        std::size_t i = 0;
        while (i < lbl.size() && ++lbl[i] > cap) lbl[i++] = 1;
        if (i == lbl.size()) break;
    }
}

// Every filling of `shape` with labels in 1..cap (no other constraint).
template <typename Fn>
void for_each_filling(const TowerDiagram& shape, int cap, Fn&& fn) {
    const std::vector<TowerCell> cells = shape.cells();
    std::vector<int> lbl(cells.size(), 1);
    for (;;) {
        TowerTableau t;
        for (std::size_t i = 0; i < cells.size(); ++i) t = t.with(cells[i], lbl[i]);
        fn(t);
        std::size_t i = 0;
        while (i < lbl.size() && ++lbl[i] > cap) lbl[i++] = 1;
        if (i == lbl.size()) break;
    }
}

}  // namespace towertab::testing
