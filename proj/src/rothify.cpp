#include "towertab/rothify.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace towertab {

CompleteTowerTableau complete(const TowerTableau& t) {
    Word w = reading_word(t);  // throws when t is not standard
    std::reverse(w.begin(), w.end());
    auto mirror = slide_word(w);  // the reversed word is again reduced
    assert(mirror);
    return CompleteTowerTableau{t, std::move(*mirror)};
}

RotheLabeling rothify(const TowerTableau& t) {
    const CompleteTowerTableau ct = complete(t);
    const int n = t.cell_count();
    std::vector<TowerCell> main_by_label(n), mirror_by_label(n);
    for (const auto& [cell, lbl] : ct.main.entries()) main_by_label[lbl - 1] = cell;
    for (const auto& [cell, lbl] : ct.mirror.entries()) mirror_by_label[lbl - 1] = cell;
    std::map<RotheCell, int> labels;
    for (int k = 1; k <= n; ++k) {
        const TowerCell u = main_by_label[k - 1];
        const TowerCell v = mirror_by_label[n - k];  // virtual cell labeled n+1-k
        labels[{v.col, u.col}] = k;
    }
    return RotheLabeling(std::move(labels));
}

RotheLabeling rothify_ss(const TowerTableau& t) {
    const TowerTableau st = standardize(t);  // throws when t is not semi-standard
    const RotheLabeling rs = rothify(st);
    std::vector<TowerCell> main_by_label(t.cell_count());
    for (const auto& [cell, lbl] : st.entries()) main_by_label[lbl - 1] = cell;
    std::map<RotheCell, int> labels;
    for (const auto& [pos, k] : rs.entries()) labels[pos] = t.label(main_by_label[k - 1]);
    return RotheLabeling(std::move(labels));
}

TowerTableau push_up(const RotheLabeling& l, const Permutation& w) {
    if (l.diagram() != rothe_diagram(w)) throw std::invalid_argument("labeling shape mismatch");
    std::vector<std::vector<int>> cols;
    for (const auto& [cell, lbl] : l.entries()) {
        if (cell.col > static_cast<int>(cols.size())) cols.resize(cell.col);
        cols[cell.col - 1].push_back(lbl);
    }
    for (auto& col : cols) std::sort(col.begin(), col.end());
    return TowerTableau(std::move(cols));
}

TowerDiagram tower_shape(const Permutation& w) {
    std::vector<int> hs;
    const RotheDiagram rothe = rothe_diagram(w);
    for (const RotheCell& c : rothe.cells()) {
        if (c.col > static_cast<int>(hs.size())) hs.resize(c.col, 0);
        hs[c.col - 1] += 1;
    }
    return TowerDiagram(std::move(hs));
}

namespace {

// East-adjacent cell of `c`: the first tower to the right holding a cell on
// the diagonal d+1, provided no tower strictly between holds a cell on the
// diagonal d (such a tower blocks the adjacency).
std::optional<TowerCell> east_adjacent(const TowerDiagram& t, TowerCell c) {
    const int d = diagonal(c);
    for (int k = c.col + 1; k <= d + 1; ++k) {
        if (t.height(k) > d + 1 - k) return TowerCell{k, d + 1 - k};
        if (d - k >= 0 && t.height(k) > d - k) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

TowerHook tower_hook(const TowerDiagram& t, TowerCell c) {
    if (!t.contains(c)) throw std::invalid_argument("cell not in diagram");
    TowerHook h{c, {}};
    for (int ht = c.ht; ht < t.height(c.col); ++ht) h.members.insert({c.col, ht});
    TowerCell cur = c;
    while (auto e = east_adjacent(t, cur)) {
        h.members.insert(*e);
        cur = *e;
    }
    return h;
}

TowerTableau flag_tableau(const TowerDiagram& t) {
    std::vector<std::vector<int>> cols(t.columns());
    for (int col = 1; col <= t.columns(); ++col) cols[col - 1].assign(t.height(col), 0);
    for (;;) {
        TowerCell c{0, 0};
        for (int col = 1; col <= t.columns() && c.col == 0; ++col)
            for (int ht = 0; ht < t.height(col); ++ht)
                if (cols[col - 1][ht] == 0) {
                    c = {col, ht};
                    break;
                }
        if (c.col == 0) break;  // everything labeled
        const auto f = flight(t, c);
        if (!f) throw std::logic_error("flag construction reached a cell without flight path");
        TowerCell cur = c;
        for (;;) {
            if (cols[cur.col - 1][cur.ht] != 0)
                throw std::logic_error("flag construction relabels a cell");
            cols[cur.col - 1][cur.ht] = f->flight_number;
            const auto e = east_adjacent(t, cur);
            if (!e) break;
            cur = *e;
        }
    }
    return TowerTableau(std::move(cols));
}

}  // namespace towertab
