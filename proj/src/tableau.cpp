#include "towertab/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace towertab {

TowerTableau::TowerTableau(std::vector<std::vector<int>> columns) : cols_(std::move(columns)) {
    for (const auto& col : cols_)
        for (int lbl : col)
            if (lbl < 1) throw std::invalid_argument("labels must be positive");
    while (!cols_.empty() && cols_.back().empty()) cols_.pop_back();
}

TowerDiagram TowerTableau::shape() const {
    std::vector<int> hs(cols_.size());
    for (std::size_t i = 0; i < cols_.size(); ++i) hs[i] = static_cast<int>(cols_[i].size());
    return TowerDiagram(std::move(hs));
}

bool TowerTableau::has_cell(TowerCell c) const {
    return c.col >= 1 && c.col <= static_cast<int>(cols_.size()) && c.ht >= 0 &&
           c.ht < static_cast<int>(cols_[c.col - 1].size());
}

int TowerTableau::label(TowerCell c) const {
    if (!has_cell(c)) throw std::invalid_argument("cell not in tableau");
    return cols_[c.col - 1][c.ht];
}

int TowerTableau::cell_count() const {
    int n = 0;
    for (const auto& col : cols_) n += static_cast<int>(col.size());
    return n;
}

int TowerTableau::max_label() const {
    int m = 0;
    for (const auto& col : cols_)
        for (int lbl : col) m = std::max(m, lbl);
    return m;
}

std::vector<std::pair<TowerCell, int>> TowerTableau::entries() const {
    std::vector<std::pair<TowerCell, int>> out;
    out.reserve(cell_count());
    for (int col = 1; col <= static_cast<int>(cols_.size()); ++col)
        for (int ht = 0; ht < static_cast<int>(cols_[col - 1].size()); ++ht)
            out.push_back({{col, ht}, cols_[col - 1][ht]});
    return out;
}

TowerTableau TowerTableau::with(TowerCell c, int lbl) const {
    if (c.col < 1 || c.ht < 0) throw std::invalid_argument("bad cell");
    std::vector<std::vector<int>> cols = cols_;
    if (c.col > static_cast<int>(cols.size())) cols.resize(c.col);
    if (c.ht != static_cast<int>(cols[c.col - 1].size()))
        throw std::invalid_argument("cell is not the next free slot of its tower");
    cols[c.col - 1].push_back(lbl);
    return TowerTableau(std::move(cols));
}

TowerTableau TowerTableau::without_top(int col) const {
    if (col < 1 || col > static_cast<int>(cols_.size()) || cols_[col - 1].empty())
        throw std::invalid_argument("tower is empty");
    std::vector<std::vector<int>> cols = cols_;
    cols[col - 1].pop_back();
    return TowerTableau(std::move(cols));
}

SlideTrace slide_word_trace(const Word& w) {
    SlideTrace trace;
    TowerTableau t;
    TowerDiagram shape;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const SlideResult placed = slide(shape, w[k]);
        if (!placed) {
            trace.terminated_at = k + 1;
            return trace;
        }
        t = t.with(*placed, static_cast<int>(k) + 1);
        shape = shape.with_cell(*placed);
        trace.placed.push_back(*placed);
    }
    trace.tableau = std::move(t);
    return trace;
}

std::optional<TowerTableau> slide_word(const Word& w) { return slide_word_trace(w).tableau; }

namespace {

// Shared by is_standard and reading_word: peel cells from the largest label
// down, checking each is a corner of what remains; fills `out` when given.
bool peel_standard(const TowerTableau& t, Word* out) {
    const int n = t.cell_count();
    std::map<int, TowerCell> by_label;
    for (const auto& [cell, lbl] : t.entries()) {
        if (lbl > n || by_label.count(lbl)) return false;
        by_label.emplace(lbl, cell);
    }
    if (static_cast<int>(by_label.size()) != n) return false;
    if (out) out->assign(n, 0);
    TowerDiagram shape = t.shape();
    for (int k = n; k >= 1; --k) {
        const TowerCell c = by_label.at(k);
        if (c.ht != shape.height(c.col) - 1) return false;  // not a top cell
        const auto f = flight(shape, c);
        if (!f) return false;
        if (out) (*out)[k - 1] = f->flight_number;
        shape = shape.without_top(c.col);
    }
    return true;
}

}  // namespace

bool is_standard(const TowerTableau& t) { return peel_standard(t, nullptr); }

Word reading_word(const TowerTableau& t) {
    Word w;
    if (!peel_standard(t, &w)) throw std::invalid_argument("tableau is not standard");
    return w;
}

TowerTableau natural_tableau(const TowerDiagram& shape) {
    TowerTableau t;
    int next = 1;
    for (int col = shape.columns(); col >= 1; --col)
        for (int ht = 0; ht < shape.height(col); ++ht) t = t.with({col, ht}, next++);
    return t;
}

namespace {

// Standardization labels in removal order, or nullopt when the tableau is
// not semi-standard.  Corner flight numbers are pairwise distinct; a
// collision means a broken invariant, not bad input.
std::optional<std::map<TowerCell, int>> standardization(const TowerTableau& t) {
    std::map<TowerCell, int> out;
    std::vector<std::vector<int>> cols = t.columns();
    TowerDiagram shape = t.shape();
    for (int k = t.cell_count(); k >= 1; --k) {
        int maxlbl = 0;
        for (const auto& col : cols)
            for (int lbl : col) maxlbl = std::max(maxlbl, lbl);
        const std::vector<Corner> cs = corners(shape);
        for (std::size_t a = 0; a < cs.size(); ++a)
            for (std::size_t b = a + 1; b < cs.size(); ++b)
                if (cs[a].flight_number == cs[b].flight_number)
                    throw std::logic_error("corner flight numbers collide");
        const Corner* pick = nullptr;
        for (const Corner& c : cs) {
            if (cols[c.cell.col - 1][c.cell.ht] != maxlbl) continue;
            if (!pick || c.flight_number < pick->flight_number) pick = &c;
        }
        if (!pick) return std::nullopt;  // maximal label sits on no corner
        out.emplace(pick->cell, k);
        cols[pick->cell.col - 1].pop_back();
        shape = shape.without_top(pick->cell.col);
    }
    return out;
}

}  // namespace

bool is_semistandard(const TowerTableau& t) { return standardization(t).has_value(); }

TowerTableau standardize(const TowerTableau& t) {
    const auto labels = standardization(t);
    if (!labels) throw std::invalid_argument("tableau is not semi-standard");
    TowerTableau out;
    for (const auto& [cell, lbl] : t.entries()) out = out.with(cell, labels->at(cell));
    return out;
}

TowerTableau remove_initial(const TowerTableau& t) {
    if (t.empty()) throw std::invalid_argument("tableau is empty");
    if (!is_standard(t)) throw std::invalid_argument("tableau is not standard");
    // The cell labeled 1 is the bottom of its tower; drop it, shift the tower
    // down, then swap that tower with its right neighbor.
    std::vector<std::vector<int>> cols = t.columns();
    int tower = 0;
    for (std::size_t i = 0; i < cols.size() && tower == 0; ++i)
        if (!cols[i].empty() && cols[i][0] == 1) tower = static_cast<int>(i) + 1;
    assert(tower != 0);
    cols[tower - 1].erase(cols[tower - 1].begin());
    if (tower == static_cast<int>(cols.size())) cols.push_back({});
    std::swap(cols[tower - 1], cols[tower]);
    for (auto& col : cols)
        for (int& lbl : col) lbl -= 1;
    TowerTableau out{std::move(cols)};
#ifndef NDEBUG
    Word w = reading_word(t);
    w.erase(w.begin());
    assert(slide_word(w) == out);
#endif
    return out;
}

}  // namespace towertab
