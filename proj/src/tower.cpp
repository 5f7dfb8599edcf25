#include "towertab/tower.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace towertab {

TowerDiagram::TowerDiagram(std::vector<int> heights) : heights_(std::move(heights)) {
    for (int h : heights_)
        if (h < 0) throw std::invalid_argument("tower heights must be non-negative");
    while (!heights_.empty() && heights_.back() == 0) heights_.pop_back();
}

int TowerDiagram::height(int col) const {
    if (col < 1 || col > columns()) return 0;
    return heights_[col - 1];
}

int TowerDiagram::cell_count() const {
    return std::accumulate(heights_.begin(), heights_.end(), 0);
}

bool TowerDiagram::contains(TowerCell c) const {
    return c.col >= 1 && c.ht >= 0 && c.ht < height(c.col);
}

std::vector<TowerCell> TowerDiagram::cells() const {
    std::vector<TowerCell> out;
    out.reserve(cell_count());
    for (int col = 1; col <= columns(); ++col)
        for (int ht = 0; ht < height(col); ++ht) out.push_back({col, ht});
    return out;
}

TowerDiagram TowerDiagram::with_cell(TowerCell c) const {
    if (c.col < 1 || c.ht != height(c.col))
        throw std::invalid_argument("cell is not the next free slot of its tower");
    std::vector<int> hs = heights_;
    if (c.col > columns()) hs.resize(c.col, 0);
    hs[c.col - 1] += 1;
    return TowerDiagram(std::move(hs));
}

TowerDiagram TowerDiagram::without_top(int col) const {
    if (height(col) == 0) throw std::invalid_argument("tower is empty");
    std::vector<int> hs = heights_;
    hs[col - 1] -= 1;
    return TowerDiagram(std::move(hs));
}

SlideResult slide(const TowerDiagram& t, int letter) {
    if (letter < 1) throw std::invalid_argument("letters must be positive");
    int alpha = letter;  // current diagonal is x + y = alpha - 1
    int start = 1;       // towers left of `start` have already been passed over
    for (;;) {
        // Leftmost tower in [start, alpha-1] with a cell on the diagonal.
        int hit = 0;
        for (int k = start; k < alpha; ++k) {
            if (t.height(k) > alpha - 1 - k) {
                hit = k;
                break;
            }
        }
        if (hit == 0) {
            // Diagonal clear: the zigzag reaches tower alpha itself.
            int h = t.height(alpha);
            if (h == 0) return TowerCell{alpha, 0};
            if (h == 1) return std::nullopt;
            start = alpha + 1;  // deflected over tower alpha
            alpha += 1;
        } else {
            int h = t.height(hit);
            if (h == alpha - hit) return TowerCell{hit, alpha - hit};
            if (h == alpha - hit + 1) return std::nullopt;
            start = hit + 1;  // deflected over tower `hit`
            alpha += 1;
        }
    }
}

std::optional<FlightPath> flight(const TowerDiagram& t, TowerCell c) {
    if (!t.contains(c)) throw std::invalid_argument("cell not in diagram");
    std::vector<TowerCell> rev;  // path collected right to left
    TowerCell cur = c;
    for (;;) {
        rev.push_back(cur);
        int d = diagonal(cur);
        int found = 0;
        for (int k = cur.col - 1; k >= 1; --k) {
            int j = d - k;  // j >= 1 for k < cur.col
            if (t.height(k) > j) {
                found = k;  // line crosses the main diagonal of (k, j)
                break;
            }
            if (t.height(k) == j) return std::nullopt;  // north-east corner of a top cell
        }
        if (found == 0) {
            std::reverse(rev.begin(), rev.end());
            return FlightPath{std::move(rev), d};
        }
        rev.push_back({found, d - found});
        cur = {found, d - found - 1};  // continue from the cell below
    }
}

std::vector<Corner> corners(const TowerDiagram& t) {
    std::vector<Corner> out;
    for (int col = 1; col <= t.columns(); ++col) {
        int h = t.height(col);
        if (h == 0) continue;
        if (auto f = flight(t, {col, h - 1})) out.push_back({{col, h - 1}, f->flight_number});
    }
    return out;
}

TowerDiagram remove_corner(const TowerDiagram& t, TowerCell c) {
    for (const Corner& k : corners(t))
        if (k.cell == c) return t.without_top(c.col);
    throw std::invalid_argument("cell is not a corner");
}

}  // namespace towertab
