#include "towertab/balanced.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <vector>

namespace towertab {

RotheLabeling::RotheLabeling(std::map<RotheCell, int> labels) : labels_(std::move(labels)) {
    for (const auto& [cell, lbl] : labels_)
        if (lbl < 1) throw std::invalid_argument("labels must be positive");
}

RotheDiagram RotheLabeling::diagram() const {
    std::set<RotheCell> cells;
    for (const auto& [cell, lbl] : labels_) cells.insert(cell);
    return RotheDiagram(std::move(cells));
}

int RotheLabeling::label(RotheCell c) const {
    auto it = labels_.find(c);
    if (it == labels_.end()) throw std::invalid_argument("cell not in labeling");
    return it->second;
}

namespace {

// Hook path of `v`: column cells bottom to top, then the vertex, then row
// cells left to right.  The vertex sits at index (#column cells below it).
std::vector<RotheCell> hook_path(const RotheDiagram& d, RotheCell v) {
    std::vector<RotheCell> below, right;
    for (const RotheCell& c : d.cells()) {
        if (c.col == v.col && c.row > v.row) below.push_back(c);
        if (c.row == v.row && c.col > v.col) right.push_back(c);
    }
    std::sort(below.begin(), below.end(),
              [](RotheCell a, RotheCell b) { return a.row > b.row; });
    std::sort(right.begin(), right.end());
    std::vector<RotheCell> path = std::move(below);
    path.push_back(v);
    path.insert(path.end(), right.begin(), right.end());
    return path;
}

}  // namespace

std::optional<RotheCell> first_unbalanced_hook(const RotheLabeling& l) {
    const RotheDiagram d = l.diagram();
    for (const auto& [v, lbl] : l.entries()) {
        const std::vector<RotheCell> path = hook_path(d, v);
        std::size_t pos = 0;
        while (path[pos] != v) ++pos;
        std::vector<int> sorted;
        sorted.reserve(path.size());
        for (const RotheCell& c : path) sorted.push_back(l.label(c));
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (sorted[pos] != lbl) return v;
    }
    return std::nullopt;
}

bool is_balanced(const RotheLabeling& l) { return !first_unbalanced_hook(l).has_value(); }

bool is_column_strict(const RotheLabeling& l) {
    for (const auto& [a, la] : l.entries())
        for (const auto& [b, lb] : l.entries())
            if (a.col == b.col && a.row < b.row && la == lb) return false;
    return true;
}

bool is_injective(const RotheLabeling& l) {
    const int n = static_cast<int>(l.size());
    std::vector<bool> seen(n, false);
    for (const auto& [cell, lbl] : l.entries()) {
        if (lbl > n || seen[lbl - 1]) return false;
        seen[lbl - 1] = true;
    }
    return true;
}

RotheLabeling canonical_labeling(const Word& alpha) {
    if (!is_reduced(alpha)) throw std::invalid_argument("word is not reduced");
    const Permutation w = apply_word(alpha);
    int n = 0;
    for (int a : alpha) n = std::max(n, a + 1);
    std::vector<int> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = i + 1;
    std::map<RotheCell, int> labels;
    for (std::size_t r = 0; r < alpha.size(); ++r) {
        const int pos = alpha[r];
        const int a = cur[pos - 1], b = cur[pos];
        assert(a < b);  // each step lengthens the product
        labels[{w.inverse(b), a}] = static_cast<int>(r) + 1;
        std::swap(cur[pos - 1], cur[pos]);
    }
    return RotheLabeling(std::move(labels));
}

Word recover_word(const RotheLabeling& l) {
    if (!is_injective(l)) throw std::invalid_argument("labeling is not injective");
    const int n = static_cast<int>(l.size());
    std::vector<RotheCell> by_label(n);
    for (const auto& [cell, lbl] : l.entries()) by_label[lbl - 1] = cell;
    Word out(n);
    for (int i = 1; i <= n; ++i) {
        const RotheCell c = by_label[i - 1];
        int larger_in_row = 0, larger_above = 0;
        for (const auto& [cell, lbl] : l.entries()) {
            if (lbl <= i) continue;
            if (cell.row == c.row) ++larger_in_row;
            if (cell.col == c.col && cell.row < c.row) ++larger_above;
        }
        out[i - 1] = c.row + larger_in_row - larger_above;
    }
    return out;
}

}  // namespace towertab
