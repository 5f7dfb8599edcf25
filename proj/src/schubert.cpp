#include "towertab/schubert.hpp"

#include <stdexcept>

namespace towertab {

Monomial reading_monomial(const TowerTableau& t) {
    Monomial m;
    for (const auto& [cell, lbl] : t.entries()) m *= Monomial::variable(lbl);
    return m;
}

bool tableau_leq(const TowerTableau& a, const TowerTableau& b) {
    if (a.shape() != b.shape()) throw std::invalid_argument("shape mismatch");
    for (const auto& [cell, lbl] : a.entries())
        if (lbl > b.label(cell)) return false;
    return true;
}

TowerTableau uniform_bound(const TowerDiagram& shape, int cap) {
    if (cap < 1 && !shape.empty()) throw std::invalid_argument("cap must be positive");
    std::vector<std::vector<int>> cols(shape.columns());
    for (int col = 1; col <= shape.columns(); ++col) cols[col - 1].assign(shape.height(col), cap);
    return TowerTableau(std::move(cols));
}

void for_each_sstt(const TowerDiagram& shape, const TowerTableau& bound,
                   const std::function<void(const TowerTableau&)>& fn) {
    if (bound.shape() != shape) throw std::invalid_argument("bound shape mismatch");
    const std::vector<TowerCell> cells = shape.cells();
    std::vector<std::vector<int>> cols(shape.columns());
    for (int col = 1; col <= shape.columns(); ++col) cols[col - 1].assign(shape.height(col), 0);

    auto column_has = [&](int col, int lbl) {
        for (int v : cols[col - 1])
            if (v == lbl) return true;
        return false;
    };
    std::function<void(std::size_t)> dfs = [&](std::size_t idx) {
        if (idx == cells.size()) {
            const TowerTableau t(cols);
            if (is_semistandard(t)) fn(t);
            return;
        }
        const TowerCell c = cells[idx];
        for (int lbl = 1; lbl <= bound.label(c); ++lbl) {
            if (column_has(c.col, lbl)) continue;
            cols[c.col - 1][c.ht] = lbl;
            dfs(idx + 1);
            cols[c.col - 1][c.ht] = 0;
        }
    };
    dfs(0);
}

std::vector<TowerTableau> enumerate_sstt(const TowerDiagram& shape, const TowerTableau& bound) {
    std::vector<TowerTableau> out;
    for_each_sstt(shape, bound, [&](const TowerTableau& t) { out.push_back(t); });
    return out;
}

std::vector<TowerTableau> enumerate_sstt(const TowerDiagram& shape, int uniform_cap) {
    return enumerate_sstt(shape, uniform_bound(shape, uniform_cap));
}

Polynomial schubert(const Permutation& w) {
    const TowerDiagram shape = tower_shape(w);
    Polynomial p;
    for_each_sstt(shape, flag_tableau(shape),
                  [&](const TowerTableau& t) { p.add_term(reading_monomial(t), 1); });
    return p;
}

Polynomial stanley_truncated(const Permutation& w, int vars) {
    if (vars < 1) throw std::invalid_argument("need at least one variable");
    const TowerDiagram shape = tower_shape(w);
    Polynomial p;
    for_each_sstt(shape, uniform_bound(shape, vars),
                  [&](const TowerTableau& t) { p.add_term(reading_monomial(t), 1); });
    return p;
}

Polynomial schubert_oracle_bjs(const Permutation& w) {
    Polynomial p;
    for (const Word& a : enumerate_reduced_words(w)) {
        const std::size_t k = a.size();
        if (k == 0) {
            p.add_term(Monomial{}, 1);
            continue;
        }
        std::vector<int> iv(k);
        std::function<void(std::size_t)> dfs = [&](std::size_t r) {
            if (r == k) {
                Monomial m;
                for (int i : iv) m *= Monomial::variable(i);
                p.add_term(m, 1);
                return;
            }
            const int lo = r == 0 ? 1 : iv[r - 1] + (a[r - 1] < a[r] ? 1 : 0);
            for (int i = lo; i <= a[r]; ++i) {
                iv[r] = i;
                dfs(r + 1);
            }
        };
        dfs(0);
    }
    return p;
}

Polynomial stanley_oracle_fgrs(const Permutation& w, int vars) {
    if (vars < 1) throw std::invalid_argument("need at least one variable");
    const RotheDiagram d = rothe_diagram(w);
    const std::vector<RotheCell> cells(d.cells().begin(), d.cells().end());
    Polynomial p;
    std::map<RotheCell, int> labels;
    std::function<void(std::size_t)> dfs = [&](std::size_t idx) {
        if (idx == cells.size()) {
            const RotheLabeling l(labels);
            if (is_column_strict(l) && is_balanced(l)) {
                Monomial m;
                for (const auto& [cell, lbl] : labels) m *= Monomial::variable(lbl);
                p.add_term(m, 1);
            }
            return;
        }
        for (int lbl = 1; lbl <= vars; ++lbl) {
            labels[cells[idx]] = lbl;
            dfs(idx + 1);
        }
        labels.erase(cells[idx]);
    };
    dfs(0);
    return p;
}

}  // namespace towertab
