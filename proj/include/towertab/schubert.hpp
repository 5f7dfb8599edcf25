#pragma once

#include <functional>
#include <vector>

#include "towertab/polynomial.hpp"
#include "towertab/rothify.hpp"

namespace towertab {

// Product of x_{label(c)} over the cells of t.
Monomial reading_monomial(const TowerTableau& t);

// Cellwise label comparison; throws std::invalid_argument on shape mismatch.
bool tableau_leq(const TowerTableau& a, const TowerTableau& b);

// Every cell of `shape` labeled `cap`.
TowerTableau uniform_bound(const TowerDiagram& shape, int cap);

// All column-strict semi-standard fillings of `shape` with label(c) <=
// bound(c).  Enumeration is depth-first over cells; candidates are filtered
// by is_semistandard.  Deterministic order.
void for_each_sstt(const TowerDiagram& shape, const TowerTableau& bound,
                   const std::function<void(const TowerTableau&)>& fn);
std::vector<TowerTableau> enumerate_sstt(const TowerDiagram& shape, const TowerTableau& bound);
std::vector<TowerTableau> enumerate_sstt(const TowerDiagram& shape, int uniform_cap);

// Schubert polynomial: reading monomials of the column-strict semi-standard
// tableaux on tower_shape(w) bounded cellwise by the flag tableau.
Polynomial schubert(const Permutation& w);

// Stanley symmetric function truncated to x1..xm: same sum with the uniform
// bound m instead of the flag.
Polynomial stanley_truncated(const Permutation& w, int vars);

// Independent cross-check: sum over reduced words a of w and weakly
// increasing sequences i with i_r <= a_r and i_r < i_{r+1} whenever
// a_r < a_{r+1}.
Polynomial schubert_oracle_bjs(const Permutation& w);

// Independent cross-check: sum over column-strict balanced labelings of the
// Rothe diagram with labels <= vars, by brute-force assignment.
Polynomial stanley_oracle_fgrs(const Permutation& w, int vars);

}  // namespace towertab
