#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "towertab/perm.hpp"
#include "towertab/tower.hpp"

namespace towertab {

// A filling of a tower diagram with positive integer labels.  The shape is
// implicit: columns()[i] holds the labels of tower i+1 bottom to top.
class TowerTableau {
public:
    TowerTableau() = default;
    explicit TowerTableau(std::vector<std::vector<int>> columns);

    const std::vector<std::vector<int>>& columns() const { return cols_; }
    TowerDiagram shape() const;
    bool has_cell(TowerCell c) const;
    int label(TowerCell c) const;  // throws if the cell is absent
    int cell_count() const;
    int max_label() const;  // 0 when empty
    bool empty() const { return cols_.empty(); }
    // Entries column-major, bottom to top.
    std::vector<std::pair<TowerCell, int>> entries() const;

    // New tableau with `c` labeled; `c` must be the next free slot of its tower.
    TowerTableau with(TowerCell c, int lbl) const;
    TowerTableau without_top(int col) const;

    friend bool operator==(const TowerTableau&, const TowerTableau&) = default;

private:
    std::vector<std::vector<int>> cols_;
};

// Slide the letters of `w` in order, labeling the k-th placed cell k.
// `tableau` is empty when some slide terminates; `terminated_at` is then the
// 1-based index of the offending letter.  `placed` records the cells placed
// so far in order.
struct SlideTrace {
    std::optional<TowerTableau> tableau;
    std::size_t terminated_at = 0;
    std::vector<TowerCell> placed;
};

SlideTrace slide_word_trace(const Word& w);
std::optional<TowerTableau> slide_word(const Word& w);

// True iff labels are exactly 1..n and for every k the cell labeled k is a
// corner of the subtableau of labels <= k.
bool is_standard(const TowerTableau& t);

// The word whose sliding recovers t: letter i is the flight number of the
// cell labeled i inside the subtableau of labels <= i.
// Throws std::invalid_argument if t is not standard.
Word reading_word(const TowerTableau& t);

// Label 1 at the rightmost bottom cell, then bottom to top and right to left.
// Its reading word is eta_n ... eta_2 eta_1 with eta_k = s_k s_{k+1} ...
TowerTableau natural_tableau(const TowerDiagram& shape);

// Semi-standard: repeatedly, some corner carries the maximal label; the one
// with the minimal flight number is removed.  Corner flight numbers are
// pairwise distinct (they biject with descents), so the choice is unique;
// a collision throws std::logic_error.
bool is_semistandard(const TowerTableau& t);

// Relabel a semi-standard tableau with n..1 in removal order.
// Throws std::invalid_argument if t is not semi-standard.
TowerTableau standardize(const TowerTableau& t);

// Inverse initial step of sliding: drop the cell labeled 1 (at the bottom of
// some tower i), shift that tower down, swap towers i and i+1, decrement all
// labels.  Equals slide_word of the reading word minus its first letter.
// Throws std::invalid_argument if t is empty or not standard.
TowerTableau remove_initial(const TowerTableau& t);

}  // namespace towertab
