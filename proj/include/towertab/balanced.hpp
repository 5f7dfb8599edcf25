#pragma once

#include <map>
#include <optional>

#include "towertab/cells.hpp"
#include "towertab/perm.hpp"

namespace towertab {

// A labeling of a cell set with positive integers.
class RotheLabeling {
public:
    RotheLabeling() = default;
    explicit RotheLabeling(std::map<RotheCell, int> labels);

    RotheDiagram diagram() const;
    int label(RotheCell c) const;  // throws if the cell is absent
    const std::map<RotheCell, int>& entries() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }

    friend bool operator==(const RotheLabeling&, const RotheLabeling&) = default;

private:
    std::map<RotheCell, int> labels_;
};

// A hook is balanced when sorting its labels weakly decreasing along the
// path (column bottom-to-top, then row left-to-right) leaves the vertex
// label fixed.  Returns the first vertex (in cell order) whose hook is
// unbalanced, or nullopt when every hook is balanced.
std::optional<RotheCell> first_unbalanced_hook(const RotheLabeling& l);
bool is_balanced(const RotheLabeling& l);

// No repeated label within a column.
bool is_column_strict(const RotheLabeling& l);

// Labels are exactly 1..size, each once.
bool is_injective(const RotheLabeling& l);

// The canonical labeling D_alpha of a reduced word: step r swaps the values
// a < b at positions alpha_r, alpha_r + 1 of the accumulating product and
// writes r into cell (w^{-1}(b), a) of D_w.
// Throws std::invalid_argument if alpha is not reduced.
RotheLabeling canonical_labeling(const Word& alpha);

// Inverse of canonical_labeling on injective balanced labelings:
// alpha_i = row(i) + #{labels > i in the same row} - #{labels > i above in
// the same column}.  Throws std::invalid_argument if l is not injective.
Word recover_word(const RotheLabeling& l);

}  // namespace towertab
