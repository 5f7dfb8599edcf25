#pragma once

#include <set>
#include <vector>

#include "towertab/cells.hpp"

namespace towertab {

// A word in the simple transpositions s_1, s_2, ...; entry k means s_k.
using Word = std::vector<int>;

// Permutation in one-line notation, stored at the minimal n (trailing fixed
// points trimmed), so equality and ordering are structural.  Values beyond
// the stored range are fixed points.
class Permutation {
public:
    Permutation() = default;  // identity
    explicit Permutation(std::vector<int> oneline);

    static Permutation identity() { return Permutation{}; }

    int operator()(int i) const;  // 1-based
    int inverse(int value) const;  // position of `value`
    int size() const { return static_cast<int>(oneline_.size()); }
    const std::vector<int>& oneline() const { return oneline_; }

    int length() const;  // number of inversions

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> oneline_;
};

// Product s_{w_1} s_{w_2} ... applied left to right; s_i swaps positions
// i, i+1 of the one-line word.
Permutation apply_word(const Word& w);

// True iff |w| equals the Coxeter length of its product.
bool is_reduced(const Word& w);

// An arbitrary finite set of matrix cells.  Rothe diagrams of permutations
// are the main instances, but hooks are meaningful on any cell set.
class RotheDiagram {
public:
    RotheDiagram() = default;
    explicit RotheDiagram(std::set<RotheCell> cells) : cells_(std::move(cells)) {}

    bool contains(RotheCell c) const { return cells_.count(c) != 0; }
    const std::set<RotheCell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    friend bool operator==(const RotheDiagram&, const RotheDiagram&) = default;

private:
    std::set<RotheCell> cells_;
};

// D_w = {(i, w(j)) : i < j, w(i) > w(j)}; |D_w| = length(w).
RotheDiagram rothe_diagram(const Permutation& w);

// Hook of a vertex: the vertex, the cells of d strictly below it in its
// column, and the cells of d strictly to its right in its row.
// Throws std::invalid_argument if the vertex is not in d.
std::set<RotheCell> hook(const RotheDiagram& d, RotheCell vertex);

std::set<int> descents(const Permutation& w);

// Border cells {(i, w(i+1)) : i in Des(w)}; in bijection with descents.
std::set<RotheCell> border_cells(const Permutation& w);

// All reduced words of w, by right-descent peeling, lexicographically sorted.
std::vector<Word> enumerate_reduced_words(const Permutation& w);

}  // namespace towertab
