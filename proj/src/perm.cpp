#include "towertab/perm.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace towertab {

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
    const int n = static_cast<int>(oneline_.size());
    std::vector<bool> seen(n, false);
    for (int v : oneline_) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("not a permutation in one-line notation");
        seen[v - 1] = true;
    }
    while (!oneline_.empty() && oneline_.back() == static_cast<int>(oneline_.size()))
        oneline_.pop_back();
}

int Permutation::operator()(int i) const {
    if (i < 1) throw std::invalid_argument("positions are 1-based");
    if (i > size()) return i;
    return oneline_[i - 1];
}

int Permutation::inverse(int value) const {
    if (value < 1) throw std::invalid_argument("values are 1-based");
    if (value > size()) return value;
    for (int i = 1; i <= size(); ++i)
        if (oneline_[i - 1] == value) return i;
    throw std::logic_error("value not found");  // unreachable: oneline_ is a bijection
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (oneline_[i] > oneline_[j]) ++inv;
    return inv;
}

Permutation apply_word(const Word& w) {
    int n = 0;
    for (int a : w) {
        if (a < 1) throw std::invalid_argument("letters must be positive");
        n = std::max(n, a + 1);
    }
    std::vector<int> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = i + 1;
    for (int a : w) std::swap(cur[a - 1], cur[a]);
    return Permutation(std::move(cur));
}

bool is_reduced(const Word& w) {
    return static_cast<int>(w.size()) == apply_word(w).length();
}

RotheDiagram rothe_diagram(const Permutation& w) {
    std::set<RotheCell> cells;
    const int n = w.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) cells.insert({i, w(j)});
    return RotheDiagram(std::move(cells));
}

std::set<RotheCell> hook(const RotheDiagram& d, RotheCell vertex) {
    if (!d.contains(vertex)) throw std::invalid_argument("vertex not in diagram");
    std::set<RotheCell> out{vertex};
    for (const RotheCell& c : d.cells()) {
        if (c.col == vertex.col && c.row > vertex.row) out.insert(c);
        if (c.row == vertex.row && c.col > vertex.col) out.insert(c);
    }
    return out;
}

std::set<int> descents(const Permutation& w) {
    std::set<int> out;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) out.insert(i);
    return out;
}

std::set<RotheCell> border_cells(const Permutation& w) {
    const RotheDiagram d = rothe_diagram(w);
    std::set<RotheCell> out;
    for (int i : descents(w)) {
        RotheCell c{i, w(i + 1)};
        if (d.contains(c)) out.insert(c);
    }
    return out;
}

namespace {

// w * s_i: swap positions i, i+1 of the one-line word.
Permutation multiply_simple(const Permutation& w, int i) {
    int n = std::max(w.size(), i + 1);
    std::vector<int> v(n);
    for (int k = 1; k <= n; ++k) v[k - 1] = w(k);
    std::swap(v[i - 1], v[i]);
    return Permutation(std::move(v));
}

const std::vector<Word>& reduced_words_rec(const Permutation& w,
                                           std::map<Permutation, std::vector<Word>>& memo) {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    std::vector<Word> words;
    const std::set<int> des = descents(w);
    if (des.empty()) {
        words.push_back({});
    } else {
        for (int i : des) {
            const Permutation shorter = multiply_simple(w, i);
            for (const Word& tail : reduced_words_rec(shorter, memo)) {
                Word word = tail;
                word.push_back(i);
                words.push_back(std::move(word));
            }
        }
        std::sort(words.begin(), words.end());
    }
    return memo.emplace(w, std::move(words)).first->second;
}

}  // namespace

std::vector<Word> enumerate_reduced_words(const Permutation& w) {
    std::map<Permutation, std::vector<Word>> memo;
    return reduced_words_rec(w, memo);
}

}  // namespace towertab
