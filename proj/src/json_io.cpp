#include "towertab/json_io.hpp"

#include <stdexcept>

namespace towertab {

using nlohmann::json;

void to_json(json& j, const Permutation& w) { j = w.oneline(); }

void from_json(const json& j, Permutation& w) {
    w = Permutation(j.get<std::vector<int>>());
}

void to_json(json& j, const TowerDiagram& t) { j = t.heights(); }

void from_json(const json& j, TowerDiagram& t) {
    t = TowerDiagram(j.get<std::vector<int>>());
}

void to_json(json& j, const TowerTableau& t) {
    json labels = json::array();
    for (const auto& [cell, lbl] : t.entries())
        labels.push_back({{"col", cell.col}, {"ht", cell.ht}, {"label", lbl}});
    j = {{"heights", t.shape().heights()}, {"labels", std::move(labels)}};
}

void from_json(const json& j, TowerTableau& t) {
    const TowerDiagram shape(j.at("heights").get<std::vector<int>>());
    std::vector<std::vector<int>> cols(shape.columns());
    for (int col = 1; col <= shape.columns(); ++col) cols[col - 1].assign(shape.height(col), 0);
    for (const json& e : j.at("labels")) {
        const TowerCell c{e.at("col").get<int>(), e.at("ht").get<int>()};
        if (!shape.contains(c)) throw std::invalid_argument("label outside shape");
        if (cols[c.col - 1][c.ht] != 0) throw std::invalid_argument("duplicate cell label");
        cols[c.col - 1][c.ht] = e.at("label").get<int>();
    }
    for (const auto& col : cols)
        for (int lbl : col)
            if (lbl == 0) throw std::invalid_argument("unlabeled cell in shape");
    t = TowerTableau(std::move(cols));
}

void to_json(json& j, const RotheDiagram& d) {
    j = json::array();
    for (const RotheCell& c : d.cells()) j.push_back({c.row, c.col});
}

void from_json(const json& j, RotheDiagram& d) {
    std::set<RotheCell> cells;
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("cells are [row, col]");
        cells.insert({e[0].get<int>(), e[1].get<int>()});
    }
    d = RotheDiagram(std::move(cells));
}

void to_json(json& j, const RotheLabeling& l) {
    j = json::array();
    for (const auto& [cell, lbl] : l.entries())
        j.push_back({{"row", cell.row}, {"col", cell.col}, {"label", lbl}});
}

void from_json(const json& j, RotheLabeling& l) {
    std::map<RotheCell, int> labels;
    for (const json& e : j) {
        const RotheCell c{e.at("row").get<int>(), e.at("col").get<int>()};
        if (labels.count(c)) throw std::invalid_argument("duplicate cell label");
        labels[c] = e.at("label").get<int>();
    }
    l = RotheLabeling(std::move(labels));
}

void to_json(json& j, const CompleteTowerTableau& c) {
    j = {{"main", c.main}, {"virtual", c.mirror}};
}

void from_json(const json& j, CompleteTowerTableau& c) {
    c.main = j.at("main").get<TowerTableau>();
    c.mirror = j.at("virtual").get<TowerTableau>();
}

void to_json(json& j, const Polynomial& p) {
    j = json::array();
    for (const auto& [m, coeff] : p.terms()) {
        json exps = json::object();
        for (const auto& [v, e] : m.exponents()) exps[std::to_string(v)] = e;
        j.push_back({{"coeff", coeff}, {"exps", std::move(exps)}});
    }
}

void from_json(const json& j, Polynomial& p) {
    Polynomial out;
    for (const json& term : j) {
        Monomial m;
        for (const auto& [key, val] : term.at("exps").items())
            m *= Monomial::variable(std::stoi(key), val.get<int>());
        out.add_term(m, term.at("coeff").get<std::int64_t>());
    }
    p = std::move(out);
}

}  // namespace towertab
