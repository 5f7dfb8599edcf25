#pragma once

#include <json.hpp>

#include "towertab/balanced.hpp"
#include "towertab/polynomial.hpp"
#include "towertab/rothify.hpp"
#include "towertab/tableau.hpp"

// JSON wire formats.  Emission is canonical (sorted, no duplicates) so equal
// values serialize byte-identically; from_json validates through the type
// constructors and throws on malformed input.
//
//   Permutation          [3,5,4,2,1]            one-line, [] = identity
//   Word                 [5,4,5,3,4,5,6,2]
//   TowerDiagram         [0,1,4,2,1]            heights
//   TowerTableau         {"heights":[...], "labels":[{"col","ht","label"},...]}
//   RotheDiagram         [[row,col],...]
//   RotheLabeling        [{"row","col","label"},...]
//   CompleteTowerTableau {"main":T, "virtual":T}
//   Polynomial           [{"coeff":1, "exps":{"1":2,"2":1}},...]

namespace towertab {

void to_json(nlohmann::json& j, const Permutation& w);
void from_json(const nlohmann::json& j, Permutation& w);

void to_json(nlohmann::json& j, const TowerDiagram& t);
void from_json(const nlohmann::json& j, TowerDiagram& t);

void to_json(nlohmann::json& j, const TowerTableau& t);
void from_json(const nlohmann::json& j, TowerTableau& t);

void to_json(nlohmann::json& j, const RotheDiagram& d);
void from_json(const nlohmann::json& j, RotheDiagram& d);

void to_json(nlohmann::json& j, const RotheLabeling& l);
void from_json(const nlohmann::json& j, RotheLabeling& l);

void to_json(nlohmann::json& j, const CompleteTowerTableau& c);
void from_json(const nlohmann::json& j, CompleteTowerTableau& c);

void to_json(nlohmann::json& j, const Polynomial& p);
void from_json(const nlohmann::json& j, Polynomial& p);

}  // namespace towertab
