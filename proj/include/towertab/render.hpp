#pragma once

#include <string>

#include "towertab/balanced.hpp"
#include "towertab/rothify.hpp"
#include "towertab/tableau.hpp"

namespace towertab {

// Text drawings.  One text cell per unit square (wider when labels need more
// digits); rows top to bottom; the empty object renders as the empty string.
std::string ascii_diagram(const TowerDiagram& t);
std::string ascii_tableau(const TowerTableau& t);
std::string ascii_labeling(const RotheLabeling& l);
// Four-quadrant picture with axes: main towers upper right, virtual towers
// reflected lower left, Rothification cells lower right.
std::string ascii_complete(const CompleteTowerTableau& c);

// SVG drawings: 10-unit squares, labels centered.
std::string svg_diagram(const TowerDiagram& t);
std::string svg_tableau(const TowerTableau& t);
std::string svg_labeling(const RotheLabeling& l);
std::string svg_complete(const CompleteTowerTableau& c);

}  // namespace towertab
