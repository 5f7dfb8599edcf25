#pragma once

#include <optional>
#include <vector>

#include "towertab/cells.hpp"

namespace towertab {

// A tower diagram: a finite sequence of towers of unit cells sitting on the
// horizontal axis in the first quadrant.  heights()[i] is the height of tower
// i+1; containing (i,j) implies containing (i,0..j).  Trailing empty towers
// are trimmed so equality is structural.
class TowerDiagram {
public:
    TowerDiagram() = default;
    explicit TowerDiagram(std::vector<int> heights);

    // Height of tower `col` (1-based); 0 outside the stored range.
    int height(int col) const;
    // Index of the last non-empty tower (0 for the empty diagram).
    int columns() const { return static_cast<int>(heights_.size()); }
    int cell_count() const;
    bool empty() const { return heights_.empty(); }
    bool contains(TowerCell c) const;

    const std::vector<int>& heights() const { return heights_; }
    // All cells, column-major, bottom to top.
    std::vector<TowerCell> cells() const;

    // New diagram with `c` added; `c` must be the next free slot of its tower.
    TowerDiagram with_cell(TowerCell c) const;
    // New diagram with the top cell of tower `col` removed.
    TowerDiagram without_top(int col) const;

    friend bool operator==(const TowerDiagram&, const TowerDiagram&) = default;

private:
    std::vector<int> heights_;
};

// Result of sliding a letter: the placed cell, or nullopt when the slide
// terminates (the zigzag dies inside the diagram).
using SlideResult = std::optional<TowerCell>;

// Slide `letter` into the diagram.  The zigzag enters along the diagonal
// x + y = letter - 1 and either settles on top of the first tower whose main
// diagonal it crosses, terminates one step short of an occupied slot, or is
// deflected to the next diagonal.
SlideResult slide(const TowerDiagram& t, int letter);

// Flight path of a cell: the chain of cells met while flying north-west,
// each hop descending one cell below the crossed main diagonal.  The path is
// listed left to right; the queried cell is last.  flight_number is the
// diagonal of the leftmost cell.
struct FlightPath {
    std::vector<TowerCell> cells;
    int flight_number = 0;
    friend bool operator==(const FlightPath&, const FlightPath&) = default;
};

// nullopt when the flight line meets the north-east corner of a top cell.
// Throws std::invalid_argument if `c` is not in the diagram.
std::optional<FlightPath> flight(const TowerDiagram& t, TowerCell c);

// A corner: a top cell that admits a flight path.
struct Corner {
    TowerCell cell;
    int flight_number = 0;
    friend bool operator==(const Corner&, const Corner&) = default;
};

// Corners ordered by tower index.
std::vector<Corner> corners(const TowerDiagram& t);

// Remove a corner cell; throws std::invalid_argument if `c` is not a corner.
TowerDiagram remove_corner(const TowerDiagram& t, TowerCell c);

}  // namespace towertab
