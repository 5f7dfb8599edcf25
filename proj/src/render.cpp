#include "towertab/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace towertab {

namespace {

int digits(int v) { return static_cast<int>(std::to_string(v).size()); }

std::string pad(const std::string& s, int w) {
    return std::string(static_cast<std::size_t>(w) - s.size(), ' ') + s;
}

std::string rstrip(std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) out += '\n';
        out += lines[i];
    }
    return out;
}

// Unit squares addressed by their south-west corner.
using Squares = std::map<std::pair<int, int>, std::string>;

}  // namespace

std::string ascii_diagram(const TowerDiagram& t) {
    if (t.empty()) return "";
    int hmax = 0;
    for (int col = 1; col <= t.columns(); ++col) hmax = std::max(hmax, t.height(col));
    std::vector<std::string> lines;
    for (int ht = hmax - 1; ht >= 0; --ht) {
        std::string line;
        for (int col = 1; col <= t.columns(); ++col) line += t.contains({col, ht}) ? '#' : ' ';
        lines.push_back(rstrip(std::move(line)));
    }
    return join_lines(lines);
}

std::string ascii_tableau(const TowerTableau& t) {
    if (t.empty()) return "";
    const TowerDiagram shape = t.shape();
    int hmax = 0, wd = 1;
    for (int col = 1; col <= shape.columns(); ++col) hmax = std::max(hmax, shape.height(col));
    for (const auto& [cell, lbl] : t.entries()) wd = std::max(wd, digits(lbl));
    std::vector<std::string> lines;
    for (int ht = hmax - 1; ht >= 0; --ht) {
        std::string line;
        for (int col = 1; col <= shape.columns(); ++col)
            line += shape.contains({col, ht}) ? pad(std::to_string(t.label({col, ht})), wd)
                                              : std::string(wd, ' ');
        lines.push_back(rstrip(std::move(line)));
    }
    return join_lines(lines);
}

std::string ascii_labeling(const RotheLabeling& l) {
    if (l.empty()) return "";
    int rmax = 0, cmax = 0, wd = 1;
    for (const auto& [cell, lbl] : l.entries()) {
        rmax = std::max(rmax, cell.row);
        cmax = std::max(cmax, cell.col);
        wd = std::max(wd, digits(lbl));
    }
    std::vector<std::string> lines;
    for (int row = 1; row <= rmax; ++row) {
        std::string line;
        for (int col = 1; col <= cmax; ++col) {
            const auto it = l.entries().find({row, col});
            line += it == l.entries().end() ? pad(".", wd) : pad(std::to_string(it->second), wd);
        }
        lines.push_back(std::move(line));
    }
    return join_lines(lines);
}

std::string ascii_complete(const CompleteTowerTableau& c) {
    Squares sq;
    for (const auto& [cell, lbl] : c.main.entries())
        sq[{cell.col - 1, cell.ht}] = std::to_string(lbl);
    // Reflection across x + y = 0 sends the square with SE corner (i, j) to
    // the square spanning x in [-j-1, -j], y in [-i, -i+1].
    for (const auto& [cell, lbl] : c.mirror.entries())
        sq[{-cell.ht - 1, -cell.col}] = std::to_string(lbl);
    if (c.main.cell_count() > 0) {
        const RotheLabeling rl = rothify(c.main);
        for (const auto& [cell, lbl] : rl.entries())
            sq[{cell.col - 1, -cell.row}] = std::to_string(lbl);
    }
    if (sq.empty()) return "+";

    int xlo = 0, xhi = 0, ylo = 0, yhi = 0, wd = 1;
    for (const auto& [pos, s] : sq) {
        xlo = std::min(xlo, pos.first);
        xhi = std::max(xhi, pos.first + 1);
        ylo = std::min(ylo, pos.second);
        yhi = std::max(yhi, pos.second + 1);
        wd = std::max(wd, static_cast<int>(s.size()));
    }
    auto square = [&](int x, int y) {
        const auto it = sq.find({x, y});
        return it == sq.end() ? std::string(wd, ' ') : pad(it->second, wd);
    };
    std::vector<std::string> lines;
    for (int y = yhi - 1; y >= ylo; --y) {
        if (y == -1) {  // axis between y = 0 and y = -1
            std::string line;
            for (int x = xlo; x < xhi; ++x) {
                line += x == 0 ? "+" : "";
                line += std::string(wd, '-');
            }
            if (xhi <= 0) line += "+";
            lines.push_back(std::move(line));
        }
        std::string line;
        for (int x = xlo; x < xhi; ++x) {
            if (x == 0) line += '|';
            line += square(x, y);
        }
        if (xhi <= 0) line += '|';
        lines.push_back(rstrip(std::move(line)));
    }
    if (ylo >= 0) {
        std::string line;
        for (int x = xlo; x < xhi; ++x) {
            line += x == 0 ? "+" : "";
            line += std::string(wd, '-');
        }
        lines.push_back(std::move(line));
    }
    return join_lines(lines);
}

namespace {

constexpr int kUnit = 10;

std::string svg_open(int x, int y, int w, int h) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x << ' ' << y << ' ' << w
       << ' ' << h << "\" width=\"" << w << "\" height=\"" << h << "\">\n";
    return os.str();
}

void svg_cell(std::ostringstream& os, int x, int y, const std::string& label) {
    os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kUnit << "\" height=\""
       << kUnit << "\" fill=\"none\" stroke=\"black\"/>\n";
    if (!label.empty())
        os << "  <text x=\"" << x + kUnit / 2 << "\" y=\"" << y + kUnit / 2
           << "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-size=\"5\">" << label
           << "</text>\n";
}

}  // namespace

std::string svg_diagram(const TowerDiagram& t) {
    int hmax = 0;
    for (int col = 1; col <= t.columns(); ++col) hmax = std::max(hmax, t.height(col));
    std::ostringstream os;
    os << svg_open(0, 0, std::max(1, t.columns()) * kUnit, std::max(1, hmax) * kUnit);
    for (const TowerCell& c : t.cells())
        svg_cell(os, (c.col - 1) * kUnit, (hmax - 1 - c.ht) * kUnit, "");
    os << "</svg>\n";
    return os.str();
}

std::string svg_tableau(const TowerTableau& t) {
    const TowerDiagram shape = t.shape();
    int hmax = 0;
    for (int col = 1; col <= shape.columns(); ++col) hmax = std::max(hmax, shape.height(col));
    std::ostringstream os;
    os << svg_open(0, 0, std::max(1, shape.columns()) * kUnit, std::max(1, hmax) * kUnit);
    for (const auto& [c, lbl] : t.entries())
        svg_cell(os, (c.col - 1) * kUnit, (hmax - 1 - c.ht) * kUnit, std::to_string(lbl));
    os << "</svg>\n";
    return os.str();
}

std::string svg_labeling(const RotheLabeling& l) {
    int n = 1;
    for (const auto& [c, lbl] : l.entries()) n = std::max({n, c.row, c.col});
    std::ostringstream os;
    os << svg_open(0, 0, n * kUnit, n * kUnit);
    for (int k = 0; k <= n; ++k) {
        os << "  <line x1=\"0\" y1=\"" << k * kUnit << "\" x2=\"" << n * kUnit << "\" y2=\""
           << k * kUnit << "\" stroke=\"#cccccc\"/>\n";
        os << "  <line x1=\"" << k * kUnit << "\" y1=\"0\" x2=\"" << k * kUnit << "\" y2=\""
           << n * kUnit << "\" stroke=\"#cccccc\"/>\n";
    }
    for (const auto& [c, lbl] : l.entries())
        svg_cell(os, (c.col - 1) * kUnit, (c.row - 1) * kUnit, std::to_string(lbl));
    os << "</svg>\n";
    return os.str();
}

std::string svg_complete(const CompleteTowerTableau& c) {
    // Same geometry as ascii_complete, in SVG coordinates (y grows downward).
    struct Item {
        int x, y;  // unit square, SW corner in math coordinates
        std::string label;
    };
    std::vector<Item> items;
    for (const auto& [cell, lbl] : c.main.entries())
        items.push_back({cell.col - 1, cell.ht, std::to_string(lbl)});
    for (const auto& [cell, lbl] : c.mirror.entries())
        items.push_back({-cell.ht - 1, -cell.col, std::to_string(lbl)});
    if (c.main.cell_count() > 0) {
        const RotheLabeling rl = rothify(c.main);
        for (const auto& [cell, lbl] : rl.entries())
            items.push_back({cell.col - 1, -cell.row, std::to_string(lbl)});
    }
    int xlo = -1, xhi = 1, ylo = -1, yhi = 1;
    for (const Item& it : items) {
        xlo = std::min(xlo, it.x);
        xhi = std::max(xhi, it.x + 1);
        ylo = std::min(ylo, it.y);
        yhi = std::max(yhi, it.y + 1);
    }
    std::ostringstream os;
    os << svg_open(xlo * kUnit, -yhi * kUnit, (xhi - xlo) * kUnit, (yhi - ylo) * kUnit);
    os << "  <line x1=\"" << xlo * kUnit << "\" y1=\"0\" x2=\"" << xhi * kUnit
       << "\" y2=\"0\" stroke=\"black\"/>\n";
    os << "  <line x1=\"0\" y1=\"" << -yhi * kUnit << "\" x2=\"0\" y2=\"" << -ylo * kUnit
       << "\" stroke=\"black\"/>\n";
    for (const Item& it : items) svg_cell(os, it.x * kUnit, -(it.y + 1) * kUnit, it.label);
    os << "</svg>\n";
    return os.str();
}

}  // namespace towertab
