#pragma once

// Minimal layered SVG writer for the render command: polyline paths, circles
// and point markers with an auto-fit viewBox and a legend.

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace cli {

struct SvgPath {
    std::string name;
    std::vector<std::pair<double, double>> points;
    std::string color;
    bool closed = true;
    bool dashed = false;
};

struct SvgCircle {
    std::string name;
    double cx = 0.0, cy = 0.0, r = 0.0;
    std::string color;
};

struct SvgMarkers {
    std::string name;
    std::vector<std::pair<double, double>> points;
    std::string color;
};

class SvgDoc {
  public:
    void add_path(SvgPath path) { paths_.push_back(std::move(path)); }
    void add_circle(SvgCircle circle) { circles_.push_back(std::move(circle)); }
    void add_markers(SvgMarkers markers) { markers_.push_back(std::move(markers)); }

    void write(std::ostream& out) const {
        double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
        auto grow = [&](double x, double y) {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        };
        // the y axis is flipped when writing, so the box is built flipped too
        for (const auto& p : paths_)
            for (const auto& [x, y] : p.points) grow(x, -y);
        for (const auto& c : circles_) {
            grow(c.cx - c.r, -c.cy - c.r);
            grow(c.cx + c.r, -c.cy + c.r);
        }
        for (const auto& m : markers_)
            for (const auto& [x, y] : m.points) grow(x, -y);
        if (min_x > max_x) {
            min_x = min_y = -1.0;
            max_x = max_y = 1.0;
        }
        const double width = std::max(max_x - min_x, 1e-9);
        const double height = std::max(max_y - min_y, 1e-9);
        const double margin = 0.05 * std::max(width, height);
        const double span = std::max(width, height) + 2.0 * margin;
        const double stroke = 0.003 * span;

        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out << "<!-- y axis flipped: mathematical orientation (counterclockwise "
               "positive) renders with y growing upward -->\n";
        char header[256];
        std::snprintf(header, sizeof header,
                      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.6g %.6g "
                      "%.6g %.6g\">\n",
                      min_x - margin, min_y - margin, width + 2 * margin,
                      height + 2 * margin);
        out << header;

        for (const auto& path : paths_) {
            out << "  <path id=\"" << path.name << "\" fill=\"none\" stroke=\""
                << path.color << "\" stroke-width=\"" << fmt(stroke) << "\"";
            if (path.dashed)
                out << " stroke-dasharray=\"" << fmt(4 * stroke) << " " << fmt(3 * stroke)
                    << "\"";
            out << " d=\"";
            for (std::size_t i = 0; i < path.points.size(); ++i) {
                out << (i == 0 ? "M" : "L") << fmt(path.points[i].first) << ","
                    << fmt(-path.points[i].second);
            }
            if (path.closed) out << "Z";
            out << "\"/>\n";
        }
        for (const auto& circle : circles_) {
            out << "  <circle id=\"" << circle.name << "\" cx=\"" << fmt(circle.cx)
                << "\" cy=\"" << fmt(-circle.cy) << "\" r=\"" << fmt(circle.r)
                << "\" fill=\"none\" stroke=\"" << circle.color << "\" stroke-width=\""
                << fmt(stroke) << "\"/>\n";
        }
        for (const auto& markers : markers_) {
            for (const auto& [x, y] : markers.points) {
                out << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(-y) << "\" r=\""
                    << fmt(1.5 * stroke) << "\" fill=\"" << markers.color << "\"/>\n";
            }
        }

        // legend
        double legend_y = min_y - margin + 0.04 * span;
        const double legend_x = min_x - margin + 0.03 * span;
        const double font = 0.03 * span;
        for (const auto& entry : legend_entries()) {
            out << "  <line x1=\"" << fmt(legend_x) << "\" y1=\"" << fmt(legend_y)
                << "\" x2=\"" << fmt(legend_x + 2.0 * font) << "\" y2=\"" << fmt(legend_y)
                << "\" stroke=\"" << entry.second << "\" stroke-width=\"" << fmt(stroke)
                << "\"/>\n";
            out << "  <text x=\"" << fmt(legend_x + 2.6 * font) << "\" y=\""
                << fmt(legend_y + 0.35 * font) << "\" font-size=\"" << fmt(font)
                << "\" font-family=\"sans-serif\">" << entry.first << "</text>\n";
            legend_y += 1.4 * font;
        }
        out << "</svg>\n";
    }

  private:
    static std::string fmt(double v) {
        char buffer[40];
        std::snprintf(buffer, sizeof buffer, "%.8g", v);
        return buffer;
    }

    std::vector<std::pair<std::string, std::string>> legend_entries() const {
        std::vector<std::pair<std::string, std::string>> entries;
        for (const auto& p : paths_) entries.emplace_back(p.name, p.color);
        for (const auto& c : circles_) entries.emplace_back(c.name, c.color);
        for (const auto& m : markers_) entries.emplace_back(m.name, m.color);
        return entries;
    }

    std::vector<SvgPath> paths_;
    std::vector<SvgCircle> circles_;
    std::vector<SvgMarkers> markers_;
};

}  // namespace cli
