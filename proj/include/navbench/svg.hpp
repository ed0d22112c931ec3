#pragma once

#include <string>
#include <vector>

#include "navbench/geometry.hpp"

namespace navbench {

/// Minimal deterministic SVG emitter: fixed two-decimal coordinates, no
/// external references, elements in insertion order.
class SvgWriter {
public:
    SvgWriter(double width, double height);

    void rect(double x, double y, double w, double h, const std::string& fill,
              const std::string& cls = "");
    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double stroke_width = 1.0, const std::string& cls = "");
    void polyline(const std::vector<Vec2>& points, const std::string& stroke,
                  double stroke_width = 1.0, const std::string& cls = "");
    void circle(double cx, double cy, double r, const std::string& fill,
                const std::string& cls = "", const std::string& stroke = "");
    void text(double x, double y, const std::string& content, double size = 12.0,
              const std::string& anchor = "start");
    /// Opens a <g>; every group must be closed before str().
    void open_group(const std::string& cls);
    void close_group();

    std::string str() const;

    static std::string fmt(double v);

private:
    double width_, height_;
    int open_groups_{0};
    std::string body_;
};

/// Fixed 8-color palette; assigned to planners by id sort order.
const std::vector<std::string>& plot_palette();

std::string escape_xml(const std::string& s);

}  // namespace navbench
