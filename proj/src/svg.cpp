#include "navbench/svg.hpp"

#include <cstdio>
#include <stdexcept>

namespace navbench {

SvgWriter::SvgWriter(double width, double height) : width_(width), height_(height) {}

std::string SvgWriter::fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    std::string s(buf);
    if (s == "-0.00") s = "0.00";
    return s;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

void SvgWriter::rect(double x, double y, double w, double h, const std::string& fill,
                     const std::string& cls) {
    body_ += "<rect";
    if (!cls.empty()) body_ += " class=\"" + cls + "\"";
    body_ += " x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" + fmt(w) + "\" height=\"" +
             fmt(h) + "\" fill=\"" + fill + "\"/>\n";
}

void SvgWriter::line(double x1, double y1, double x2, double y2, const std::string& stroke,
                     double stroke_width, const std::string& cls) {
    body_ += "<line";
    if (!cls.empty()) body_ += " class=\"" + cls + "\"";
    body_ += " x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) + "\" y2=\"" +
             fmt(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(stroke_width) +
             "\"/>\n";
}

void SvgWriter::polyline(const std::vector<Vec2>& points, const std::string& stroke,
                         double stroke_width, const std::string& cls) {
    body_ += "<polyline";
    if (!cls.empty()) body_ += " class=\"" + cls + "\"";
    body_ += " fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(stroke_width) +
             "\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) body_ += ' ';
        body_ += fmt(points[i].x) + "," + fmt(points[i].y);
    }
    body_ += "\"/>\n";
}

void SvgWriter::circle(double cx, double cy, double r, const std::string& fill,
                       const std::string& cls, const std::string& stroke) {
    body_ += "<circle";
    if (!cls.empty()) body_ += " class=\"" + cls + "\"";
    body_ += " cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(r) + "\" fill=\"" +
             fill + "\"";
    if (!stroke.empty()) body_ += " stroke=\"" + stroke + "\"";
    body_ += "/>\n";
}

void SvgWriter::text(double x, double y, const std::string& content, double size,
                     const std::string& anchor) {
    body_ += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" font-size=\"" + fmt(size) +
             "\" font-family=\"sans-serif\" text-anchor=\"" + anchor + "\">" +
             escape_xml(content) + "</text>\n";
}

void SvgWriter::open_group(const std::string& cls) {
    body_ += "<g class=\"" + cls + "\">\n";
    ++open_groups_;
}

void SvgWriter::close_group() {
    if (open_groups_ <= 0) throw std::logic_error("SvgWriter: close_group without open");
    body_ += "</g>\n";
    --open_groups_;
}

std::string SvgWriter::str() const {
    if (open_groups_ != 0) throw std::logic_error("SvgWriter: unclosed group");
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width_) + "\" height=\"" +
           fmt(height_) + "\" viewBox=\"0 0 " + fmt(width_) + " " + fmt(height_) + "\">\n";
    out += body_;
    out += "</svg>\n";
    return out;
}

const std::vector<std::string>& plot_palette() {
    static const std::vector<std::string> palette{
        "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
        "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};
    return palette;
}

}  // namespace navbench
