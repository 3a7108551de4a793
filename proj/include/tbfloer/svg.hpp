#pragma once

#include "tbfloer/model_complex.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace tbfloer {

// Diagram conventions: generators left to right in index order, one grading
// unit = 40px vertically, interior arrows solid, exterior arrows dashed,
// reflection level drawn as a horizontal gray line.
inline std::string render_svg(const ModelComplex& m) {
    constexpr long long unit = 40;
    constexpr long long dx = 60;
    constexpr long long margin = 40;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    if (m.generators.empty()) {
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"80\" height=\"80\" "
              "viewBox=\"0 0 80 80\"></svg>\n";
        return os.str();
    }

    long long gr_min = m.generators.front().grading, gr_max = gr_min;
    for (const auto& g : m.generators) {
        gr_min = std::min(gr_min, g.grading);
        gr_max = std::max(gr_max, g.grading);
    }
    if (m.reflect_level) {
        gr_min = std::min(gr_min, *m.reflect_level);
        gr_max = std::max(gr_max, *m.reflect_level);
    }

    const long long n = static_cast<long long>(m.generators.size());
    const long long width = 2 * margin + dx * (n - 1);
    const long long height = 2 * margin + unit * (gr_max - gr_min);
    auto px = [&](std::size_t i) { return margin + dx * static_cast<long long>(i); };
    auto py = [&](long long gr) { return margin + unit * (gr_max - gr); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "  <defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" "
          "refY=\"3\" orient=\"auto\"><path d=\"M0,0 L7,3 L0,6 z\" fill=\"black\"/>"
          "</marker></defs>\n";

    if (m.reflect_level) {
        long long y = py(*m.reflect_level);
        os << "  <line x1=\"" << margin / 2 << "\" y1=\"" << y << "\" x2=\""
           << width - margin / 2 << "\" y2=\"" << y
           << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }

    for (const auto& a : m.arrows) {
        if (!a.active) continue;
        double x1 = static_cast<double>(px(a.source));
        double y1 = static_cast<double>(py(m.generators[a.source].grading));
        double x2 = static_cast<double>(px(a.target));
        double y2 = static_cast<double>(py(m.generators[a.target].grading));
        // pull endpoints in so the dot and arrowhead stay visible
        double vx = x2 - x1, vy = y2 - y1;
        double len = vx * vx + vy * vy;
        if (len > 0) {
            double s = 6.0 / std::sqrt(len);
            x1 += vx * s;
            y1 += vy * s;
            x2 -= vx * s;
            y2 -= vy * s;
        }
        os << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\""
           << y2 << "\" stroke=\"black\" stroke-width=\"1.5\"";
        if (a.kind == ArrowKind::exterior) os << " stroke-dasharray=\"6,4\"";
        os << " marker-end=\"url(#arrow)\"/>\n";
    }

    for (std::size_t i = 0; i < m.generators.size(); ++i)
        os << "  <circle cx=\"" << px(i) << "\" cy=\"" << py(m.generators[i].grading)
           << "\" r=\"4\" fill=\"black\"/>\n";

    os << "</svg>\n";
    return os.str();
}

inline void write_svg(const ModelComplex& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_svg: cannot open '" + path + "' for writing");
    out << render_svg(m);
    if (!out) throw std::runtime_error("write_svg: failed while writing '" + path + "'");
}

}  // namespace tbfloer
