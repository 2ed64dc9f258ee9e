#include "incidence/svg.hpp"

#include "incidence/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace incidence {
namespace {

std::string fixed(double v) {
    if (v == 0.0) v = 0.0;  // no "-0.000000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

double to_double(const Integer& num, const Integer& den) { return Rational(num, den).convert_to<double>(); }

struct Box {
    double x0, x1, y0, y1;
};

// Segment of a*x + b*y + c = 0 inside the box.
bool clip(const Line& l, const Box& box, std::array<double, 4>& seg) {
    const double a = l.a().convert_to<double>();
    const double b = l.b().convert_to<double>();
    const double c = l.c().convert_to<double>();
    if (std::abs(b) >= std::abs(a)) {
        // y = -(a x + c) / b, clip x so y stays in range.
        double lo = box.x0, hi = box.x1;
        if (a != 0.0) {
            double xa = -(b * box.y0 + c) / a;
            double xb = -(b * box.y1 + c) / a;
            if (xa > xb) std::swap(xa, xb);
            lo = std::max(lo, xa);
            hi = std::min(hi, xb);
        }
        if (lo > hi) return false;
        seg = {lo, -(a * lo + c) / b, hi, -(a * hi + c) / b};
    } else {
        double lo = box.y0, hi = box.y1;
        if (b != 0.0) {
            double ya = -(a * box.x0 + c) / b;
            double yb = -(a * box.x1 + c) / b;
            if (ya > yb) std::swap(ya, yb);
            lo = std::max(lo, ya);
            hi = std::min(hi, yb);
        }
        if (lo > hi) return false;
        seg = {-(b * lo + c) / a, lo, -(b * hi + c) / a, hi};
    }
    return true;
}

const char* stroke_color(std::size_t r) {
    static constexpr std::array<const char*, 6> palette = {"#1565c0", "#2e7d32", "#ef6c00", "#c62828", "#6a1b9a",
                                                           "#00838f"};
    return r == 2 ? "#b0b0b0" : palette[(r - 3) % palette.size()];
}

}  // namespace

std::string render_svg(const Configuration& c, const ArrangementStats& s, const SvgOptions& options) {
    if (options.width < 16) throw InvalidSpec("plot width must be at least 16 px");
    std::vector<std::pair<double, double>> pts;
    pts.reserve(c.size());
    for (const auto& p : c.points) pts.emplace_back(to_double(p.x(), p.w()), to_double(p.y(), p.w()));

    Box box{pts[0].first, pts[0].first, pts[0].second, pts[0].second};
    for (const auto& [x, y] : pts) {
        box.x0 = std::min(box.x0, x);
        box.x1 = std::max(box.x1, x);
        box.y0 = std::min(box.y0, y);
        box.y1 = std::max(box.y1, y);
    }
    const double span = std::max(box.x1 - box.x0, box.y1 - box.y0);
    const double pad = span > 0 ? 0.1 * span : 1.0;
    box.x0 -= pad;
    box.x1 += pad;
    box.y0 -= pad;
    box.y1 += pad;

    const double width = options.width;
    const double scale = width / (box.x1 - box.x0);
    const double plot_height = std::round((box.y1 - box.y0) * scale);
    const double legend_height = 18.0 * static_cast<double>(s.histogram.size() + 1) + 8.0;
    const double height = plot_height + legend_height;
    auto sx = [&](double x) { return fixed((x - box.x0) * scale); };
    auto sy = [&](double y) { return fixed((box.y1 - y) * scale); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\"" << fixed(height)
        << "\" viewBox=\"0 0 " << options.width << ' ' << fixed(height) << "\">\n";
    out << "<style>\n";
    out << "circle { fill: #111111; }\n";
    out << "text { font-family: sans-serif; font-size: 13px; fill: #222222; }\n";
    for (const auto& [r, count] : s.histogram) {
        const double stroke = r == 2 ? 1.0 : 1.5 + 0.5 * static_cast<double>(std::min<std::size_t>(r - 3, 6));
        out << "line.r" << r << " { stroke: " << stroke_color(r) << "; stroke-width: " << fixed(stroke) << "; }\n";
    }
    out << "</style>\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << options.width << "\" height=\"" << fixed(height)
        << "\" fill=\"#ffffff\"/>\n";

    out << "<g class=\"lines\">\n";
    // Richer lines drawn last so they sit on top.
    std::vector<const DeterminedLine*> order;
    for (const auto& dl : s.lines) {
        if (dl.richness() >= options.rich_min) order.push_back(&dl);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const DeterminedLine* a, const DeterminedLine* b) { return a->richness() < b->richness(); });
    for (const DeterminedLine* dl : order) {
        std::array<double, 4> seg{};
        if (!clip(dl->line, box, seg)) continue;
        out << "<line class=\"r" << dl->richness() << "\" x1=\"" << sx(seg[0]) << "\" y1=\"" << sy(seg[1])
            << "\" x2=\"" << sx(seg[2]) << "\" y2=\"" << sy(seg[3]) << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g class=\"points\">\n";
    const double radius = std::clamp(width / 120.0, 2.0, 6.0);
    for (const auto& [x, y] : pts) {
        out << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"" << fixed(radius) << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g class=\"legend\">\n";
    double ty = plot_height + 18.0;
    out << "<text x=\"8\" y=\"" << fixed(ty) << "\">n = " << s.n << ", lines = " << s.lines.size() << "</text>\n";
    for (const auto& [r, count] : s.histogram) {
        ty += 18.0;
        out << "<rect x=\"8\" y=\"" << fixed(ty - 9.0) << "\" width=\"18\" height=\"4\" fill=\"" << stroke_color(r)
            << "\"/>\n";
        out << "<text x=\"32\" y=\"" << fixed(ty) << "\">l_" << r << " = " << count << "</text>\n";
    }
    out << "</g>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace incidence
