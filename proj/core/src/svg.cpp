#include "riskframe/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "riskframe/csv.hpp"

namespace riskframe {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string xml_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
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

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Evenly spaced "nice" ticks covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi) {
    const double span = hi - lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        step = m * mag;
        if (step >= raw) break;
    }
    std::vector<double> out;
    for (double t = std::ceil(lo / step - 1e-9) * step; t <= hi + 1e-9 * span; t += step)
        out.push_back(std::abs(t) < 1e-12 * span ? 0.0 : t);
    return out;
}

}  // namespace

Chart line_chart(const std::vector<ChartSeries>& series, const ChartOptions& opt) {
    Chart chart;
    std::vector<std::vector<std::pair<double, double>>> kept(series.size());
    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (std::size_t i = 0; i < series.size(); ++i) {
        for (auto [x, y] : series[i].points) {
            if (!std::isfinite(x) || !std::isfinite(y) || (opt.log_x && x <= 0.0)) {
                ++chart.dropped_points;
                continue;
            }
            const double u = opt.log_x ? std::log10(x) : x;
            kept[i].emplace_back(u, y);
            x_lo = std::min(x_lo, u);
            x_hi = std::max(x_hi, u);
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
    }
    if (!std::isfinite(x_lo)) x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
    if (x_hi - x_lo < 1e-12) x_lo -= 0.5, x_hi += 0.5;
    if (y_hi - y_lo < 1e-12) y_lo -= 0.5, y_hi += 0.5;
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    const double left = 70, right = 170, top = 40, bottom = 60;
    const double pw = opt.width - left - right, ph = opt.height - top - bottom;
    auto px = [&](double u) { return left + (u - x_lo) / (x_hi - x_lo) * pw; };
    auto py = [&](double y) { return top + (y_hi - y) / (y_hi - y_lo) * ph; };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(opt.width) + "\" height=\"" + std::to_string(opt.height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + fmt(left + pw / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
         xml_escape(opt.title) + "</text>\n";
    s += "<rect x=\"" + fmt(left) + "\" y=\"" + fmt(top) + "\" width=\"" + fmt(pw) +
         "\" height=\"" + fmt(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

    // x ticks
    std::vector<std::pair<double, std::string>> xt;
    if (!opt.x_ticks.empty()) {
        for (const auto& [x, label] : opt.x_ticks) {
            if (opt.log_x && x <= 0.0) continue;
            xt.emplace_back(opt.log_x ? std::log10(x) : x, label);
        }
    } else if (opt.log_x) {
        for (double u = std::ceil(x_lo - 1e-9); u <= x_hi + 1e-9; u += 1.0)
            xt.emplace_back(u, "1e" + std::to_string(static_cast<int>(u)));
    } else {
        for (double t : nice_ticks(x_lo, x_hi)) xt.emplace_back(t, format_number(t));
    }
    for (const auto& [u, label] : xt) {
        if (u < x_lo - 1e-9 || u > x_hi + 1e-9) continue;
        const std::string x = fmt(px(u));
        s += "<line x1=\"" + x + "\" y1=\"" + fmt(top + ph) + "\" x2=\"" + x + "\" y2=\"" +
             fmt(top + ph + 5) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + x + "\" y=\"" + fmt(top + ph + 18) +
             "\" text-anchor=\"middle\" font-size=\"11\">" + xml_escape(label) + "</text>\n";
    }
    for (double t : nice_ticks(y_lo, y_hi)) {
        const std::string y = fmt(py(t));
        s += "<line x1=\"" + fmt(left - 5) + "\" y1=\"" + y + "\" x2=\"" + fmt(left) + "\" y2=\"" +
             y + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + fmt(left - 8) + "\" y=\"" + y +
             "\" text-anchor=\"end\" dominant-baseline=\"middle\" font-size=\"11\">" +
             format_number(t) + "</text>\n";
    }
    s += "<text x=\"" + fmt(left + pw / 2) + "\" y=\"" + fmt(opt.height - 15.0) +
         "\" text-anchor=\"middle\" font-size=\"13\">" + xml_escape(opt.x_label) + "</text>\n";
    s += "<text x=\"18\" y=\"" + fmt(top + ph / 2) + "\" text-anchor=\"middle\" font-size=\"13\" "
         "transform=\"rotate(-90 18 " + fmt(top + ph / 2) + ")\">" + xml_escape(opt.y_label) +
         "</text>\n";

    for (std::size_t i = 0; i < kept.size(); ++i) {
        const std::string color = kPalette[i % std::size(kPalette)];
        const auto& pts = kept[i];
        if (pts.size() == 1) {
            s += "<circle cx=\"" + fmt(px(pts[0].first)) + "\" cy=\"" + fmt(py(pts[0].second)) +
                 "\" r=\"4\" fill=\"" + color + "\"/>\n";
        } else if (pts.size() > 1) {
            s += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.8\" points=\"";
            for (std::size_t k = 0; k < pts.size(); ++k) {
                if (k) s += ' ';
                s += fmt(px(pts[k].first)) + "," + fmt(py(pts[k].second));
            }
            s += "\"/>\n";
        }
        const double ly = top + 10 + 18.0 * static_cast<double>(i);
        const double lx = left + pw + 15;
        s += "<line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(ly) + "\" x2=\"" + fmt(lx + 20) +
             "\" y2=\"" + fmt(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
        s += "<text x=\"" + fmt(lx + 26) + "\" y=\"" + fmt(ly) +
             "\" dominant-baseline=\"middle\" font-size=\"11\">" + xml_escape(series[i].name) +
             "</text>\n";
    }
    s += "</svg>\n";
    chart.svg = std::move(s);
    return chart;
}

}  // namespace riskframe
