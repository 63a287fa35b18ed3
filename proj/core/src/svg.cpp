#include "dimwall/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "dimwall/errors.hpp"

namespace dimwall::svg {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 55.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

} // namespace

Plot::Plot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void Plot::add_line(std::vector<double> xs, std::vector<double> ys, std::string label) {
    if (xs.size() != ys.size()) throw DomainError("svg: x/y length mismatch");
    series_.push_back(Series{std::move(xs), std::move(ys), std::move(label), true});
}

void Plot::add_points(std::vector<double> xs, std::vector<double> ys, std::string label) {
    if (xs.size() != ys.size()) throw DomainError("svg: x/y length mismatch");
    series_.push_back(Series{std::move(xs), std::move(ys), std::move(label), false});
}

void Plot::add_hline(double y, std::string label) {
    series_.push_back(Series{{}, {y}, std::move(label), true});
}

void Plot::set_x_range(double lo, double hi) {
    has_x_range_ = true;
    x_lo_ = lo;
    x_hi_ = hi;
}

void Plot::set_y_range(double lo, double hi) {
    has_y_range_ = true;
    y_lo_ = lo;
    y_hi_ = hi;
}

std::string Plot::render() const {
    double x_lo = x_lo_, x_hi = x_hi_, y_lo = y_lo_, y_hi = y_hi_;
    if (!has_x_range_ || !has_y_range_) {
        bool any = false;
        double dx_lo = 0, dx_hi = 1, dy_lo = 0, dy_hi = 1;
        for (const auto& s : series_) {
            for (std::size_t i = 0; i < s.xs.size(); ++i) {
                if (!any) {
                    dx_lo = dx_hi = s.xs[i];
                    dy_lo = dy_hi = s.ys[i];
                    any = true;
                } else {
                    dx_lo = std::min(dx_lo, s.xs[i]);
                    dx_hi = std::max(dx_hi, s.xs[i]);
                    dy_lo = std::min(dy_lo, s.ys[i]);
                    dy_hi = std::max(dy_hi, s.ys[i]);
                }
            }
            if (s.xs.empty() && !s.ys.empty()) { // hline
                if (!any) { dy_lo = dy_hi = s.ys[0]; any = true; }
                dy_lo = std::min(dy_lo, s.ys[0]);
                dy_hi = std::max(dy_hi, s.ys[0]);
            }
        }
        if (!has_x_range_) { x_lo = dx_lo; x_hi = dx_hi; }
        if (!has_y_range_) { y_lo = dy_lo; y_hi = dy_hi; }
    }
    if (x_hi <= x_lo) x_hi = x_lo + 1.0;
    if (y_hi <= y_lo) y_hi = y_lo + 1.0;
    const double x_pad = 0.04 * (x_hi - x_lo);
    const double y_pad = 0.06 * (y_hi - y_lo);
    x_lo -= x_pad; x_hi += x_pad;
    y_lo -= y_pad; y_hi += y_pad;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
    auto py = [&](double y) { return kTop + (1.0 - (y - y_lo) / (y_hi - y_lo)) * plot_h; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" + escape(title_) + "</text>\n";

    // axes + ticks
    out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) +
           "\" height=\"" + num(plot_h) + "\" fill=\"none\" stroke=\"#333333\"/>\n";
    constexpr int kTicks = 5;
    for (int t = 0; t <= kTicks; ++t) {
        const double fx = x_lo + (x_hi - x_lo) * t / kTicks;
        const double fy = y_lo + (y_hi - y_lo) * t / kTicks;
        out += "<line x1=\"" + num(px(fx)) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" +
               num(px(fx)) + "\" y2=\"" + num(kTop + plot_h + 5) + "\" stroke=\"#333333\"/>\n";
        out += "<text x=\"" + num(px(fx)) + "\" y=\"" + num(kTop + plot_h + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               tick_label(fx) + "</text>\n";
        out += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py(fy)) + "\" x2=\"" +
               num(kLeft) + "\" y2=\"" + num(py(fy)) + "\" stroke=\"#333333\"/>\n";
        out += "<text x=\"" + num(kLeft - 9) + "\" y=\"" + num(py(fy) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               tick_label(fy) + "</text>\n";
    }
    out += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
           escape(x_label_) + "</text>\n";
    out += "<text x=\"18\" y=\"" + num(kTop + plot_h / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 " + num(kTop + plot_h / 2) + ")\">" +
           escape(y_label_) + "</text>\n";

    // series
    for (std::size_t s = 0; s < series_.size(); ++s) {
        const auto& ser = series_[s];
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        if (ser.xs.empty() && !ser.ys.empty()) {
            out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(py(ser.ys[0])) + "\" x2=\"" +
                   num(kLeft + plot_w) + "\" y2=\"" + num(py(ser.ys[0])) + "\" stroke=\"" +
                   color + "\" stroke-dasharray=\"6 4\" stroke-width=\"1.5\"/>\n";
        } else if (ser.line) {
            out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
                   "\" stroke-width=\"1.8\" points=\"";
            for (std::size_t i = 0; i < ser.xs.size(); ++i) {
                if (i) out.push_back(' ');
                out += num(px(ser.xs[i])) + "," + num(py(ser.ys[i]));
            }
            out += "\"/>\n";
        } else {
            for (std::size_t i = 0; i < ser.xs.size(); ++i)
                out += "<circle cx=\"" + num(px(ser.xs[i])) + "\" cy=\"" + num(py(ser.ys[i])) +
                       "\" r=\"3\" fill=\"" + color + "\"/>\n";
        }
        // legend entry
        const double ly = kTop + 14.0 + 16.0 * static_cast<double>(s);
        out += "<line x1=\"" + num(kLeft + plot_w - 150) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
               num(kLeft + plot_w - 130) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + color +
               "\" stroke-width=\"3\"/>\n";
        out += "<text x=\"" + num(kLeft + plot_w - 124) + "\" y=\"" + num(ly) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(ser.label) +
               "</text>\n";
    }

    out += "</svg>\n";
    return out;
}

void Plot::write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("svg: cannot open " + path.string() + " for writing");
    const std::string bytes = render();
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("svg: short write to " + path.string());
}

} // namespace dimwall::svg
