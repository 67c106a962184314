#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace randpoly {

// Minimal SVG 1.1 line-plot writer: axes with ticks, optional log scales,
// polylines, markers and error bars. Deterministic output (snprintf only).
class SvgPlot {
 public:
  SvgPlot(int width, int height, bool log_x, bool log_y)
      : w_(width), h_(height), log_x_(log_x), log_y_(log_y) {}

  void title(std::string s) { title_ = std::move(s); }
  void x_label(std::string s) { x_label_ = std::move(s); }
  void y_label(std::string s) { y_label_ = std::move(s); }

  void ranges(double xlo, double xhi, double ylo, double yhi) {
    if (!(xlo < xhi) || !(ylo < yhi))
      throw std::invalid_argument("SvgPlot: empty axis range");
    if ((log_x_ && xlo <= 0.0) || (log_y_ && ylo <= 0.0))
      throw std::invalid_argument("SvgPlot: log axis needs positive range");
    xlo_ = xlo;
    xhi_ = xhi;
    ylo_ = ylo;
    yhi_ = yhi;
    have_ranges_ = true;
  }

  void line(const std::vector<std::pair<double, double>>& pts,
            const std::string& color, double stroke = 1.5, bool dashed = false) {
    require_ranges();
    if (pts.size() < 2) return;
    std::string d = "  <polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
                    num(stroke) + "\"" + (dashed ? " stroke-dasharray=\"6 4\"" : "") +
                    " clip-path=\"url(#plot)\" points=\"";
    for (const auto& [x, y] : pts) d += num(fx(x)) + "," + num(fy(y)) + " ";
    d += "\"/>\n";
    body_ += d;
  }

  void scatter(const std::vector<std::pair<double, double>>& pts,
               const std::string& color, double radius = 2.5) {
    require_ranges();
    for (const auto& [x, y] : pts)
      body_ += "  <circle cx=\"" + num(fx(x)) + "\" cy=\"" + num(fy(y)) + "\" r=\"" +
               num(radius) + "\" fill=\"" + color + "\" clip-path=\"url(#plot)\"/>\n";
  }

  // vertical bars x: [ylo, yhi] with small caps
  void error_bars(const std::vector<std::array<double, 3>>& bars,
                  const std::string& color) {
    require_ranges();
    for (const auto& b : bars) {
      double x = fx(b[0]), y0 = fy(b[1]), y1 = fy(b[2]);
      body_ += "  <path stroke=\"" + color + "\" stroke-width=\"1\" fill=\"none\"" +
               " clip-path=\"url(#plot)\" d=\"M" + num(x) + " " + num(y0) + " L" +
               num(x) + " " + num(y1) + " M" + num(x - 3) + " " + num(y0) + " L" +
               num(x + 3) + " " + num(y0) + " M" + num(x - 3) + " " + num(y1) + " L" +
               num(x + 3) + " " + num(y1) + "\"/>\n";
    }
  }

  void legend(const std::string& label, const std::string& color) {
    legend_.emplace_back(label, color);
  }

  std::string render() const {
    require_ranges();
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(w_) + "\" height=\"" + std::to_string(h_) + "\" viewBox=\"0 0 " +
           std::to_string(w_) + " " + std::to_string(h_) + "\">\n";
    out += "  <defs><clipPath id=\"plot\"><rect x=\"" + num(kL) + "\" y=\"" + num(kT) +
           "\" width=\"" + num(w_ - kL - kR) + "\" height=\"" + num(h_ - kT - kB) +
           "\"/></clipPath></defs>\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // grid and ticks
    for (double t : ticks(xlo_, xhi_, log_x_)) {
      double x = fx(t);
      out += "  <line x1=\"" + num(x) + "\" y1=\"" + num(kT) + "\" x2=\"" + num(x) +
             "\" y2=\"" + num(h_ - kB) + "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
      out += "  <line x1=\"" + num(x) + "\" y1=\"" + num(h_ - kB) + "\" x2=\"" + num(x) +
             "\" y2=\"" + num(h_ - kB + 4) + "\" stroke=\"black\"/>\n";
      out += "  <text x=\"" + num(x) + "\" y=\"" + num(h_ - kB + 16) +
             "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" +
             num(t) + "</text>\n";
    }
    for (double t : ticks(ylo_, yhi_, log_y_)) {
      double y = fy(t);
      out += "  <line x1=\"" + num(kL) + "\" y1=\"" + num(y) + "\" x2=\"" +
             num(w_ - kR) + "\" y2=\"" + num(y) +
             "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
      out += "  <line x1=\"" + num(kL - 4) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kL) +
             "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
      out += "  <text x=\"" + num(kL - 7) + "\" y=\"" + num(y + 4) +
             "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" +
             num(t) + "</text>\n";
    }

    out += body_;

    out += "  <rect x=\"" + num(kL) + "\" y=\"" + num(kT) + "\" width=\"" +
           num(w_ - kL - kR) + "\" height=\"" + num(h_ - kT - kB) +
           "\" fill=\"none\" stroke=\"black\"/>\n";
    if (!title_.empty())
      out += "  <text x=\"" + num(w_ / 2.0) + "\" y=\"" + num(kT - 14) +
             "\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">" +
             title_ + "</text>\n";
    if (!x_label_.empty())
      out += "  <text x=\"" + num(kL + (w_ - kL - kR) / 2.0) + "\" y=\"" +
             num(h_ - 10.0) +
             "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" +
             x_label_ + "</text>\n";
    if (!y_label_.empty())
      out += "  <text x=\"16\" y=\"" + num(kT + (h_ - kT - kB) / 2.0) +
             "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\"" +
             " transform=\"rotate(-90 16 " + num(kT + (h_ - kT - kB) / 2.0) + ")\">" +
             y_label_ + "</text>\n";

    double ly = kT + 14.0;
    for (const auto& [label, color] : legend_) {
      double lx = w_ - kR - 150.0;
      out += "  <line x1=\"" + num(lx) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
             num(lx + 22) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + color +
             "\" stroke-width=\"2\"/>\n";
      out += "  <text x=\"" + num(lx + 28) + "\" y=\"" + num(ly) +
             "\" font-family=\"monospace\" font-size=\"11\">" + label + "</text>\n";
      ly += 16.0;
    }

    out += "</svg>\n";
    return out;
  }

  void write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("SvgPlot: cannot open " + path);
    out << render();
    if (!out) throw std::runtime_error("SvgPlot: write failed for " + path);
  }

 private:
  static constexpr double kL = 72.0, kR = 24.0, kT = 44.0, kB = 56.0;

  void require_ranges() const {
    if (!have_ranges_) throw std::logic_error("SvgPlot: set ranges first");
  }

  static std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
  }

  double fx(double x) const {
    double a = log_x_ ? std::log10(xlo_) : xlo_, b = log_x_ ? std::log10(xhi_) : xhi_;
    double t = ((log_x_ ? std::log10(x) : x) - a) / (b - a);
    return kL + t * (w_ - kL - kR);
  }

  double fy(double y) const {
    double a = log_y_ ? std::log10(ylo_) : ylo_, b = log_y_ ? std::log10(yhi_) : yhi_;
    double t = ((log_y_ ? std::log10(y) : y) - a) / (b - a);
    return h_ - kB - t * (h_ - kT - kB);
  }

  static std::vector<double> ticks(double lo, double hi, bool log_scale) {
    std::vector<double> out;
    if (log_scale) {
      int k0 = int(std::ceil(std::log10(lo) - 1e-9));
      int k1 = int(std::floor(std::log10(hi) + 1e-9));
      for (int k = k0; k <= k1; ++k) out.push_back(std::pow(10.0, k));
      if (out.size() < 2) {  // under a decade: fall back to linear ticks
        out.clear();
        log_scale = false;
      } else {
        return out;
      }
    }
    double raw = (hi - lo) / 5.0;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double norm = raw / mag;
    double step = mag * (norm < 1.5 ? 1.0 : norm < 3.5 ? 2.0 : norm < 7.5 ? 5.0 : 10.0);
    for (double t = std::ceil(lo / step) * step; t <= hi + step * 1e-9; t += step)
      out.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
    return out;
  }

  int w_, h_;
  bool log_x_, log_y_;
  bool have_ranges_ = false;
  double xlo_ = 0.0, xhi_ = 1.0, ylo_ = 0.0, yhi_ = 1.0;
  std::string title_, x_label_, y_label_, body_;
  std::vector<std::pair<std::string, std::string>> legend_;
};

}  // namespace randpoly
