#include "regame/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace regame {

namespace {

std::string rgb(double r, double g, double b) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround(r)),
                static_cast<int>(std::lround(g)), static_cast<int>(std::lround(b)));
  return buf;
}

/// Linear red-yellow-green ramp on t in [0,1].
std::string ramp_color(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const double red[3] = {214, 39, 40}, yellow[3] = {255, 221, 0}, green[3] = {44, 160, 44};
  const double* lo = t < 0.5 ? red : yellow;
  const double* hi = t < 0.5 ? yellow : green;
  const double s = t < 0.5 ? t * 2.0 : (t - 0.5) * 2.0;
  return rgb(lo[0] + s * (hi[0] - lo[0]), lo[1] + s * (hi[1] - lo[1]),
             lo[2] + s * (hi[2] - lo[2]));
}

const std::map<std::string, std::pair<int, std::string>>& class_palette() {
  static const std::map<std::string, std::pair<int, std::string>> palette = {
      {"abstain", {0, "#999999"}},          {"backfire", {1, "#d62728"}},
      {"mutualism", {2, "#2ca02c"}},        {"safety_improving", {3, "#1f77b4"}},
      {"neutral", {4, "#dddddd"}},          {"mixed", {5, "#9467bd"}},
  };
  return palette;
}

}  // namespace

std::string heatmap_svg(const std::vector<CsvRow>& rows, const std::string& metric) {
  if (rows.empty()) throw std::invalid_argument("heatmap: no data rows");
  const bool categorical = metric == "class";
  if (!categorical && metric != "safety" && metric != "u_g" && metric != "u_d") {
    throw std::invalid_argument("heatmap: unknown metric '" + metric + "'");
  }

  std::vector<double> xs, ys;
  for (const CsvRow& r : rows) {
    xs.push_back(r.theta_g);
    ys.push_back(r.theta_d);
  }
  auto uniq = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  uniq(xs);
  uniq(ys);
  std::map<double, std::size_t> xi, yi;
  for (std::size_t i = 0; i < xs.size(); ++i) xi[xs[i]] = i;
  for (std::size_t i = 0; i < ys.size(); ++i) yi[ys[i]] = i;

  // Last row wins when a (theta_g, theta_d) cell repeats across deltas.
  struct Cell {
    double value = 0.0;
    std::string cls;
    bool set = false;
  };
  std::vector<Cell> cells(xs.size() * ys.size());
  double vmin = 0.0, vmax = 0.0;
  bool have_range = false;
  for (const CsvRow& r : rows) {
    Cell& c = cells[yi[r.theta_d] * xs.size() + xi[r.theta_g]];
    c.set = true;
    c.cls = r.cls;
    c.value = metric == "safety" ? r.beta1 : metric == "u_g" ? r.u_g : r.u_d;
    if (categorical) {
      const auto it = class_palette().find(r.cls);
      c.value = it == class_palette().end() ? -1.0 : it->second.first;
    } else if (!have_range) {
      vmin = vmax = c.value;
      have_range = true;
    } else {
      vmin = std::min(vmin, c.value);
      vmax = std::max(vmax, c.value);
    }
  }

  const double plot_w = 600, plot_h = 600, left = 80, top = 40, bottom = 60, right = 180;
  const double cw = plot_w / static_cast<double>(xs.size());
  const double ch = plot_h / static_cast<double>(ys.size());
  const double width = left + plot_w + right, height = top + plot_h + bottom;

  std::string s;
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%g\" height=\"%g\" "
                "viewBox=\"0 0 %g %g\" font-family=\"sans-serif\" font-size=\"13\">\n",
                width, height, width, height);
  s += buf;
  s += "<text x=\"" + format_number(left) + "\" y=\"24\" font-size=\"16\">metric: " + metric +
       "</text>\n";

  for (std::size_t j = 0; j < ys.size(); ++j) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Cell& c = cells[j * xs.size() + i];
      if (!c.set) continue;
      std::string fill;
      if (categorical) {
        const auto it = class_palette().find(c.cls);
        fill = it == class_palette().end() ? "#000000" : it->second.second;
      } else {
        const double t = vmax > vmin ? (c.value - vmin) / (vmax - vmin) : 0.5;
        fill = ramp_color(t);
      }
      const double x = left + static_cast<double>(i) * cw;
      const double y = top + plot_h - static_cast<double>(j + 1) * ch;  // theta_d grows upward
      std::snprintf(buf, sizeof buf,
                    "<rect x=\"%.3f\" y=\"%.3f\" width=\"%.3f\" height=\"%.3f\" fill=\"%s\" "
                    "data-theta-g=\"%s\" data-theta-d=\"%s\" data-value=\"%s\"/>\n",
                    x, y, cw, ch, fill.c_str(), format_number(xs[i]).c_str(),
                    format_number(ys[j]).c_str(),
                    (categorical ? c.cls : format_number(c.value)).c_str());
      s += buf;
    }
  }

  // Axes.
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n"
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n",
                left, top + plot_h, left + plot_w, top + plot_h, left, top, left, top + plot_h);
  s += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%g\" y=\"%g\" text-anchor=\"middle\">theta_G</text>\n",
                left + plot_w / 2, top + plot_h + 40);
  s += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%g\" y=\"%g\" text-anchor=\"middle\" "
                "transform=\"rotate(-90 %g %g)\">theta_D</text>\n",
                left - 50, top + plot_h / 2, left - 50, top + plot_h / 2);
  s += buf;
  // Axis range annotations.
  std::snprintf(buf, sizeof buf,
                "<text x=\"%g\" y=\"%g\">%s</text>\n<text x=\"%g\" y=\"%g\" "
                "text-anchor=\"end\">%s</text>\n",
                left, top + plot_h + 18, format_number(xs.front()).c_str(), left + plot_w,
                top + plot_h + 18, format_number(xs.back()).c_str());
  s += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%g\" y=\"%g\" text-anchor=\"end\">%s</text>\n<text x=\"%g\" "
                "y=\"%g\" text-anchor=\"end\">%s</text>\n",
                left - 6, top + plot_h, format_number(ys.front()).c_str(), left - 6, top + 12,
                format_number(ys.back()).c_str());
  s += buf;

  // Legend.
  const double lx = left + plot_w + 30;
  if (categorical) {
    double ly = top + 10;
    for (const auto& [name, entry] : class_palette()) {
      std::snprintf(buf, sizeof buf,
                    "<rect x=\"%g\" y=\"%g\" width=\"14\" height=\"14\" fill=\"%s\"/>"
                    "<text x=\"%g\" y=\"%g\">%s</text>\n",
                    lx, ly, entry.second.c_str(), lx + 20, ly + 12, name.c_str());
      s += buf;
      ly += 22;
    }
  } else {
    for (int k = 0; k <= 20; ++k) {
      const double t = k / 20.0;
      std::snprintf(buf, sizeof buf,
                    "<rect x=\"%g\" y=\"%g\" width=\"18\" height=\"%g\" fill=\"%s\"/>\n", lx,
                    top + plot_h * (1.0 - t) - plot_h / 21.0, plot_h / 20.0,
                    ramp_color(t).c_str());
      s += buf;
    }
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%g\" y=\"%g\">max=%s</text>\n<text x=\"%g\" y=\"%g\">min=%s</text>\n",
                  lx + 24, top + 12, format_number(vmax).c_str(), lx + 24, top + plot_h,
                  format_number(vmin).c_str());
    s += buf;
  }
  s += "</svg>\n";
  return s;
}

}  // namespace regame
