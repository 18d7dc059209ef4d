#include "umtlab/plot/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <vector>

#include "umtlab/error.hpp"

namespace umtlab {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 70.0;
constexpr double kRight = kWidth - 190.0;  // legend gutter
constexpr double kTop = 40.0;
constexpr double kBottom = kHeight - 60.0;

constexpr const char* kPalette[10] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

double parse_number(const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw ConfigError("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("plot: non-numeric value '" + text + "'");
  }
}

// Round the tick step to 1/2/5 times a power of ten.
double nice_step(double range) {
  if (range <= 0.0) return 1.0;
  const double raw = range / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  if (frac <= 1.0) return mag;
  if (frac <= 2.0) return 2.0 * mag;
  if (frac <= 5.0) return 5.0 * mag;
  return 10.0 * mag;
}

struct Point {
  double x = 0.0;
  double y = 0.0;
  double band = 0.0;
};

}  // namespace

std::string render_line_chart(const CsvTable& table,
                              const std::string& x_column,
                              const std::string& y_column,
                              const std::string& series_column) {
  std::string missing;
  const int xi = table.column_index(x_column);
  const int yi = table.column_index(y_column);
  const int si = table.column_index(series_column);
  if (xi < 0) missing += " " + x_column;
  if (yi < 0) missing += " " + y_column;
  if (si < 0) missing += " " + series_column;
  if (!missing.empty()) {
    throw ConfigError("plot: missing columns:" + missing);
  }
  if (table.rows.empty()) {
    throw ConfigError("plot: no data rows");
  }
  const int bi = table.column_index("stderr");

  std::map<std::string, std::vector<Point>> series;
  for (const auto& row : table.rows) {
    Point pt;
    pt.x = parse_number(row[xi]);
    pt.y = parse_number(row[yi]);
    if (bi >= 0) pt.band = parse_number(row[bi]);
    series[row[si]].push_back(pt);
  }
  // Sort series keys numerically when possible so legend order is natural.
  std::vector<std::string> keys;
  for (const auto& [key, pts] : series) keys.push_back(key);
  std::sort(keys.begin(), keys.end(), [](const std::string& a,
                                         const std::string& b) {
    try {
      return parse_number(a) < parse_number(b);
    } catch (const ConfigError&) {
      return a < b;
    }
  });

  double x_min = 1e300, x_max = -1e300, y_min = 1e300, y_max = -1e300;
  for (auto& [key, pts] : series) {
    std::sort(pts.begin(), pts.end(),
              [](const Point& a, const Point& b) { return a.x < b.x; });
    for (const Point& pt : pts) {
      x_min = std::min(x_min, pt.x);
      x_max = std::max(x_max, pt.x);
      y_min = std::min(y_min, pt.y - pt.band);
      y_max = std::max(y_max, pt.y + pt.band);
    }
  }
  if (x_max == x_min) {
    x_max += 1.0;
    x_min -= 1.0;
  }
  if (y_max == y_min) {
    y_max += 1.0;
    y_min -= 1.0;
  }
  const double x_pad = 0.02 * (x_max - x_min);
  const double y_pad = 0.05 * (y_max - y_min);
  x_min -= x_pad;
  x_max += x_pad;
  y_min -= y_pad;
  y_max += y_pad;

  const auto sx = [&](double x) {
    return kLeft + (x - x_min) / (x_max - x_min) * (kRight - kLeft);
  };
  const auto sy = [&](double y) {
    return kBottom - (y - y_min) / (y_max - y_min) * (kBottom - kTop);
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
         " " + num(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes with 1/2/5 ticks.
  svg += "<g stroke=\"#333333\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kBottom) + "\" x2=\"" +
         num(kRight) + "\" y2=\"" + num(kBottom) + "\"/>\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" +
         num(kLeft) + "\" y2=\"" + num(kBottom) + "\"/>\n";
  svg += "</g>\n";

  svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
  const double x_step = nice_step(x_max - x_min);
  for (double t = std::ceil(x_min / x_step) * x_step; t <= x_max + 1e-12;
       t += x_step) {
    svg += "<line x1=\"" + num(sx(t)) + "\" y1=\"" + num(kBottom) +
           "\" x2=\"" + num(sx(t)) + "\" y2=\"" + num(kBottom + 5) +
           "\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + num(sx(t)) + "\" y=\"" + num(kBottom + 18) +
           "\" text-anchor=\"middle\">" + tick_label(t) + "</text>\n";
  }
  const double y_step = nice_step(y_max - y_min);
  for (double t = std::ceil(y_min / y_step) * y_step; t <= y_max + 1e-12;
       t += y_step) {
    svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(sy(t)) +
           "\" x2=\"" + num(kLeft) + "\" y2=\"" + num(sy(t)) +
           "\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(sy(t) + 4) +
           "\" text-anchor=\"end\">" + tick_label(t) + "</text>\n";
  }
  svg += "<text x=\"" + num((kLeft + kRight) / 2) + "\" y=\"" +
         num(kHeight - 15) + "\" text-anchor=\"middle\">" + x_column +
         "</text>\n";
  svg += "<text x=\"18\" y=\"" + num((kTop + kBottom) / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         num((kTop + kBottom) / 2) + ")\">" + y_column + "</text>\n";
  svg += "</g>\n";

  int color = 0;
  for (const std::string& key : keys) {
    const std::vector<Point>& pts = series[key];
    const char* stroke = kPalette[color % 10];
    if (pts.size() > 1 && bi >= 0) {
      bool any_band = false;
      for (const Point& pt : pts) any_band = any_band || pt.band > 0.0;
      if (any_band) {
        std::string path;
        for (const Point& pt : pts) {
          path += (path.empty() ? "M" : "L") + num(sx(pt.x)) + " " +
                  num(sy(pt.y + pt.band));
        }
        for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
          path += "L" + num(sx(it->x)) + " " + num(sy(it->y - it->band));
        }
        path += "Z";
        svg += "<path d=\"" + path + "\" fill=\"" + std::string(stroke) +
               "\" fill-opacity=\"0.15\" stroke=\"none\"/>\n";
      }
    }
    if (pts.size() == 1) {
      svg += "<circle cx=\"" + num(sx(pts[0].x)) + "\" cy=\"" +
             num(sy(pts[0].y)) + "\" r=\"4\" fill=\"" + std::string(stroke) +
             "\"/>\n";
    } else {
      std::string poly;
      for (const Point& pt : pts) {
        if (!poly.empty()) poly += " ";
        poly += num(sx(pt.x)) + "," + num(sy(pt.y));
      }
      svg += "<polyline points=\"" + poly + "\" fill=\"none\" stroke=\"" +
             std::string(stroke) + "\" stroke-width=\"1.8\"/>\n";
    }
    const double ly = kTop + 10 + 20.0 * color;
    svg += "<line x1=\"" + num(kRight + 14) + "\" y1=\"" + num(ly) +
           "\" x2=\"" + num(kRight + 38) + "\" y2=\"" + num(ly) +
           "\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(kRight + 44) + "\" y=\"" + num(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">" +
           series_column + "=" + key + "</text>\n";
    ++color;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace umtlab
