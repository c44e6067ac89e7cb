#include "dcover/figure.hpp"

#include "dcover/errors.hpp"

#include <sstream>

namespace dcover {

Window default_window(int figure) {
  if (figure == 1) return {0, 25, 0, 60};
  if (figure == 2) return {0, 120, 0, 420};
  throw DomainError("figure must be 1 or 2");
}

namespace {

std::optional<FigureLine> clip(const GeographyLine& line, bool dashed, const Window& w) {
  Rational lo = w.x0;
  Rational hi = w.x1;
  const Rational& s = line.slope();
  const Rational& c = line.intercept();
  if (s > 0) {
    lo = std::max(lo, Rational((w.y0 - c) / s));
    hi = std::min(hi, Rational((w.y1 - c) / s));
  } else if (s < 0) {
    lo = std::max(lo, Rational((w.y1 - c) / s));
    hi = std::min(hi, Rational((w.y0 - c) / s));
  } else if (c < w.y0 || c > w.y1) {
    return std::nullopt;
  }
  if (lo >= hi) return std::nullopt;
  return FigureLine{line, dashed, {lo, line.at(lo)}, {hi, line.at(hi)}};
}

std::string provenance_fields(const Polarization& p) {
  // e,a,b,d,base
  if (p.base().is_plane()) return ",,," + p.hyperplane().degree().str() + ",p2";
  return p.base().e().str() + "," + p.hyperplane().alpha().str() + "," +
         p.hyperplane().beta().str() + ",,fe";
}

struct Canvas {
  Window w;
  Rational width = 800, height = 600, margin = 50;

  std::string px(const Rational& x) const {
    return to_fixed(margin + (x - w.x0) / (w.x1 - w.x0) * width, 3);
  }
  std::string py(const Rational& y) const {
    return to_fixed(margin + height - (y - w.y0) / (w.y1 - w.y0) * height, 3);
  }
};

}  // namespace

FigureDataset figure_dataset(int figure, const Window& window) {
  if (figure != 1 && figure != 2) throw DomainError("figure must be 1 or 2");
  if (!(window.x0 < window.x1) || !(window.y0 < window.y1))
    throw DomainError("figure window must have x0 < x1 and y0 < y1");

  FigureDataset data{figure, "Figure " + std::to_string(figure), window, {}, {}, {}};
  const int last = figure == 1 ? 4 : 6;
  std::vector<GeographyLine> lines;
  for (int a = 1; a <= last; ++a) lines.push_back(GeographyLine::l(a));
  for (const auto& line : lines) {
    if (auto seg = clip(line, false, window))
      data.lines.push_back(*seg);
    else
      data.warnings.push_back(line.id() + " does not cross the window");
  }
  if (auto seg = clip(GeographyLine::castelnuovo(), true, window))
    data.lines.push_back(*seg);
  else
    data.warnings.push_back("castelnuovo does not cross the window");

  if (figure == 1) {
    const Integer x_max = floor_div(numerator(window.x1), denominator(window.x1));
    std::vector<GeographyPoint> all;
    for (int a = 1; a <= last; ++a) {
      Enumeration en = enumerate_points(a, x_max);
      for (auto& w : en.warnings) data.warnings.push_back(std::move(w));
      for (auto& pt : en.points)
        if (Rational(pt.x) >= window.x0 && Rational(pt.y) >= window.y0 &&
            Rational(pt.y) <= window.y1)
          all.push_back(std::move(pt));
    }
    data.markers = merge_points(std::move(all));
  }
  return data;
}

FigureDataset geography_plot(const Integer& a, const std::vector<GeographyPoint>& points) {
  Rational x1 = 2 * a + 5;
  Rational y1 = 4 * a + 4;
  for (const auto& pt : points) {
    x1 = std::max(x1, Rational(pt.x + 2));
    y1 = std::max(y1, Rational(pt.y + 4));
  }
  const Window window{0, x1, 0, y1};
  FigureDataset data{0, "Geography points on l" + a.str(), window, {}, points, {}};
  if (auto seg = clip(GeographyLine::l(a), false, window)) data.lines.push_back(*seg);
  if (auto seg = clip(GeographyLine::castelnuovo(), true, window)) data.lines.push_back(*seg);
  return data;
}

std::string render_svg(const FigureDataset& data) {
  const Canvas canvas{data.window};
  const Window& w = data.window;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"900\" height=\"700\" "
         "viewBox=\"0 0 900 700\">\n"
      << "<title>" << data.title << "</title>\n"
      << "<rect x=\"0\" y=\"0\" width=\"900\" height=\"700\" fill=\"white\"/>\n"
      << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << canvas.px(w.x0) << "\" y1=\"" << canvas.py(w.y0) << "\" x2=\""
      << canvas.px(w.x1) << "\" y2=\"" << canvas.py(w.y0) << "\"/>\n"
      << "<line x1=\"" << canvas.px(w.x0) << "\" y1=\"" << canvas.py(w.y0) << "\" x2=\""
      << canvas.px(w.x0) << "\" y2=\"" << canvas.py(w.y1) << "\"/>\n"
      << "</g>\n"
      << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"14\">\n"
      << "<text x=\"" << canvas.px(w.x1) << "\" y=\"690\" text-anchor=\"end\">x = chi</text>\n"
      << "<text x=\"10\" y=\"40\">y = c1^2</text>\n"
      << "<text x=\"" << canvas.px(w.x0) << "\" y=\"670\" text-anchor=\"middle\">"
      << to_string(w.x0) << "</text>\n"
      << "<text x=\"" << canvas.px(w.x1) << "\" y=\"670\" text-anchor=\"middle\">"
      << to_string(w.x1) << "</text>\n"
      << "<text x=\"45\" y=\"" << canvas.py(w.y1) << "\" text-anchor=\"end\">" << to_string(w.y1)
      << "</text>\n"
      << "</g>\n"
      << "<g class=\"lines\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const auto& seg : data.lines) {
    out << "<path data-line=\"" << seg.line.id() << "\" class=\""
        << (seg.dashed ? "dashed" : "solid") << "\"";
    if (seg.dashed) out << " stroke-dasharray=\"8,6\"";
    out << " d=\"M " << canvas.px(seg.from.first) << " " << canvas.py(seg.from.second) << " L "
        << canvas.px(seg.to.first) << " " << canvas.py(seg.to.second) << "\"/>\n";
  }
  out << "</g>\n<g class=\"markers\" fill=\"black\">\n";
  for (const auto& pt : data.markers) {
    out << "<circle class=\"marker\" data-x=\"" << pt.x << "\" data-y=\"" << pt.y << "\" cx=\""
        << canvas.px(pt.x) << "\" cy=\"" << canvas.py(pt.y) << "\" r=\"3\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string points_csv(const std::vector<GeographyPoint>& points) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const auto& pt : points)
    for (const auto& p : pt.provenance)
      out << pt.x << "," << pt.y << ",point," << provenance_fields(p) << "\n";
  return out.str();
}

std::string figure_csv(const FigureDataset& data) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const auto& seg : data.lines) {
    for (const auto& xy : {seg.from, seg.to})
      out << to_fixed(xy.first, 3) << "," << to_fixed(xy.second, 3) << "," << seg.line.id()
          << ",,,,,\n";
  }
  std::string points = points_csv(data.markers);
  out << points.substr(points.find('\n') + 1);
  return out.str();
}

}  // namespace dcover
