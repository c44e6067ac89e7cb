#pragma once

// Datasets behind the two geography figures and their CSV / SVG renderings.

#include "dcover/geography.hpp"

#include <string>
#include <vector>

namespace dcover {

struct Window {
  Rational x0, x1, y0, y1;
};

/// Figure 1: [0,25] x [0,60]. Figure 2: [0,120] x [0,420].
Window default_window(int figure);

struct FigureLine {
  GeographyLine line;
  bool dashed;
  /// Endpoints of the part of the line inside the window.
  std::pair<Rational, Rational> from;
  std::pair<Rational, Rational> to;
};

struct FigureDataset {
  int figure;  // 1, 2, or 0 for an ad hoc plot
  std::string title;
  Window window;
  std::vector<FigureLine> lines;
  std::vector<GeographyPoint> markers;
  std::vector<std::string> warnings;
};

/// Figure 1: l_1..l_4 solid, Castelnuovo dashed, and the realized points of
/// l_1..l_4 inside the window. Figure 2: l_1..l_6 and Castelnuovo, no markers.
/// Throws DomainError for a figure other than 1 or 2 or an empty window.
FigureDataset figure_dataset(int figure, const Window& window);
inline FigureDataset figure_dataset(int figure) {
  return figure_dataset(figure, default_window(figure));
}

/// l_a (solid) and Castelnuovo (dashed) with the given points as markers, in
/// a window fitted around the points.
FigureDataset geography_plot(const Integer& a, const std::vector<GeographyPoint>& points);

/// SVG 1.1 document. Every geography line is one <path> carrying
/// data-line="<id>" and class="solid" or class="dashed"; every marker is a
/// <circle class="marker" data-x=".." data-y="..">. Axes are <line> elements.
std::string render_svg(const FigureDataset& data);

/// CSV header shared by every export.
inline constexpr const char* kCsvHeader = "x,y,kind,e,a,b,d,base";

/// One row per (point, provenance entry); kind = "point".
std::string points_csv(const std::vector<GeographyPoint>& points);

/// Line endpoints (kind = line id, coordinates to 3 decimals) followed by the
/// marker rows.
std::string figure_csv(const FigureDataset& data);

}  // namespace dcover
