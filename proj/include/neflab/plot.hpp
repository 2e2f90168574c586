#pragma once

#include "neflab/catalog.hpp"

#include <string>
#include <vector>

namespace neflab {

enum class PlotFormat { Csv, Svg };

struct PlotOverlays {
  bool conjectural_boundary = true;
  bool vojta = true;
  bool jacobian = true;
  bool tangent_segment = true;
  bool catalog_points = true;
  bool boundary = true;
};

// Slice c = -1 of the (a, b) plane for one genus.
struct PlotSpec {
  int g = 10;
  std::vector<GenusContext> contexts;  // contexts for catalog points and boundaries
  Rational a_min = 2;
  Rational a_max = 20;
  Rational step = Rational(1) / 2;
  PlotOverlays overlays;
  PlotFormat format = PlotFormat::Csv;
  CatalogOptions catalog_options;
};

// status "certified" means (a, b) = a f1 + b f2 - delta is nef in `context`;
// "conjectural" rows carry no claim.
struct PlotRow {
  std::string family;
  Rational a;
  Rational b;
  bool certified = true;
  GenusContext context;
};

std::vector<PlotRow> plot_rows(const PlotSpec& spec);
std::string plot_csv(const std::vector<PlotRow>& rows);
std::string plot_svg(const PlotSpec& spec, const std::vector<PlotRow>& rows);
std::string render_plot(const PlotSpec& spec);
void write_plot(const PlotSpec& spec, const std::string& path);

}  // namespace neflab
