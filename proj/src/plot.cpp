#include "neflab/plot.hpp"

#include "neflab/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace neflab {

namespace {

constexpr long kMaxGridPoints = 100000;

std::vector<Rational> grid(const PlotSpec& spec) {
  if (!(spec.a_min > 1)) throw std::invalid_argument("plot range must lie in a > 1");
  if (spec.a_max < spec.a_min) throw std::invalid_argument("plot range is empty");
  if (!(spec.step > 0)) throw std::invalid_argument("plot step must be positive");
  if ((spec.a_max - spec.a_min) / spec.step > kMaxGridPoints)
    throw std::invalid_argument("plot grid too fine");
  std::vector<Rational> out;
  for (Rational a = spec.a_min; a <= spec.a_max; a += spec.step) out.push_back(a);
  return out;
}

Rational vojta_b(int g, const Rational& a) { return 1 + g / (a - 1) + (g - 1) * (a - 1); }
Rational jacobian_b(int g, const Rational& a) { return 1 + Rational(g) * g / (a - 1); }

}  // namespace

std::vector<PlotRow> plot_rows(const PlotSpec& spec) {
  if (spec.g < 1) throw std::invalid_argument("plots need g >= 1");
  const int g = spec.g;
  const auto as = grid(spec);
  const GenusContext arb = GenusContext::arbitrary(g);
  const auto in_range = [&](const Rational& a) { return a >= spec.a_min && a <= spec.a_max; };
  std::vector<PlotRow> rows;

  if (spec.overlays.conjectural_boundary)
    for (const auto& a : as) rows.push_back({"conjectural", a, 1 + g / (a - 1), false, arb});

  auto curve = [&](const std::string& name, Rational (*b_of)(int, const Rational&)) {
    for (const auto& a : as) rows.push_back({name, a, b_of(g, a), true, arb});
    for (const auto& t : as) {
      Rational a = b_of(g, t);
      if (in_range(a)) rows.push_back({name + "_reflected", a, t, true, arb});
    }
  };
  if (spec.overlays.vojta) curve("vojta", vojta_b);
  if (spec.overlays.jacobian) curve("jacobian", jacobian_b);

  if (spec.overlays.tangent_segment) {
    rows.push_back({"tangent_segment", 2, vojta_b(g, 2), true, arb});
    rows.push_back({"tangent_segment", vojta_b(g, 2), 2, true, arb});
  }

  for (const auto& ctx : spec.contexts) {
    if (ctx.g != g) throw std::invalid_argument("plot context genus differs from plot genus");
    const Catalog catalog(ctx, spec.catalog_options);
    if (spec.overlays.catalog_points) {
      std::set<std::pair<Rational, Rational>> seen;
      for (const auto& s : catalog.samples()) {
        if (s.cls.c != -1 || !in_range(s.cls.a)) continue;
        if (seen.insert({s.cls.a, s.cls.b}).second)
          rows.push_back({"catalog@" + level_name(ctx), s.cls.a, s.cls.b, true, ctx});
      }
    }
    if (spec.overlays.boundary)
      for (const auto& s : boundary_samples(catalog, spec.a_min, spec.a_max, spec.step))
        rows.push_back({"boundary@" + level_name(ctx), s.a, s.b_min, true, ctx});
  }
  return rows;
}

std::string plot_csv(const std::vector<PlotRow>& rows) {
  std::ostringstream os;
  os << "family,a,b,status\n";
  for (const auto& r : rows)
    os << r.family << ',' << to_string(r.a) << ',' << to_string(r.b) << ','
       << (r.certified ? "certified" : "conjectural") << '\n';
  return os.str();
}

std::string plot_svg(const PlotSpec& spec, const std::vector<PlotRow>& rows) {
  const double width = 640, height = 640, margin = 48;
  const double x0 = spec.a_min.get_d(), x1 = spec.a_max.get_d();
  const double y0 = 0, y1 = std::max(x1, 2.0 * spec.g);
  auto sx = [&](double a) { return margin + (a - x0) / (x1 - x0 > 0 ? x1 - x0 : 1) * (width - 2 * margin); };
  auto sy = [&](double b) { return height - margin - (b - y0) / (y1 - y0) * (height - 2 * margin); };

  std::map<std::string, std::vector<std::pair<double, double>>> series;
  std::vector<std::string> order;
  for (const auto& r : rows) {
    if (!series.count(r.family)) order.push_back(r.family);
    series[r.family].emplace_back(r.a.get_d(), r.b.get_d());
  }

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b",
                                  "#e377c2", "#17becf", "#bcbd22", "#ff7f0e", "#7f7f7f"};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << margin << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">"
     << "a f1 + b f2 - delta, g = " << spec.g << "</text>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
     << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
     << height - margin << "\" stroke=\"black\"/>\n";
  os << "<defs><clipPath id=\"plot\"><rect x=\"" << margin << "\" y=\"" << margin << "\" width=\""
     << width - 2 * margin << "\" height=\"" << height - 2 * margin << "\"/></clipPath></defs>\n";
  os << "<g clip-path=\"url(#plot)\">\n";

  std::size_t colour = 0;
  double legend_y = margin + 8;
  std::ostringstream legend;
  for (const auto& name : order) {
    auto pts = series[name];
    const char* col = palette[colour++ % (sizeof(palette) / sizeof(*palette))];
    const bool points_only = name.rfind("catalog@", 0) == 0 || name == "tangent_segment";
    if (points_only) {
      for (const auto& [a, b] : pts)
        os << "<circle cx=\"" << sx(a) << "\" cy=\"" << sy(b) << "\" r=\"3\" fill=\"" << col << "\"/>\n";
      if (name == "tangent_segment" && pts.size() == 2)
        os << "<line x1=\"" << sx(pts[0].first) << "\" y1=\"" << sy(pts[0].second) << "\" x2=\""
           << sx(pts[1].first) << "\" y2=\"" << sy(pts[1].second) << "\" stroke=\"" << col << "\"/>\n";
    } else {
      std::sort(pts.begin(), pts.end());
      os << "<polyline fill=\"none\" stroke=\"" << col << "\""
         << (name == "conjectural" ? " stroke-dasharray=\"6,4\"" : "") << " points=\"";
      for (const auto& [a, b] : pts) os << sx(a) << ',' << sy(b) << ' ';
      os << "\"/>\n";
    }
    legend << "<text x=\"" << width - margin - 150 << "\" y=\"" << legend_y
           << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << col << "\">" << name
           << (name == "conjectural" ? " (conjectural)" : "") << "</text>\n";
    legend_y += 14;
  }
  os << "</g>\n" << legend.str() << "</svg>\n";
  return os.str();
}

std::string render_plot(const PlotSpec& spec) {
  const auto rows = plot_rows(spec);
  return spec.format == PlotFormat::Csv ? plot_csv(rows) : plot_svg(spec, rows);
}

void write_plot(const PlotSpec& spec, const std::string& path) {
  const std::string body = render_plot(spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << body;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace neflab
