#include "costreg/svg_contour.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "costreg/report.hpp"

namespace costreg {

namespace {

constexpr double kLeft = 70.0, kTop = 20.0, kPlotW = 600.0, kPlotH = 440.0;
constexpr int kBands = 10;

std::string band_fill(int band) {
  // blue -> near-white -> red ramp
  const double t = static_cast<double>(band) / (kBands - 1);
  auto lerp = [](double a, double b, double u) { return a + (b - a) * u; };
  double r, g, b;
  if (t < 0.5) {
    const double u = t / 0.5;
    r = lerp(33, 247, u);
    g = lerp(102, 247, u);
    b = lerp(172, 247, u);
  } else {
    const double u = (t - 0.5) / 0.5;
    r = lerp(247, 178, u);
    g = lerp(247, 24, u);
    b = lerp(247, 43, u);
  }
  auto c = [](double v) { return std::to_string(static_cast<int>(std::lround(v))); };
  return "rgb(" + c(r) + "," + c(g) + "," + c(b) + ")";
}

std::string num(double v) { return format_fixed(v, 2); }

}  // namespace

std::string svg_contour(const ProfitGrid& grid) {
  const Index nb = grid.beta_axis.size();
  const Index np = grid.price_axis.size();
  const double bmin = grid.beta_axis(0), bmax = grid.beta_axis(nb - 1);
  const double pmin = grid.price_axis(0), pmax = grid.price_axis(np - 1);
  const double vmin = grid.values.minCoeff();
  const double vmax = grid.values.maxCoeff();
  const double span = vmax > vmin ? vmax - vmin : 1.0;

  auto x_of = [&](double beta) { return kLeft + (beta - bmin) / (bmax - bmin) * kPlotW; };
  auto y_of = [&](double price) { return kTop + kPlotH - (price - pmin) / (pmax - pmin) * kPlotH; };

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"700\" height=\"520\" "
      "viewBox=\"0 0 700 520\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"700\" height=\"520\" fill=\"white\"/>\n";

  // filled level bands, one rect per grid cell
  for (Index i = 0; i < nb; ++i) {
    const double x0 = i == 0 ? x_of(grid.beta_axis(0))
                             : 0.5 * (x_of(grid.beta_axis(i - 1)) + x_of(grid.beta_axis(i)));
    const double x1 = i == nb - 1
                          ? x_of(grid.beta_axis(nb - 1))
                          : 0.5 * (x_of(grid.beta_axis(i)) + x_of(grid.beta_axis(i + 1)));
    for (Index j = 0; j < np; ++j) {
      const double yb = j == 0 ? y_of(grid.price_axis(0))
                               : 0.5 * (y_of(grid.price_axis(j - 1)) + y_of(grid.price_axis(j)));
      const double yt = j == np - 1
                            ? y_of(grid.price_axis(np - 1))
                            : 0.5 * (y_of(grid.price_axis(j)) + y_of(grid.price_axis(j + 1)));
      int band = static_cast<int>((grid.values(i, j) - vmin) / span * kBands);
      band = std::clamp(band, 0, kBands - 1);
      svg += "<rect x=\"" + num(x0) + "\" y=\"" + num(yt) + "\" width=\"" + num(x1 - x0) +
             "\" height=\"" + num(yb - yt) + "\" fill=\"" + band_fill(band) + "\"/>\n";
    }
  }

  // zero contour on top
  for (Index i = 0; i + 1 < nb; ++i) {
    for (Index j = 0; j + 1 < np; ++j) {
      struct Corner {
        double v, x, y;
      };
      const Corner c00{grid.values(i, j), x_of(grid.beta_axis(i)), y_of(grid.price_axis(j))};
      const Corner c10{grid.values(i + 1, j), x_of(grid.beta_axis(i + 1)), y_of(grid.price_axis(j))};
      const Corner c01{grid.values(i, j + 1), x_of(grid.beta_axis(i)), y_of(grid.price_axis(j + 1))};
      const Corner c11{grid.values(i + 1, j + 1), x_of(grid.beta_axis(i + 1)),
                       y_of(grid.price_axis(j + 1))};
      const Corner* edges[4][2] = {{&c00, &c10}, {&c10, &c11}, {&c11, &c01}, {&c01, &c00}};
      std::vector<std::pair<double, double>> hits;
      for (auto& e : edges) {
        const double va = e[0]->v, vb = e[1]->v;
        if ((va < 0.0) == (vb < 0.0)) continue;
        const double t = va / (va - vb);
        hits.emplace_back(e[0]->x + t * (e[1]->x - e[0]->x), e[0]->y + t * (e[1]->y - e[0]->y));
      }
      for (std::size_t h = 0; h + 1 < hits.size(); h += 2) {
        svg += "<line x1=\"" + num(hits[h].first) + "\" y1=\"" + num(hits[h].second) +
               "\" x2=\"" + num(hits[h + 1].first) + "\" y2=\"" + num(hits[h + 1].second) +
               "\" stroke=\"black\" stroke-width=\"2\"/>\n";
      }
    }
  }

  // axes
  svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(kPlotW) +
         "\" height=\"" + num(kPlotH) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double beta = bmin + (bmax - bmin) * t / 4.0;
    const double price = pmin + (pmax - pmin) * t / 4.0;
    svg += "<text x=\"" + num(x_of(beta)) + "\" y=\"" + num(kTop + kPlotH + 18.0) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + format_fixed(beta, 2) + "</text>\n";
    svg += "<text x=\"" + num(kLeft - 8.0) + "\" y=\"" + num(y_of(price) + 4.0) +
           "\" font-size=\"11\" text-anchor=\"end\">" + format_fixed(price, 0) + "</text>\n";
  }
  svg += "<text x=\"" + num(kLeft + kPlotW / 2.0) + "\" y=\"" + num(kTop + kPlotH + 40.0) +
         "\" font-size=\"13\" text-anchor=\"middle\">beta</text>\n";
  svg += "<text x=\"16\" y=\"" + num(kTop + kPlotH / 2.0) +
         "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num(kTop + kPlotH / 2.0) + ")\">price</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace costreg
