#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "pulsefront/errors.hpp"
#include "pulsefront/io.hpp"

namespace pulsefront::io {

namespace {

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 72, kRight = 24, kTop = 24, kBottom = 56;

std::string fmt(const char* pattern, double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

struct Ticks {
  double lo, hi, step;
};

Ticks nice_ticks(double lo, double hi) {
  if (lo == hi) {
    const double pad = (lo == 0.0) ? 1.0 : std::abs(lo) * 0.5;
    lo -= pad;
    hi += pad;
  }
  const double raw = (hi - lo) / 4.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  double step = 10.0 * mag;
  if (norm < 1.5)
    step = mag;
  else if (norm < 3.0)
    step = 2.0 * mag;
  else if (norm < 7.0)
    step = 5.0 * mag;
  return {lo, hi, step};
}

}  // namespace

void plot_csv(const std::string& csv_in, const std::string& svg_out,
              const std::string& x_col, const std::string& y_col) {
  Csv csv = read_csv(csv_in);
  const std::vector<double>& xs = csv.column(x_col);
  const std::vector<double>& ys = csv.column(y_col);
  if (xs.empty()) throw BadConfig("CSV '" + csv_in + "' has no data rows");

  double xlo = xs[0], xhi = xs[0], ylo = ys[0], yhi = ys[0];
  for (double v : xs) {
    xlo = std::min(xlo, v);
    xhi = std::max(xhi, v);
  }
  for (double v : ys) {
    ylo = std::min(ylo, v);
    yhi = std::max(yhi, v);
  }
  const Ticks tx = nice_ticks(xlo, xhi);
  const Ticks ty = nice_ticks(ylo, yhi);
  xlo = tx.lo;
  xhi = tx.hi;
  ylo = ty.lo;
  yhi = ty.hi;
  const double xspan = (xhi > xlo) ? xhi - xlo : 1.0;
  const double yspan = (yhi > ylo) ? yhi - ylo : 1.0;

  auto px = [&](double x) {
    return kLeft + (x - xlo) / xspan * (kWidth - kLeft - kRight);
  };
  auto py = [&](double y) {
    return kHeight - kBottom - (y - ylo) / yspan * (kHeight - kTop - kBottom);
  };

  std::ofstream out(svg_out);
  if (!out) throw BadConfig("cannot write '" + svg_out + "'");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";

  // Axes.
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
      << kWidth - kRight << "\" y2=\"" << kHeight - kBottom
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"black\"/>\n";

  for (double t = std::ceil(xlo / tx.step) * tx.step; t <= xhi + 1e-9 * xspan;
       t += tx.step) {
    const double x = px(t);
    out << "<line x1=\"" << fmt("%.2f", x) << "\" y1=\"" << kHeight - kBottom
        << "\" x2=\"" << fmt("%.2f", x) << "\" y2=\"" << kHeight - kBottom + 6
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt("%.2f", x) << "\" y=\"" << kHeight - kBottom + 20
        << "\" font-size=\"12\" text-anchor=\"middle\">" << fmt("%.6g", t)
        << "</text>\n";
  }
  for (double t = std::ceil(ylo / ty.step) * ty.step; t <= yhi + 1e-9 * yspan;
       t += ty.step) {
    const double y = py(t);
    out << "<line x1=\"" << kLeft - 6 << "\" y1=\"" << fmt("%.2f", y)
        << "\" x2=\"" << kLeft << "\" y2=\"" << fmt("%.2f", y)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kLeft - 10 << "\" y=\"" << fmt("%.2f", y + 4)
        << "\" font-size=\"12\" text-anchor=\"end\">" << fmt("%.6g", t)
        << "</text>\n";
  }

  out << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\""
      << kHeight - 12 << "\" font-size=\"14\" text-anchor=\"middle\">" << x_col
      << "</text>\n";
  out << "<text x=\"16\" y=\"" << (kTop + kHeight - kBottom) / 2
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << (kTop + kHeight - kBottom) / 2 << ")\">" << y_col << "</text>\n";

  out << "<polyline fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ' ';
    out << fmt("%.2f", px(xs[i])) << ',' << fmt("%.2f", py(ys[i]));
  }
  out << "\"/>\n</svg>\n";
}

}  // namespace pulsefront::io
