#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace hypergroup::cli {

namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 70, kRight = 30, kTop = 40, kBottom = 50;

std::string fmt(double x, int digits = 2) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

// Clip height: ignores the top 2% of samples so that integrable endpoint
// blowups (the arcsine law at r = 1/2) do not flatten the rest of the curve.
double robust_max(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const auto k = static_cast<std::size_t>(0.98 * static_cast<double>(v.size() - 1));
  return v[k];
}

}  // namespace

std::string render_svg(const spectra::SpectralMeasure& mu, std::size_t samples, const std::string& title) {
  const double x0 = -1.0, x1 = 1.0;
  std::vector<double> ts, re, im;
  bool complex_density = false;
  if (mu.has_continuous_part() && samples > 0) {
    const double h = (mu.support.hi - mu.support.lo) / static_cast<double>(samples);
    for (std::size_t k = 0; k < samples; ++k) {
      const double t = mu.support.lo + (static_cast<double>(k) + 0.5) * h;
      const auto d = mu.density(t);
      ts.push_back(t);
      re.push_back(d.real());
      im.push_back(d.imag());
      if (d.imag() != 0.0) complex_density = true;
    }
  }
  std::vector<double> mags;
  for (std::size_t k = 0; k < ts.size(); ++k) mags.push_back(std::max(std::abs(re[k]), std::abs(im[k])));
  double ymax = robust_max(mags);
  double ymin = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k) ymin = std::min({ymin, re[k], im[k]});
  for (const auto& a : mu.atoms) {
    ymax = std::max(ymax, a.weight.real());
    ymin = std::min(ymin, a.weight.real());
  }
  if (ymax <= 0.0) ymax = 1.0;
  ymax *= 1.1;
  ymin = std::max(ymin * 1.1, -ymax);

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto X = [&](double t) { return kLeft + (t - x0) / (x1 - x0) * pw; };
  auto Y = [&](double y) { return kTop + (ymax - std::clamp(y, ymin, ymax)) / (ymax - ymin) * ph; };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n";
  s += "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  s += "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" + escape(title) +
       "</text>\n";

  // Axes and ticks.
  s += "<g stroke=\"black\" stroke-width=\"1\">\n";
  s += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(Y(0)) + "\" x2=\"" + fmt(kLeft + pw) + "\" y2=\"" + fmt(Y(0)) +
       "\"/>\n";
  s += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(kLeft) + "\" y2=\"" + fmt(kTop + ph) +
       "\"/>\n";
  s += "</g>\n<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int k = 0; k <= 8; ++k) {
    const double t = x0 + (x1 - x0) * k / 8.0;
    s += "<line x1=\"" + fmt(X(t)) + "\" y1=\"" + fmt(kTop + ph) + "\" x2=\"" + fmt(X(t)) + "\" y2=\"" +
         fmt(kTop + ph + 5) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fmt(X(t)) + "\" y=\"" + fmt(kTop + ph + 20) + "\" text-anchor=\"middle\">" + fmt(t) +
         "</text>\n";
  }
  for (int k = 0; k <= 5; ++k) {
    const double y = ymin + (ymax - ymin) * k / 5.0;
    s += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(Y(y) + 4) + "\" text-anchor=\"end\">" + fmt(y, 3) +
         "</text>\n";
  }
  s += "<text x=\"400\" y=\"" + fmt(kHeight - 10) + "\" text-anchor=\"middle\">t</text>\n</g>\n";

  // Cut interval.
  if (mu.has_continuous_part())
    s += "<rect x=\"" + fmt(X(mu.support.lo)) + "\" y=\"" + fmt(kTop) + "\" width=\"" +
         fmt(X(mu.support.hi) - X(mu.support.lo)) + "\" height=\"" + fmt(ph) +
         "\" fill=\"#1f77b4\" fill-opacity=\"0.05\"/>\n";

  auto path = [&](const std::vector<double>& ys, const char* style) {
    if (ts.empty()) return;
    std::string d;
    for (std::size_t k = 0; k < ts.size(); ++k) d += (k == 0 ? "M" : " L") + fmt(X(ts[k])) + "," + fmt(Y(ys[k]));
    s += "<path d=\"" + d + "\" fill=\"none\" " + style + "/>\n";
  };
  path(re, "stroke=\"#1f77b4\" stroke-width=\"2\"");
  if (complex_density) path(im, "stroke=\"#ff7f0e\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"");

  for (const auto& a : mu.atoms) {
    const double w = a.weight.real();
    s += "<line x1=\"" + fmt(X(a.location)) + "\" y1=\"" + fmt(Y(0)) + "\" x2=\"" + fmt(X(a.location)) + "\" y2=\"" +
         fmt(Y(w)) + "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    s += "<circle cx=\"" + fmt(X(a.location)) + "\" cy=\"" + fmt(Y(w)) + "\" r=\"4\" fill=\"#d62728\"/>\n";
    std::string label = "w=" + fmt(w, 4);
    if (a.weight.imag() != 0.0) label += (a.weight.imag() < 0 ? "-" : "+") + fmt(std::abs(a.weight.imag()), 4) + "i";
    s += "<text x=\"" + fmt(X(a.location) - 6) + "\" y=\"" + fmt(Y(w) - 8) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#d62728\">" + label +
         "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace hypergroup::cli
