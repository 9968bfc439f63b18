#include "mega/svg.hpp"

#include <cstdio>
#include <sstream>

#include "mega/geometry.hpp"

namespace mega {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Scenario& s, const Placement& p, const SvgOptions& opt) {
  const double scale = opt.canvas_width / s.area().width;
  const double w = opt.canvas_width;
  const double h = s.area().height * scale;
  // SVG y grows downwards.
  auto px = [&](double x) { return fmt(x * scale); };
  auto py = [&](double y) { return fmt(h - y * scale); };

  const CoverageAssignment cov = compute_coverage(s, p);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\""
      << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << ' ' << fmt(h) << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
      << "\" fill=\"white\" stroke=\"black\"/>\n";

  if (opt.draw_disks) {
    out << "<g fill=\"#3c9d3c\" fill-opacity=\"0.08\" stroke=\"#3c9d3c\" stroke-opacity=\"0.4\">\n";
    for (int j = 0; j < p.size(); ++j)
      out << "<circle cx=\"" << px(p.router(j).x()) << "\" cy=\"" << py(p.router(j).y())
          << "\" r=\"" << fmt(s.coverage_radius() * scale) << "\"/>\n";
    out << "</g>\n";
  }

  if (opt.draw_links) {
    const double link = 2.0 * s.coverage_radius();
    out << "<g stroke=\"#1f5fa8\" stroke-width=\"1.5\">\n";
    for (int i = 0; i < p.size(); ++i)
      for (int j = i + 1; j < p.size(); ++j)
        if (within(p.router(i), p.router(j), link))
          out << "<line x1=\"" << px(p.router(i).x()) << "\" y1=\"" << py(p.router(i).y())
              << "\" x2=\"" << px(p.router(j).x()) << "\" y2=\"" << py(p.router(j).y())
              << "\"/>\n";
    out << "</g>\n";
  }

  out << "<g>\n";
  const auto& c = s.clients();
  for (Eigen::Index i = 0; i < c.cols(); ++i) {
    const bool covered = cov.assigned[static_cast<std::size_t>(i)] != CoverageAssignment::kUncovered;
    out << "<circle cx=\"" << px(c(0, i)) << "\" cy=\"" << py(c(1, i)) << "\" r=\"3\" fill=\""
        << (covered ? "#d62728" : "#999999") << "\"/>\n";
  }
  out << "</g>\n<g fill=\"#2ca02c\" stroke=\"black\">\n";
  for (int j = 0; j < p.size(); ++j)
    out << "<rect x=\"" << fmt(p.router(j).x() * scale - 5) << "\" y=\""
        << fmt(h - p.router(j).y() * scale - 5) << "\" width=\"10\" height=\"10\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace mega
