#pragma once

#include <string>

#include "mega/netmodel.hpp"

namespace mega {

struct SvgOptions {
  double canvas_width = 800.0;  // pixels; height follows the area's aspect ratio
  bool draw_disks = true;
  bool draw_links = true;
};

/// Clients (red when covered, grey otherwise), routers (green), coverage
/// disks and router-router links within 2*CR.
std::string render_svg(const Scenario& s, const Placement& p, const SvgOptions& opt = {});

}  // namespace mega
