#pragma once

#include <string>
#include <vector>

#include "lgw/scattering.hpp"
#include "lgw/toricgeo.hpp"
#include "lgw/tropical.hpp"

namespace lgw {

// Presentational renderings of the lattice pictures: fans with
// self-intersection labels, scattering diagrams with wall labels, tropical
// curves with edge weights and marked points.
std::string fan_to_svg(const Fan& f);
std::string diagram_to_svg(const ScatteringDiagram& d);
std::string curves_to_svg(const EnumResult& result, const GenericInstance& inst);

}  // namespace lgw
