#ifndef COSTREG_SVG_CONTOUR_HPP
#define COSTREG_SVG_CONTOUR_HPP

#include <string>

#include "costreg/campaign.hpp"

namespace costreg {

// Minimal built-in contour rendering: grid cells filled by one of 10
// evenly spaced value bands, with the zero contour drawn on top.
// Deterministic output (fixed-precision coordinates, no metadata).
std::string svg_contour(const ProfitGrid& grid);

}  // namespace costreg

#endif  // COSTREG_SVG_CONTOUR_HPP
