#pragma once

#include <string>

#include "hypergroup/spectra.hpp"

namespace hypergroup::cli {

/// Self-contained 800x500 SVG: the real part of the density as a curve, the
/// imaginary part dashed when present, atoms as stems labelled by weight.
std::string render_svg(const spectra::SpectralMeasure& mu, std::size_t samples, const std::string& title);

}  // namespace hypergroup::cli
