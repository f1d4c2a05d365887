#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zarchow/series.hpp"
#include "zarchow/surface.hpp"
#include "zarchow/toric.hpp"

namespace zarchow {

/// Surface file contents: the lattice plus optional nef-cone generators.
struct SurfaceFile {
    SurfaceLattice lattice;
    std::vector<Vec> nef_generators;
};

/// Parse the surface JSON schema (see docs/formats.md); validation errors
/// carry the offending field path.
SurfaceFile parse_surface(const std::string& json_text);
SurfaceFile parse_surface_file(const std::string& path);
std::string surface_to_json(const SurfaceFile& s);

Fan parse_fan(const std::string& json_text);
Fan parse_fan_file(const std::string& path);
std::string fan_to_json(const Fan& f);

/// Divisor syntax: either a JSON array of rationals ("[3/2, -1]") or a sum of
/// labeled terms ("2E+1f", "3/2 E - f") over the given labels.
Divisor parse_divisor(const std::string& text, const std::vector<std::string>& labels);

/// "3/2 E + 1 f"; zero prints "0". Coefficients always explicit.
std::string divisor_str(const Divisor& d, const std::vector<std::string>& labels);

RationalSeries parse_series(const std::string& json_text);
RationalSeries parse_series_file(const std::string& path);
std::string series_to_json(const RationalSeries& r);

std::string read_file(const std::string& path);

} // namespace zarchow
