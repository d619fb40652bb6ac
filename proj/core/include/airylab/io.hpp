#pragma once

#include <iosfwd>
#include <string>

#include "airylab/core.hpp"

namespace airylab {

// Profile CSV: header `xi,re,im`, one node per row, strictly increasing xi on
// a uniform grid.
FreqProfile read_profile_csv(std::istream& in);
FreqProfile read_profile_csv(const std::string& path);
void write_profile_csv(std::ostream& out, const FreqProfile& u);

// Field CSV: header `t,x,re,im`.
void write_field_csv(std::ostream& out, const SpaceTimeField& f);

// JSON sidecars describing the grids, as compact strings.
std::string freq_grid_json(const FreqGrid& g);
std::string spacetime_grid_json(const SpaceTimeGrid& g);

// Round-trip-exact decimal rendering used by every CSV writer.
std::string format_real(double v);

}  // namespace airylab
