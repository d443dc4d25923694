#pragma once

#include <iosfwd>
#include <string>

#include "mcg/closed_forms.hpp"
#include "mcg/distance.hpp"
#include "mcg/routing.hpp"
#include "mcg/spectral.hpp"

namespace mcg {

// Comma-separated integers, no newline.
std::string format_row(const DistanceRow& row);

// CSV, one matrix row per line, '\n' terminated.
void write_matrix_csv(std::ostream& os, const std::vector<std::vector<int32_t>>& m);

// Lines "k,eigenvalue", 12 significant digits.
void write_spectrum_csv(std::ostream& os, const Spectrum& sp);

// OEIS b-file lines "k a(k)". `first_index` is 0 for A045883, 1 for A212697.
void write_bfile(std::ostream& os, const std::vector<BigInt>& terms, int64_t first_index);

// "vertex,load" and "u,v,load" tables. `label_offset` shifts printed vertex
// ids (the worked 6-vertex example uses 1-based labels).
void write_vertex_loads_csv(std::ostream& os, const LoadProfile& lp, int64_t label_offset = 0);
void write_edge_loads_csv(std::ostream& os, const LoadProfile& lp, int64_t label_offset = 0);

} // namespace mcg
