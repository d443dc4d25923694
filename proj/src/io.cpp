#include "mcg/io.hpp"

#include <ostream>
#include <sstream>

namespace mcg {

std::string format_row(const DistanceRow& row) {
    std::string s;
    for (int64_t j = 0; j < row.n; ++j) {
        if (j) s += ',';
        s += std::to_string(row.dist[j]);
    }
    return s;
}

void write_matrix_csv(std::ostream& os, const std::vector<std::vector<int32_t>>& m) {
    for (const auto& r : m) {
        for (size_t j = 0; j < r.size(); ++j) {
            if (j) os << ',';
            os << r[j];
        }
        os << '\n';
    }
}

void write_spectrum_csv(std::ostream& os, const Spectrum& sp) {
    std::ostringstream buf;
    buf.precision(12);
    for (int64_t k = 0; k < sp.n; ++k) buf << k << ',' << sp.by_index[k] << '\n';
    os << buf.str();
}

void write_bfile(std::ostream& os, const std::vector<BigInt>& terms, int64_t first_index) {
    for (size_t i = 0; i < terms.size(); ++i)
        os << (first_index + static_cast<int64_t>(i)) << ' ' << terms[i] << '\n';
}

void write_vertex_loads_csv(std::ostream& os, const LoadProfile& lp, int64_t label_offset) {
    os << "vertex,load\n";
    for (size_t v = 0; v < lp.vertex_load.size(); ++v)
        os << (static_cast<int64_t>(v) + label_offset) << ',' << lp.vertex_load[v] << '\n';
}

void write_edge_loads_csv(std::ostream& os, const LoadProfile& lp, int64_t label_offset) {
    os << "u,v,load\n";
    for (const auto& [e, l] : lp.edge_load)
        os << (e.first + label_offset) << ',' << (e.second + label_offset) << ',' << l << '\n';
}

} // namespace mcg
