#pragma once

#include <optional>
#include <string>

#include "fgap/groups.hpp"

namespace fgap {

struct DiskPoint {
    double x = 0.0;
    double y = 0.0;
};

// Cayley map z -> (z - i) / (z + i); the basepoint (0, 1) lands on the origin.
DiskPoint uhp_to_disk(const UhpPoint& z);

// Disk-model figure: boundary circle, elliptic points colored by order, the
// minimal pair joined by its geodesic. Byte-identical for identical inputs.
std::string render_svg(const EllipticPointSet& eps, const std::optional<GapResult>& gap);

void write_svg_file(const std::string& path, const std::string& body);

} // namespace fgap
