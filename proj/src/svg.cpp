#include "fgap/svg.hpp"

#include "fgap/metric.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace fgap {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v + 0.0);
    return buf;
}

const char* order_color(int order) {
    switch (order) {
        case 2: return "#d62728";
        case 3: return "#1f77b4";
        case 4: return "#2ca02c";
        case 5: return "#9467bd";
        case 6: return "#8c564b";
        case 7: return "#e377c2";
        default: return "#7f7f7f";
    }
}

} // namespace

DiskPoint uhp_to_disk(const UhpPoint& z) {
    // (z - i)(conj(z + i)) / |z + i|^2
    const double nrm = z.x * z.x + (z.y + 1.0) * (z.y + 1.0);
    return DiskPoint{(z.x * z.x + z.y * z.y - 1.0) / nrm, -2.0 * z.x / nrm};
}

std::string render_svg(const EllipticPointSet& eps, const std::optional<GapResult>& gap) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"-1.05 -1.05 2.1 2.1\">\n";
    out << "  <circle class=\"boundary\" cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" "
           "stroke=\"#333333\" stroke-width=\"0.005\"/>\n";

    if (gap) {
        const UhpPoint& p = eps.points[gap->pair[0]].point;
        const UhpPoint& q = eps.points[gap->pair[1]].point;
        const GeodesicSegment geo = make_geodesic(p, q);
        out << "  <polyline class=\"minpair\" fill=\"none\" stroke=\"#ff7f0e\" "
               "stroke-width=\"0.008\" points=\"";
        for (int k = 0; k <= 64; ++k) {
            const DiskPoint w = uhp_to_disk(geo.point_at(k / 64.0));
            if (k > 0) out << ' ';
            out << fmt(w.x) << ',' << fmt(-w.y);
        }
        out << "\"/>\n";
    }

    for (std::size_t i = 0; i < eps.points.size(); ++i) {
        const EllipticPoint& ep = eps.points[i];
        const DiskPoint w = uhp_to_disk(ep.point);
        const bool highlighted = gap && (i == gap->pair[0] || i == gap->pair[1]);
        out << "  <circle class=\"ell order" << ep.order << "\" cx=\"" << fmt(w.x) << "\" cy=\""
            << fmt(-w.y) << "\" r=\"0.015\" fill=\"" << order_color(ep.order) << "\"";
        if (highlighted) out << " stroke=\"#ff7f0e\" stroke-width=\"0.006\"";
        out << "/>\n";
    }

    out << "</svg>\n";
    return out.str();
}

void write_svg_file(const std::string& path, const std::string& body) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw BadParameter("cannot open '" + path + "' for writing");
    file << body;
    if (!file.good()) throw BadParameter("failed writing '" + path + "'");
}

} // namespace fgap
