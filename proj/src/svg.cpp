#include "laundry/svg.hpp"

#include <sstream>

namespace laundry {

std::string chord_diagram_svg(const CircleWithChords& c) {
    const int step = 40, margin = 30, baseline = 60;
    int npts = (int)c.seq.size();
    int width = 2 * margin + step * (npts - 1);
    int max_r = 0;
    for (int i = 0; i <= c.chords; ++i) {
        int a = c.position_of(i, false), b = c.position_of(i, true);
        max_r = std::max(max_r, (b - a) * step / 2);
    }
    int height = baseline + max_r + margin + 20;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "  <line x1=\"" << margin - 15 << "\" y1=\"" << baseline << "\" x2=\""
       << width - margin + 15 << "\" y2=\"" << baseline
       << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (int i = 0; i <= c.chords; ++i) {
        int a = c.position_of(i, false), b = c.position_of(i, true);
        int xa = margin + a * step, xb = margin + b * step;
        int r = (xb - xa) / 2;
        os << "  <path d=\"M " << xa << ' ' << baseline << " A " << r << ' ' << r
           << " 0 0 0 " << xb << ' ' << baseline << "\" fill=\"none\" stroke=\""
           << (i == 0 ? "#888888" : "#1f6fb2") << "\" stroke-width=\"1.5\"/>\n";
    }
    for (int p = 0; p < npts; ++p) {
        int x = margin + p * step;
        os << "  <circle cx=\"" << x << "\" cy=\"" << baseline << "\" r=\"3\" fill=\"black\"/>\n";
        os << "  <text x=\"" << x << "\" y=\"" << baseline - 10
           << "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"monospace\">"
           << token(c.seq[p]) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace laundry
