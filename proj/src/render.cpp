#include "tonnetz/render.hpp"

#include <cmath>
#include <sstream>

#include "tonnetz/lattice.hpp"

namespace tonnetz {

namespace {

int mod(long long x, int n) {
    long long r = x % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

int unfolded_label(const LengthVector& L, int col, int row) {
    return mod(static_cast<long long>(col) * L.length(0) -
                   static_cast<long long>(row) * L.length(1),
               L.n());
}

std::string render_svg(const LengthVector& L, int rows, int cols) {
    if (L.k() != 3)
        throw UnsupportedK("SVG rendering is planar; only k = 3 is supported");
    if (rows < 1 || cols < 1)
        throw TonnetzError("bad parameters", "rows and cols must be positive");

    const double unit = 60.0;
    const double sq3h = std::sqrt(3.0) / 2.0;
    const double margin = 40.0;
    // Grid point (col i, row j): x = i + j/2, y = j * sqrt(3)/2 (SVG y down).
    auto px = [&](double i, double j) { return margin + unit * (i + j / 2.0); };
    auto py = [&](double j) { return margin + unit * (j * sq3h); };

    double width = 2 * margin + unit * (cols - 1 + (rows - 1) / 2.0);
    double height = 2 * margin + unit * (rows - 1) * sq3h;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<g stroke=\"#888\" stroke-width=\"1\">\n";
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i) {
            if (i + 1 < cols)
                os << "<line x1=\"" << px(i, j) << "\" y1=\"" << py(j) << "\" x2=\""
                   << px(i + 1, j) << "\" y2=\"" << py(j) << "\"/>\n";
            if (j + 1 < rows) {
                os << "<line x1=\"" << px(i, j) << "\" y1=\"" << py(j) << "\" x2=\""
                   << px(i, j + 1) << "\" y2=\"" << py(j + 1) << "\"/>\n";
                if (i > 0)
                    os << "<line x1=\"" << px(i, j) << "\" y1=\"" << py(j) << "\" x2=\""
                       << px(i - 1, j + 1) << "\" y2=\"" << py(j + 1) << "\"/>\n";
            }
        }
    os << "</g>\n";

    // Fundamental-domain parallelogram of Lambda_L, anchored at (0, 0).
    // Plane image of a-coordinates (c1, c2): c1 * u1 + c2 * u2 with
    // u1 = (1, 0) and u2 = (-1/2, -sqrt(3)/2) (a step up-left).
    if (L.reduced()) {
        SubLattice sub = lambda_L(L);
        double b1x = sub.hnf[0][0] * 1.0 + sub.hnf[1][0] * -0.5;
        double b1y = sub.hnf[1][0] * -sq3h;
        double b2x = sub.hnf[0][1] * 1.0 + sub.hnf[1][1] * -0.5;
        double b2y = sub.hnf[1][1] * -sq3h;
        double ox = px(0, 0), oy = py(0);
        os << "<polygon fill=\"none\" stroke=\"#c22\" stroke-width=\"2.5\" points=\""
           << ox << ',' << oy << ' ' << ox + unit * b1x << ',' << oy + unit * b1y << ' '
           << ox + unit * (b1x + b2x) << ',' << oy + unit * (b1y + b2y) << ' '
           << ox + unit * b2x << ',' << oy + unit * b2y << "\"/>\n";
    }

    os << "<g font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">\n";
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i) {
            os << "<circle cx=\"" << px(i, j) << "\" cy=\"" << py(j)
               << "\" r=\"13\" fill=\"white\" stroke=\"black\"/>\n";
            os << "<text x=\"" << px(i, j) << "\" y=\"" << py(j) + 5 << "\">"
               << unfolded_label(L, i, j) << "</text>\n";
        }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace tonnetz
