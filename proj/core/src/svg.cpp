#include "geocount/svg.hpp"

#include <algorithm>
#include <sstream>

#include "geocount/enumeration.hpp"
#include "geocount/errors.hpp"

namespace geocount {

namespace {

constexpr long kScale = 40;  // pixels per coordinate unit

// Exact fixed point: round(x * 1000) rendered with three decimals.
std::string fixed3(const Rational& x) {
    const Integer scaled = (x * Rational(1000)).round_nearest();
    const bool negative = scaled < 0;
    const Integer s = abs(scaled);
    const Integer whole = s / 1000;
    const Integer frac = s % 1000;
    std::string f = frac.get_str();
    while (f.size() < 3) f = "0" + f;
    return (negative ? "-" : "") + whole.get_str() + "." + f;
}

struct Frame {
    Rational w;  // window half width

    Rational px(const Rational& x) const { return (x + w + Rational(1, 2)) * Rational(kScale); }
    Rational py(const Rational& y) const { return (w + Rational(1, 2) - y) * Rational(kScale); }
};

void append_line(std::ostringstream& out, const Frame& f, const char* cls, int width,
                 const RationalVector& a, const RationalVector& b) {
    out << "<line class=\"" << cls << "\" x1=\"" << fixed3(f.px(a[0])) << "\" y1=\""
        << fixed3(f.py(a[1])) << "\" x2=\"" << fixed3(f.px(b[0])) << "\" y2=\""
        << fixed3(f.py(b[1])) << "\" stroke=\"" << (width == 2 ? "#333333" : "#999999")
        << "\" stroke-width=\"" << width << "\"/>\n";
}

std::vector<RationalVector> lattice_points_in_box(const RationalMatrix& basis,
                                                  const Rational& w) {
    const RationalMatrix gram = RationalMatrix::identity(2);
    const RationalVector origin(2);
    const Rational radius_squared = Rational(2) * w * w;
    const auto coefficients =
        enumerate_lattice_points_in_ball(basis, gram, origin, radius_squared);
    std::vector<RationalVector> points;
    for (const auto& n : coefficients) {
        RationalVector v(2);
        for (std::size_t j = 0; j < basis.cols(); ++j)
            v = vec_add(v, vec_scale(Rational(n[j]), basis.column(j)));
        if (v[0].abs() <= w && v[1].abs() <= w) points.push_back(v);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

}  // namespace

std::string diagram_svg(const RootDatum& datum, const RationalMatrix& gamma,
                        const RationalMatrix& gamma0, const Rational& window,
                        const std::vector<RationalVector>& marks) {
    if (datum.rank != 2) throw NotSupported("diagrams are drawn for rank 2 spaces only");
    if (window.sign() <= 0) throw InvalidInput("window must be positive");
    for (const auto& m : marks)
        if (m.size() != 2) throw InvalidInput("mark point must have two coordinates");

    const Rational& w = window;
    const Frame frame{w};
    const std::string size_px = fixed3((Rational(2) * w + Rational(1)) * Rational(kScale));
    const std::string box_px = fixed3(Rational(2) * w * Rational(kScale));

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\""
        << size_px << "\" viewBox=\"0 0 " << size_px << " " << size_px << "\">\n";
    out << "<rect class=\"frame\" x=\"" << fixed3(frame.px(-w)) << "\" y=\""
        << fixed3(frame.py(w)) << "\" width=\"" << box_px << "\" height=\""
        << box_px << "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

    // Integer level lines a(h) = k with |k| <= w, clipped to the window box.
    const Integer k_max = w.floor();
    for (std::size_t i : datum.positive_indices) {
        const RationalVector a = datum.gram.apply(datum.roots[i].covector);
        for (Integer k = -k_max; k <= k_max; ++k) {
            const Rational level(k);
            std::vector<RationalVector> hits;
            if (!a[1].is_zero())
                for (const Rational& x : {-w, w}) {
                    const Rational y = (level - a[0] * x) / a[1];
                    if (y.abs() <= w) hits.push_back({x, y});
                }
            if (!a[0].is_zero())
                for (const Rational& y : {-w, w}) {
                    const Rational x = (level - a[1] * y) / a[0];
                    if (x.abs() <= w) hits.push_back({x, y});
                }
            std::sort(hits.begin(), hits.end());
            hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
            if (hits.size() < 2) continue;
            append_line(out, frame, k == 0 ? "wall-root" : "wall", k == 0 ? 2 : 1, hits.front(),
                        hits.back());
        }
    }

    for (const auto& p : lattice_points_in_box(gamma, w))
        out << "<circle class=\"lattice-point\" cx=\"" << fixed3(frame.px(p[0])) << "\" cy=\""
            << fixed3(frame.py(p[1])) << "\" r=\"2\" fill=\"#1f5fbf\"/>\n";

    for (const auto& p : lattice_points_in_box(gamma0, w))
        out << "<circle class=\"coroot-point\" cx=\"" << fixed3(frame.px(p[0])) << "\" cy=\""
            << fixed3(frame.py(p[1])) << "\" r=\"4\" fill=\"#bf3030\"/>\n";

    const Rational arm(1, 5);
    for (const auto& m : marks) {
        out << "<path class=\"mark\" d=\""
            << "M " << fixed3(frame.px(m[0] - arm)) << " " << fixed3(frame.py(m[1] - arm))
            << " L " << fixed3(frame.px(m[0] + arm)) << " " << fixed3(frame.py(m[1] + arm))
            << " M " << fixed3(frame.px(m[0] - arm)) << " " << fixed3(frame.py(m[1] + arm))
            << " L " << fixed3(frame.px(m[0] + arm)) << " " << fixed3(frame.py(m[1] - arm))
            << "\" stroke=\"#0a7d32\" stroke-width=\"2\" fill=\"none\"/>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace geocount
