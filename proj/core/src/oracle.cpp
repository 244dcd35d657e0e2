#include "geocount/oracle.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "geocount/errors.hpp"
#include "geocount/rational.hpp"

namespace geocount::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

enum class Model { Sphere, ProjectivePlane, Grassmannian, OrientedGrassmannian };

Model model_of(const std::string& tag) {
    if (tag == "S2") return Model::Sphere;
    if (tag == "RP2") return Model::ProjectivePlane;
    if (tag == "Gr2R4") return Model::Grassmannian;
    if (tag == "Gr2R4+") return Model::OrientedGrassmannian;
    throw NotSupported("no numeric model for space '" + tag + "'");
}

// Dense 4x4 matrices, row major.  Enough for every model here; the
// grassmannian ambient orthogonal group is SO(4).
using Mat4 = std::array<double, 16>;

Mat4 mat4_zero() { return Mat4{}; }

Mat4 mat4_identity() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[static_cast<std::size_t>(5 * i)] = 1.0;
    return m;
}

Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
    Mat4 c{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const double aik = a[static_cast<std::size_t>(4 * i + k)];
            if (aik == 0.0) continue;
            for (int j = 0; j < 4; ++j)
                c[static_cast<std::size_t>(4 * i + j)] += aik * b[static_cast<std::size_t>(4 * k + j)];
        }
    return c;
}

// exp(X) by scaling and squaring with a truncated series on the scaled
// matrix.  The inputs here are bounded (entries a few multiples of pi), so
// 18 series terms after scaling below 1/2 leave the error near roundoff.
Mat4 mat4_exp(Mat4 x) {
    double norm = 0.0;
    for (int i = 0; i < 4; ++i) {
        double row = 0.0;
        for (int j = 0; j < 4; ++j) row += std::abs(x[static_cast<std::size_t>(4 * i + j)]);
        norm = std::max(norm, row);
    }
    int squarings = 0;
    while (norm > 0.5) {
        norm *= 0.5;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    for (double& e : x) e *= scale;

    Mat4 result = mat4_identity();
    Mat4 term = mat4_identity();
    for (int k = 1; k <= 18; ++k) {
        term = mat4_mul(term, x);
        const double inv = 1.0 / static_cast<double>(k);
        for (std::size_t i = 0; i < 16; ++i) {
            term[i] *= inv;
            result[i] += term[i];
        }
    }
    for (int s = 0; s < squarings; ++s) result = mat4_mul(result, result);
    return result;
}

// Orthogonal matrix moving the base plane span(e1,e2) along the tangent
// direction B (a 2x2 block, in units where 1 is an arc of pi).
Mat4 frame_of(const std::array<double, 4>& b) {
    Mat4 x = mat4_zero();
    // Upper right block -B^T, lower left block B; antisymmetric by design.
    x[2] = -kPi * b[0];
    x[3] = -kPi * b[2];
    x[6] = -kPi * b[1];
    x[7] = -kPi * b[3];
    x[8] = kPi * b[0];
    x[9] = kPi * b[1];
    x[12] = kPi * b[2];
    x[13] = kPi * b[3];
    return mat4_exp(x);
}

std::vector<double> sphere_point(const std::vector<double>& x) {
    const double r = std::hypot(x[0], x[1]);
    const double rho = kPi * r;
    if (r < 1e-300) return {0.0, 0.0, 1.0};
    const double s = std::sin(rho) / r;
    return {s * x[0], s * x[1], std::cos(rho)};
}

// The grassmannian point is the orthogonal projection onto the moved
// plane, flattened row major: rank one sums q1 q1^T + q2 q2^T over the
// moved frame columns.
std::vector<double> grassmannian_point(const std::vector<double>& x) {
    const Mat4 e = frame_of({x[0], x[1], x[2], x[3]});
    std::vector<double> p(16, 0.0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double v = 0.0;
            for (int c = 0; c < 2; ++c)
                v += e[static_cast<std::size_t>(4 * i + c)] * e[static_cast<std::size_t>(4 * j + c)];
            p[static_cast<std::size_t>(4 * i + j)] = v;
        }
    return p;
}

// The oriented cover embeds as the unit decomposable 2-vector q1 ^ q2,
// with the six coordinates ordered (01, 02, 03, 12, 13, 23).
std::vector<double> oriented_point(const std::vector<double>& x) {
    const Mat4 e = frame_of({x[0], x[1], x[2], x[3]});
    std::array<double, 4> q1{};
    std::array<double, 4> q2{};
    for (int i = 0; i < 4; ++i) {
        q1[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(4 * i)];
        q2[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(4 * i + 1)];
    }
    std::vector<double> w;
    w.reserve(6);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            w.push_back(q1[static_cast<std::size_t>(i)] * q2[static_cast<std::size_t>(j)] -
                        q1[static_cast<std::size_t>(j)] * q2[static_cast<std::size_t>(i)]);
    return w;
}

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// Root values of the flat vector, as exact rationals, repeated per
// multiplicity.  These are the linear functionals whose integer levels mark
// the singular set of each model.
std::vector<Rational> root_values(Model model, const RationalVector& h) {
    switch (model) {
        case Model::Sphere:
        case Model::ProjectivePlane:
            return {h.at(0)};
        case Model::Grassmannian:
        case Model::OrientedGrassmannian:
            return {h.at(0) - h.at(1), h.at(0) + h.at(1)};
    }
    throw InternalInvariantViolation("unreachable model");
}

// Eigenvalues of a small symmetric matrix by cyclic Jacobi rotations.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a[p * n + q]));
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    return eig;
}

std::vector<double> embed_flat(Model model, const RationalVector& h) {
    switch (model) {
        case Model::Sphere:
        case Model::ProjectivePlane:
            if (h.size() != 1) throw InvalidInput("flat vector must have 1 coordinate");
            return {h[0].to_double(), 0.0};
        case Model::Grassmannian:
        case Model::OrientedGrassmannian:
            if (h.size() != 2) throw InvalidInput("flat vector must have 2 coordinates");
            // Diagonal torus block diag(h1, h2) in tangent coordinates
            // (b11, b12, b21, b22).
            return {h[0].to_double(), 0.0, 0.0, h[1].to_double()};
    }
    throw InternalInvariantViolation("unreachable model");
}

// Nullity of the differential by finite differences: central difference
// jacobian of the tangent embedding, then singular values through the
// Gram matrix.
std::size_t jacobian_nullity(const std::string& tag, const std::vector<double>& x) {
    const std::size_t d = x.size();
    const std::size_t m = ambient_dimension(tag);
    std::vector<std::vector<double>> cols(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<double> hi = x;
        std::vector<double> lo = x;
        hi[j] += kFiniteDifferenceStep;
        lo[j] -= kFiniteDifferenceStep;
        const std::vector<double> fhi = numeric_exp_tangent(tag, hi);
        const std::vector<double> flo = numeric_exp_tangent(tag, lo);
        cols[j].resize(m);
        for (std::size_t i = 0; i < m; ++i)
            cols[j][i] = (fhi[i] - flo[i]) / (2.0 * kFiniteDifferenceStep);
    }
    std::vector<double> gram(d * d, 0.0);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            double s = 0.0;
            for (std::size_t i = 0; i < m; ++i) s += cols[p][i] * cols[q][i];
            gram[p * d + q] = s;
        }
    const std::vector<double> eig = symmetric_eigenvalues(std::move(gram), d);
    std::size_t nullity = 0;
    for (const double lambda : eig) {
        const double sigma = std::sqrt(std::max(lambda, 0.0));
        if (sigma <= kSingularValueTolerance) ++nullity;
    }
    return nullity;
}

}  // namespace

bool supports(const std::string& tag) {
    return tag == "S2" || tag == "RP2" || tag == "Gr2R4" || tag == "Gr2R4+";
}

std::size_t ambient_dimension(const std::string& tag) {
    switch (model_of(tag)) {
        case Model::Sphere:
        case Model::ProjectivePlane:
            return 3;
        case Model::Grassmannian:
            return 16;
        case Model::OrientedGrassmannian:
            return 6;
    }
    throw InternalInvariantViolation("unreachable model");
}

std::size_t tangent_dimension(const std::string& tag) {
    switch (model_of(tag)) {
        case Model::Sphere:
        case Model::ProjectivePlane:
            return 2;
        case Model::Grassmannian:
        case Model::OrientedGrassmannian:
            return 4;
    }
    throw InternalInvariantViolation("unreachable model");
}

std::vector<double> numeric_exp_tangent(const std::string& tag, const std::vector<double>& x) {
    const Model model = model_of(tag);
    if (x.size() != tangent_dimension(tag))
        throw InvalidInput("tangent vector has the wrong number of coordinates");
    switch (model) {
        case Model::Sphere:
        case Model::ProjectivePlane:
            return sphere_point(x);
        case Model::Grassmannian:
            return grassmannian_point(x);
        case Model::OrientedGrassmannian:
            return oriented_point(x);
    }
    throw InternalInvariantViolation("unreachable model");
}

std::vector<double> numeric_exp(const std::string& tag, const RationalVector& h) {
    return numeric_exp_tangent(tag, embed_flat(model_of(tag), h));
}

double numeric_distance(const std::string& tag, const std::vector<double>& a,
                        const std::vector<double>& b) {
    const Model model = model_of(tag);
    if (a.size() != ambient_dimension(tag) || b.size() != a.size())
        throw InvalidInput("embedded points have the wrong number of coordinates");
    if (model == Model::ProjectivePlane) {
        std::vector<double> nb(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) nb[i] = -b[i];
        return std::min(euclidean(a, b), euclidean(a, nb));
    }
    return euclidean(a, b);
}

std::size_t numeric_index(const std::string& tag, const RationalVector& h) {
    const Model model = model_of(tag);
    std::size_t trig_count = 0;
    for (const Rational& value : root_values(model, h)) {
        if (value.is_zero()) continue;
        if (std::abs(std::sin(kPi * value.to_double())) <= 1e-9) ++trig_count;
    }
    const std::size_t fd_count = jacobian_nullity(tag, embed_flat(model, h));
    if (trig_count != fd_count)
        throw InternalInvariantViolation(
            "numeric index mismatch: trigonometric count " + std::to_string(trig_count) +
            " vs jacobian nullity " + std::to_string(fd_count));
    return trig_count;
}

}  // namespace geocount::oracle
