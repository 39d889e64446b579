// Independent reference computations used only by the tests. Nothing here
// calls the Jacobi solver, the whitening route or the KNN kernel.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "cidr/dataset.hpp"
#include "cidr/matrix.hpp"

namespace oracle {

using cidr::Matrix;

inline double det3(const Matrix& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

/// Real roots of x^2 + b x + c, descending; stable form.
inline std::vector<double> monic_quadratic_roots(double b, double c) {
    double disc = b * b - 4.0 * c;
    disc = std::max(disc, 0.0);
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    std::vector<double> r;
    if (q == 0.0) {
        r = {0.0, 0.0};
    } else {
        r = {q, c / q};
    }
    std::sort(r.rbegin(), r.rend());
    return r;
}

/// Three real roots of x^3 + a x^2 + b x + c (trigonometric method), each
/// polished by Newton on the cubic. Descending.
inline std::vector<double> monic_cubic_roots(double a, double b, double c) {
    const double p = b - a * a / 3.0;
    const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    std::vector<double> roots(3);
    if (std::abs(p) < 1e-300) {
        const double t = std::cbrt(-q);
        roots = {t - a / 3.0, t - a / 3.0, t - a / 3.0};
    } else {
        const double m = 2.0 * std::sqrt(std::max(-p / 3.0, 0.0));
        double arg = m == 0.0 ? 0.0 : 3.0 * q / (p * m);
        arg = std::clamp(arg, -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) roots[k] = m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) - a / 3.0;
    }
    for (double& x : roots) {
        for (int it = 0; it < 4; ++it) {
            const double f = ((x + a) * x + b) * x + c;
            const double df = (3.0 * x + 2.0 * a) * x + b;
            if (df == 0.0) break;
            const double step = f / df;
            if (!std::isfinite(step) || std::abs(step) > 1e-6 * (1.0 + std::abs(x))) break;
            x -= step;
        }
    }
    std::sort(roots.rbegin(), roots.rend());
    return roots;
}

/// Eigenvalues of a 2x2 or 3x3 matrix from its characteristic polynomial.
inline std::vector<double> characteristic_roots(const Matrix& a) {
    if (a.rows() == 2) {
        return monic_quadratic_roots(-(a(0, 0) + a(1, 1)), a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
    }
    const double tr = a(0, 0) + a(1, 1) + a(2, 2);
    const double minors = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) + a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0) +
                          a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
    return monic_cubic_roots(-tr, minors, -det3(a));
}

/// Explicit adjugate inverse of a 2x2 or 3x3 matrix.
inline Matrix adjugate_inverse(const Matrix& m) {
    if (m.rows() == 2) {
        const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        return Matrix{{m(1, 1) / det, -m(0, 1) / det}, {-m(1, 0) / det, m(0, 0) / det}};
    }
    const double det = det3(m);
    Matrix inv(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            inv(i, j) = (m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)) / det;
        }
    }
    return inv;
}

/// Roots of det(b - lambda m) = 0 via the non-symmetric product m^-1 b.
inline std::vector<double> pencil_roots(const Matrix& b, const Matrix& m) {
    const Matrix inv = adjugate_inverse(m);
    const std::size_t n = b.rows();
    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) r(i, j) += inv(i, k) * b(k, j);
        }
    }
    return characteristic_roots(r);
}

// --------------------------------------------------------------- generators

inline Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = u(rng);
    }
    return m;
}

inline Matrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
    Matrix m = random_matrix(n, n, rng);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
    }
    return m;
}

/// g g^T + shift * I for a random square g.
inline Matrix random_spd(std::size_t n, std::mt19937_64& rng, double shift = 0.1) {
    const Matrix g = random_matrix(n, n, rng);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) m(i, j) += g(i, k) * g(j, k);
        }
        m(i, i) += shift;
    }
    return m;
}

/// Gaussian blobs: `per_class` points per class around random centres.
inline cidr::Dataset random_dataset(std::size_t classes, std::size_t per_class, std::size_t dim,
                                    std::mt19937_64& rng, double spread = 1.0, double centre_scale = 2.0) {
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> centre(-centre_scale, centre_scale);
    Matrix x(classes * per_class, dim);
    std::vector<cidr::Label> y(classes * per_class);
    for (std::size_t k = 0; k < classes; ++k) {
        std::vector<double> c(dim);
        for (double& v : c) v = centre(rng);
        std::vector<double> axis_scale(dim);
        for (double& v : axis_scale) v = spread * (0.3 + std::abs(normal(rng)));
        for (std::size_t i = 0; i < per_class; ++i) {
            for (std::size_t d = 0; d < dim; ++d) x(k * per_class + i, d) = c[d] + axis_scale[d] * normal(rng);
            y[k * per_class + i] = k;
        }
    }
    return cidr::Dataset(std::move(x), std::move(y), classes);
}

// ---------------------------------------------------------- scatter, naive

inline std::vector<double> naive_mean(const cidr::Dataset& d, cidr::Label k) {
    std::vector<double> m(d.dim(), 0.0);
    double n = 0;
    for (std::size_t r = 0; r < d.size(); ++r) {
        if (d.labels()[r] != k) continue;
        for (std::size_t c = 0; c < d.dim(); ++c) m[c] += d.features()(r, c);
        n += 1;
    }
    for (double& v : m) v /= n;
    return m;
}

/// Full K x K double loop over c(i,j) * pairwise(i,j), each pairwise term
/// rebuilt from scratch.
inline Matrix naive_cost_weighted(const cidr::Dataset& d, const Matrix& costs) {
    const std::size_t D = d.dim();
    Matrix total(D, D);
    for (std::size_t i = 0; i < d.class_count(); ++i) {
        for (std::size_t j = 0; j < d.class_count(); ++j) {
            if (i == j) continue;
            const auto mi = naive_mean(d, i);
            const auto mj = naive_mean(d, j);
            std::vector<double> mid(D);
            for (std::size_t c = 0; c < D; ++c) mid[c] = (mi[c] + mj[c]) / 2.0;
            double ni = 0, nj = 0;
            Matrix si(D, D), sj(D, D);
            for (std::size_t r = 0; r < d.size(); ++r) {
                const auto lab = d.labels()[r];
                if (lab != i && lab != j) continue;
                Matrix& s = lab == i ? si : sj;
                (lab == i ? ni : nj) += 1;
                for (std::size_t a = 0; a < D; ++a) {
                    for (std::size_t b = 0; b < D; ++b) {
                        s(a, b) += (d.features()(r, a) - mid[a]) * (d.features()(r, b) - mid[b]);
                    }
                }
            }
            for (std::size_t a = 0; a < D; ++a) {
                for (std::size_t b = 0; b < D; ++b) {
                    total(a, b) += costs(i, j) * (ni * si(a, b) + nj * sj(a, b)) / (ni + nj);
                }
            }
        }
    }
    return total;
}

/// max over an n-point grid of unit-circle directions of the Rayleigh
/// quotient (u' numer u) / (u' denom u), D = 2 only.
inline double grid_max_quotient(const Matrix& numer, const Matrix& denom, int points = 3600,
                                std::array<double, 2>* argmax = nullptr) {
    double best = -1.0;
    for (int i = 0; i < points; ++i) {
        const double t = std::numbers::pi * i / points;  // half circle: u and -u agree
        const double u0 = std::cos(t), u1 = std::sin(t);
        const double top = numer(0, 0) * u0 * u0 + 2 * numer(0, 1) * u0 * u1 + numer(1, 1) * u1 * u1;
        const double bottom = denom(0, 0) * u0 * u0 + 2 * denom(0, 1) * u0 * u1 + denom(1, 1) * u1 * u1;
        const double q = top / bottom;
        if (q > best) {
            best = q;
            if (argmax) *argmax = {u0, u1};
        }
    }
    return best;
}

// ------------------------------------------------------------------- knn

/// Sort every training point by (distance, index), vote among the first k,
/// smallest label wins ties.
inline cidr::Label brute_force_knn(const Matrix& train, std::span<const cidr::Label> labels, std::size_t k,
                                   std::size_t classes, std::span<const double> query) {
    std::vector<std::pair<double, std::size_t>> all;
    for (std::size_t i = 0; i < train.rows(); ++i) {
        double s = 0.0;
        for (std::size_t c = 0; c < train.cols(); ++c) {
            const double diff = train(i, c) - query[c];
            s += diff * diff;
        }
        all.emplace_back(s, i);
    }
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> votes(classes, 0);
    for (std::size_t i = 0; i < k; ++i) ++votes[labels[all[i].second]];
    cidr::Label best = 0;
    for (cidr::Label c = 1; c < classes; ++c) {
        if (votes[c] > votes[best]) best = c;
    }
    return best;
}

}  // namespace oracle
