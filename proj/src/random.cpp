#include "raywig/random.hpp"

#include <cmath>
#include <numbers>

namespace raywig {

std::uint64_t subseed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

StateVector random_state(Index dim, Rng& rng) {
    if (dim < 1) {
        throw DomainError("random_state needs dim >= 1");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (Index i = 0; i < dim; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v[i] = Complex(re, im);
    }
    const double n = v.norm();
    if (n == 0.0) {
        v[0] = Complex(1.0, 0.0);  // vanishing Gaussian draw, probability zero
        return StateVector(std::move(v));
    }
    return StateVector(v / n);
}

Ray random_ray(Index dim, Rng& rng, const Tolerances& tol) {
    return Ray(random_state(dim, rng), tol);
}

Complex random_phase(Rng& rng) {
    std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
    return std::polar(1.0, u(rng));
}

Matrix haar_unitary(Index dim, Rng& rng) {
    if (dim < 1) {
        throw DomainError("haar_unitary needs dim >= 1");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix z(dim, dim);
    for (Index j = 0; j < dim; ++j) {
        for (Index i = 0; i < dim; ++i) {
            z(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        const double m = std::abs(d);
        q.col(j) *= (m > 0.0) ? d / m : Complex(1.0, 0.0);
    }
    return q;
}

}  // namespace raywig
