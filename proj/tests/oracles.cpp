// Copyright 2026 The covpovm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace covpovm::oracle {

Eigen::MatrixXcd series_exp(const Eigen::MatrixXcd& a) {
    const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const Eigen::MatrixXcd scaled = a / std::ldexp(1.0, squarings);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
    Eigen::MatrixXcd sum = term;
    for (int k = 1; k <= 30; ++k) {
        term = term * scaled / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) sum = (sum * sum).eval();
    return sum;
}

Eigen::MatrixXcd displacement_generator(std::size_t n, double p, double q) {
    // i(pQ + qP) = alpha a^dag - conj(alpha) a,  alpha = (ip - q)/sqrt2
    const std::complex<double> alpha(-q / std::sqrt(2.0), p / std::sqrt(2.0));
    const auto dim = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index k = 1; k < dim; ++k) {
        const double amp = std::sqrt(static_cast<double>(k));
        g(k, k - 1) += alpha * amp;              // a^dag |k-1> = sqrt(k) |k>
        g(k - 1, k) += -std::conj(alpha) * amp;  // a |k> = sqrt(k) |k-1>
    }
    return g;
}

Eigen::MatrixXcd series_displacement(std::size_t n, double p, double q) {
    return series_exp(displacement_generator(n, p, q));
}

double dense_trapezoid(const std::function<double(double, double)>& f, double p_lo, double p_hi, double q_lo,
                       double q_hi, std::size_t n) {
    const double hp = (p_hi - p_lo) / static_cast<double>(n - 1);
    const double hq = (q_hi - q_lo) / static_cast<double>(n - 1);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double wp = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double wq = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
            total += wp * wq * f(p_lo + hp * i, q_lo + hq * j);
        }
    }
    return total * hp * hq;
}

double fock_husimi(std::size_t m, double p, double q) {
    const double s = (p * p + q * q) / 2.0;
    return std::exp(-s) * std::pow(s, static_cast<double>(m)) / std::tgamma(m + 1.0) / (2.0 * std::numbers::pi);
}

double fock_husimi_disk(std::size_t m, double r) {
    // P(m+1, x) = 1 - e^{-x} sum_{k<=m} x^k / k!
    const double x = r * r / 2.0;
    double term = 1.0;
    double partial = 1.0;
    for (std::size_t k = 1; k <= m; ++k) {
        term *= x / static_cast<double>(k);
        partial += term;
    }
    return 1.0 - std::exp(-x) * partial;
}

}  // namespace covpovm::oracle
