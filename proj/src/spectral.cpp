#include "monochrome/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "monochrome/errors.hpp"

namespace monochrome {

std::vector<double> Spectrum::normalized() const {
    std::vector<double> out(eigenvalues.size(), 0.0);
    if (l2_norm == 0.0) return out;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = eigenvalues[i] / l2_norm;
    return out;
}

double Spectrum::max_abs() const {
    double best = 0.0;
    for (double x : eigenvalues) best = std::max(best, std::abs(x));
    return best;
}

double Spectrum::usn_ratio() const { return l2_norm == 0.0 ? 0.0 : max_abs() / l2_norm; }

double Spectrum::trace_power(int g) const {
    double total = 0.0;
    for (double x : eigenvalues) total += std::pow(x, g);
    return total;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n, std::vector<double>* vectors) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    if (vectors) {
        vectors->assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) (*vectors)[i * n + i] = 1.0;
    }
    auto off_diagonal_norm = [&] {
        double sum = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) sum += at(p, q) * at(p, q);
        return std::sqrt(2.0 * sum);
    };

    bool converged = false;
    for (int sweep = 1; sweep <= kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm() < kJacobiOffDiagonalTolerance) {
            converged = true;
            break;
        }
        double abs_sum = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) abs_sum += std::abs(at(p, q));
        // Early sweeps only rotate the larger elements.
        const double threshold = sweep < 4 ? 0.2 * abs_sum / static_cast<double>(n * n) : 0.0;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                const double scaled = 100.0 * std::abs(apq);
                if (sweep > 4 && std::abs(at(p, p)) + scaled == std::abs(at(p, p)) &&
                    std::abs(at(q, q)) + scaled == std::abs(at(q, q))) {
                    at(p, q) = at(q, p) = 0.0;
                    continue;
                }
                if (std::abs(apq) <= threshold || apq == 0.0) continue;

                const double diff = at(q, q) - at(p, p);
                double t;
                if (std::abs(diff) + scaled == std::abs(diff)) {
                    t = apq / diff;
                } else {
                    const double theta = 0.5 * diff / apq;
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = at(r, p);
                    const double arq = at(r, q);
                    at(r, p) = at(p, r) = arp - s * (arq + arp * tau);
                    at(r, q) = at(q, r) = arq + s * (arp - arq * tau);
                }
                if (vectors) {
                    auto& v = *vectors;
                    for (std::size_t r = 0; r < n; ++r) {
                        const double vrp = v[r * n + p];
                        const double vrq = v[r * n + q];
                        v[r * n + p] = vrp - s * (vrq + vrp * tau);
                        v[r * n + q] = vrq + s * (vrp - vrq * tau);
                    }
                }
            }
        }
    }
    if (!converged && off_diagonal_norm() >= kJacobiOffDiagonalTolerance) {
        fail(ErrorCode::ConvergenceFailure,
             "Jacobi iteration did not converge within " + std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = at(i, i);
    return values;
}

Spectrum eigenvalues(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kSpectrumMaxVertices) {
        fail(ErrorCode::SizeGateExceeded, "dense eigendecomposition limited to " +
                                              std::to_string(kSpectrumMaxVertices) + " vertices, got " +
                                              std::to_string(n));
    }
    Spectrum s;
    s.eigenvalues = symmetric_eigenvalues(adjacency_matrix(g), n);
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
    double sq = 0.0;
    for (double x : s.eigenvalues) sq += x * x;
    s.l2_norm = std::sqrt(sq);
    return s;
}

CycleBound cycle_upper_bound(const Graph& g, int length, const Spectrum* spectrum) {
    if (length < 3) fail(ErrorCode::UnsupportedLength, "cycle bound needs length >= 3");
    CycleBound bound;
    const double two_m = 2.0 * static_cast<double>(g.edge_count());
    bound.extremal = std::pow(two_m, 0.5 * length) / (2.0 * length);
    if (spectrum) bound.trace = spectrum->trace_power(length) / (2.0 * length);
    return bound;
}

}  // namespace monochrome
