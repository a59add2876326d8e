#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monochrome/graph.hpp"

namespace monochrome {

/// Adjacency spectrum, eigenvalues sorted descending.
struct Spectrum {
    std::vector<double> eigenvalues;
    double l2_norm = 0.0;

    /// lambda_i / ||lambda||_2 (all zeros for an edgeless graph).
    std::vector<double> normalized() const;
    double max_abs() const;
    /// ||lambda||_inf / ||lambda||_2, zero for an edgeless graph.
    double usn_ratio() const;
    /// Sum of lambda_i^g, the number of closed walks of length g.
    double trace_power(int g) const;
};

inline constexpr std::size_t kSpectrumMaxVertices = 4000;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffDiagonalTolerance = 1e-12;

/// Cyclic Jacobi rotations on the dense adjacency matrix.
/// Errors: SizeGateExceeded (n > 4000), ConvergenceFailure (sweep cap).
Spectrum eigenvalues(const Graph& g);

/// Eigenvalues of an arbitrary dense symmetric matrix (row-major, n*n),
/// optionally accumulating eigenvectors as columns of `vectors`.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, std::size_t n,
                                          std::vector<double>* vectors = nullptr);

struct CycleBound {
    /// (2m)^{g/2} / (2g).
    double extremal = 0.0;
    /// tr(A^g) / (2g), present when a spectrum was supplied.
    std::optional<double> trace;
};

CycleBound cycle_upper_bound(const Graph& g, int length, const Spectrum* spectrum = nullptr);

}  // namespace monochrome
