#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace roughlub {

/// Square matrix in compressed sparse row form with sorted column indices.
class CsrMatrix {
public:
    struct Triplet {
        std::size_t row;
        std::size_t col;
        double value;
    };

    CsrMatrix() = default;
    /// Sums duplicate entries. The result depends only on the multiset of
    /// triplets and their order, so assembly is reproducible.
    static CsrMatrix from_triplets(std::size_t n, std::vector<Triplet> triplets);

    std::size_t size() const noexcept { return n_; }
    std::size_t nonzeros() const noexcept { return values_.size(); }

    /// Entry (i, j); zero if not stored.
    double at(std::size_t i, std::size_t j) const;
    std::vector<double> diagonal() const;
    void multiply(std::span<const double> x, std::span<double> y) const;
    bool is_symmetric(double tol = 0.0) const;

    std::span<const std::size_t> row_offsets() const noexcept { return row_ptr_; }
    std::span<const std::size_t> column_indices() const noexcept { return cols_; }
    std::span<const double> values() const noexcept { return values_; }

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<std::size_t> cols_;
    std::vector<double> values_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

struct CgResult {
    int iterations = 0;
    double relative_residual = 0.0;
};

/// Jacobi-preconditioned conjugate gradients for an SPD matrix, starting from x.
/// Stops when the true residual satisfies |Mx - b| <= tol |b|; for b = 0 the
/// solution is set to zero. Throws ConvergenceError after max_iter iterations.
CgResult solve_pcg(const CsrMatrix& matrix, std::span<const double> rhs, std::span<double> x,
                   double tol, long max_iter);

}  // namespace roughlub
