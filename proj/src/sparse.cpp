#include "roughlub/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "roughlub/errors.hpp"

namespace roughlub {

CsrMatrix CsrMatrix::from_triplets(std::size_t n, std::vector<Triplet> triplets) {
    for (const Triplet& t : triplets) {
        if (t.row >= n || t.col >= n) {
            throw InputError("triplet index out of range");
        }
    }
    std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    CsrMatrix m;
    m.n_ = n;
    m.row_ptr_.assign(n + 1, 0);
    for (std::size_t k = 0; k < triplets.size();) {
        const std::size_t row = triplets[k].row;
        const std::size_t col = triplets[k].col;
        double sum = 0.0;
        for (; k < triplets.size() && triplets[k].row == row && triplets[k].col == col; ++k) {
            sum += triplets[k].value;
        }
        m.cols_.push_back(col);
        m.values_.push_back(sum);
        ++m.row_ptr_[row + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        m.row_ptr_[i + 1] += m.row_ptr_[i];
    }
    return m;
}

double CsrMatrix::at(std::size_t i, std::size_t j) const {
    const auto first = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
    const auto last = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
    const auto it = std::lower_bound(first, last, j);
    if (it == last || *it != j) {
        return 0.0;
    }
    return values_[static_cast<std::size_t>(it - cols_.begin())];
}

std::vector<double> CsrMatrix::diagonal() const {
    std::vector<double> d(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        d[i] = at(i, i);
    }
    return d;
}

void CsrMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    for (std::size_t i = 0; i < n_; ++i) {
        double sum = 0.0;
        for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
            sum += values_[k] * x[cols_[k]];
        }
        y[i] = sum;
    }
}

bool CsrMatrix::is_symmetric(double tol) const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
            if (std::abs(values_[k] - at(cols_[k], i)) > tol) {
                return false;
            }
        }
    }
    return true;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

CgResult solve_pcg(const CsrMatrix& matrix, std::span<const double> rhs, std::span<double> x,
                   double tol, long max_iter) {
    const std::size_t n = matrix.size();
    if (rhs.size() != n || x.size() != n) {
        throw InputError("solve_pcg: dimension mismatch");
    }
    const double rhs_norm = norm2(rhs);
    if (rhs_norm == 0.0) {
        std::fill(x.begin(), x.end(), 0.0);
        return {0, 0.0};
    }

    std::vector<double> inv_diag = matrix.diagonal();
    for (double& d : inv_diag) {
        if (!(d > 0.0)) {
            throw InputError("solve_pcg: matrix has a non-positive diagonal entry");
        }
        d = 1.0 / d;
    }

    std::vector<double> r(n), z(n), p(n), q(n);
    auto true_residual = [&]() {
        matrix.multiply(x, r);
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = rhs[i] - r[i];
        }
        return norm2(r) / rhs_norm;
    };

    double relative = true_residual();
    if (relative <= tol) {
        return {0, relative};
    }
    auto restart = [&]() {
        for (std::size_t i = 0; i < n; ++i) {
            z[i] = inv_diag[i] * r[i];
        }
        p = z;
        return dot(r, z);
    };
    double rz = restart();

    int it = 0;
    while (it < max_iter) {
        ++it;
        matrix.multiply(p, q);
        const double alpha = rz / dot(p, q);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * q[i];
        }
        if (norm2(r) / rhs_norm <= tol) {
            // The recursive residual drifts; confirm against the true one.
            relative = true_residual();
            if (relative <= tol) {
                return {it, relative};
            }
            rz = restart();
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            z[i] = inv_diag[i] * r[i];
        }
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = z[i] + beta * p[i];
        }
    }
    relative = true_residual();
    if (relative <= tol) {
        return {it, relative};
    }
    throw ConvergenceError("conjugate gradients did not converge in " + std::to_string(max_iter) +
                               " iterations (relative residual " + std::to_string(relative) + ")",
                           it, relative);
}

}  // namespace roughlub
