#include <gtest/gtest.h>

#include <vector>

#include "roughlub/errors.hpp"
#include "roughlub/sparse.hpp"

using namespace roughlub;

namespace {

// 1D Laplacian stencil (2, -1) of size n.
CsrMatrix laplacian(std::size_t n) {
    std::vector<CsrMatrix::Triplet> t;
    for (std::size_t i = 0; i < n; ++i) {
        t.push_back({i, i, 2.0});
        if (i + 1 < n) {
            t.push_back({i, i + 1, -1.0});
            t.push_back({i + 1, i, -1.0});
        }
    }
    return CsrMatrix::from_triplets(n, t);
}

}  // namespace

TEST(Csr, DuplicateTripletsAreSummed) {
    const auto m = CsrMatrix::from_triplets(2, {{0, 0, 1.0}, {1, 0, 2.0}, {0, 0, 3.0}, {0, 1, 2.0}});
    EXPECT_EQ(m.nonzeros(), 3u);
    EXPECT_EQ(m.at(0, 0), 4.0);
    EXPECT_EQ(m.at(1, 1), 0.0);
    EXPECT_TRUE(m.is_symmetric());
    EXPECT_THROW(CsrMatrix::from_triplets(2, {{2, 0, 1.0}}), InputError);
}

TEST(Csr, Multiply) {
    const auto m = laplacian(3);
    std::vector<double> x{1.0, 2.0, 3.0}, y(3);
    m.multiply(x, y);
    EXPECT_EQ(y, (std::vector<double>{0.0, 0.0, 4.0}));
}

TEST(Pcg, ZeroRhsGivesZeroSolutionWithoutIterations) {
    const auto m = laplacian(5);
    std::vector<double> b(5, 0.0), x(5, 3.0);
    const auto r = solve_pcg(m, b, x, 1e-12, 100);
    EXPECT_EQ(r.iterations, 0);
    EXPECT_EQ(x, std::vector<double>(5, 0.0));
}

TEST(Pcg, IdentitySystemReturnsRhs) {
    const auto m = CsrMatrix::from_triplets(3, {{0, 0, 1.0}, {1, 1, 1.0}, {2, 2, 1.0}});
    std::vector<double> b{1.0, -2.0, 0.5}, x(3, 0.0);
    solve_pcg(m, b, x, 1e-14, 10);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(x[i], b[i], 1e-15);
    }
}

TEST(Pcg, SolvesLaplacianToTolerance) {
    const std::size_t n = 200;
    const auto m = laplacian(n);
    std::vector<double> b(n, 1.0), x(n, 0.0), r(n);
    const auto res = solve_pcg(m, b, x, 1e-12, 1000);
    m.multiply(x, r);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] -= b[i];
    }
    EXPECT_LE(norm2(r) / norm2(b), 1e-12);
    EXPECT_LE(res.relative_residual, 1e-12);
    // Exact solution of the (2,-1) stencil with unit load: x_i = (i+1)(n-i)/2.
    EXPECT_NEAR(x[0], n / 2.0, 1e-6);
}

TEST(Pcg, ReportsNonConvergence) {
    const auto m = laplacian(100);
    std::vector<double> b(100, 1.0), x(100, 0.0);
    EXPECT_THROW(solve_pcg(m, b, x, 1e-14, 3), ConvergenceError);
}
