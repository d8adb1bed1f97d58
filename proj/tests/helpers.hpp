#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "tubal/multiway.hpp"
#include "tubal/rng.hpp"

namespace th {

using tubal::Complex;
using tubal::Index;

inline Eigen::VectorXcd gauss_vec(tubal::Rng& rng, Index n, bool complex_entries = false) {
    Eigen::VectorXcd v(n);
    for (Index i = 0; i < n; ++i)
        v(i) = complex_entries ? Complex(rng.gaussian(), rng.gaussian()) : Complex(rng.gaussian());
    return v;
}

inline tubal::TubalMatrix rand_mat(tubal::Rng& rng, Index rows, Index cols,
                                   const tubal::TransformPtr& t, bool complex_entries = false) {
    return tubal::TubalMatrix(rows, cols, t, gauss_vec(rng, rows * cols * t->p(), complex_entries),
                              !complex_entries);
}

inline tubal::TubalTensor rand_ten(tubal::Rng& rng, std::vector<Index> dims,
                                   const tubal::TransformPtr& t, bool complex_entries = false) {
    Index n = t->p();
    for (Index d : dims) n *= d;
    return tubal::TubalTensor(std::move(dims), t, gauss_vec(rng, n, complex_entries),
                              !complex_entries);
}

/// O(p^2) DFT by direct summation — the transform oracle.
inline Eigen::VectorXcd oracle_dft(const Eigen::VectorXcd& x) {
    const Index p = x.size();
    Eigen::VectorXcd y = Eigen::VectorXcd::Zero(p);
    for (Index k = 0; k < p; ++k)
        for (Index j = 0; j < p; ++j)
            y(k) += x(j) * std::polar(1.0, -2.0 * M_PI * static_cast<double>(k * j) / p);
    return y;
}

/// Circular convolution c_k = sum_i a_i b_{(k-i) mod p} — the t-product
/// oracle for tubal scalars under the DFT.
inline Eigen::VectorXcd oracle_conv(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    const Index p = a.size();
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(p);
    for (Index k = 0; k < p; ++k)
        for (Index i = 0; i < p; ++i) c(k) += a(i) * b(((k - i) % p + p) % p);
    return c;
}

/// Eq. (2.1) entrywise t-product oracle: C(i,k) = sum_j A(i,j) * B(j,k),
/// with the scalar products evaluated by circular convolution (DFT case).
/// Built only from oracle_conv, independent of the library's product path.
inline tubal::TubalMatrix oracle_tproduct(const tubal::TubalMatrix& a,
                                          const tubal::TubalMatrix& b) {
    tubal::TubalMatrix c(a.rows(), b.cols(), a.transform(), false);
    const Index p = a.p();
    for (Index i = 0; i < a.rows(); ++i)
        for (Index k = 0; k < b.cols(); ++k) {
            Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(p);
            for (Index j = 0; j < a.cols(); ++j)
                acc += oracle_conv(a.entry(i, j).values(), b.entry(j, k).values());
            for (Index s = 0; s < p; ++s) c.slice(s)(i, k) = acc(s);
        }
    return c;
}

inline double rel_err(double err, double scale) { return err / std::max(scale, 1e-300); }

} // namespace th
