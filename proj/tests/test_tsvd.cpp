#include <doctest.h>

#include <Eigen/SVD>

#include "helpers.hpp"
#include "tubal/errors.hpp"
#include "tubal/tsvd.hpp"

using namespace tubal;

namespace {
TubalMatrix reconstruct(const TsvdFactors& f) {
    return tproduct(tproduct(f.U, f.S), hermitian_transpose(f.V));
}
} // namespace

TEST_CASE("p = 1 reduces to the ordinary matrix SVD") {
    auto t = Transform::dft(1);
    Rng rng(31);
    TubalMatrix a = th::rand_mat(rng, 4, 3, t);
    TsvdFactors f = tsvd(a);
    Eigen::MatrixXcd m(4, 3);
    m = a.slice(0);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    for (Index i = 0; i < 3; ++i)
        CHECK(f.slice_norms[i] == doctest::Approx(svd.singularValues()(i)).epsilon(1e-10));
    CHECK(frobenius_norm(a - reconstruct(f)) < 1e-10 * frobenius_norm(a));
}

TEST_CASE("identity input") {
    auto t = Transform::dft(3);
    TubalMatrix eye = identity_tubal_matrix(4, t);
    TsvdFactors f = tsvd(eye);
    for (double s : f.slice_norms) CHECK(s == doctest::Approx(1.0));
    TubalMatrix uv = tproduct(f.U, hermitian_transpose(f.V));
    CHECK(frobenius_norm(uv - eye) < 1e-10);
}

TEST_CASE("random inputs: reconstruction, unitarity, oracle singular values, ordering") {
    Rng rng(32);
    for (int trial = 0; trial < 8; ++trial) {
        const Index p = 2 + trial % 4;
        auto t = Transform::dft(p);
        const bool cx = trial % 2 == 1;
        TubalMatrix a = th::rand_mat(rng, 3 + trial % 3, 2 + trial % 4, t, cx);
        TsvdFactors f = tsvd(a);

        CHECK(frobenius_norm(a - reconstruct(f)) < 1e-10 * frobenius_norm(a));
        CHECK(is_unitary(f.U));
        CHECK(is_unitary(f.V));
        for (size_t i = 1; i < f.slice_norms.size(); ++i)
            CHECK(f.slice_norms[i] <= f.slice_norms[i - 1] + 1e-12);

        // independent oracle: JacobiSVD of each DFT slice
        TubalMatrix a_hat = a;
        a_hat.transform_forward();
        TubalMatrix s_hat = f.S;
        s_hat.transform_forward();
        for (Index s = 0; s < p; ++s) {
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a_hat.slice(s));
            for (Index i = 0; i < svd.singularValues().size(); ++i)
                CHECK(std::abs(s_hat.slice(s)(i, i).real() - svd.singularValues()(i)) < 1e-10);
        }
    }
}

TEST_CASE("real inputs produce real factors, deterministically") {
    auto t = Transform::dft(4);
    Rng rng(33);
    TubalMatrix a = th::rand_mat(rng, 5, 4, t);
    TsvdFactors f1 = tsvd(a);
    TsvdFactors f2 = tsvd(a);
    CHECK(f1.U.is_real());
    CHECK(f1.S.is_real());
    CHECK(f1.V.is_real());
    CHECK((f1.U.data() - f2.U.data()).norm() == 0.0);
    CHECK((f1.S.data() - f2.S.data()).norm() == 0.0);
    CHECK((f1.V.data() - f2.V.data()).norm() == 0.0);
}

TEST_CASE("t-rank") {
    auto t = Transform::dft(3);
    TubalMatrix zero(4, 4, t);
    CHECK(t_rank(tsvd(zero)) == 0);
    CHECK(t_rank(tsvd(identity_tubal_matrix(4, t))) == 4);

    // synthesize a t-rank-2 matrix from two singular triplets
    Rng rng(34);
    TsvdFactors f = tsvd(th::rand_mat(rng, 4, 3, t));
    TubalMatrix s2(4, 3, t, Eigen::VectorXcd::Zero(4 * 3 * 3), true);
    TubalMatrix s_full = f.S;
    for (Index s = 0; s < 3; ++s)
        for (Index i = 0; i < 2; ++i) s2.slice(s)(i, i) = s_full.slice(s)(i, i);
    TubalMatrix a2 = tproduct(tproduct(f.U, s2), hermitian_transpose(f.V));
    CHECK(t_rank(tsvd(a2)) == 2);
}

TEST_CASE("multi-rank") {
    auto t = Transform::dft(3);
    TubalMatrix zero(4, 4, t);
    CHECK(multi_rank(zero) == std::vector<int>({0, 0, 0}));
    CHECK(multi_rank(identity_tubal_matrix(4, t)) == std::vector<int>({4, 4, 4}));

    // per-slice rank deficiency planted in the transform domain
    TubalMatrix a(3, 3, t, false);
    Rng rng(35);
    for (Index s = 0; s < 3; ++s) {
        Eigen::MatrixXcd u(3, s + 1), v(3, s + 1);
        for (Index i = 0; i < 3; ++i)
            for (Index j = 0; j <= s; ++j) {
                u(i, j) = Complex(rng.gaussian(), rng.gaussian());
                v(i, j) = Complex(rng.gaussian(), rng.gaussian());
            }
        a.slice(s) = u * v.adjoint();
    }
    a.transform_inverse();
    CHECK(multi_rank(a) == std::vector<int>({1, 2, 3}));
}

TEST_CASE("truncate_tsvd") {
    auto t = Transform::dft(2);
    Rng rng(36);
    TubalMatrix a = th::rand_mat(rng, 4, 3, t);
    TsvdFactors f = tsvd(a);

    CHECK(frobenius_norm(truncate_tsvd(f, t_rank(f)) - a) < 1e-10 * frobenius_norm(a));

    // exact recovery of a synthesized t-rank-1 matrix
    TubalMatrix x = th::rand_mat(rng, 4, 1, t), y = th::rand_mat(rng, 1, 3, t);
    TubalMatrix r1 = tproduct(x, y);
    TsvdFactors fr = tsvd(r1);
    CHECK(frobenius_norm(truncate_tsvd(fr, 1) - r1) < 1e-10 * frobenius_norm(r1));

    // Monte-Carlo Eckart-Young probe: 200 random rank-2 products never win
    const double best = frobenius_norm(a - truncate_tsvd(f, 2));
    for (int trial = 0; trial < 200; ++trial) {
        TubalMatrix g = tproduct(th::rand_mat(rng, 4, 2, t, true), th::rand_mat(rng, 2, 3, t, true));
        CHECK(frobenius_norm(a - g) >= best - 1e-12);
    }

    CHECK_THROWS_AS(truncate_tsvd(f, 0), dimension_error);
    CHECK_THROWS_AS(truncate_tsvd(f, 4), dimension_error);
}

TEST_CASE("general transforms reconstruct but refuse Eckart-Young truncation") {
    Rng rng(37);
    Eigen::MatrixXcd m(3, 3);
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j) m(i, j) = Complex(rng.gaussian(), rng.gaussian());
    m += 4.0 * Eigen::MatrixXcd::Identity(3, 3);
    auto t = Transform::general(m);
    TubalMatrix a = th::rand_mat(rng, 3, 4, t, true);
    TsvdFactors f = tsvd(a);
    CHECK(frobenius_norm(a - reconstruct(f)) < 1e-9 * frobenius_norm(a));
    CHECK_THROWS_AS(truncate_tsvd(f, 2), unsupported_transform);
}

TEST_CASE("non-finite input is rejected") {
    auto t = Transform::dft(2);
    TubalMatrix a(2, 2, t);
    a.slice(0)(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(tsvd(a), numeric_error);
}
