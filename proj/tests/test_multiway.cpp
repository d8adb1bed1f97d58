#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include "helpers.hpp"
#include "tubal/errors.hpp"
#include "tubal/tsvd.hpp"

using namespace tubal;

TEST_CASE("unfolding index map") {
    auto t = Transform::dft(2);
    TubalTensor a({2, 3, 4}, t);
    Eigen::VectorXcd tube(2);
    tube << 7, 9;
    a.set_entry({1, 2, 3}, TubalScalar(tube, t));  // (2,3,4) in 1-based indices

    // mode-1 (n = 0): j = 1 + (i2-1) + (i3-1)*I2 = 12, i.e. (2, 12) 1-based
    TubalMatrix m = unfold(a, 0);
    CHECK((m.entry(1, 11).values() - tube).norm() == 0.0);
    // mode-2: j = 1 + (i1-1) + (i3-1)*I1 = 8
    CHECK((unfold(a, 1).entry(2, 7).values() - tube).norm() == 0.0);
    // mode-3: j = 1 + (i1-1) + (i2-1)*I1 = 6
    CHECK((unfold(a, 2).entry(3, 5).values() - tube).norm() == 0.0);
}

TEST_CASE("order-2 unfoldings are the matrix and its small-t transpose") {
    auto t = Transform::dft(3);
    Rng rng(41);
    TubalMatrix a = th::rand_mat(rng, 3, 4, t);
    TubalTensor ten = as_tensor(a);
    CHECK(frobenius_norm(unfold(ten, 0) - a) == 0.0);
    CHECK(frobenius_norm(unfold(ten, 1) - smallt_transpose(a)) == 0.0);
}

TEST_CASE("fold inverts unfold on every mode") {
    auto t = Transform::dft(2);
    Rng rng(42);
    TubalTensor a = th::rand_ten(rng, {3, 2, 4, 2}, t);
    for (int n = 0; n < 4; ++n)
        CHECK(frobenius_norm(fold(unfold(a, n), n, a.dims()) - a) == 0.0);

    CHECK_THROWS_AS(fold(unfold(a, 0), 0, std::vector<Index>({3, 2, 4, 3})), dimension_error);
    CHECK_THROWS_AS(unfold(a, 4), dimension_error);
}

TEST_CASE("mode-n product") {
    auto t = Transform::dft(3);
    Rng rng(43);
    TubalTensor a = th::rand_ten(rng, {3, 4, 2}, t);

    SUBCASE("identity leaves the tensor unchanged") {
        TubalTensor b = mode_n_product(a, identity_tubal_matrix(4, t), 1);
        CHECK(frobenius_norm(b - a) < 1e-12 * frobenius_norm(a));
    }

    SUBCASE("order-2, mode 1 is the t-product") {
        TubalMatrix m = th::rand_mat(rng, 2, 3, t);
        TubalMatrix u = th::rand_mat(rng, 4, 2, t);
        TubalTensor got = mode_n_product(as_tensor(m), u, 0);
        CHECK(frobenius_norm(unfold(got, 0) - tproduct(u, m)) < 1e-12);
    }

    SUBCASE("matches the scalar-level summation oracle") {
        TubalMatrix u = th::rand_mat(rng, 5, 4, t);
        TubalTensor got = mode_n_product(a, u, 1);
        for (Index i = 0; i < 3; ++i)
            for (Index j = 0; j < 5; ++j)
                for (Index k = 0; k < 2; ++k) {
                    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(3);
                    for (Index l = 0; l < 4; ++l)
                        acc += th::oracle_conv(u.entry(j, l).values(), a.entry({i, l, k}).values());
                    CHECK((got.entry({i, j, k}).values() - acc).norm() < 1e-10);
                }
    }

    SUBCASE("Prop 3.11: products on distinct modes commute; same mode composes") {
        TubalMatrix f = th::rand_mat(rng, 2, 4, t), g = th::rand_mat(rng, 3, 2, t);
        TubalTensor lhs = mode_n_product(mode_n_product(a, f, 1), g, 2);
        TubalTensor rhs = mode_n_product(mode_n_product(a, g, 2), f, 1);
        CHECK(frobenius_norm(lhs - rhs) < 1e-10 * frobenius_norm(lhs));

        TubalMatrix g2 = th::rand_mat(rng, 3, 2, t);
        TubalTensor lhs2 = mode_n_product(mode_n_product(a, f, 1), g2, 1);
        TubalTensor rhs2 = mode_n_product(a, tproduct(g2, f), 1);
        CHECK(frobenius_norm(lhs2 - rhs2) < 1e-10 * frobenius_norm(lhs2));
    }

    CHECK_THROWS_AS(mode_n_product(a, th::rand_mat(rng, 2, 3, t), 1), dimension_error);
}

TEST_CASE("tubal Kronecker product") {
    auto t = Transform::dft(2);
    Rng rng(44);

    SUBCASE("identity times identity") {
        TubalMatrix k = tubal_kron(identity_tubal_matrix(2, t), identity_tubal_matrix(3, t));
        CHECK(frobenius_norm(k - identity_tubal_matrix(6, t)) < 1e-12);
    }

    SUBCASE("p = 1 is the classical Kronecker product") {
        auto t1 = Transform::dft(1);
        TubalMatrix a = th::rand_mat(rng, 2, 3, t1), b = th::rand_mat(rng, 3, 2, t1);
        Eigen::MatrixXcd want = Eigen::kroneckerProduct(Eigen::MatrixXcd(a.slice(0)),
                                                        Eigen::MatrixXcd(b.slice(0)));
        CHECK((tubal_kron(a, b).slice(0) - want).norm() < 1e-12);
    }

    SUBCASE("entries follow the index rule") {
        TubalMatrix a = th::rand_mat(rng, 2, 2, t), b = th::rand_mat(rng, 2, 2, t);
        TubalMatrix k = tubal_kron(a, b);
        for (Index i = 0; i < 2; ++i)
            for (Index j = 0; j < 2; ++j)
                for (Index l = 0; l < 2; ++l)
                    for (Index m = 0; m < 2; ++m) {
                        Eigen::VectorXcd want =
                            th::oracle_conv(a.entry(i, j).values(), b.entry(l, m).values());
                        CHECK((k.entry(l + 2 * i, m + 2 * j).values() - want).norm() < 1e-10);
                    }
    }

    SUBCASE("Prop 3.6 identities") {
        TubalMatrix a = th::rand_mat(rng, 2, 3, t), b = th::rand_mat(rng, 3, 2, t);
        TubalMatrix c = th::rand_mat(rng, 3, 2, t), d = th::rand_mat(rng, 2, 3, t);

        TubalMatrix k = tubal_kron(a, b);
        CHECK(frobenius_norm(smallt_transpose(k) -
                             tubal_kron(smallt_transpose(a), smallt_transpose(b))) < 1e-10);
        CHECK(frobenius_norm(hermitian_transpose(k) -
                             tubal_kron(hermitian_transpose(a), hermitian_transpose(b))) < 1e-10);
        CHECK(frobenius_norm(tproduct(k, tubal_kron(c, d)) -
                             tubal_kron(tproduct(a, c), tproduct(b, d))) < 1e-10);

        // associativity; the n-ary fold direction is immaterial
        TubalMatrix e = th::rand_mat(rng, 2, 2, t);
        TubalMatrix left = tubal_kron(tubal_kron(a, b), e);
        TubalMatrix right = tubal_kron(a, tubal_kron(b, e));
        CHECK(frobenius_norm(left - right) < 1e-10);
        CHECK(frobenius_norm(tubal_kron(std::vector<TubalMatrix>{a, b, e}) - left) < 1e-12);

        // unitary kron unitary is unitary
        TsvdFactors f1 = tsvd(th::rand_mat(rng, 3, 3, t));
        TsvdFactors f2 = tsvd(th::rand_mat(rng, 2, 2, t));
        CHECK(is_unitary(tubal_kron(f1.U, f2.U)));
    }
}

TEST_CASE("Prop 3.12 unfolding identity") {
    auto t = Transform::dft(2);
    Rng rng(45);
    TubalTensor s = th::rand_ten(rng, {2, 3, 2}, t);
    std::vector<TubalMatrix> u = {th::rand_mat(rng, 3, 2, t), th::rand_mat(rng, 2, 3, t),
                                  th::rand_mat(rng, 4, 2, t)};
    TubalTensor prod = s;
    for (int n = 0; n < 3; ++n) prod = mode_n_product(prod, u[n], n);
    for (int n = 0; n < 3; ++n) {
        std::vector<TubalMatrix> others;
        for (int k = 2; k >= 0; --k)
            if (k != n) others.push_back(u[k]);
        TubalMatrix rhs =
            tproduct(u[n], tproduct(unfold(s, n), smallt_transpose(tubal_kron(others))));
        CHECK(frobenius_norm(unfold(prod, n) - rhs) < 1e-10 * frobenius_norm(rhs));
    }
}

TEST_CASE("mode-n tubal rank") {
    auto t = Transform::dft(2);
    TubalTensor zero({3, 3, 3}, t);
    for (int n = 0; n < 3; ++n) CHECK(mode_n_tubal_rank(zero, n) == 0);

    Rng rng(46);
    // synthetic rank-(2,2,2): core 2x2x2 times 2-column partial unitaries
    TubalTensor core = th::rand_ten(rng, {2, 2, 2}, t);
    TubalTensor a = core;
    for (int n = 0; n < 3; ++n) {
        TsvdFactors f = tsvd(th::rand_mat(rng, 4, 4, t));
        a = mode_n_product(a, column_block(f.U, 0, 2), n);
    }
    for (int n = 0; n < 3; ++n) CHECK(mode_n_tubal_rank(a, n) == 2);

    TubalMatrix m = th::rand_mat(rng, 3, 5, t);
    CHECK(mode_n_tubal_rank(as_tensor(m), 0) == t_rank(tsvd(m)));
}
