#include <doctest.h>

#include "helpers.hpp"
#include "tubal/errors.hpp"
#include "tubal/tsvd.hpp"
#include "tubal/tubal_algebra.hpp"

using namespace tubal;

namespace {
TubalScalar mk(const TransformPtr& t, std::initializer_list<double> vals) {
    Eigen::VectorXcd v(static_cast<Index>(vals.size()));
    Index i = 0;
    for (double x : vals) v(i++) = x;
    return TubalScalar(v, t);
}
} // namespace

TEST_CASE("scalar t-product is circular convolution under the DFT") {
    auto t = Transform::dft(3);
    TubalScalar a = mk(t, {1, 2, 3}), b = mk(t, {4, 5, 6});
    Eigen::VectorXcd want(3);
    want << 31, 31, 28;
    CHECK((scalar_tproduct(a, b).values() - want).norm() < 1e-12);

    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        auto t5 = Transform::dft(5);
        TubalScalar x(th::gauss_vec(rng, 5, true), t5), y(th::gauss_vec(rng, 5, true), t5);
        Eigen::VectorXcd got = scalar_tproduct(x, y).values();
        Eigen::VectorXcd oracle = th::oracle_conv(x.values(), y.values());
        CHECK((got - oracle).norm() < 1e-12 * oracle.norm());
    }
}

TEST_CASE("ring identity and zero") {
    auto t = Transform::dft(4);
    Rng rng(22);
    TubalScalar a(th::gauss_vec(rng, 4, true), t);
    TubalScalar e = identity_tubal_scalar(t);
    CHECK((scalar_tproduct(a, e).values() - a.values()).norm() < 1e-12 * a.norm());
    TubalScalar zero = mk(t, {0, 0, 0, 0});
    CHECK(scalar_tproduct(a, zero).norm() == doctest::Approx(0.0));
}

TEST_CASE("ring axioms on random tubal scalars") {
    auto t = Transform::dft(5);
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        TubalScalar a(th::gauss_vec(rng, 5), t), b(th::gauss_vec(rng, 5), t),
            c(th::gauss_vec(rng, 5), t);
        // commutativity
        CHECK((scalar_tproduct(a, b).values() - scalar_tproduct(b, a).values()).norm() < 1e-10);
        // associativity
        CHECK((scalar_tproduct(scalar_tproduct(a, b), c).values() -
               scalar_tproduct(a, scalar_tproduct(b, c)).values())
                  .norm() < 1e-10);
        // distributivity
        CHECK((scalar_tproduct(a, b + c).values() -
               (scalar_tproduct(a, b) + scalar_tproduct(a, c)).values())
                  .norm() < 1e-10);
    }
}

TEST_CASE("hermitian transpose of a real tubal scalar reverses slices 2..p") {
    auto t = Transform::dft(3);
    TubalScalar a = mk(t, {1, 2, 3});
    Eigen::VectorXcd want(3);
    want << 1, 3, 2;
    CHECK((hermitian_transpose(a).values() - want).norm() < 1e-12);
}

TEST_CASE("face-wise product") {
    auto t = Transform::dft(2);
    Rng rng(24);
    TubalMatrix b = th::rand_mat(rng, 3, 2, t);
    TubalMatrix eye(3, 3, t);
    for (Index s = 0; s < 2; ++s) eye.slice(s) = Eigen::MatrixXcd::Identity(3, 3);
    CHECK(frobenius_norm(face_wise_product(eye, b) - b) < 1e-14);

    TubalMatrix a = th::rand_mat(rng, 2, 3, t);
    TubalMatrix c = face_wise_product(a, b);
    for (Index s = 0; s < 2; ++s) {
        Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(2, 2);
        for (Index i = 0; i < 2; ++i)
            for (Index j = 0; j < 2; ++j)
                for (Index k = 0; k < 3; ++k) want(i, j) += a.slice(s)(i, k) * b.slice(s)(k, j);
        CHECK((c.slice(s) - want).norm() < 1e-12);
    }

    // p = 1: face-wise and t-product are both the ordinary matrix product
    auto t1 = Transform::dft(1);
    TubalMatrix x = th::rand_mat(rng, 2, 3, t1), y = th::rand_mat(rng, 3, 2, t1);
    CHECK(frobenius_norm(face_wise_product(x, y) - tproduct(x, y)) < 1e-12);
}

TEST_CASE("tproduct matches the Eq. (2.1) summation oracle") {
    auto t = Transform::dft(3);
    Rng rng(25);
    for (int trial = 0; trial < 10; ++trial) {
        TubalMatrix a = th::rand_mat(rng, 2, 2, t, trial % 2 == 1);
        TubalMatrix b = th::rand_mat(rng, 2, 2, t, trial % 2 == 1);
        TubalMatrix got = tproduct(a, b);
        TubalMatrix want = th::oracle_tproduct(a, b);
        CHECK(frobenius_norm(got - want) < 1e-10 * frobenius_norm(want));
    }

    TubalMatrix eye = identity_tubal_matrix(4, t);
    TubalMatrix b = th::rand_mat(rng, 4, 3, t);
    CHECK(frobenius_norm(tproduct(eye, b) - b) < 1e-12 * frobenius_norm(b));
    CHECK(frobenius_norm(tproduct(b, identity_tubal_matrix(3, t)) - b) <
          1e-12 * frobenius_norm(b));

    // 1x1 tubal matrices reduce to tubal scalars
    TubalMatrix u = th::rand_mat(rng, 1, 1, t), v = th::rand_mat(rng, 1, 1, t);
    Eigen::VectorXcd sv = scalar_tproduct(u.entry(0, 0), v.entry(0, 0)).values();
    CHECK((tproduct(u, v).entry(0, 0).values() - sv).norm() < 1e-12);
}

TEST_CASE("transpose rules") {
    auto t = Transform::dft(2);
    Rng rng(26);
    TubalMatrix a = th::rand_mat(rng, 2, 3, t), b = th::rand_mat(rng, 3, 2, t);

    CHECK(frobenius_norm(hermitian_transpose(hermitian_transpose(a)) - a) < 1e-12);
    CHECK(frobenius_norm(smallt_transpose(smallt_transpose(a)) - a) < 1e-12);

    TubalMatrix lhs_h = hermitian_transpose(tproduct(a, b));
    TubalMatrix rhs_h = tproduct(hermitian_transpose(b), hermitian_transpose(a));
    CHECK(frobenius_norm(lhs_h - rhs_h) < 1e-10 * frobenius_norm(rhs_h));

    TubalMatrix lhs_t = smallt_transpose(tproduct(a, b));
    TubalMatrix rhs_t = tproduct(smallt_transpose(b), smallt_transpose(a));
    CHECK(frobenius_norm(lhs_t - rhs_t) < 1e-10 * frobenius_norm(rhs_t));

    // small-t transpose is the pure index swap
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 3; ++j)
            CHECK((smallt_transpose(a).entry(j, i).values() - a.entry(i, j).values()).norm() == 0.0);

    // real DFT case: A^H = slice-wise transpose + reversal of slices 2..p
    auto t3 = Transform::dft(3);
    TubalMatrix c = th::rand_mat(rng, 2, 2, t3);
    TubalMatrix ch = hermitian_transpose(c);
    CHECK((ch.slice(0) - c.slice(0).transpose()).norm() < 1e-12);
    CHECK((ch.slice(1) - c.slice(2).transpose()).norm() < 1e-12);
    CHECK((ch.slice(2) - c.slice(1).transpose()).norm() < 1e-12);
}

TEST_CASE("identity tubal matrix is symmetric both ways") {
    auto t = Transform::dft(3);
    TubalMatrix eye = identity_tubal_matrix(2, t);
    CHECK(frobenius_norm(hermitian_transpose(eye) - eye) < 1e-12);
    CHECK(frobenius_norm(smallt_transpose(eye) - eye) < 1e-12);
    CHECK(is_unitary(eye));
    CHECK(!is_unitary(2.0 * eye));
}

TEST_CASE("frobenius norm and inner product") {
    auto t = Transform::dft(4);
    Rng rng(27);
    TubalMatrix a = th::rand_mat(rng, 3, 2, t);
    CHECK(std::abs(inner_product(a, a).real() -
                   frobenius_norm(a) * frobenius_norm(a)) < 1e-10);
    TubalMatrix ah = a;
    ah.transform_forward();
    CHECK(std::abs(frobenius_norm(a) - frobenius_norm(ah) / 2.0) < 1e-12);  // |c| = sqrt(4)
}

TEST_CASE("unitarity predicates and Prop 3.3 / Prop 5.1 / norm invariance") {
    auto t = Transform::dft(3);
    Rng rng(28);
    TubalMatrix a = th::rand_mat(rng, 4, 4, t);
    TsvdFactors f = tsvd(a);
    CHECK(is_unitary(f.U));
    CHECK(is_unitary(smallt_transpose(f.U)));  // Prop 3.3
    CHECK(!is_unitary(a, 1e-8));
    CHECK(!is_unitary(smallt_transpose(a), 1e-8));

    TubalMatrix u2 = column_block(f.U, 0, 2);
    CHECK(is_partially_unitary(u2));

    // Prop 5.1: columns with U^H-orthogonality have zero Frobenius inner product
    TubalMatrix c1 = column_block(f.U, 0, 1), c2 = column_block(f.U, 1, 1);
    CHECK(std::abs(inner_product(c1, c2)) < 1e-10);

    // unitary invariance of the norm
    TubalMatrix b = th::rand_mat(rng, 4, 3, t);
    CHECK(std::abs(frobenius_norm(tproduct(f.U, b)) - frobenius_norm(b)) <
          1e-10 * frobenius_norm(b));
}

TEST_CASE("shape errors") {
    auto t = Transform::dft(2);
    Rng rng(29);
    TubalMatrix a = th::rand_mat(rng, 2, 3, t), b = th::rand_mat(rng, 2, 3, t);
    CHECK_THROWS_AS(tproduct(a, b), dimension_error);
    CHECK_THROWS_AS(face_wise_product(a, b), dimension_error);
}
