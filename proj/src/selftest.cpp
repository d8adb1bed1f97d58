#include "tubal/selftest.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <functional>
#include <ostream>

#include "tubal/hosvd.hpp"
#include "tubal/hotsvd.hpp"
#include "tubal/rng.hpp"
#include "tubal/tensor_file.hpp"
#include "tubal/tsvd.hpp"

namespace tubal {

namespace {

Eigen::VectorXcd gauss(Rng& rng, Index n) {
    Eigen::VectorXcd v(n);
    for (Index i = 0; i < n; ++i) v(i) = rng.gaussian();
    return v;
}

TubalMatrix rand_mat(Rng& rng, Index rows, Index cols, const TransformPtr& t) {
    return TubalMatrix(rows, cols, t, gauss(rng, rows * cols * t->p()), true);
}

TubalTensor rand_ten(Rng& rng, std::vector<Index> dims, const TransformPtr& t) {
    Index n = t->p();
    for (Index d : dims) n *= d;
    return TubalTensor(std::move(dims), t, gauss(rng, n), true);
}

/// Deterministic 1e-2-scale noise injection for the negative-control mode.
void noise(Rng& rng, Eigen::VectorXcd& v) {
    const double scale = 1e-2 * std::max(v.norm(), 1.0);
    for (Index i = 0; i < v.size(); ++i) v(i) += scale * rng.gaussian();
}

double rel(double err, double ref) { return err / std::max(ref, 1e-300); }

TransformPtr random_scaled_unitary(Rng& rng, Index p, double c) {
    Eigen::MatrixXcd g(p, p);
    for (Index i = 0; i < p; ++i)
        for (Index j = 0; j < p; ++j) g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    return Transform::scaled_unitary(c * q);
}

struct Check {
    std::string name;
    double threshold;
    std::function<double(Rng&, bool)> fn;  // returns residual; bad => sabotage
};

std::vector<Check> make_checks() {
    std::vector<Check> cs;
    auto add = [&](std::string name, double thr, std::function<double(Rng&, bool)> fn) {
        cs.push_back({std::move(name), thr, std::move(fn)});
    };

    add("transform-roundtrip", 1e-12, [](Rng& rng, bool bad) {
        auto t = Transform::dft(7);
        Eigen::VectorXcd x = gauss(rng, 7);
        Eigen::VectorXcd y = t->forward(x);
        if (bad) noise(rng, y);
        return rel((t->inverse(y) - x).norm(), x.norm());
    });

    add("scalar-conv-oracle", 1e-12, [](Rng& rng, bool bad) {
        auto t = Transform::dft(6);
        TubalScalar a(gauss(rng, 6), t), b(gauss(rng, 6), t);
        Eigen::VectorXcd got = scalar_tproduct(a, b).values();
        if (bad) noise(rng, got);
        Eigen::VectorXcd conv = Eigen::VectorXcd::Zero(6);
        for (Index k = 0; k < 6; ++k)
            for (Index i = 0; i < 6; ++i) conv(k) += a.values()(i) * b.values()((k - i + 12) % 6);
        return rel((got - conv).norm(), conv.norm());
    });

    add("scalar-identity", 1e-12, [](Rng& rng, bool bad) {
        auto t = Transform::dft(5);
        TubalScalar a(gauss(rng, 5), t);
        TubalScalar e = identity_tubal_scalar(t);
        Eigen::VectorXcd got = scalar_tproduct(a, e).values();
        if (bad) noise(rng, got);
        return rel((got - a.values()).norm(), a.values().norm());
    });

    add("tproduct-summation", 1e-10, [](Rng& rng, bool bad) {
        auto t = Transform::dft(3);
        TubalMatrix a = rand_mat(rng, 3, 4, t), b = rand_mat(rng, 4, 2, t);
        TubalMatrix c = tproduct(a, b);
        if (bad) noise(rng, c.data());
        double worst = 0;
        for (Index i = 0; i < 3; ++i)
            for (Index j = 0; j < 2; ++j) {
                TubalScalar acc = scalar_tproduct(a.entry(i, 0), b.entry(0, j));
                for (Index k = 1; k < 4; ++k) acc += scalar_tproduct(a.entry(i, k), b.entry(k, j));
                worst = std::max(worst, (acc - c.entry(i, j)).norm());
            }
        return rel(worst, frobenius_norm(c));
    });

    add("tproduct-associative", 1e-10, [](Rng& rng, bool bad) {
        auto t = Transform::dft(4);
        TubalMatrix a = rand_mat(rng, 2, 3, t), b = rand_mat(rng, 3, 4, t), c = rand_mat(rng, 4, 2, t);
        if (bad) noise(rng, b.data());
        TubalMatrix lhs = tproduct(tproduct(a, b), c);
        TubalMatrix rhs = bad ? tproduct(rand_mat(rng, 2, 3, t), tproduct(b, c))
                              : tproduct(a, tproduct(b, c));
        return rel(frobenius_norm(lhs - rhs), frobenius_norm(lhs));
    });

    add("tproduct-identity", 1e-12, [](Rng& rng, bool bad) {
        auto t = Transform::dft(3);
        TubalMatrix a = rand_mat(rng, 4, 3, t);
        TubalMatrix e = identity_tubal_matrix(4, t);
        if (bad) noise(rng, e.data());
        return rel(frobenius_norm(tproduct(e, a) - a), frobenius_norm(a));
    });

    add("hermitian-transpose-rule", 1e-10, [](Rng& rng, bool bad) {
        auto t = Transform::dft(4);
        TubalMatrix a = rand_mat(rng, 3, 4, t), b = rand_mat(rng, 4, 2, t);
        TubalMatrix lhs = hermitian_transpose(tproduct(a, b));
        if (bad) noise(rng, lhs.data());
        TubalMatrix rhs = tproduct(hermitian_transpose(b), hermitian_transpose(a));
        return rel(frobenius_norm(lhs - rhs), frobenius_norm(rhs));
    });

    add("smallt-transpose-rule", 1e-10, [](Rng& rng, bool bad) {
        auto t = Transform::dft(4);
        TubalMatrix a = rand_mat(rng, 3, 4, t), b = rand_mat(rng, 4, 2, t);
        TubalMatrix lhs = smallt_transpose(tproduct(a, b));
        if (bad) noise(rng, lhs.data());
        TubalMatrix rhs = tproduct(smallt_transpose(b), smallt_transpose(a));
        return rel(frobenius_norm(lhs - rhs), frobenius_norm(rhs));
    });

    add("tsvd-reconstruction", 1e-10, [](Rng& rng, bool bad) {
        auto t = Transform::dft(4);
        TubalMatrix a = rand_mat(rng, 5, 3, t);
        TsvdFactors f = tsvd(a);
        if (bad) noise(rng, f.U.data());
        TubalMatrix rec = tproduct(tproduct(f.U, f.S), hermitian_transpose(f.V));
        return rel(frobenius_norm(a - rec), frobenius_norm(a));
    });

    add("tsvd-unitarity", 1e-8, [](Rng& rng, bool bad) {
        auto t = Transform::dft(3);
        TubalMatrix a = rand_mat(rng, 4, 4, t);
        TsvdFactors f = tsvd(a);
        if (bad) noise(rng, f.U.data());
        TubalMatrix gu = tproduct(hermitian_transpose(f.U), f.U) -
                         identity_tubal_matrix(4, t);
        TubalMatrix gv = tproduct(hermitian_transpose(f.V), f.V) -
                         identity_tubal_matrix(4, t);
        return std::max(frobenius_norm(gu), frobenius_norm(gv));
    });

    add("tsvd-ordering", 1e-10, [](Rng& rng, bool bad) {
        auto t = Transform::dft(5);
        TsvdFactors f = tsvd(rand_mat(rng, 6, 4, t));
        if (bad) std::reverse(f.slice_norms.begin(), f.slice_norms.end());
        double worst = 0;
        for (size_t i = 1; i < f.slice_norms.size(); ++i)
            worst = std::max(worst, f.slice_norms[i] - f.slice_norms[i - 1]);
        return worst;
    });

    add("eckart-young-probe", 1e-12, [](Rng& rng, bool bad) {
        auto t = Transform::dft(3);
        TubalMatrix a = rand_mat(rng, 4, 3, t);
        const int k = 2;
        TsvdFactors f = tsvd(a);
        double best = frobenius_norm(a - truncate_tsvd(f, k));
        if (bad) best += 1e3;  // pretend the truncation did far worse
        double challenger = 1e300;
        for (int trial = 0; trial < 50; ++trial) {
            TubalMatrix x = tproduct(rand_mat(rng, 4, k, t), rand_mat(rng, k, 3, t));
            challenger = std::min(challenger, frobenius_norm(a - x));
        }
        return best - challenger;  // <= 0 when Eckart-Young holds
    });

    add("unfold-fold-roundtrip", 1e-14, [](Rng& rng, bool bad) {
        auto t = Transform::dft(2);
        TubalTensor a = rand_ten(rng, {3, 2, 4, 2}, t);
        double worst = 0;
        for (int n = 0; n < 4; ++n) {
            TubalMatrix m = unfold(a, n);
            if (bad && n == 1) noise(rng, m.data());
            worst = std::max(worst, frobenius_norm(fold(m, n, a.dims()) - a));
        }
        return rel(worst, frobenius_norm(a));
    });

    add("mode-product-unfolding", 1e-10, [](Rng& rng, bool bad) {
        auto t = Transform::dft(3);
        TubalTensor a = rand_ten(rng, {3, 4, 2}, t);
        TubalMatrix u = rand_mat(rng, 5, 4, t);
        TubalMatrix lhs = unfold(mode_n_product(a, u, 1), 1);
        if (bad) noise(rng, lhs.data());
        TubalMatrix rhs = tproduct(u, unfold(a, 1));
        return rel(frobenius_norm(lhs - rhs), frobenius_norm(rhs));
    });

    add("kron-mixed-product", 1e-10, [](Rng& rng, bool bad) {
        auto t = Transform::dft(3);
        TubalMatrix a = rand_mat(rng, 2, 3, t), b = rand_mat(rng, 3, 2, t);
        TubalMatrix c = rand_mat(rng, 3, 2, t), d = rand_mat(rng, 2, 3, t);
        TubalMatrix lhs = tproduct(tubal_kron(a, b), tubal_kron(c, d));
        if (bad) noise(rng, lhs.data());
        TubalMatrix rhs = tubal_kron(tproduct(a, c), tproduct(b, d));
        return rel(frobenius_norm(lhs - rhs), frobenius_norm(rhs));
    });

    add("kron-transpose-rules", 1e-10, [](Rng& rng, bool bad) {
        auto t = Transform::dft(3);
        TubalMatrix a = rand_mat(rng, 2, 3, t), b = rand_mat(rng, 3, 2, t);
        TubalMatrix lhs_h = hermitian_transpose(tubal_kron(a, b));
        TubalMatrix lhs_t = smallt_transpose(tubal_kron(a, b));
        if (bad) noise(rng, lhs_h.data());
        TubalMatrix rhs_h = tubal_kron(hermitian_transpose(a), hermitian_transpose(b));
        TubalMatrix rhs_t = tubal_kron(smallt_transpose(a), smallt_transpose(b));
        return std::max(rel(frobenius_norm(lhs_h - rhs_h), frobenius_norm(rhs_h)),
                        rel(frobenius_norm(lhs_t - rhs_t), frobenius_norm(rhs_t)));
    });

    add("unfolding-identity", 1e-10, [](Rng& rng, bool bad) {
        // unfold(S x1 U1 ... xN UN, n) = Un * S_(n) * (U_N kron ... kron U_{n+1}
        // kron U_{n-1} kron ... kron U_1)^t
        auto t = Transform::dft(2);
        TubalTensor s = rand_ten(rng, {2, 3, 2}, t);
        std::vector<TubalMatrix> u = {rand_mat(rng, 3, 2, t), rand_mat(rng, 2, 3, t),
                                      rand_mat(rng, 4, 2, t)};
        TubalTensor prod = s;
        for (int n = 0; n < 3; ++n) prod = mode_n_product(prod, u[n], n);
        double worst = 0;
        for (int n = 0; n < 3; ++n) {
            TubalMatrix lhs = unfold(prod, n);
            if (bad && n == 0) noise(rng, lhs.data());
            std::vector<TubalMatrix> others;
            for (int k = 2; k >= 0; --k)
                if (k != n) others.push_back(u[k]);
            TubalMatrix rhs = tproduct(u[n], tproduct(unfold(s, n),
                                                      smallt_transpose(tubal_kron(others))));
            worst = std::max(worst, rel(frobenius_norm(lhs - rhs), frobenius_norm(rhs)));
        }
        return worst;
    });

    add("hotsvd-reconstruction", 1e-10, [](Rng& rng, bool bad) {
        auto t = Transform::dft(3);
        TubalTensor a = rand_ten(rng, {3, 4, 2, 3}, t);
        HotSvdFactors f = hotsvd(a);
        if (bad) noise(rng, f.core.data());
        return rel(frobenius_norm(a - reconstruct(f)), frobenius_norm(a));
    });

    add("hotsvd-norm-preservation", 1e-10, [](Rng& rng, bool bad) {
        auto t = Transform::dft(3);
        TubalTensor a = rand_ten(rng, {3, 4, 2}, t);
        HotSvdFactors f = hotsvd(a);
        if (bad) noise(rng, f.core.data());
        return rel(std::abs(frobenius_norm(a) - frobenius_norm(f.core)), frobenius_norm(a));
    });

    add("hotsvd-all-orthogonality", 1e-8, [](Rng& rng, bool bad) {
        auto t = Transform::dft(2);
        TubalTensor a = rand_ten(rng, {3, 4, 2, 3}, t);
        HotSvdFactors f = hotsvd(a);
        if (bad) noise(rng, f.core.data());
        const double n = frobenius_norm(a);
        return check_all_orthogonality(f) / (n * n);
    });

    add("hotsvd-ordering", 0.5, [](Rng& rng, bool bad) {
        auto t = Transform::dft(3);
        TubalTensor a = rand_ten(rng, {4, 3, 3}, t);
        HotSvdFactors f = hotsvd(a);
        if (bad) noise(rng, f.core.data());
        return check_ordering(f) ? 0.0 : 1.0;
    });

    add("order2-matches-tsvd", 1e-10, [](Rng& rng, bool bad) {
        auto t = Transform::dft(4);
        TubalMatrix a = rand_mat(rng, 4, 3, t);
        HotSvdFactors f = hotsvd(as_tensor(a));
        TsvdFactors g = tsvd(a);
        double worst = 0;
        for (size_t i = 0; i < g.slice_norms.size(); ++i)
            worst = std::max(worst,
                             std::abs(f.slice_norms_per_mode[0][i] - g.slice_norms[i]));
        if (bad) worst += 1.0;
        return rel(worst, frobenius_norm(a));
    });

    add("error-bound-tr", 0.0, [](Rng& rng, bool bad) {
        auto t = Transform::dft(3);
        TubalTensor a = rand_ten(rng, {5, 4, 3}, t);
        HotSvdFactors f = tr_hotsvd(a, {3, 2, 2});
        // Negative control: shrink the recorded spectra so the bound collapses
        // below the (unchanged) reconstruction error.
        if (bad)
            for (auto& mode : f.slice_norms_per_mode)
                for (double& x : mode) x *= 1e-3;
        const double err = frobenius_norm(a - reconstruct(f));
        return err - error_bound(f) - 1e-10 * frobenius_norm(a);
    });

    add("error-bound-seq", 0.0, [](Rng& rng, bool bad) {
        auto t = Transform::dft(3);
        TubalTensor a = rand_ten(rng, {5, 4, 3}, t);
        HotSvdFactors f = seq_tr_hotsvd(a, {3, 2, 2});
        if (bad) noise(rng, f.core.data());
        const double err = frobenius_norm(a - reconstruct(f));
        return err - error_bound(f) - 1e-10 * frobenius_norm(a);
    });

    add("pythagoras-decomposition", 1e-8, [](Rng& rng, bool bad) {
        auto t = Transform::dft(3);
        TubalTensor a = rand_ten(rng, {5, 4, 3}, t);
        HotSvdFactors f = tr_hotsvd(a, {3, 2, 2});
        if (bad) noise(rng, f.factors[0].data());
        const auto terms = error_decomposition(a, f.factors);
        double sq = 0;
        for (double e : terms) sq += e * e;
        const double err = frobenius_norm(a - reconstruct(f));
        return rel(std::abs(sq - err * err), err * err);
    });

    add("seq-full-equals-hotsvd", 1e-8, [](Rng& rng, bool bad) {
        auto t = Transform::dft(2);
        TubalTensor a = rand_ten(rng, {3, 4, 2}, t);
        HotSvdFactors full = hotsvd(a);
        HotSvdFactors seq = seq_tr_hotsvd(a, {3, 4, 2});
        if (bad) noise(rng, seq.core.data());
        double worst = rel(frobenius_norm(a - reconstruct(seq)), frobenius_norm(a));
        for (int n = 0; n < 3; ++n) {
            const auto x = core_slice_norms(full.core, n);
            const auto y = core_slice_norms(seq.core, n);
            for (size_t i = 0; i < x.size(); ++i)
                worst = std::max(worst, rel(std::abs(x[i] - y[i]), frobenius_norm(a)));
        }
        return worst;
    });

    add("thin-tsvd-link", 1e-8, [](Rng& rng, bool bad) {
        auto t = Transform::dft(3);
        TubalTensor a = rand_ten(rng, {3, 4, 2}, t);
        HotSvdFactors f = hotsvd(a);
        double worst = 0;
        for (int n = 0; n < 3; ++n) {
            TsvdFactors g = thin_tsvd_from_hotsvd(f, n);
            if (bad && n == 0) noise(rng, g.S.data());
            TubalMatrix rec = tproduct(tproduct(g.U, g.S), hermitian_transpose(g.V));
            worst = std::max(worst, rel(frobenius_norm(rec - unfold(a, n)), frobenius_norm(a)));
        }
        return worst;
    });

    add("hosvd-reconstruction", 1e-10, [](Rng& rng, bool bad) {
        Tensor a({4, 3, 5});
        for (Index i = 0; i < a.size(); ++i) a.data()(i) = rng.gaussian();
        HosvdFactors f = hosvd(a);
        if (bad) f.core.data()(0) += 1.0;
        return rel(frobenius_norm(a - reconstruct(f)), frobenius_norm(a));
    });

    add("hosvd-all-orthogonality", 1e-8, [](Rng& rng, bool bad) {
        Tensor a({4, 3, 5});
        for (Index i = 0; i < a.size(); ++i) a.data()(i) = rng.gaussian();
        HosvdFactors f = hosvd(a);
        if (bad) f.core.data()(0) += 1.0;
        const double n = frobenius_norm(a);
        return check_all_orthogonality(f) / (n * n);
    });

    add("hosvd-error-bound", 0.0, [](Rng& rng, bool bad) {
        Tensor a({5, 4, 3});
        for (Index i = 0; i < a.size(); ++i) a.data()(i) = rng.gaussian();
        for (HosvdFactors f : {tr_hosvd(a, {3, 2, 2}), seq_tr_hosvd(a, {3, 2, 2})}) {
            if (bad) f.core.data()(0) += 1.0;
            const double err = frobenius_norm(a - reconstruct(f));
            const double slack = err - error_bound(f) - 1e-10 * frobenius_norm(a);
            if (slack > 0) return slack;
        }
        return 0.0;
    });

    add("p1-reduction", 1e-10, [](Rng& rng, bool bad) {
        // With p = 1 the tubal family degenerates to plain HOSVD.
        auto t = Transform::dft(1);
        TubalTensor a = rand_ten(rng, {4, 3, 2}, t);
        Tensor plain({4, 3, 2}, a.data().real());
        HotSvdFactors f = hotsvd(a);
        HosvdFactors g = hosvd(plain);
        if (bad) noise(rng, f.core.data());
        double worst = 0;
        for (int n = 0; n < 3; ++n)
            for (size_t i = 0; i < f.slice_norms_per_mode[n].size(); ++i)
                worst = std::max(worst, std::abs(f.slice_norms_per_mode[n][i] -
                                                 g.singular_values_per_mode[n](i)));
        worst = std::max(worst, frobenius_norm(a - reconstruct(f)));
        return rel(worst, frobenius_norm(a));
    });

    add("scaled-unitary-tsvd", 1e-9, [](Rng& rng, bool bad) {
        auto t = random_scaled_unitary(rng, 4, 1.7);
        TubalMatrix a(5, 3, t, gauss(rng, 5 * 3 * 4), false);
        TsvdFactors f = tsvd(a);
        if (bad) noise(rng, f.U.data());
        TubalMatrix rec = tproduct(tproduct(f.U, f.S), hermitian_transpose(f.V));
        double worst = rel(frobenius_norm(a - rec), frobenius_norm(a));
        for (size_t i = 1; i < f.slice_norms.size(); ++i)
            worst = std::max(worst, f.slice_norms[i] - f.slice_norms[i - 1]);
        return worst;
    });

    add("general-transform-tproduct", 1e-9, [](Rng& rng, bool bad) {
        Eigen::MatrixXcd m(3, 3);
        for (Index i = 0; i < 3; ++i)
            for (Index j = 0; j < 3; ++j) m(i, j) = Complex(rng.gaussian(), rng.gaussian());
        m += 4.0 * Eigen::MatrixXcd::Identity(3, 3);
        auto t = Transform::general(m);
        TubalMatrix a(2, 3, t, gauss(rng, 2 * 3 * 3), false);
        TubalMatrix b(3, 2, t, gauss(rng, 3 * 2 * 3), false);
        TubalMatrix lhs = hermitian_transpose(tproduct(a, b));
        if (bad) noise(rng, lhs.data());
        TubalMatrix rhs = tproduct(hermitian_transpose(b), hermitian_transpose(a));
        return rel(frobenius_norm(lhs - rhs), frobenius_norm(rhs));
    });

    add("tensorfile-roundtrip", 0.0, [](Rng& rng, bool bad) {
        auto t = Transform::dft(3);
        TubalTensor a = rand_ten(rng, {3, 2, 4}, t);
        const auto path = std::filesystem::temp_directory_path() /
                          ("tubal-selftest-" + std::to_string(rng.next_u64()) + ".tten");
        write_tensor_file(path.string(), a);
        TubalTensor b = read_tensor_file(path.string());
        std::filesystem::remove(path);
        if (bad) noise(rng, b.data());
        if (b.dims() != a.dims() || b.p() != a.p()) return 1.0;
        return (a.data() - b.data()).cwiseAbs().maxCoeff();
    });

    return cs;
}

} // namespace

std::vector<CheckResult> run_selftest(const std::string& perturb_target) {
    std::vector<CheckResult> results;
    for (const auto& c : make_checks()) {
        Rng rng(0x5eed5eedULL ^ std::hash<std::string>{}(c.name));
        CheckResult r;
        r.name = c.name;
        r.threshold = c.threshold;
        try {
            r.residual = c.fn(rng, c.name == perturb_target);
            r.pass = r.residual <= c.threshold;
        } catch (const std::exception&) {
            r.residual = std::numeric_limits<double>::infinity();
            r.pass = false;
        }
        results.push_back(std::move(r));
    }
    return results;
}

bool report_selftest(const std::vector<CheckResult>& results, std::ostream& out) {
    bool all = true;
    for (const auto& r : results) {
        out << (r.pass ? "ok   " : "FAIL ") << r.name;
        for (size_t i = r.name.size(); i < 30; ++i) out << ' ';
        out << " residual=" << r.residual << " threshold=" << r.threshold << "\n";
        all = all && r.pass;
    }
    out << (all ? "all checks passed" : "SOME CHECKS FAILED") << " (" << results.size()
        << " properties)\n";
    return all;
}

} // namespace tubal
