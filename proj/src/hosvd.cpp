#include "tubal/hosvd.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numeric>

#include "tubal/errors.hpp"

namespace tubal {

namespace {

Index prod(const std::vector<Index>& dims) {
    Index acc = 1;
    for (Index d : dims) acc *= d;
    return acc;
}

Index flat_index(const std::vector<Index>& dims, const std::vector<Index>& idx) {
    if (idx.size() != dims.size()) throw dimension_error("index order mismatch");
    Index flat = 0, stride = 1;
    for (size_t k = 0; k < dims.size(); ++k) {
        if (idx[k] < 0 || idx[k] >= dims[k]) throw dimension_error("index out of range");
        flat += idx[k] * stride;
        stride *= dims[k];
    }
    return flat;
}

void check_ranks(const Tensor& a, const std::vector<Index>& ranks) {
    if (static_cast<int>(ranks.size()) != a.order())
        throw dimension_error("one truncation rank per mode required");
    for (int n = 0; n < a.order(); ++n) {
        const Index other = a.size() / a.dim(n);
        if (ranks[n] < 1 || ranks[n] > std::min(a.dim(n), other))
            throw dimension_error("truncation rank out of range for mode " + std::to_string(n));
    }
}

} // namespace

Tensor::Tensor(std::vector<Index> dims) : dims_(std::move(dims)) {
    data_ = Eigen::VectorXd::Zero(prod(dims_));
}

Tensor::Tensor(std::vector<Index> dims, Eigen::VectorXd data) : dims_(std::move(dims)) {
    if (data.size() != prod(dims_)) throw dimension_error("data size does not match dims");
    data_ = std::move(data);
}

double Tensor::entry(const std::vector<Index>& idx) const {
    return data_(flat_index(dims_, idx));
}

void Tensor::set_entry(const std::vector<Index>& idx, double v) {
    data_(flat_index(dims_, idx)) = v;
}

Tensor operator-(Tensor a, const Tensor& b) {
    if (a.dims() != b.dims()) throw dimension_error("tensor shape mismatch");
    a.data() -= b.data();
    return a;
}

double frobenius_norm(const Tensor& a) { return a.data().norm(); }

Eigen::MatrixXd unfold(const Tensor& a, int n) {
    if (n < 0 || n >= a.order()) throw dimension_error("mode out of range");
    const Index rows = a.dim(n);
    const Index cols = a.size() / rows;
    Eigen::MatrixXd m(rows, cols);
    Index inner = 1;
    for (int k = 0; k < n; ++k) inner *= a.dim(k);
    const Index outer = cols / inner;
    for (Index o = 0; o < outer; ++o)
        for (Index r = 0; r < rows; ++r)
            for (Index i = 0; i < inner; ++i)
                m(r, i + inner * o) = a.data()(i + inner * (r + rows * o));
    return m;
}

Tensor fold(const Eigen::MatrixXd& m, int n, const std::vector<Index>& dims) {
    Tensor out(dims);
    if (n < 0 || n >= out.order()) throw dimension_error("mode out of range");
    const Index rows = dims[n];
    if (m.rows() != rows || m.cols() != out.size() / rows)
        throw dimension_error("matrix shape does not match fold dims");
    Index inner = 1;
    for (int k = 0; k < n; ++k) inner *= dims[k];
    const Index outer = m.cols() / inner;
    for (Index o = 0; o < outer; ++o)
        for (Index r = 0; r < rows; ++r)
            for (Index i = 0; i < inner; ++i)
                out.data()(i + inner * (r + rows * o)) = m(r, i + inner * o);
    return out;
}

Tensor mode_n_product(const Tensor& a, const Eigen::MatrixXd& u, int n) {
    if (n < 0 || n >= a.order()) throw dimension_error("mode out of range");
    if (u.cols() != a.dim(n)) throw dimension_error("factor width does not match mode size");
    Eigen::MatrixXd m = u * unfold(a, n);
    std::vector<Index> dims = a.dims();
    dims[n] = u.rows();
    return fold(m, n, dims);
}

HosvdFactors hosvd(const Tensor& a) {
    HosvdFactors f;
    const int N = a.order();
    f.singular_values_per_mode.resize(N);
    Tensor core = a;
    for (int n = 0; n < N; ++n) {
        Eigen::MatrixXd m = unfold(a, n);
        const unsigned opts = (m.rows() > m.cols() ? Eigen::ComputeFullU : Eigen::ComputeThinU);
        Eigen::BDCSVD<Eigen::MatrixXd> svd(m, opts);
        f.singular_values_per_mode[n] = svd.singularValues();
        f.factors.push_back(svd.matrixU());
        core = mode_n_product(core, svd.matrixU().transpose(), n);
    }
    f.core = std::move(core);
    return f;
}

HosvdFactors tr_hosvd(const Tensor& a, const std::vector<Index>& ranks) {
    check_ranks(a, ranks);
    HosvdFactors f;
    f.truncation = ranks;
    const int N = a.order();
    f.singular_values_per_mode.resize(N);
    Tensor core = a;
    for (int n = 0; n < N; ++n) {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(unfold(a, n), Eigen::ComputeThinU);
        f.singular_values_per_mode[n] = svd.singularValues();
        Eigen::MatrixXd u = svd.matrixU().leftCols(ranks[n]);
        core = mode_n_product(core, u.transpose(), n);
        f.factors.push_back(std::move(u));
    }
    f.core = std::move(core);
    return f;
}

HosvdFactors seq_tr_hosvd(const Tensor& a, const std::vector<Index>& ranks) {
    check_ranks(a, ranks);
    HosvdFactors f;
    f.truncation = ranks;
    const int N = a.order();
    f.singular_values_per_mode.resize(N);
    f.factors.resize(N);
    Tensor current = a;
    std::vector<Index> dims = a.dims();
    for (int n = 0; n < N; ++n) {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(unfold(current, n),
                                           Eigen::ComputeThinU | Eigen::ComputeThinV);
        f.singular_values_per_mode[n] = svd.singularValues();
        const Index r = ranks[n];
        Eigen::MatrixXd shrunk = svd.singularValues().head(r).asDiagonal() *
                                 svd.matrixV().leftCols(r).transpose();
        f.factors[n] = svd.matrixU().leftCols(r);
        dims[n] = r;
        current = fold(shrunk, n, dims);
    }
    f.core = std::move(current);
    return f;
}

Tensor reconstruct(const HosvdFactors& f) {
    Tensor out = f.core;
    for (int n = 0; n < static_cast<int>(f.factors.size()); ++n)
        out = mode_n_product(out, f.factors[n], n);
    return out;
}

double error_bound(const HosvdFactors& f) {
    if (!f.is_truncated()) return 0.0;
    double acc = 0.0;
    for (size_t n = 0; n < f.singular_values_per_mode.size(); ++n) {
        const auto& sv = f.singular_values_per_mode[n];
        for (Index i = f.truncation[n]; i < sv.size(); ++i) acc += sv(i) * sv(i);
    }
    return std::sqrt(acc);
}

double check_all_orthogonality(const HosvdFactors& f) {
    double worst = 0.0;
    for (int n = 0; n < f.core.order(); ++n) {
        Eigen::MatrixXd m = unfold(f.core, n);
        Eigen::MatrixXd g = m * m.transpose();
        for (Index i = 0; i < g.rows(); ++i)
            for (Index j = 0; j < g.cols(); ++j)
                if (i != j) worst = std::max(worst, std::abs(g(i, j)));
    }
    return worst;
}

} // namespace tubal
