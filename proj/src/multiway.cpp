#include "tubal/multiway.hpp"

#include <numeric>

#include "tubal/tsvd.hpp"

namespace tubal {

namespace {

Index product(const std::vector<Index>& dims) {
    return std::accumulate(dims.begin(), dims.end(), Index{1}, std::multiplies<>());
}

} // namespace

TubalTensor::TubalTensor(std::vector<Index> dims, TransformPtr transform, bool is_real)
    : dims_(std::move(dims)), transform_(std::move(transform)), real_(is_real) {
    if (dims_.empty()) throw dimension_error("tubal tensor order must be >= 1");
    for (Index d : dims_)
        if (d < 1) throw dimension_error("tubal tensor dimensions must be positive");
    data_ = Eigen::VectorXcd::Zero(spatial_size() * transform_->p());
}

TubalTensor::TubalTensor(std::vector<Index> dims, TransformPtr transform, Eigen::VectorXcd data,
                         bool is_real)
    : dims_(std::move(dims)), transform_(std::move(transform)), real_(is_real),
      data_(std::move(data)) {
    if (dims_.empty()) throw dimension_error("tubal tensor order must be >= 1");
    if (data_.size() != spatial_size() * transform_->p())
        throw dimension_error("tubal tensor data size mismatch");
}

Index TubalTensor::spatial_size() const { return product(dims_); }

TubalScalar TubalTensor::entry(const std::vector<Index>& idx) const {
    if (static_cast<int>(idx.size()) != order()) throw dimension_error("index order mismatch");
    Index flat = 0, stride = 1;
    for (int k = 0; k < order(); ++k) {
        flat += idx[k] * stride;
        stride *= dims_[k];
    }
    Eigen::VectorXcd v(p());
    for (Index s = 0; s < p(); ++s) v(s) = data_(flat + s * stride);
    return TubalScalar(std::move(v), transform_);
}

void TubalTensor::set_entry(const std::vector<Index>& idx, const TubalScalar& v) {
    require_same_transform(transform_, v.transform());
    if (static_cast<int>(idx.size()) != order()) throw dimension_error("index order mismatch");
    Index flat = 0, stride = 1;
    for (int k = 0; k < order(); ++k) {
        flat += idx[k] * stride;
        stride *= dims_[k];
    }
    for (Index s = 0; s < p(); ++s) data_(flat + s * stride) = v.values()(s);
    real_ = real_ && v.is_real();
}

void TubalTensor::transform_forward() {
    transform_->apply_forward(data_.data(), spatial_size());
    real_ = false;
}

void TubalTensor::transform_inverse() {
    transform_->apply_inverse(data_.data(), spatial_size());
    real_ = false;
}

TubalTensor& TubalTensor::operator+=(const TubalTensor& rhs) {
    require_same_transform(transform_, rhs.transform_);
    if (dims_ != rhs.dims_) throw dimension_error("tubal tensor shape mismatch");
    data_ += rhs.data_;
    real_ = real_ && rhs.real_;
    return *this;
}

TubalTensor& TubalTensor::operator-=(const TubalTensor& rhs) {
    require_same_transform(transform_, rhs.transform_);
    if (dims_ != rhs.dims_) throw dimension_error("tubal tensor shape mismatch");
    data_ -= rhs.data_;
    real_ = real_ && rhs.real_;
    return *this;
}

TubalTensor operator+(TubalTensor a, const TubalTensor& b) { return a += b; }
TubalTensor operator-(TubalTensor a, const TubalTensor& b) { return a -= b; }
TubalTensor operator*(double c, TubalTensor a) {
    a.data() *= c;
    return a;
}

double frobenius_norm(const TubalTensor& a) { return a.data().norm(); }

Complex inner_product(const TubalTensor& a, const TubalTensor& b) {
    if (a.dims() != b.dims() || a.p() != b.p())
        throw dimension_error("inner product shape mismatch");
    return a.data().dot(b.data());
}

TubalMatrix as_matrix(const TubalTensor& a) {
    if (a.order() != 2) throw dimension_error("as_matrix requires an order-2 tubal tensor");
    return {a.dim(0), a.dim(1), a.transform(), a.data(), a.is_real()};
}

TubalTensor as_tensor(const TubalMatrix& a) {
    return {{a.rows(), a.cols()}, a.transform(), a.data(), a.is_real()};
}

TubalMatrix unfold(const TubalTensor& a, int n) {
    const int order = a.order();
    if (n < 0 || n >= order) throw dimension_error("unfold mode out of range");
    const Index rows = a.dim(n);
    const Index size = a.spatial_size();
    const Index cols = size / rows;
    TubalMatrix m(rows, cols, a.transform(), a.is_real());

    if (n == 0) {
        // Mode-0 unfolding is a pure reshape under this layout.
        m.data() = a.data();
        return m;
    }

    const auto& dims = a.dims();
    const Index row_stride = std::accumulate(dims.begin(), dims.begin() + n, Index{1},
                                             std::multiplies<>());
    const Index inner = row_stride;            // product of dims before mode n
    const Index outer = size / (inner * rows); // product of dims after mode n
    for (Index s = 0; s < a.p(); ++s) {
        const Complex* src = a.data().data() + s * size;
        Complex* dst = m.data().data() + s * size;
        for (Index o = 0; o < outer; ++o)
            for (Index r = 0; r < rows; ++r)
                for (Index i = 0; i < inner; ++i)
                    dst[r + rows * (i + inner * o)] = src[i + inner * (r + rows * o)];
    }
    return m;
}

TubalTensor fold(const TubalMatrix& m, int n, const std::vector<Index>& dims) {
    const int order = static_cast<int>(dims.size());
    if (n < 0 || n >= order) throw dimension_error("fold mode out of range");
    const Index size = product(dims);
    if (m.rows() != dims[n] || m.cols() != size / dims[n])
        throw dimension_error("fold shape inconsistent with dims");
    TubalTensor t(dims, m.transform(), m.is_real());

    if (n == 0) {
        t.data() = m.data();
        return t;
    }

    const Index rows = dims[n];
    const Index inner = std::accumulate(dims.begin(), dims.begin() + n, Index{1},
                                        std::multiplies<>());
    const Index outer = size / (inner * rows);
    for (Index s = 0; s < t.p(); ++s) {
        const Complex* src = m.data().data() + s * size;
        Complex* dst = t.data().data() + s * size;
        for (Index o = 0; o < outer; ++o)
            for (Index r = 0; r < rows; ++r)
                for (Index i = 0; i < inner; ++i)
                    dst[i + inner * (r + rows * o)] = src[r + rows * (i + inner * o)];
    }
    return t;
}

TubalTensor mode_n_product(const TubalTensor& a, const TubalMatrix& u, int n) {
    require_same_transform(a.transform(), u.transform());
    if (n < 0 || n >= a.order()) throw dimension_error("mode product mode out of range");
    if (u.cols() != a.dim(n)) throw dimension_error("mode product dimension mismatch");
    TubalMatrix res = tproduct(u, unfold(a, n));
    std::vector<Index> dims = a.dims();
    dims[n] = u.rows();
    return fold(res, n, dims);
}

TubalMatrix tubal_kron(const TubalMatrix& a, const TubalMatrix& b) {
    require_same_transform(a.transform(), b.transform());
    // In the transform domain the tubal Kronecker product is the classical
    // slice-wise Kronecker product.
    TubalMatrix ah = a, bh = b;
    ah.transform_forward();
    bh.transform_forward();
    TubalMatrix c(a.rows() * b.rows(), a.cols() * b.cols(), a.transform(), false);
    for (Index s = 0; s < a.p(); ++s) {
        auto cs = c.slice(s);
        for (Index j = 0; j < a.cols(); ++j)
            for (Index i = 0; i < a.rows(); ++i)
                cs.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                    ah.slice(s)(i, j) * bh.slice(s);
    }
    c.transform_inverse();
    if (a.is_real() && b.is_real()) {
        detail::realify(c.data());
        c.set_real(true);
    }
    return c;
}

TubalMatrix tubal_kron(const std::vector<TubalMatrix>& factors) {
    if (factors.empty()) throw dimension_error("tubal_kron needs at least one factor");
    TubalMatrix acc = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) acc = tubal_kron(acc, factors[k]);
    return acc;
}

int mode_n_tubal_rank(const TubalTensor& a, int n, double tol) {
    return t_rank(tsvd(unfold(a, n)), tol);
}

} // namespace tubal
