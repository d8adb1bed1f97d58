#include "tubal/tubal_algebra.hpp"

#include <cmath>

namespace tubal {

namespace detail {

void realify(Eigen::VectorXcd& v) {
    const double total = v.norm();
    const double imag = v.imag().norm();
    if (imag > 1e-10 * total)
        throw numeric_error("result expected to be real has imaginary residual " +
                            std::to_string(imag / (total > 0 ? total : 1.0)));
    v.imag().setZero();
}

void require_finite(const Eigen::VectorXcd& v) {
    if (!v.allFinite()) throw numeric_error("input contains non-finite values");
}

} // namespace detail

// --- TubalScalar -----------------------------------------------------------

TubalScalar::TubalScalar(Eigen::VectorXcd values, TransformPtr transform)
    : values_(std::move(values)), transform_(std::move(transform)) {
    if (!transform_ || values_.size() != transform_->p())
        throw dimension_error("tubal scalar length does not match transform");
    real_ = values_.imag().isZero(0.0);
}

TubalScalar::TubalScalar(const Eigen::VectorXd& values, TransformPtr transform)
    : TubalScalar(values.cast<Complex>().eval(), std::move(transform)) {}

TubalScalar& TubalScalar::operator+=(const TubalScalar& rhs) {
    require_same_transform(transform_, rhs.transform_);
    values_ += rhs.values_;
    real_ = real_ && rhs.real_;
    return *this;
}

TubalScalar& TubalScalar::operator-=(const TubalScalar& rhs) {
    require_same_transform(transform_, rhs.transform_);
    values_ -= rhs.values_;
    real_ = real_ && rhs.real_;
    return *this;
}

TubalScalar operator+(TubalScalar a, const TubalScalar& b) { return a += b; }
TubalScalar operator-(TubalScalar a, const TubalScalar& b) { return a -= b; }
TubalScalar operator*(double c, const TubalScalar& a) {
    return TubalScalar(Eigen::VectorXcd(c * a.values()), a.transform());
}
TubalScalar operator*(Complex c, const TubalScalar& a) {
    return TubalScalar(Eigen::VectorXcd(c * a.values()), a.transform());
}

TubalScalar identity_tubal_scalar(const TransformPtr& t) {
    Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(t->p());
    Eigen::VectorXcd e = t->inverse(ones);
    if (t->kind() == TransformKind::Dft) detail::realify(e);
    return TubalScalar(std::move(e), t);
}

TubalScalar scalar_tproduct(const TubalScalar& a, const TubalScalar& b) {
    require_same_transform(a.transform(), b.transform());
    const auto& t = *a.transform();
    Eigen::VectorXcd c = t.inverse(t.forward(a.values()).cwiseProduct(t.forward(b.values())));
    if (a.is_real() && b.is_real()) detail::realify(c);
    return TubalScalar(std::move(c), a.transform());
}

TubalScalar hermitian_transpose(const TubalScalar& a) {
    const auto& t = *a.transform();
    Eigen::VectorXcd c = t.inverse(t.forward(a.values()).conjugate());
    if (a.is_real()) detail::realify(c);
    return TubalScalar(std::move(c), a.transform());
}

// --- TubalMatrix -----------------------------------------------------------

TubalMatrix::TubalMatrix(Index rows, Index cols, TransformPtr transform, bool is_real)
    : rows_(rows), cols_(cols), transform_(std::move(transform)), real_(is_real),
      data_(Eigen::VectorXcd::Zero(rows * cols * transform_->p())) {
    if (rows < 0 || cols < 0) throw dimension_error("negative tubal matrix size");
}

TubalMatrix::TubalMatrix(Index rows, Index cols, TransformPtr transform, Eigen::VectorXcd data,
                         bool is_real)
    : rows_(rows), cols_(cols), transform_(std::move(transform)), real_(is_real),
      data_(std::move(data)) {
    if (data_.size() != rows_ * cols_ * transform_->p())
        throw dimension_error("tubal matrix data size mismatch");
}

Eigen::Map<Eigen::MatrixXcd> TubalMatrix::slice(Index s) {
    return {data_.data() + s * rows_ * cols_, rows_, cols_};
}

Eigen::Map<const Eigen::MatrixXcd> TubalMatrix::slice(Index s) const {
    return {data_.data() + s * rows_ * cols_, rows_, cols_};
}

TubalScalar TubalMatrix::entry(Index i, Index j) const {
    Eigen::VectorXcd v(p());
    const Index stride = rows_ * cols_;
    for (Index s = 0; s < p(); ++s) v(s) = data_(i + rows_ * j + s * stride);
    return TubalScalar(std::move(v), transform_);
}

void TubalMatrix::set_entry(Index i, Index j, const TubalScalar& v) {
    require_same_transform(transform_, v.transform());
    const Index stride = rows_ * cols_;
    for (Index s = 0; s < p(); ++s) data_(i + rows_ * j + s * stride) = v.values()(s);
    real_ = real_ && v.is_real();
}

void TubalMatrix::transform_forward() {
    transform_->apply_forward(data_.data(), rows_ * cols_);
    real_ = false;
}

void TubalMatrix::transform_inverse() {
    transform_->apply_inverse(data_.data(), rows_ * cols_);
    real_ = false;
}

TubalMatrix& TubalMatrix::operator+=(const TubalMatrix& rhs) {
    require_same_transform(transform_, rhs.transform_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw dimension_error("tubal matrix shape mismatch in addition");
    data_ += rhs.data_;
    real_ = real_ && rhs.real_;
    return *this;
}

TubalMatrix& TubalMatrix::operator-=(const TubalMatrix& rhs) {
    require_same_transform(transform_, rhs.transform_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw dimension_error("tubal matrix shape mismatch in subtraction");
    data_ -= rhs.data_;
    real_ = real_ && rhs.real_;
    return *this;
}

TubalMatrix operator+(TubalMatrix a, const TubalMatrix& b) { return a += b; }
TubalMatrix operator-(TubalMatrix a, const TubalMatrix& b) { return a -= b; }
TubalMatrix operator*(double c, TubalMatrix a) {
    a.data() *= c;
    return a;
}

// --- operations ------------------------------------------------------------

TubalMatrix face_wise_product(const TubalMatrix& a, const TubalMatrix& b) {
    if (a.cols() != b.rows()) throw dimension_error("face-wise product inner dimension mismatch");
    if (a.p() != b.p()) throw dimension_error("face-wise product tubal length mismatch");
    TubalMatrix c(a.rows(), b.cols(), a.transform(), a.is_real() && b.is_real());
    for (Index s = 0; s < a.p(); ++s) c.slice(s).noalias() = a.slice(s) * b.slice(s);
    return c;
}

TubalMatrix tproduct(const TubalMatrix& a, const TubalMatrix& b) {
    require_same_transform(a.transform(), b.transform());
    if (a.cols() != b.rows()) throw dimension_error("tproduct inner dimension mismatch");
    TubalMatrix ah = a;
    TubalMatrix bh = b;
    ah.transform_forward();
    bh.transform_forward();
    TubalMatrix c(a.rows(), b.cols(), a.transform(), false);
    for (Index s = 0; s < a.p(); ++s) c.slice(s).noalias() = ah.slice(s) * bh.slice(s);
    c.transform_inverse();
    if (a.is_real() && b.is_real()) {
        detail::realify(c.data());
        c.set_real(true);
    }
    return c;
}

TubalMatrix hermitian_transpose(const TubalMatrix& a) {
    TubalMatrix ah = a;
    ah.transform_forward();
    TubalMatrix c(a.cols(), a.rows(), a.transform(), false);
    for (Index s = 0; s < a.p(); ++s) c.slice(s) = ah.slice(s).adjoint();
    c.transform_inverse();
    if (a.is_real()) {
        detail::realify(c.data());
        c.set_real(true);
    }
    return c;
}

TubalMatrix smallt_transpose(const TubalMatrix& a) {
    TubalMatrix c(a.cols(), a.rows(), a.transform(), a.is_real());
    for (Index s = 0; s < a.p(); ++s) c.slice(s) = a.slice(s).transpose();
    return c;
}

TubalMatrix identity_tubal_matrix(Index n, const TransformPtr& t) {
    if (n < 1) throw dimension_error("identity tubal matrix size must be >= 1");
    TubalMatrix c(n, n, t, false);
    for (Index s = 0; s < t->p(); ++s) c.slice(s).setIdentity();
    c.transform_inverse();
    detail::realify(c.data());
    c.set_real(true);
    return c;
}

double frobenius_norm(const TubalScalar& a) { return a.values().norm(); }
double frobenius_norm(const TubalMatrix& a) { return a.data().norm(); }

Complex inner_product(const TubalMatrix& a, const TubalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.p() != b.p())
        throw dimension_error("inner product shape mismatch");
    return a.data().dot(b.data());
}

bool is_unitary(const TubalMatrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    TubalMatrix id = identity_tubal_matrix(a.rows(), a.transform());
    TubalMatrix ah = hermitian_transpose(a);
    return frobenius_norm(tproduct(ah, a) - id) <= tol &&
           frobenius_norm(tproduct(a, ah) - id) <= tol;
}

bool is_partially_unitary(const TubalMatrix& a, double tol) {
    if (a.rows() < a.cols()) return false;
    TubalMatrix id = identity_tubal_matrix(a.cols(), a.transform());
    return frobenius_norm(tproduct(hermitian_transpose(a), a) - id) <= tol;
}

TubalMatrix column_block(const TubalMatrix& a, Index j0, Index n) {
    if (j0 < 0 || n < 0 || j0 + n > a.cols()) throw dimension_error("column block out of range");
    TubalMatrix c(a.rows(), n, a.transform(), a.is_real());
    for (Index s = 0; s < a.p(); ++s) c.slice(s) = a.slice(s).middleCols(j0, n);
    return c;
}

} // namespace tubal
