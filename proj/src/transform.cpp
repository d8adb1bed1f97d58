#include "tubal/transform.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>

namespace tubal {

TransformPtr Transform::dft(Index p) {
    if (p < 1) throw dimension_error("tubal length must be positive");
    Eigen::MatrixXcd fwd(p, p);
    const double w = -2.0 * std::numbers::pi / static_cast<double>(p);
    for (Index j = 0; j < p; ++j)
        for (Index k = 0; k < p; ++k)
            fwd(j, k) = std::polar(1.0, w * static_cast<double>(j * k));
    Eigen::MatrixXcd inv = fwd.adjoint() / static_cast<double>(p);
    return TransformPtr(new Transform(p, TransformKind::Dft, std::move(fwd), std::move(inv),
                                      std::sqrt(static_cast<double>(p))));
}

TransformPtr Transform::scaled_unitary(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw dimension_error("transform matrix must be square");
    const Index p = m.rows();
    const double c2 = m.squaredNorm() / static_cast<double>(p);
    Eigen::MatrixXcd gram = m * m.adjoint();
    gram.diagonal().array() -= c2;
    if (gram.norm() > 1e-10 * c2 * std::sqrt(static_cast<double>(p)) || c2 <= 0.0)
        throw invalid_transform("matrix is not a scalar multiple of a unitary matrix");
    Eigen::MatrixXcd inv = m.adjoint() / c2;
    return TransformPtr(new Transform(p, TransformKind::ScaledUnitary, m, std::move(inv),
                                      std::sqrt(c2)));
}

TransformPtr Transform::general(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw dimension_error("transform matrix must be square");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > 1e12)
        throw invalid_transform("transform matrix is singular or ill-conditioned");
    Eigen::MatrixXcd inv = m.inverse();
    return TransformPtr(new Transform(m.rows(), TransformKind::General, m, std::move(inv), 0.0));
}

double Transform::c_magnitude() const {
    if (!is_scaled_unitary())
        throw unsupported_transform("|c| is defined only for scaled-unitary transforms");
    return c_magnitude_;
}

Eigen::VectorXcd Transform::forward(const Eigen::VectorXcd& x) const {
    if (x.size() != p_) throw dimension_error("fiber length does not match transform");
    return fwd_ * x;
}

Eigen::VectorXcd Transform::inverse(const Eigen::VectorXcd& y) const {
    if (y.size() != p_) throw dimension_error("fiber length does not match transform");
    return inv_ * y;
}

void Transform::apply_forward(Complex* data, Index fibers) const {
    Eigen::Map<Eigen::MatrixXcd> x(data, fibers, p_);
    x = (x * fwd_.transpose()).eval();
}

void Transform::apply_inverse(Complex* data, Index fibers) const {
    Eigen::Map<Eigen::MatrixXcd> x(data, fibers, p_);
    x = (x * inv_.transpose()).eval();
}

bool operator==(const Transform& a, const Transform& b) {
    if (&a == &b) return true;
    if (a.p_ != b.p_ || a.kind_ != b.kind_) return false;
    if (a.kind_ == TransformKind::Dft) return true;
    return a.fwd_ == b.fwd_;
}

void require_same_transform(const TransformPtr& a, const TransformPtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b))
        throw transform_mismatch("operands carry different transforms");
}

} // namespace tubal
