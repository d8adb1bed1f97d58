#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>

#include "tubal/errors.hpp"

namespace tubal {

using Index = Eigen::Index;
using Complex = std::complex<double>;

enum class TransformKind {
    Dft,             // non-normalized DFT, c = sqrt(p)
    ScaledUnitary,   // L = cW with W unitary
    General          // any invertible matrix
};

class Transform;
using TransformPtr = std::shared_ptr<const Transform>;

/// Invertible linear map acting on length-p tubal fibers. Immutable; all
/// methods are const and safe for concurrent use.
class Transform {
public:
    static TransformPtr dft(Index p);
    /// Accepts M with M M^H = |c|^2 I (checked to 1e-10 relative).
    static TransformPtr scaled_unitary(const Eigen::MatrixXcd& m);
    /// Any invertible matrix; rejected if cond(M) > 1e12.
    static TransformPtr general(const Eigen::MatrixXcd& m);

    Index p() const { return p_; }
    TransformKind kind() const { return kind_; }
    bool is_scaled_unitary() const { return kind_ != TransformKind::General; }
    /// |c| for DFT / scaled-unitary kinds; throws for general transforms.
    double c_magnitude() const;

    Eigen::VectorXcd forward(const Eigen::VectorXcd& x) const;
    Eigen::VectorXcd inverse(const Eigen::VectorXcd& y) const;

    /// Transforms every length-p fiber of a flat array laid out with the
    /// tubal index slowest: entry e of slice s sits at data[e + s*fibers].
    void apply_forward(Complex* data, Index fibers) const;
    void apply_inverse(Complex* data, Index fibers) const;

    const Eigen::MatrixXcd& forward_matrix() const { return fwd_; }
    const Eigen::MatrixXcd& inverse_matrix() const { return inv_; }

    friend bool operator==(const Transform& a, const Transform& b);
    friend bool operator!=(const Transform& a, const Transform& b) { return !(a == b); }

private:
    Transform(Index p, TransformKind kind, Eigen::MatrixXcd fwd, Eigen::MatrixXcd inv,
              double c_magnitude)
        : p_(p), kind_(kind), fwd_(std::move(fwd)), inv_(std::move(inv)),
          c_magnitude_(c_magnitude) {}

    Index p_;
    TransformKind kind_;
    Eigen::MatrixXcd fwd_;
    Eigen::MatrixXcd inv_;
    double c_magnitude_;
};

/// Throws transform_mismatch unless both pointers refer to equal transforms.
void require_same_transform(const TransformPtr& a, const TransformPtr& b);

} // namespace tubal
