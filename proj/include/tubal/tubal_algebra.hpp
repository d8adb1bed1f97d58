#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tubal/transform.hpp"

namespace tubal {

/// Length-p vector viewed as an element of the ring C_p under the
/// tensor-tensor product.
class TubalScalar {
public:
    TubalScalar(Eigen::VectorXcd values, TransformPtr transform);
    TubalScalar(const Eigen::VectorXd& values, TransformPtr transform);

    const Eigen::VectorXcd& values() const { return values_; }
    TransformPtr transform() const { return transform_; }
    Index p() const { return values_.size(); }
    bool is_real() const { return real_; }
    double norm() const { return values_.norm(); }

    TubalScalar& operator+=(const TubalScalar& rhs);
    TubalScalar& operator-=(const TubalScalar& rhs);

private:
    Eigen::VectorXcd values_;
    TransformPtr transform_;
    bool real_;
};

TubalScalar operator+(TubalScalar a, const TubalScalar& b);
TubalScalar operator-(TubalScalar a, const TubalScalar& b);
TubalScalar operator*(double c, const TubalScalar& a);
TubalScalar operator*(Complex c, const TubalScalar& a);

/// I x J array of tubal scalars, stored as an I x J x p array with the
/// tubal axis last: flat index = i + I*j + I*J*s (column-major slices,
/// tubal index slowest). Immutable transform; data mutable through slices.
class TubalMatrix {
public:
    TubalMatrix() = default;
    TubalMatrix(Index rows, Index cols, TransformPtr transform, bool is_real = true);
    TubalMatrix(Index rows, Index cols, TransformPtr transform, Eigen::VectorXcd data,
                bool is_real);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    Index p() const { return transform_ ? transform_->p() : 0; }
    TransformPtr transform() const { return transform_; }
    bool is_real() const { return real_; }
    void set_real(bool r) { real_ = r; }

    const Eigen::VectorXcd& data() const { return data_; }
    Eigen::VectorXcd& data() { return data_; }

    Eigen::Map<Eigen::MatrixXcd> slice(Index s);
    Eigen::Map<const Eigen::MatrixXcd> slice(Index s) const;

    TubalScalar entry(Index i, Index j) const;
    void set_entry(Index i, Index j, const TubalScalar& v);

    /// In-place tubal-axis transform; other axes untouched.
    void transform_forward();
    void transform_inverse();

    TubalMatrix& operator+=(const TubalMatrix& rhs);
    TubalMatrix& operator-=(const TubalMatrix& rhs);

private:
    Index rows_ = 0, cols_ = 0;
    TransformPtr transform_;
    bool real_ = true;
    Eigen::VectorXcd data_;
};

TubalMatrix operator+(TubalMatrix a, const TubalMatrix& b);
TubalMatrix operator-(TubalMatrix a, const TubalMatrix& b);
TubalMatrix operator*(double c, TubalMatrix a);

// --- ring and matrix operations ------------------------------------------

TubalScalar identity_tubal_scalar(const TransformPtr& t);
TubalScalar scalar_tproduct(const TubalScalar& a, const TubalScalar& b);
TubalScalar hermitian_transpose(const TubalScalar& a);

TubalMatrix face_wise_product(const TubalMatrix& a, const TubalMatrix& b);
TubalMatrix tproduct(const TubalMatrix& a, const TubalMatrix& b);
TubalMatrix hermitian_transpose(const TubalMatrix& a);
TubalMatrix smallt_transpose(const TubalMatrix& a);
TubalMatrix identity_tubal_matrix(Index n, const TransformPtr& t);

double frobenius_norm(const TubalScalar& a);
double frobenius_norm(const TubalMatrix& a);
Complex inner_product(const TubalMatrix& a, const TubalMatrix& b);

bool is_unitary(const TubalMatrix& a, double tol = 1e-8);
bool is_partially_unitary(const TubalMatrix& a, double tol = 1e-8);

/// Columns j0..j0+n-1 as a new tubal matrix (thin views of factors).
TubalMatrix column_block(const TubalMatrix& a, Index j0, Index n);

namespace detail {
/// Asserts the imaginary residual is <= 1e-10 * ||v|| and zeroes it.
void realify(Eigen::VectorXcd& v);
void require_finite(const Eigen::VectorXcd& v);
} // namespace detail

} // namespace tubal
