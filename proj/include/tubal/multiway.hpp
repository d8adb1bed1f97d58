#pragma once

#include <vector>

#include "tubal/tubal_algebra.hpp"

namespace tubal {

/// Order-N array of tubal scalars, stored as an I1 x ... x IN x p array with
/// the tubal axis last: flat index = i1 + I1*i2 + I1*I2*i3 + ... (first index
/// fastest), tubal index slowest.
class TubalTensor {
public:
    TubalTensor() = default;
    TubalTensor(std::vector<Index> dims, TransformPtr transform, bool is_real = true);
    TubalTensor(std::vector<Index> dims, TransformPtr transform, Eigen::VectorXcd data,
                bool is_real);

    int order() const { return static_cast<int>(dims_.size()); }
    const std::vector<Index>& dims() const { return dims_; }
    Index dim(int n) const { return dims_.at(n); }
    Index p() const { return transform_ ? transform_->p() : 0; }
    Index spatial_size() const;
    TransformPtr transform() const { return transform_; }
    bool is_real() const { return real_; }
    void set_real(bool r) { real_ = r; }

    const Eigen::VectorXcd& data() const { return data_; }
    Eigen::VectorXcd& data() { return data_; }

    TubalScalar entry(const std::vector<Index>& idx) const;
    void set_entry(const std::vector<Index>& idx, const TubalScalar& v);

    void transform_forward();
    void transform_inverse();

    TubalTensor& operator+=(const TubalTensor& rhs);
    TubalTensor& operator-=(const TubalTensor& rhs);

private:
    std::vector<Index> dims_;
    TransformPtr transform_;
    bool real_ = true;
    Eigen::VectorXcd data_;
};

TubalTensor operator+(TubalTensor a, const TubalTensor& b);
TubalTensor operator-(TubalTensor a, const TubalTensor& b);
TubalTensor operator*(double c, TubalTensor a);

double frobenius_norm(const TubalTensor& a);
Complex inner_product(const TubalTensor& a, const TubalTensor& b);

/// Order-2 tensor <-> tubal matrix views (copies).
TubalMatrix as_matrix(const TubalTensor& a);
TubalTensor as_tensor(const TubalMatrix& a);

/// Mode indices are 0-based: mode n maps entry (i_0,...,i_{N-1}) to row i_n,
/// column j = sum_{k != n} i_k * prod_{m<k, m != n} I_m.
TubalMatrix unfold(const TubalTensor& a, int n);
TubalTensor fold(const TubalMatrix& m, int n, const std::vector<Index>& dims);

/// Result has mode-n size u.rows(); requires u.cols() == a.dim(n).
TubalTensor mode_n_product(const TubalTensor& a, const TubalMatrix& u, int n);

/// Kronecker product under the tensor-tensor product: the entry at
/// (k + i*B.rows(), l + j*B.cols()) is A(i,j) * B(k,l) (0-based; the right
/// factor's index varies fastest, as in the classical Kronecker product).
TubalMatrix tubal_kron(const TubalMatrix& a, const TubalMatrix& b);

/// Left-fold of the binary product over factors.front() kron ... kron factors.back().
TubalMatrix tubal_kron(const std::vector<TubalMatrix>& factors);

int mode_n_tubal_rank(const TubalTensor& a, int n, double tol = 1e-8);

} // namespace tubal
