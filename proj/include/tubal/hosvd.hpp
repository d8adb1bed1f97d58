#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tubal/transform.hpp"

namespace tubal {

/// Plain real dense order-N tensor (no tubal axis), first index fastest.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<Index> dims);
    Tensor(std::vector<Index> dims, Eigen::VectorXd data);

    int order() const { return static_cast<int>(dims_.size()); }
    const std::vector<Index>& dims() const { return dims_; }
    Index dim(int n) const { return dims_.at(n); }
    Index size() const { return data_.size(); }

    const Eigen::VectorXd& data() const { return data_; }
    Eigen::VectorXd& data() { return data_; }

    double entry(const std::vector<Index>& idx) const;
    void set_entry(const std::vector<Index>& idx, double v);

private:
    std::vector<Index> dims_;
    Eigen::VectorXd data_;
};

Tensor operator-(Tensor a, const Tensor& b);
double frobenius_norm(const Tensor& a);

Eigen::MatrixXd unfold(const Tensor& a, int n);
Tensor fold(const Eigen::MatrixXd& m, int n, const std::vector<Index>& dims);
Tensor mode_n_product(const Tensor& a, const Eigen::MatrixXd& u, int n);

/// Classical HOSVD baselines over the same interface shape as the tubal
/// family: core, per-mode orthogonal factors, per-mode singular values of
/// the unfoldings (full spectra), optional truncation.
struct HosvdFactors {
    Tensor core;
    std::vector<Eigen::MatrixXd> factors;
    std::vector<Eigen::VectorXd> singular_values_per_mode;
    std::vector<Index> truncation;

    bool is_truncated() const { return !truncation.empty(); }
};

HosvdFactors hosvd(const Tensor& a);
HosvdFactors tr_hosvd(const Tensor& a, const std::vector<Index>& ranks);
HosvdFactors seq_tr_hosvd(const Tensor& a, const std::vector<Index>& ranks);

Tensor reconstruct(const HosvdFactors& f);
double error_bound(const HosvdFactors& f);
double check_all_orthogonality(const HosvdFactors& f);

} // namespace tubal
