#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tubal/bench.hpp"
#include "tubal/hilbert.hpp"
#include "tubal/hotsvd.hpp"
#include "tubal/selftest.hpp"
#include "tubal/tensor_file.hpp"
#include "tubal/tsvd.hpp"

namespace py = pybind11;
using namespace tubal;

namespace {

// Arrays cross the boundary in the library's native layout: shape
// (I1, ..., IN, p), Fortran order (first index fastest, tubal axis slowest).

TubalTensor tensor_from_array(py::array_t<std::complex<double>, py::array::f_style |
                                                                    py::array::forcecast> arr,
                              Index p_hint) {
    const py::buffer_info info = arr.request();
    if (info.ndim < 2) throw py::value_error("need at least 2 axes (mode, tubal)");
    std::vector<Index> dims(info.shape.begin(), info.shape.end() - 1);
    const Index p = info.shape.back();
    if (p_hint && p_hint != p) throw py::value_error("tubal axis does not match transform");
    Eigen::VectorXcd data = Eigen::Map<const Eigen::VectorXcd>(
        static_cast<const std::complex<double>*>(info.ptr), info.size);
    const bool real = data.imag().norm() == 0.0;
    return TubalTensor(std::move(dims), Transform::dft(p), std::move(data), real);
}

py::array tensor_to_array(const TubalTensor& a) {
    std::vector<py::ssize_t> shape(a.dims().begin(), a.dims().end());
    shape.push_back(a.p());
    py::array_t<std::complex<double>, py::array::f_style> out(shape);
    Eigen::Map<Eigen::VectorXcd>(out.mutable_data(), a.data().size()) = a.data();
    return out;
}

py::array matrix_to_array(const TubalMatrix& m) {
    std::vector<py::ssize_t> shape = {m.rows(), m.cols(), m.p()};
    py::array_t<std::complex<double>, py::array::f_style> out(shape);
    Eigen::Map<Eigen::VectorXcd>(out.mutable_data(), m.data().size()) = m.data();
    return out;
}

TubalMatrix matrix_from_array(py::array arr) {
    py::array_t<std::complex<double>, py::array::f_style | py::array::forcecast> a(arr);
    const py::buffer_info info = a.request();
    if (info.ndim != 3) throw py::value_error("tubal matrix arrays have 3 axes (I, J, p)");
    Eigen::VectorXcd data = Eigen::Map<const Eigen::VectorXcd>(
        static_cast<const std::complex<double>*>(info.ptr), info.size);
    const bool real = data.imag().norm() == 0.0;
    return TubalMatrix(info.shape[0], info.shape[1], Transform::dft(info.shape[2]),
                       std::move(data), real);
}

} // namespace

PYBIND11_MODULE(_pytubal, m) {
    m.doc() = "Tubal tensor calculus: t-SVD and the Hot-SVD family";

    m.def(
        "tsvd",
        [](py::array arr) {
            TsvdFactors f = tsvd(matrix_from_array(arr));
            return py::make_tuple(matrix_to_array(f.U), matrix_to_array(f.S),
                                  matrix_to_array(f.V), f.slice_norms);
        },
        py::arg("a"), "Full t-SVD (DFT transform); returns (U, S, V, slice_norms).");

    m.def(
        "tproduct",
        [](py::array a, py::array b) {
            return matrix_to_array(tproduct(matrix_from_array(a), matrix_from_array(b)));
        },
        py::arg("a"), py::arg("b"), "Tensor-tensor product of two tubal matrices (DFT).");

    auto unpack = [](HotSvdFactors f) {
        py::list factors;
        for (const auto& u : f.factors) factors.append(matrix_to_array(u));
        return py::make_tuple(tensor_to_array(f.core), factors, f.slice_norms_per_mode,
                              error_bound(f));
    };

    m.def(
        "hotsvd",
        [unpack](py::array arr) { return unpack(hotsvd(tensor_from_array(arr, 0))); },
        py::arg("a"), "Full Hot-SVD; returns (core, factors, spectra, bound=0).");

    m.def(
        "tr_hotsvd",
        [unpack](py::array arr, const std::vector<Index>& ranks) {
            return unpack(tr_hotsvd(tensor_from_array(arr, 0), ranks));
        },
        py::arg("a"), py::arg("ranks"), "Truncated Hot-SVD (all modes at once).");

    m.def(
        "seq_tr_hotsvd",
        [unpack](py::array arr, const std::vector<Index>& ranks) {
            return unpack(seq_tr_hotsvd(tensor_from_array(arr, 0), ranks));
        },
        py::arg("a"), py::arg("ranks"), "Sequentially truncated Hot-SVD.");

    m.def(
        "reconstruct",
        [](py::array core, py::list factors) {
            HotSvdFactors f;
            f.core = tensor_from_array(core, 0);
            for (auto item : factors)
                f.factors.push_back(matrix_from_array(item.cast<py::array>()));
            return tensor_to_array(reconstruct(f));
        },
        py::arg("core"), py::arg("factors"), "core x1 U1 ... xN UN.");

    m.def(
        "hilbert_demo_pass",
        []() {
            std::ostringstream sink;
            return run_hilbert_demo(sink).pass;
        },
        "Runs the Hilbert regression quietly; True iff the reference values match.");

    m.def(
        "selftest",
        []() {
            for (const auto& r : run_selftest())
                if (!r.pass) return false;
            return true;
        },
        "Runs the invariant suite; True iff every property holds.");

    m.def("read_tten", [](const std::string& path) { return tensor_to_array(read_tensor_file(path)); },
          py::arg("path"));
    m.def(
        "write_tten",
        [](const std::string& path, py::array arr) {
            write_tensor_file(path, tensor_from_array(arr, 0));
        },
        py::arg("path"), py::arg("a"));
}
