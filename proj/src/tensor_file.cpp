#include "tubal/tensor_file.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "tubal/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "TensorFile serialization assumes a little-endian host");

namespace tubal {

namespace {

constexpr char kMagic[4] = {'T', 'T', 'E', 'N'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ofstream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
T get(std::ifstream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(v));
    if (!in) throw io_error("truncated tensor file");
    return v;
}

struct Header {
    std::uint8_t dtype;
    std::vector<Index> dims; // N+1 entries, last = p
};

Header read_header(std::ifstream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0) throw io_error("bad magic: not a TTEN file");
    if (get<std::uint32_t>(in) != kVersion) throw io_error("unsupported TTEN version");
    Header h;
    h.dtype = get<std::uint8_t>(in);
    if (h.dtype > 1) throw io_error("unknown TTEN dtype");
    const std::uint32_t order = get<std::uint32_t>(in);
    if (order < 1 || order > 64) throw io_error("implausible TTEN order");
    h.dims.resize(order + 1);
    for (auto& d : h.dims) {
        d = static_cast<Index>(get<std::uint64_t>(in));
        if (d < 1) throw io_error("nonpositive TTEN dimension");
    }
    return h;
}

void write_header(std::ofstream& out, std::uint8_t dtype, const std::vector<Index>& dims,
                  Index p) {
    out.write(kMagic, 4);
    put(out, kVersion);
    put(out, dtype);
    put(out, static_cast<std::uint32_t>(dims.size()));
    for (Index d : dims) put(out, static_cast<std::uint64_t>(d));
    put(out, static_cast<std::uint64_t>(p));
}

} // namespace

void write_tensor_file(const std::string& path, const TubalTensor& a) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    const std::uint8_t dtype = a.is_real() ? 0 : 1;
    write_header(out, dtype, a.dims(), a.p());
    const Index count = a.data().size();
    if (dtype == 0) {
        for (Index i = 0; i < count; ++i) put(out, a.data()(i).real());
    } else {
        for (Index i = 0; i < count; ++i) {
            put(out, a.data()(i).real());
            put(out, a.data()(i).imag());
        }
    }
    if (!out) throw io_error("write failed: " + path);
}

void write_tensor_file(const std::string& path, const Tensor& a) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    std::vector<Index> dims = a.dims();
    if (dims.empty()) throw io_error("cannot serialize an order-0 tensor");
    const Index p = dims.back();
    dims.pop_back();
    write_header(out, 0, dims, p);
    for (Index i = 0; i < a.size(); ++i) put(out, a.data()(i));
    if (!out) throw io_error("write failed: " + path);
}

TubalTensor read_tensor_file(const std::string& path, TransformPtr transform) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    const Header h = read_header(in);
    const Index p = h.dims.back();
    std::vector<Index> dims(h.dims.begin(), h.dims.end() - 1);
    if (!transform) transform = Transform::dft(p);
    if (transform->p() != p) throw transform_mismatch("transform length does not match file");

    Index count = p;
    for (Index d : dims) count *= d;
    Eigen::VectorXcd data(count);
    if (h.dtype == 0) {
        for (Index i = 0; i < count; ++i) data(i) = get<double>(in);
    } else {
        for (Index i = 0; i < count; ++i) {
            const double re = get<double>(in);
            const double im = get<double>(in);
            data(i) = Complex(re, im);
        }
    }
    return TubalTensor(std::move(dims), std::move(transform), std::move(data), h.dtype == 0);
}

} // namespace tubal
