#pragma once

#include <string>

#include "tubal/hosvd.hpp"
#include "tubal/multiway.hpp"

namespace tubal {

/// Binary tensor container ("TTEN"):
///   magic "TTEN" | version u32 = 1 | dtype u8 (0 = float64, 1 = complex128)
///   | order u32 N | (N+1) u64 dims, last = tubal length p
///   | payload, little-endian, first index fastest, tubal index slowest.
/// Complex payload entries are (re, im) float64 pairs.
void write_tensor_file(const std::string& path, const TubalTensor& a);
TubalTensor read_tensor_file(const std::string& path, TransformPtr transform = nullptr);

/// Plain tensors travel as order-N TTEN files with p = 1.
void write_tensor_file(const std::string& path, const Tensor& a);

} // namespace tubal
