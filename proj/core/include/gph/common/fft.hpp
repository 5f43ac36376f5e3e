#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gph {

// Iterative radix-2 FFT for power-of-two lengths. Forward uses the e^{-i k x}
// sign and is unnormalized; pairing fft_forward with a 1/n scale gives the
// coefficient convention c_k = (1/n) sum_x v(x) e^{-2 pi i k x / n}, whose
// exact inverse is fft_inverse without any scale.
bool is_power_of_two(int n);

void fft_inplace(std::complex<double>* data, int n, bool inverse);

// Applies the FFT along one axis of a row-major multi-axis array.
// `count` is the total number of elements, `axis_len` the axis length and
// `stride` the distance between consecutive entries along the axis.
void fft_axis(std::complex<double>* data, std::size_t count, int axis_len,
              std::size_t stride, bool inverse);

}  // namespace gph
