#include "gph/common/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gph {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

namespace {

struct TwiddleTable {
  int n = 0;
  std::vector<std::complex<double>> fwd;  // e^{-2 pi i j / n}, j < n/2
  std::vector<std::complex<double>> inv;
};

const TwiddleTable& twiddles(int n) {
  thread_local std::vector<TwiddleTable> cache;
  for (const auto& t : cache)
    if (t.n == n) return t;
  TwiddleTable t;
  t.n = n;
  t.fwd.resize(n / 2);
  t.inv.resize(n / 2);
  for (int j = 0; j < n / 2; ++j) {
    double ang = -2.0 * std::numbers::pi * j / n;
    t.fwd[j] = {std::cos(ang), std::sin(ang)};
    t.inv[j] = std::conj(t.fwd[j]);
  }
  cache.push_back(std::move(t));
  return cache.back();
}

}  // namespace

void fft_inplace(std::complex<double>* a, int n, bool inverse) {
  if (n == 1) return;
  if (!is_power_of_two(n)) throw std::invalid_argument("fft length must be a power of two");
  // bit reversal
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const auto& tw = inverse ? twiddles(n).inv : twiddles(n).fwd;
  for (int len = 2; len <= n; len <<= 1) {
    int step = n / len;
    for (int i = 0; i < n; i += len) {
      for (int j = 0; j < len / 2; ++j) {
        std::complex<double> w = tw[static_cast<std::size_t>(j) * step];
        std::complex<double> u = a[i + j];
        std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
}

void fft_axis(std::complex<double>* data, std::size_t count, int axis_len,
              std::size_t stride, bool inverse) {
  if (axis_len == 1) return;
  std::vector<std::complex<double>> line(axis_len);
  const std::size_t block = stride * static_cast<std::size_t>(axis_len);
  for (std::size_t base = 0; base < count; base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      std::complex<double>* p = data + base + off;
      for (int i = 0; i < axis_len; ++i) line[i] = p[static_cast<std::size_t>(i) * stride];
      fft_inplace(line.data(), axis_len, inverse);
      for (int i = 0; i < axis_len; ++i) p[static_cast<std::size_t>(i) * stride] = line[i];
    }
  }
}

}  // namespace gph
