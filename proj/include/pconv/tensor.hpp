#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pconv/errors.hpp"

namespace pconv {

/// Dense activation tensor, NCHW row-major, 32-bit floats.
class Tensor4D {
public:
  Tensor4D() = default;
  Tensor4D(int n, int c, int h, int w, float fill = 0.0f)
      : n_(n), c_(c), h_(h), w_(w),
        data_(static_cast<size_t>(n) * c * h * w, fill) {
    check_dims();
  }
  Tensor4D(int n, int c, int h, int w, std::vector<float> data)
      : n_(n), c_(c), h_(h), w_(w), data_(std::move(data)) {
    check_dims();
    if (data_.size() != static_cast<size_t>(n_) * c_ * h_ * w_)
      throw ShapeError("tensor data length " + std::to_string(data_.size()) +
                       " does not match dims " + shape_str());
  }

  int n() const { return n_; }
  int c() const { return c_; }
  int h() const { return h_; }
  int w() const { return w_; }
  size_t size() const { return data_.size(); }

  float& at(int n, int c, int h, int w) { return data_[index(n, c, h, w)]; }
  float at(int n, int c, int h, int w) const { return data_[index(n, c, h, w)]; }

  float* data() { return data_.data(); }
  const float* data() const { return data_.data(); }

  size_t index(int n, int c, int h, int w) const {
    return ((static_cast<size_t>(n) * c_ + c) * h_ + h) * w_ + w;
  }

  std::string shape_str() const {
    return std::to_string(n_) + "x" + std::to_string(c_) + "x" +
           std::to_string(h_) + "x" + std::to_string(w_);
  }

  bool same_shape(const Tensor4D& o) const {
    return n_ == o.n_ && c_ == o.c_ && h_ == o.h_ && w_ == o.w_;
  }

private:
  void check_dims() const {
    if (n_ < 1 || c_ < 1 || h_ < 1 || w_ < 1)
      throw ShapeError("tensor dims must all be >= 1, got " + shape_str());
  }

  int n_ = 1, c_ = 1, h_ = 1, w_ = 1;
  std::vector<float> data_{0.0f};
};

/// Convolution geometry: symmetric zero padding, uniform stride.
struct ConvSpec {
  int stride = 1;
  int padding = 0;
  int kernel_h = 3;
  int kernel_w = 3;
};

struct OutputShape {
  int h = 0;
  int w = 0;
};

/// Output dims per (d + 2*pad - k)/stride + 1. The division must be exact
/// and the result positive, otherwise the spec is inconsistent with the
/// input and a ShapeError is thrown.
OutputShape conv_output_shape(const ConvSpec& spec, int in_h, int in_w);

/// Dense convolution weights: filters x channels x kh x kw, row-major,
/// plus one bias per filter (possibly all zero).
struct DenseConvLayer {
  int filters = 0;
  int channels = 0;
  int kernel_h = 3;
  int kernel_w = 3;
  std::vector<float> weights; // F*C*kh*kw
  std::vector<float> bias;    // F

  size_t weight_index(int f, int c, int ky, int kx) const {
    return ((static_cast<size_t>(f) * channels + c) * kernel_h + ky) * kernel_w + kx;
  }
  float weight(int f, int c, int ky, int kx) const {
    return weights[weight_index(f, c, ky, kx)];
  }

  void validate() const;
};

} // namespace pconv
