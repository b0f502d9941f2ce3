#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "pconv/errors.hpp"

namespace pconv {

// Exact arithmetic for the small derivation filters. Entry magnitudes stay
// tiny (|num| < 1e4), so a 64-bit rational never overflows here.
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

/// Small dense 2-D filter with odd dimensions. T is double for sampled
/// filters (Gaussian, LoG) and Rational for the exact derivation chain.
template <typename T>
class FilterGrid {
public:
  FilterGrid() = default;
  FilterGrid(int height, int width, T fill = T(0))
      : h_(height), w_(width), v_(static_cast<size_t>(height) * width, fill) {
    if (height < 1 || width < 1 || height % 2 == 0 || width % 2 == 0)
      throw ShapeError("filter dims must be odd and positive, got " +
                       std::to_string(height) + "x" + std::to_string(width));
  }
  FilterGrid(int height, int width, std::vector<T> values)
      : h_(height), w_(width), v_(std::move(values)) {
    if (height < 1 || width < 1 || height % 2 == 0 || width % 2 == 0)
      throw ShapeError("filter dims must be odd and positive, got " +
                       std::to_string(height) + "x" + std::to_string(width));
    if (v_.size() != static_cast<size_t>(h_) * w_)
      throw ShapeError("filter value count does not match dims");
  }

  int height() const { return h_; }
  int width() const { return w_; }

  T& at(int r, int c) { return v_[static_cast<size_t>(r) * w_ + c]; }
  const T& at(int r, int c) const { return v_[static_cast<size_t>(r) * w_ + c]; }

  const std::vector<T>& values() const { return v_; }

  T sum() const {
    T s(0);
    for (const T& x : v_) s += x;
    return s;
  }

  bool operator==(const FilterGrid& o) const {
    return h_ == o.h_ && w_ == o.w_ && v_ == o.v_;
  }

private:
  int h_ = 1;
  int w_ = 1;
  std::vector<T> v_{T(0)};
};

using Filter2D = FilterGrid<double>;
using RationalFilter = FilterGrid<Rational>;

inline Filter2D to_real(const RationalFilter& f) {
  Filter2D out(f.height(), f.width());
  for (int r = 0; r < f.height(); ++r)
    for (int c = 0; c < f.width(); ++c) out.at(r, c) = to_double(f.at(r, c));
  return out;
}

/// Full 2-D discrete convolution; result dims (ha+hb-1) x (wa+wb-1).
/// Commutative and, in rational mode, exactly associative.
template <typename T>
FilterGrid<T> convolve_filters(const FilterGrid<T>& a, const FilterGrid<T>& b) {
  const int oh = a.height() + b.height() - 1;
  const int ow = a.width() + b.width() - 1;
  FilterGrid<T> out(oh, ow);
  for (int ra = 0; ra < a.height(); ++ra)
    for (int ca = 0; ca < a.width(); ++ca) {
      const T va = a.at(ra, ca);
      if (va == T(0)) continue;
      for (int rb = 0; rb < b.height(); ++rb)
        for (int cb = 0; cb < b.width(); ++cb)
          out.at(ra + rb, ca + cb) += va * b.at(rb, cb);
    }
  return out;
}

/// Unit impulse (identity element of convolution).
template <typename T>
FilterGrid<T> unit_impulse(int height = 1, int width = 1) {
  FilterGrid<T> f(height, width);
  f.at(height / 2, width / 2) = T(1);
  return f;
}

inline RationalFilter rational_filter(int h, int w,
                                      std::initializer_list<long long> ints) {
  std::vector<Rational> v;
  v.reserve(ints.size());
  for (long long x : ints) v.emplace_back(x);
  return RationalFilter(h, w, std::move(v));
}

} // namespace pconv
