#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "liteseg/error.hpp"

namespace liteseg {

using index_t = std::int64_t;

/// Extents of a dense 4-D feature map in batch, channel, height, width order.
struct Shape4 {
    index_t n = 0;
    index_t c = 0;
    index_t h = 0;
    index_t w = 0;

    bool operator==(const Shape4&) const = default;

    index_t numel() const { return n * c * h * w; }

    std::string str() const {
        return "(" + std::to_string(n) + "," + std::to_string(c) + "," + std::to_string(h) +
               "," + std::to_string(w) + ")";
    }
};

/// Throws invalid-shape unless every extent is >= 1 and the element count
/// fits in index_t.
inline void validate_shape(const Shape4& s) {
    const index_t dims[4] = {s.n, s.c, s.h, s.w};
    for (index_t d : dims) {
        if (d < 1) {
            fail_shape("every extent must be >= 1, got " + s.str());
        }
    }
    index_t total = 1;
    for (index_t d : dims) {
        if (total > std::numeric_limits<index_t>::max() / d) {
            fail_shape("element count overflows index range for " + s.str());
        }
        total *= d;
    }
}

/// Dense 4-D tensor, row-major in n -> c -> h -> w order. Operations treat
/// tensors as immutable values and return new ones; mutation is reserved for
/// construction and in-place fills by owners of the unique instance.
template <typename T>
class TensorT {
public:
    TensorT() = default;

    explicit TensorT(const Shape4& shape) : shape_(shape) {
        validate_shape(shape);
        data_.assign(static_cast<std::size_t>(shape.numel()), T(0));
    }

    TensorT(const Shape4& shape, std::vector<T> data) : shape_(shape), data_(std::move(data)) {
        validate_shape(shape);
        if (static_cast<index_t>(data_.size()) != shape.numel()) {
            fail_shape("data length " + std::to_string(data_.size()) +
                       " does not match shape " + shape.str());
        }
    }

    static TensorT zeros(const Shape4& shape) { return TensorT(shape); }

    static TensorT full(const Shape4& shape, T value) {
        TensorT t(shape);
        std::fill(t.data_.begin(), t.data_.end(), value);
        return t;
    }

    const Shape4& shape() const { return shape_; }
    index_t size() const { return static_cast<index_t>(data_.size()); }
    bool empty() const { return data_.empty(); }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    index_t index(index_t n, index_t c, index_t y, index_t x) const {
        return ((n * shape_.c + c) * shape_.h + y) * shape_.w + x;
    }

    T& at(index_t n, index_t c, index_t y, index_t x) {
        return data_[static_cast<std::size_t>(index(n, c, y, x))];
    }
    const T& at(index_t n, index_t c, index_t y, index_t x) const {
        return data_[static_cast<std::size_t>(index(n, c, y, x))];
    }

private:
    Shape4 shape_{};
    std::vector<T> data_;
};

using Tensor = TensorT<float>;
using DTensor = TensorT<double>;

template <typename Dst, typename Src>
TensorT<Dst> tensor_cast(const TensorT<Src>& x) {
    TensorT<Dst> out(x.shape());
    for (index_t i = 0; i < x.size(); ++i) {
        out.data()[static_cast<std::size_t>(i)] =
            static_cast<Dst>(x.data()[static_cast<std::size_t>(i)]);
    }
    return out;
}

template <typename T>
bool all_finite(const TensorT<T>& x) {
    for (T v : x.data()) {
        if (!std::isfinite(static_cast<double>(v))) {
            return false;
        }
    }
    return true;
}

/// Concatenates b's channels after a's. Batch and spatial extents must agree.
template <typename T>
TensorT<T> concat_channels(const TensorT<T>& a, const TensorT<T>& b) {
    const Shape4& sa = a.shape();
    const Shape4& sb = b.shape();
    if (sa.n != sb.n || sa.h != sb.h || sa.w != sb.w) {
        fail_mismatch("concat_channels requires matching batch and spatial extents, got " +
                      sa.str() + " vs " + sb.str());
    }
    TensorT<T> out(Shape4{sa.n, sa.c + sb.c, sa.h, sa.w});
    const index_t plane = sa.h * sa.w;
    for (index_t n = 0; n < sa.n; ++n) {
        T* dst = out.data().data() + n * out.shape().c * plane;
        const T* pa = a.data().data() + n * sa.c * plane;
        const T* pb = b.data().data() + n * sb.c * plane;
        std::copy(pa, pa + sa.c * plane, dst);
        std::copy(pb, pb + sb.c * plane, dst + sa.c * plane);
    }
    return out;
}

/// Returns channels [c0, c1) of x.
template <typename T>
TensorT<T> slice_channels(const TensorT<T>& x, index_t c0, index_t c1) {
    const Shape4& s = x.shape();
    if (c0 < 0 || c1 <= c0 || c1 > s.c) {
        fail_shape("channel slice [" + std::to_string(c0) + "," + std::to_string(c1) +
                   ") out of range for " + s.str());
    }
    TensorT<T> out(Shape4{s.n, c1 - c0, s.h, s.w});
    const index_t plane = s.h * s.w;
    for (index_t n = 0; n < s.n; ++n) {
        const T* src = x.data().data() + (n * s.c + c0) * plane;
        T* dst = out.data().data() + n * (c1 - c0) * plane;
        std::copy(src, src + (c1 - c0) * plane, dst);
    }
    return out;
}

/// Pads the spatial extents with a constant border; interior copies x.
template <typename T>
TensorT<T> pad2d(const TensorT<T>& x, index_t top, index_t bottom, index_t left, index_t right,
                 T value) {
    if (top < 0 || bottom < 0 || left < 0 || right < 0) {
        fail_shape("pad2d amounts must be non-negative");
    }
    const Shape4& s = x.shape();
    TensorT<T> out = TensorT<T>::full(Shape4{s.n, s.c, s.h + top + bottom, s.w + left + right}, value);
    for (index_t n = 0; n < s.n; ++n) {
        for (index_t c = 0; c < s.c; ++c) {
            for (index_t y = 0; y < s.h; ++y) {
                const T* src = x.data().data() + x.index(n, c, y, 0);
                T* dst = out.data().data() + out.index(n, c, y + top, left);
                std::copy(src, src + s.w, dst);
            }
        }
    }
    return out;
}

/// Crops rows [top, top+h) and columns [left, left+w).
template <typename T>
TensorT<T> crop2d(const TensorT<T>& x, index_t top, index_t left, index_t h, index_t w) {
    const Shape4& s = x.shape();
    if (top < 0 || left < 0 || h < 1 || w < 1 || top + h > s.h || left + w > s.w) {
        fail_shape("crop window out of range for " + s.str());
    }
    TensorT<T> out(Shape4{s.n, s.c, h, w});
    for (index_t n = 0; n < s.n; ++n) {
        for (index_t c = 0; c < s.c; ++c) {
            for (index_t y = 0; y < h; ++y) {
                const T* src = x.data().data() + x.index(n, c, y + top, left);
                std::copy(src, src + w, out.data().data() + out.index(n, c, y, 0));
            }
        }
    }
    return out;
}

/// Dense integer label map, one class id per pixel (ignored pixels carry the
/// evaluator's ignore index).
struct LabelMap {
    index_t n = 0;
    index_t h = 0;
    index_t w = 0;
    std::vector<std::int32_t> ids;

    LabelMap() = default;
    LabelMap(index_t n_, index_t h_, index_t w_)
        : n(n_), h(h_), w(w_), ids(static_cast<std::size_t>(n_ * h_ * w_), 0) {
        if (n_ < 1 || h_ < 1 || w_ < 1) {
            fail_shape("label map extents must be >= 1");
        }
    }

    index_t size() const { return static_cast<index_t>(ids.size()); }

    std::int32_t& at(index_t b, index_t y, index_t x) {
        return ids[static_cast<std::size_t>((b * h + y) * w + x)];
    }
    std::int32_t at(index_t b, index_t y, index_t x) const {
        return ids[static_cast<std::size_t>((b * h + y) * w + x)];
    }
};

}  // namespace liteseg
