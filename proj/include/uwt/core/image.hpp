#ifndef UWT_CORE_IMAGE_HPP
#define UWT_CORE_IMAGE_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uwt/core/tensor.hpp"

namespace uwt {

/// Domain membership of a sample in the translation task.
enum class DomainTag { SourceUniformLighting, TargetUnderwater };

inline const char* to_string(DomainTag t) {
    return t == DomainTag::SourceUniformLighting ? "source_uniform_lighting" : "target_underwater";
}

/// Integer raster as decoded from disk, interleaved HWC. `value_max` is the
/// codec maximum (255 or 65535), independent of the declared semantic range.
struct RawRaster {
    long height = 0;
    long width = 0;
    int channels = 0;
    int bit_depth = 8; // 8 or 16
    std::vector<uint16_t> pixels;

    long value_max() const { return bit_depth == 16 ? 65535 : 255; }
    uint16_t at(long y, long x, int c) const {
        return pixels[static_cast<size_t>((y * width + x) * channels + c)];
    }
    uint16_t& at(long y, long x, int c) {
        return pixels[static_cast<size_t>((y * width + x) * channels + c)];
    }
};

/// Closed interval describing the semantic value range of a raster.
struct ValueRange {
    double lo = 0.0;
    double hi = 255.0;
};

/// Normalized channel-first image, the interchange type between all modules.
/// Channel count is 1 (gray/depth), 3 (RGB) or 4 (RGB + depth plane in
/// channel 3). Values live in the canonical [-1, 1] range.
class ImageTensor {
public:
    ImageTensor() = default;

    /// Takes a (C,H,W) tensor. Rejects NaN/Inf and unsupported channel counts.
    explicit ImageTensor(Tensor chw) : data_(std::move(chw)) {
        if (data_.rank() != 3)
            throw std::invalid_argument("ImageTensor: expected rank-3 (C,H,W), got " +
                                        data_.shape_str());
        const long c = data_.shape(0);
        if (c != 1 && c != 3 && c != 4)
            throw std::invalid_argument("ImageTensor: channels must be 1, 3 or 4, got " +
                                        std::to_string(c));
        if (!data_.all_finite())
            throw std::invalid_argument("ImageTensor: non-finite value in image data");
    }

    static ImageTensor zeros(long channels, long height, long width) {
        return ImageTensor(Tensor({channels, height, width}));
    }

    long channels() const { return data_.shape(0); }
    long height() const { return data_.shape(1); }
    long width() const { return data_.shape(2); }

    const Tensor& tensor() const { return data_; }
    Tensor& tensor() { return data_; }

    Real at(long c, long h, long w) const { return data_.at(c, h, w); }
    Real& at(long c, long h, long w) { return data_.at(c, h, w); }

    bool same_spatial(const ImageTensor& o) const {
        return height() == o.height() && width() == o.width();
    }

    /// Channels 0-2 as an RGB image (identity when already 3-channel).
    ImageTensor rgb() const {
        if (channels() == 3) return *this;
        if (channels() < 3)
            throw std::invalid_argument("ImageTensor::rgb: image has fewer than 3 channels");
        Tensor out({3, height(), width()});
        const long plane = height() * width();
        for (long c = 0; c < 3; ++c)
            for (long i = 0; i < plane; ++i)
                out[c * plane + i] = data_[c * plane + i];
        return ImageTensor(std::move(out));
    }

    /// Single channel as a 1-channel image.
    ImageTensor channel(long c) const {
        if (c < 0 || c >= channels())
            throw std::invalid_argument("ImageTensor::channel: index out of range");
        Tensor out({1, height(), width()});
        const long plane = height() * width();
        for (long i = 0; i < plane; ++i) out[i] = data_[c * plane + i];
        return ImageTensor(std::move(out));
    }

private:
    Tensor data_;
};

/// Affine map of a raw raster with a declared semantic range onto [-1, 1].
/// Values outside the declared range clamp to the endpoints.
inline ImageTensor normalize(const RawRaster& raster, ValueRange range) {
    if (!(range.hi > range.lo))
        throw std::invalid_argument("normalize: constant-range image (declared range [" +
                                    std::to_string(range.lo) + ", " + std::to_string(range.hi) +
                                    "] is degenerate)");
    Tensor out({raster.channels, raster.height, raster.width});
    const double scale = 2.0 / (range.hi - range.lo);
    for (long y = 0; y < raster.height; ++y)
        for (long x = 0; x < raster.width; ++x)
            for (int c = 0; c < raster.channels; ++c) {
                double v = scale * (static_cast<double>(raster.at(y, x, c)) - range.lo) - 1.0;
                out.at(c, y, x) = std::clamp(v, -1.0, 1.0);
            }
    return ImageTensor(std::move(out));
}

/// Inverse of normalize, quantizing to the raster bit depth. Round-trip error
/// is at most one quantization step.
inline RawRaster denormalize(const ImageTensor& image, ValueRange range, int bit_depth = 8) {
    if (bit_depth != 8 && bit_depth != 16)
        throw std::invalid_argument("denormalize: bit depth must be 8 or 16");
    RawRaster r;
    r.height = image.height();
    r.width = image.width();
    r.channels = static_cast<int>(image.channels());
    r.bit_depth = bit_depth;
    r.pixels.resize(static_cast<size_t>(r.height * r.width * r.channels));
    const double lo = range.lo, hi = range.hi;
    const double vmax = static_cast<double>(r.value_max());
    for (long y = 0; y < r.height; ++y)
        for (long x = 0; x < r.width; ++x)
            for (int c = 0; c < r.channels; ++c) {
                const double unit = (image.at(c, y, x) + 1.0) * 0.5; // [-1,1] -> [0,1]
                double v = lo + unit * (hi - lo);
                v = std::clamp(v, 0.0, vmax);
                r.at(y, x, c) = static_cast<uint16_t>(std::lround(v));
            }
    return r;
}

/// Depth-plane normalization with a dataset-level (min,max), so depth
/// magnitudes stay comparable across frames.
inline ImageTensor normalize_depth(const RawRaster& raster, double depth_min, double depth_max) {
    if (raster.channels != 1)
        throw std::invalid_argument("normalize_depth: depth raster must be single-channel");
    return normalize(raster, ValueRange{depth_min, depth_max});
}

} // namespace uwt

#endif
