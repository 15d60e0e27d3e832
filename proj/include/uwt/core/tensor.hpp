#ifndef UWT_CORE_TENSOR_HPP
#define UWT_CORE_TENSOR_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace uwt {

using Real = double;

/// Dense row-major tensor of doubles. Rank is dynamic (0..4 in practice);
/// images use (C,H,W), batches (N,C,H,W), matrices (rows,cols).
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<long> shape) : shape_(std::move(shape)) {
        data_.assign(static_cast<size_t>(count(shape_)), Real(0));
    }

    Tensor(std::vector<long> shape, std::vector<Real> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        if (static_cast<long>(data_.size()) != count(shape_))
            throw std::invalid_argument("Tensor: data size does not match shape");
    }

    static Tensor zeros(std::vector<long> shape) { return Tensor(std::move(shape)); }

    static Tensor full(std::vector<long> shape, Real v) {
        Tensor t(std::move(shape));
        std::fill(t.data_.begin(), t.data_.end(), v);
        return t;
    }

    static Tensor scalar(Real v) { return full({1}, v); }

    bool empty() const { return data_.empty(); }
    long size() const { return static_cast<long>(data_.size()); }
    int rank() const { return static_cast<int>(shape_.size()); }
    const std::vector<long>& shape() const { return shape_; }
    long shape(int i) const { return shape_.at(static_cast<size_t>(i)); }

    Real* data() { return data_.data(); }
    const Real* data() const { return data_.data(); }
    std::vector<Real>& vec() { return data_; }
    const std::vector<Real>& vec() const { return data_; }

    Real& operator[](long i) { return data_[static_cast<size_t>(i)]; }
    Real operator[](long i) const { return data_[static_cast<size_t>(i)]; }

    // (c,h,w) indexing for rank-3, (n,c,h,w) for rank-4
    Real& at(long c, long h, long w) {
        return data_[static_cast<size_t>((c * shape_[1] + h) * shape_[2] + w)];
    }
    Real at(long c, long h, long w) const {
        return data_[static_cast<size_t>((c * shape_[1] + h) * shape_[2] + w)];
    }
    Real& at(long n, long c, long h, long w) {
        return data_[static_cast<size_t>(((n * shape_[1] + c) * shape_[2] + h) * shape_[3] + w)];
    }
    Real at(long n, long c, long h, long w) const {
        return data_[static_cast<size_t>(((n * shape_[1] + c) * shape_[2] + h) * shape_[3] + w)];
    }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

    Tensor reshaped(std::vector<long> shape) const {
        if (count(shape) != size())
            throw std::invalid_argument("Tensor::reshaped: element count mismatch");
        return Tensor(std::move(shape), data_);
    }

    void fill(Real v) { std::fill(data_.begin(), data_.end(), v); }

    void zero() { fill(Real(0)); }

    bool all_finite() const {
        for (Real v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    Real min() const { return data_.empty() ? Real(0) : *std::min_element(data_.begin(), data_.end()); }
    Real max() const { return data_.empty() ? Real(0) : *std::max_element(data_.begin(), data_.end()); }

    Real sum() const { return std::accumulate(data_.begin(), data_.end(), Real(0)); }
    Real mean() const { return data_.empty() ? Real(0) : sum() / static_cast<Real>(data_.size()); }

    Tensor& operator+=(const Tensor& o) {
        check_same(o, "+=");
        for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        check_same(o, "-=");
        for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Tensor& operator*=(Real s) {
        for (Real& v : data_) v *= s;
        return *this;
    }

    static std::string shape_str(const std::vector<long>& s) {
        std::ostringstream os;
        os << "(";
        for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
        os << ")";
        return os.str();
    }
    std::string shape_str() const { return shape_str(shape_); }

    static long count(const std::vector<long>& shape) {
        long n = 1;
        for (long d : shape) {
            if (d < 0) throw std::invalid_argument("Tensor: negative dimension");
            n *= d;
        }
        return shape.empty() ? 0 : n;
    }

private:
    void check_same(const Tensor& o, const char* op) const {
        if (!same_shape(o))
            throw std::invalid_argument(std::string("Tensor") + op + ": shape mismatch " +
                                        shape_str() + " vs " + o.shape_str());
    }

    std::vector<long> shape_;
    std::vector<Real> data_;
};

} // namespace uwt

#endif
