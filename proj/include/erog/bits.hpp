#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

namespace erog {

// Packed bit rows, row-major. The workhorse behind every adjacency
// structure in this project.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(static_cast<size_t>(rows) * words_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int row_words() const { return words_; }

    bool get(int r, int c) const {
        return (data_[static_cast<size_t>(r) * words_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(int r, int c) {
        data_[static_cast<size_t>(r) * words_ + (c >> 6)] |= uint64_t{1} << (c & 63);
    }
    void clear(int r, int c) {
        data_[static_cast<size_t>(r) * words_ + (c >> 6)] &= ~(uint64_t{1} << (c & 63));
    }

    std::span<const uint64_t> row(int r) const {
        return {data_.data() + static_cast<size_t>(r) * words_, static_cast<size_t>(words_)};
    }
    std::span<uint64_t> row(int r) {
        return {data_.data() + static_cast<size_t>(r) * words_, static_cast<size_t>(words_)};
    }

    bool operator==(const BitMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> data_;
};

inline int popcount_row(std::span<const uint64_t> row) {
    int c = 0;
    for (uint64_t w : row) c += std::popcount(w);
    return c;
}

inline int popcount_and(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    int c = 0;
    for (size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

// Visits set bits in ascending position order.
template <typename F>
void for_each_bit(std::span<const uint64_t> row, F&& f) {
    for (size_t i = 0; i < row.size(); ++i) {
        uint64_t w = row[i];
        while (w) {
            f(static_cast<int>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
}

// Growable flat bitset used for scratch masks over vertex sets.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    int words() const { return static_cast<int>(w_.size()); }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void clear(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    void reset() { std::memset(w_.data(), 0, w_.size() * 8); }

    std::span<const uint64_t> span() const { return {w_.data(), w_.size()}; }
    std::span<uint64_t> span() { return {w_.data(), w_.size()}; }

    int count() const { return popcount_row(span()); }

    bool operator==(const BitVec&) const = default;

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace erog
