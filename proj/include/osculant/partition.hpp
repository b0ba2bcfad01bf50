#pragma once

#include <vector>
#include <string>
#include <compare>

#include "osculant/errors.hpp"

namespace osculant::combinat {

// Weakly decreasing sequence of nonnegative integers. Trailing zeros
// are accepted on input and stripped, so equality and ordering act on
// the normalized form.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    size_t length() const { return parts_.size(); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    bool fits_in(int rows, int cols) const;
    bool contains(const Partition& inner) const;
    Partition transpose() const;
    bool is_symmetric() const { return *this == transpose(); }
    // boxes on the main diagonal: max i with part(i-1) >= i
    int diag_length() const;

    // dot-separated text form, e.g. "3.1.1"; the empty partition is "0"
    std::string to_text() const;
    static Partition from_text(const std::string& text);

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

// (n-k-lambda_k, ..., n-k-lambda_1), the complement in the k x (n-k) box.
Partition complement(const Partition& lambda, int k, int n);

// ((n-k-1)^(k-1), 0); its complement is the full hook (n-k, 1^(k-1)).
Partition hook_complement(int k, int n);

Partition full_hook(int k, int n);

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition out, Partition in);
    explicit SkewShape(Partition out) : SkewShape(std::move(out), Partition{}) {}

    size_t cell_count() const;
    // (row, col) pairs in reading order: rows top to bottom, left to right
    std::vector<std::pair<int, int>> cells() const;
    std::string to_text() const;
};

} // namespace osculant::combinat
