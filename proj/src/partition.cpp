#include "osculant/partition.hpp"

#include <numeric>

namespace osculant::combinat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw domain_error("partition parts must be nonnegative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw domain_error("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::fits_in(int rows, int cols) const {
    if (static_cast<int>(parts_.size()) > rows) return false;
    return parts_.empty() || parts_[0] <= cols;
}

bool Partition::contains(const Partition& inner) const {
    for (size_t i = 0; i < inner.parts_.size(); ++i)
        if (inner.parts_[i] > part(i)) return false;
    return true;
}

Partition Partition::transpose() const {
    if (parts_.empty()) return {};
    std::vector<int> t(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) t[static_cast<size_t>(j)] += 1;
    return Partition(std::move(t));
}

int Partition::diag_length() const {
    int d = 0;
    while (part(static_cast<size_t>(d)) >= d + 1) ++d;
    return d;
}

std::string Partition::to_text() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ".";
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::from_text(const std::string& text) {
    if (text.empty()) throw domain_error("empty partition literal");
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t dot = text.find('.', pos);
        std::string piece = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        if (piece.empty()) throw domain_error("bad partition literal: '" + text + "'");
        for (char ch : piece)
            if (!isdigit(static_cast<unsigned char>(ch)))
                throw domain_error("bad partition literal: '" + text + "'");
        parts.push_back(std::stoi(piece));
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    return Partition(std::move(parts));
}

Partition complement(const Partition& lambda, int k, int n) {
    if (k < 1 || n <= k) throw domain_error("complement: need 1 <= k < n");
    if (!lambda.fits_in(k, n - k))
        throw domain_error("complement: partition " + lambda.to_text() + " does not fit in " +
                           std::to_string(k) + "x" + std::to_string(n - k));
    std::vector<int> parts(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) parts[static_cast<size_t>(i)] = (n - k) - lambda.part(static_cast<size_t>(k - 1 - i));
    return Partition(std::move(parts));
}

Partition hook_complement(int k, int n) {
    if (k < 2 || n - k < 2) throw domain_error("hook_complement: need k >= 2 and n-k >= 2");
    std::vector<int> parts(static_cast<size_t>(k - 1), n - k - 1);
    return Partition(std::move(parts));
}

Partition full_hook(int k, int n) {
    std::vector<int> parts;
    parts.push_back(n - k);
    for (int i = 1; i < k; ++i) parts.push_back(1);
    return Partition(std::move(parts));
}

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner))
        throw domain_error("skew shape: inner " + inner.to_text() + " not contained in outer " +
                           outer.to_text());
}

size_t SkewShape::cell_count() const {
    return static_cast<size_t>(outer.weight() - inner.weight());
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
    std::vector<std::pair<int, int>> out;
    for (size_t r = 0; r < outer.length(); ++r)
        for (int c = inner.part(r); c < outer.part(r); ++c)
            out.emplace_back(static_cast<int>(r), c);
    return out;
}

std::string SkewShape::to_text() const {
    if (inner.empty()) return outer.to_text();
    return outer.to_text() + "/" + inner.to_text();
}

} // namespace osculant::combinat
