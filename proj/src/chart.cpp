#include "osculant/chart.hpp"

#include <algorithm>

namespace osculant::schubert {

Chart::Chart(ChartKind kind, int k, int n, Partition lambda, Partition mu)
    : kind_(kind), k_(k), n_(n), lambda_(std::move(lambda)), mu_(std::move(mu)),
      pattern_(static_cast<size_t>(k * n)) {
    if (k < 1 || n <= k) throw domain_error("chart: need 1 <= k < n");
    if (!lambda_.fits_in(k, n - k)) throw domain_error("chart: lambda outside the box");
    if (!mu_.fits_in(k, n - k)) throw domain_error("chart: mu outside the box");
}

Chart Chart::full(int k, int n) {
    // identity block on the left, variables on the right
    return at_infinity(k, n, Partition{});
}

Chart Chart::at_infinity(int k, int n, const Partition& lambda) {
    Chart ch(lambda.empty() ? ChartKind::full : ChartKind::at_infinity, k, n, lambda, Partition{});
    std::vector<int> pivot(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i)
        pivot[static_cast<size_t>(i - 1)] = i + lambda.part(static_cast<size_t>(k - i));
    for (int i = 0; i < k; ++i) {
        for (int j = 1; j <= n; ++j) {
            Cell& cell = ch.pattern_[static_cast<size_t>(i * n + j - 1)];
            if (j == pivot[static_cast<size_t>(i)]) {
                cell.kind = Cell::Kind::one;
            } else if (j < pivot[static_cast<size_t>(i)] ||
                       std::find(pivot.begin(), pivot.end(), j) != pivot.end()) {
                cell.kind = Cell::Kind::zero;
            } else {
                cell.kind = Cell::Kind::variable;
            }
        }
    }
    ch.assign_vars();
    return ch;
}

Chart Chart::at_zero_and_infinity(int k, int n, const Partition& mu, const Partition& lambda) {
    Chart ch(ChartKind::at_zero_and_infinity, k, n, lambda, mu);
    for (int i = 1; i <= k; ++i) {
        int lo = i + lambda.part(static_cast<size_t>(k - i));
        int hi = n - k + i - mu.part(static_cast<size_t>(i - 1));
        if (lo > hi)
            throw domain_error("chart: cell for lambda=" + lambda.to_text() + ", mu=" +
                               mu.to_text() + " in Gr(" + std::to_string(k) + "," +
                               std::to_string(n) + ") is empty");
        for (int j = 1; j <= n; ++j) {
            Cell& cell = ch.pattern_[static_cast<size_t>((i - 1) * n + j - 1)];
            if (j == lo)
                cell.kind = Cell::Kind::one;
            else if (j > lo && j <= hi)
                cell.kind = Cell::Kind::variable;
            else
                cell.kind = Cell::Kind::zero;
        }
    }
    ch.assign_vars();
    return ch;
}

void Chart::assign_vars() {
    int slot = 0;
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < n_; ++j) {
            Cell& cell = pattern_[static_cast<size_t>(i * n_ + j)];
            if (cell.kind == Cell::Kind::variable) cell.var = slot++;
        }
    var_order_.resize(static_cast<size_t>(slot));
    for (int s = 0; s < slot; ++s) var_order_[static_cast<size_t>(s)] = s;
    slot_names_.clear();
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Cell& cell = pattern_[static_cast<size_t>(i * n_ + j)];
            if (cell.kind == Cell::Kind::variable)
                slot_names_.push_back("m" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        }
    // expected dimension: k(n-k) minus the anchored weights
    int expect = k_ * (n_ - k_) - lambda_.weight() - mu_.weight();
    if (slot != expect)
        throw domain_error("chart: variable count " + std::to_string(slot) + " != expected " +
                           std::to_string(expect));
}

std::vector<std::string> Chart::var_names() const {
    std::vector<std::string> names;
    names.reserve(var_order_.size());
    for (int slot : var_order_) names.push_back(slot_names_[static_cast<size_t>(slot)]);
    return names;
}

void Chart::rotate_var_last(int var) {
    auto it = std::find(var_order_.begin(), var_order_.end(), var);
    if (it == var_order_.end()) throw domain_error("chart: unknown variable slot");
    var_order_.erase(it);
    var_order_.push_back(var);
}

GaussPolyMatrix Chart::matrix() const {
    const size_t nv = var_order_.size();
    // slot -> declared position
    std::vector<size_t> pos(nv);
    for (size_t p = 0; p < nv; ++p) pos[static_cast<size_t>(var_order_[p])] = p;

    GaussPolyMatrix m(static_cast<size_t>(k_), static_cast<size_t>(n_), nv);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Cell& cell = pattern_[static_cast<size_t>(i * n_ + j)];
            auto& e = m.at(static_cast<size_t>(i), static_cast<size_t>(j));
            switch (cell.kind) {
            case Cell::Kind::zero: break;
            case Cell::Kind::one:
                e = exactalg::GaussMultiPoly::constant(nv, exactalg::GaussianRational(1));
                break;
            case Cell::Kind::variable:
                e = exactalg::GaussMultiPoly::variable(nv, pos[static_cast<size_t>(cell.var)]);
                break;
            }
        }
    return m;
}

std::string Chart::to_ascii() const {
    std::string out;
    for (int i = 0; i < k_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const Cell& cell = pattern_[static_cast<size_t>(i * n_ + j)];
            if (j) out += " ";
            switch (cell.kind) {
            case Cell::Kind::zero: out += "."; break;
            case Cell::Kind::one: out += "1"; break;
            case Cell::Kind::variable: out += "x"; break;
            }
        }
        out += "\n";
    }
    return out;
}

std::string Chart::descriptor() const {
    switch (kind_) {
    case ChartKind::full: return "full[vars=" + std::to_string(var_count()) + "]";
    case ChartKind::at_infinity:
        return "inf[" + lambda_.to_text() + ",vars=" + std::to_string(var_count()) + "]";
    case ChartKind::at_zero_and_infinity:
        return "inf+0[" + lambda_.to_text() + "@inf," + mu_.to_text() +
               "@0,vars=" + std::to_string(var_count()) + "]";
    }
    return "?";
}

} // namespace osculant::schubert
