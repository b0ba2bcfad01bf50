#include "osculant/schur.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace osculant::combinat {

SchubertProblemSpec::SchubertProblemSpec(int k_, int n_,
                                         std::vector<std::pair<Partition, int>> conds)
    : k(k_), n(n_) {
    if (k < 1 || n <= k) throw domain_error("problem: need 1 <= k < n");
    // merge duplicates, drop empty partitions with zero weight
    std::map<Partition, int> merged;
    for (auto& [p, m] : conds) {
        if (m <= 0) throw domain_error("problem: multiplicities must be positive");
        if (!p.fits_in(k, n - k))
            throw domain_error("problem: condition " + p.to_text() + " does not fit in " +
                               std::to_string(k) + "x" + std::to_string(n - k));
        if (p.weight() == 0) throw domain_error("problem: empty condition");
        merged[p] += m;
    }
    for (auto& [p, m] : merged) conditions.emplace_back(p, m);
    std::sort(conditions.begin(), conditions.end(), [](const auto& a, const auto& b) {
        if (a.first.weight() != b.first.weight()) return a.first.weight() > b.first.weight();
        return a.first > b.first;
    });
    int total = 0;
    for (const auto& [p, m] : conditions) total += p.weight() * m;
    if (total != k * (n - k))
        throw domain_error("problem: condition weights sum to " + std::to_string(total) +
                           ", need k(n-k) = " + std::to_string(k * (n - k)));
}

int SchubertProblemSpec::total_multiplicity() const {
    int t = 0;
    for (const auto& [p, m] : conditions) t += m;
    return t;
}

std::vector<Partition> SchubertProblemSpec::occurrences() const {
    std::vector<Partition> out;
    for (const auto& [p, m] : conditions)
        for (int i = 0; i < m; ++i) out.push_back(p);
    return out;
}

bool SchubertProblemSpec::is_hook_family() const {
    if (k < 2 || n - k < 2) return false;
    SchubertProblemSpec ref(k, n, {{hook_complement(k, n), 1}, {Partition{1}, n - 1}});
    return conditions == ref.conditions;
}

bool SchubertProblemSpec::is_symmetric() const {
    if (n != 2 * k) return false;
    for (const auto& [p, m] : conditions)
        if (!p.is_symmetric()) return false;
    return true;
}

std::string SchubertProblemSpec::to_text() const {
    std::string s = "GR(" + std::to_string(k) + "," + std::to_string(n) + "): ";
    for (size_t i = 0; i < conditions.size(); ++i) {
        if (i) s += ", ";
        s += conditions[i].first.to_text();
        if (conditions[i].second > 1) s += "^" + std::to_string(conditions[i].second);
    }
    return s;
}

namespace {

// Pad to exactly `rows` entries.
std::vector<int> padded(const Partition& p, int rows) {
    std::vector<int> v(static_cast<size_t>(rows), 0);
    for (size_t i = 0; i < p.length() && i < v.size(); ++i) v[i] = p.parts()[i];
    return v;
}

// All ways to grow `cur` by a horizontal strip of `size` cells inside
// the rows x cols box: interlacing cur'_j in [cur_j, cur_{j-1}].
void horizontal_strips(const std::vector<int>& cur, int size, int rows, int cols,
                       const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> next(cur.size(), 0);
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (row == rows) {
            if (remaining == 0) emit(next);
            return;
        }
        int hi = (row == 0) ? cols : cur[static_cast<size_t>(row - 1)];
        int lo = cur[static_cast<size_t>(row)];
        for (int v = lo; v <= std::min(hi, lo + remaining); ++v) {
            next[static_cast<size_t>(row)] = v;
            rec(row + 1, remaining - (v - lo));
        }
    };
    rec(0, size);
}

// Reverse reading word of the filling (right to left in each row, top
// to bottom); entry of a cell is the index of the strip that added it.
bool lattice_filling(const std::vector<std::vector<int>>& chain, int rows) {
    const int nstrips = static_cast<int>(chain.size()) - 1;
    std::vector<int> counts(static_cast<size_t>(nstrips) + 1, 0);
    for (int r = 0; r < rows; ++r) {
        int rowLen = chain.back()[static_cast<size_t>(r)];
        for (int c = rowLen - 1; c >= chain.front()[static_cast<size_t>(r)]; --c) {
            int entry = 0;
            for (int s = 1; s <= nstrips; ++s) {
                if (c >= chain[static_cast<size_t>(s - 1)][static_cast<size_t>(r)] &&
                    c < chain[static_cast<size_t>(s)][static_cast<size_t>(r)]) {
                    entry = s;
                    break;
                }
            }
            ++counts[static_cast<size_t>(entry)];
            if (entry >= 2 && counts[static_cast<size_t>(entry)] > counts[static_cast<size_t>(entry - 1)])
                return false;
        }
    }
    return true;
}

} // namespace

std::map<Partition, Integer> schur_product_expand(const Partition& mu, const Partition& lambda,
                                                  int k, int n) {
    const int rows = k, cols = n - k;
    if (!mu.fits_in(rows, cols) || !lambda.fits_in(rows, cols))
        throw domain_error("schur product: partition outside the box");

    std::map<Partition, Integer> out;
    std::vector<std::vector<int>> chain;
    chain.push_back(padded(mu, rows));

    const auto& lam = lambda.parts();
    std::function<void(size_t)> rec = [&](size_t strip) {
        if (strip == lam.size()) {
            if (lattice_filling(chain, rows)) {
                std::vector<int> fin = chain.back();
                out[Partition(fin)] += 1;
            }
            return;
        }
        // copy: growing the chain must not invalidate the row bounds
        std::vector<int> cur = chain.back();
        horizontal_strips(cur, lam[strip], rows, cols, [&](const std::vector<int>& grown) {
            chain.push_back(grown);
            rec(strip + 1);
            chain.pop_back();
        });
    };
    rec(0);
    return out;
}

Integer complex_count(const SchubertProblemSpec& problem, long long term_budget) {
    std::map<Partition, Integer> acc;
    acc[Partition{}] = 1;
    long long work = 0;
    for (const auto& occ : problem.occurrences()) {
        std::map<Partition, Integer> next;
        for (const auto& [mu, coeff] : acc) {
            for (const auto& [nu_p, c] : schur_product_expand(mu, occ, problem.k, problem.n)) {
                next[nu_p] += coeff * c;
                if (++work > term_budget)
                    throw budget_error("complex_count: term budget exceeded");
            }
        }
        acc = std::move(next);
    }
    Partition box = complement(Partition{}, problem.k, problem.n);
    auto it = acc.find(box);
    return it == acc.end() ? Integer(0) : it->second;
}

Integer gaussian_binomial_at_minus_one(int N, int K) {
    if (K < 0 || K > N) throw domain_error("gaussian binomial: need 0 <= K <= N");
    // q-Pascal: [n k] = [n-1 k-1] + q^k [n-1 k], expanded exactly
    std::vector<std::vector<std::vector<Integer>>> table(
        static_cast<size_t>(N) + 1,
        std::vector<std::vector<Integer>>(static_cast<size_t>(K) + 1));
    for (int n_ = 0; n_ <= N; ++n_)
        for (int k_ = 0; k_ <= std::min(n_, K); ++k_) {
            auto& poly = table[static_cast<size_t>(n_)][static_cast<size_t>(k_)];
            if (k_ == 0 || k_ == n_) {
                poly = {Integer(1)};
                continue;
            }
            const auto& a = table[static_cast<size_t>(n_ - 1)][static_cast<size_t>(k_ - 1)];
            const auto& b = table[static_cast<size_t>(n_ - 1)][static_cast<size_t>(k_)];
            poly.assign(std::max(a.size(), b.size() + static_cast<size_t>(k_)), Integer(0));
            for (size_t i = 0; i < a.size(); ++i) poly[i] += a[i];
            for (size_t i = 0; i < b.size(); ++i) poly[i + static_cast<size_t>(k_)] += b[i];
        }
    const auto& poly = table[static_cast<size_t>(N)][static_cast<size_t>(K)];
    Integer v = 0;
    for (size_t i = 0; i < poly.size(); ++i)
        v += (i % 2 == 0) ? poly[i] : -poly[i];
    return abs(v);
}

Integer nu(int k, int n, int r) {
    if (k < 1 || n <= k) throw domain_error("nu: need 1 <= k < n");
    if (r < 0 || r > n - 2) throw domain_error("nu: need 0 <= r <= n-2");
    if ((r - (n - 2)) % 2 != 0)
        throw domain_error("nu: parity violation, r must be congruent to n-2 mod 2");
    const int c = (n - 2 - r) / 2;
    // homogeneous in (x, y); coeffs[j] is the x^j y^(deg-j) coefficient
    std::vector<Integer> coeffs{Integer(1)};
    auto shift_add = [&](int step) {
        std::vector<Integer> next(coeffs.size() + static_cast<size_t>(step), Integer(0));
        for (size_t j = 0; j < coeffs.size(); ++j) {
            next[j] += coeffs[j];
            next[j + static_cast<size_t>(step)] += coeffs[j];
        }
        coeffs = std::move(next);
    };
    for (int i = 0; i < r; ++i) shift_add(1);
    for (int i = 0; i < c; ++i) shift_add(2);
    const size_t want = static_cast<size_t>(n - k - 1);
    return want < coeffs.size() ? coeffs[want] : Integer(0);
}

std::vector<Integer> predicted_real_counts(int k, int n, int r_box) {
    if (r_box < 0 || r_box > n - 1) throw domain_error("predicted_real_counts: r_box out of range");
    if ((r_box - (n - 1)) % 2 != 0)
        throw domain_error("predicted_real_counts: r_box must be congruent to n-1 mod 2");
    int lo = r_box - 1;
    if (lo < 0) lo = (n - 2) % 2; // smallest admissible r with the right parity
    std::set<Integer> vals;
    for (int r = lo; r <= n - 2; r += 2) vals.insert(nu(k, n, r));
    return {vals.begin(), vals.end()};
}

} // namespace osculant::combinat
