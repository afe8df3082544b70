#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cofin {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A weakly increasing map [m] -> [n] between finite ordinals,
/// stored as the explicit value tuple (values[0], ..., values[m]).
struct MonotoneMap {
    int source_rank = 0;  // m, domain is {0,...,m}
    int target_rank = 0;  // n
    std::vector<int> values;

    MonotoneMap() : values{0} {}
    MonotoneMap(int m, int n, std::vector<int> vals)
        : source_rank(m), target_rank(n), values(std::move(vals)) {
        if (static_cast<int>(values.size()) != m + 1)
            throw error("monotone map: wrong tuple length");
        int prev = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            int v = values[i];
            if (v < 0 || v > n) throw error("monotone map: value out of range");
            if (i > 0 && v < prev) throw error("monotone map: not weakly increasing");
            prev = v;
        }
    }

    int operator()(int i) const { return values.at(static_cast<std::size_t>(i)); }

    bool is_identity() const {
        if (source_rank != target_rank) return false;
        for (int i = 0; i <= source_rank; ++i)
            if (values[i] != i) return false;
        return true;
    }
    bool is_injective() const {
        for (int i = 0; i < source_rank; ++i)
            if (values[i] == values[i + 1]) return false;
        return true;
    }
    bool is_surjective() const {
        // weakly increasing, so surjective iff 0 and n are hit and no gaps
        if (values.front() != 0 || values.back() != target_rank) return false;
        for (int i = 0; i < source_rank; ++i)
            if (values[i + 1] - values[i] > 1) return false;
        return true;
    }

    friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
        return a.source_rank == b.source_rank && a.target_rank == b.target_rank &&
               a.values == b.values;
    }
    friend bool operator<(const MonotoneMap& a, const MonotoneMap& b) {
        if (a.source_rank != b.source_rank) return a.source_rank < b.source_rank;
        if (a.target_rank != b.target_rank) return a.target_rank < b.target_rank;
        return a.values < b.values;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i <= source_rank; ++i) {
            if (i) s += ",";
            s += std::to_string(values[i]);
        }
        s += "):" + std::to_string(source_rank) + ">" + std::to_string(target_rank);
        return s;
    }
};

inline MonotoneMap identity_map(int n) {
    std::vector<int> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
    return MonotoneMap(n, n, std::move(v));
}

/// Coface d^i : [n-1] -> [n], the injection missing i.
inline MonotoneMap coface(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw error("coface: bad index");
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j <= n; ++j)
        if (j != i) v.push_back(j);
    return MonotoneMap(n - 1, n, std::move(v));
}

/// Codegeneracy s^i : [n+1] -> [n], the surjection repeating i.
inline MonotoneMap codegeneracy(int n, int i) {
    if (i < 0 || i > n) throw error("codegeneracy: bad index");
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n) + 2);
    for (int j = 0; j <= n + 1; ++j) v.push_back(j <= i ? j : j - 1);
    return MonotoneMap(n + 1, n, std::move(v));
}

/// Vertex inclusion [0] -> [n], 0 -> i.
inline MonotoneMap vertex_map(int n, int i) { return MonotoneMap(0, n, {i}); }

inline MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
    if (f.target_rank != g.source_rank) throw error("compose: rank mismatch");
    std::vector<int> v(f.values.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = g.values[static_cast<std::size_t>(f.values[i])];
    return MonotoneMap(f.source_rank, g.target_rank, std::move(v));
}

/// Epi-mono factorization f = injection . surjection; unique in the
/// simplex category.
struct EzFactorization {
    MonotoneMap surjection;
    MonotoneMap injection;
};

inline EzFactorization ez_factor(const MonotoneMap& f) {
    std::vector<int> image;
    for (int v : f.values)
        if (image.empty() || image.back() != v) image.push_back(v);
    int k = static_cast<int>(image.size()) - 1;
    std::vector<int> surj(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        int lo = 0;
        while (image[static_cast<std::size_t>(lo)] != f.values[i]) ++lo;
        surj[i] = lo;
    }
    return {MonotoneMap(f.source_rank, k, std::move(surj)),
            MonotoneMap(k, f.target_rank, std::move(image))};
}

/// All monotone maps [m] -> [n], in lexicographic order of value tuples.
inline std::vector<MonotoneMap> enumerate_monotone(int m, int n) {
    std::vector<MonotoneMap> out;
    std::vector<int> cur(static_cast<std::size_t>(m) + 1, 0);
    while (true) {
        out.emplace_back(m, n, cur);
        int i = m;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n) --i;
        if (i < 0) break;
        int v = ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j <= m; ++j) cur[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

inline std::vector<MonotoneMap> enumerate_injective(int m, int n) {
    std::vector<MonotoneMap> out;
    for (auto& f : enumerate_monotone(m, n))
        if (f.is_injective()) out.push_back(f);
    return out;
}

/// Conjugation by order reversal: op(a)(i) = n - a(m - i).
inline MonotoneMap reverse_map(const MonotoneMap& f) {
    std::vector<int> v(f.values.size());
    for (int i = 0; i <= f.source_rank; ++i)
        v[static_cast<std::size_t>(i)] =
            f.target_rank - f.values[static_cast<std::size_t>(f.source_rank - i)];
    return MonotoneMap(f.source_rank, f.target_rank, std::move(v));
}

}  // namespace cofin
