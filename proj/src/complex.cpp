#include "hk/complex.hpp"

#include <algorithm>

namespace hk {

FreeComplex make_complex(const QuotientRing& r, std::vector<int> ranks,
                         std::vector<PolyMatrix> diffs) {
    if (ranks.size() != diffs.size() + 1) throw MathError("complex needs one rank per spot");
    for (size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i].rows() != ranks[i] || diffs[i].cols() != ranks[i + 1])
            throw MathError("differential dimensions do not match ranks");
        diffs[i] = r.nf(diffs[i]);
    }
    const PolyRing& ring = r.ambient();
    for (size_t i = 0; i + 1 < diffs.size(); ++i) {
        PolyMatrix prod = r.nf(matrix_mul(ring, diffs[i], diffs[i + 1]));
        if (!matrix_is_zero(prod)) throw MathError("differentials do not compose to zero");
    }
    return FreeComplex{std::move(ranks), std::move(diffs)};
}

namespace {

// all k-subsets of {0..n-1} in lexicographic order
std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace

FreeComplex koszul_complex(const QuotientRing& r, const std::vector<Polynomial>& elems) {
    const PolyRing& ring = r.ambient();
    const int n = static_cast<int>(elems.size());
    std::vector<Polynomial> xs;
    xs.reserve(static_cast<size_t>(n));
    for (const auto& f : elems) xs.push_back(r.nf(f));

    std::vector<std::vector<std::vector<int>>> bases;
    for (int k = 0; k <= n; ++k) bases.push_back(subsets_of_size(n, k));

    std::vector<int> ranks;
    for (int k = 0; k <= n; ++k) ranks.push_back(static_cast<int>(bases[static_cast<size_t>(k)].size()));

    std::vector<PolyMatrix> diffs;
    for (int k = 1; k <= n; ++k) {
        const auto& src = bases[static_cast<size_t>(k)];
        const auto& dst = bases[static_cast<size_t>(k - 1)];
        PolyMatrix d(static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (size_t c = 0; c < src.size(); ++c) {
            const auto& t = src[c];
            // d(e_T) = sum_j (-1)^(j-1) x_{t_j} e_{T minus t_j}
            for (int j = 0; j < k; ++j) {
                std::vector<int> rest;
                for (int l = 0; l < k; ++l)
                    if (l != j) rest.push_back(t[static_cast<size_t>(l)]);
                auto it = std::lower_bound(dst.begin(), dst.end(), rest);
                int row = static_cast<int>(it - dst.begin());
                Polynomial entry = xs[static_cast<size_t>(t[static_cast<size_t>(j)])];
                if (j % 2 == 1) entry = poly_neg(ring, entry);
                d.at(row, static_cast<int>(c)) = std::move(entry);
            }
        }
        diffs.push_back(std::move(d));
    }
    return make_complex(r, std::move(ranks), std::move(diffs));
}

FreeComplex frobenius_twist(const QuotientRing& r, const FreeComplex& c, Exp q) {
    const PolyRing& ring = r.ambient();
    if (!is_power_of(q, ring.p()))
        throw MathError("twist exponent " + std::to_string(q) + " is not a power of " +
                        std::to_string(ring.p()));
    std::vector<PolyMatrix> diffs;
    diffs.reserve(c.diffs.size());
    for (const auto& d : c.diffs) {
        PolyMatrix t(d.rows(), d.cols());
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j) t.at(i, j) = poly_qth_power(ring, d.at(i, j), q);
        diffs.push_back(std::move(t));
    }
    // make_complex re-reduces entries and revalidates composition
    return make_complex(r, c.ranks, std::move(diffs));
}

}  // namespace hk
