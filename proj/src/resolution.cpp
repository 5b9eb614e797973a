#include "hk/resolution.hpp"

#include <algorithm>
#include <deque>

namespace hk {

MatrixGrading infer_grading(const PolyRing& ring, const PolyMatrix& m) {
    (void)ring;
    const int rows = m.rows(), cols = m.cols();
    MatrixGrading g;
    g.row_shifts.assign(static_cast<size_t>(rows), 0);
    g.col_degrees.assign(static_cast<size_t>(cols), 0);
    std::vector<int> row_known(static_cast<size_t>(rows), 0), col_known(static_cast<size_t>(cols), 0);

    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (!poly_is_homogeneous(m.at(r, c)))
                throw MathError("matrix entry at (" + std::to_string(r) + "," + std::to_string(c) +
                                ") is not homogeneous");

    // propagate shift constraints through nonzero entries: shift(r) + deg = deg(col c)
    for (int seed = 0; seed < rows; ++seed) {
        if (row_known[static_cast<size_t>(seed)]) continue;
        row_known[static_cast<size_t>(seed)] = 1;
        g.row_shifts[static_cast<size_t>(seed)] = 0;
        std::deque<std::pair<bool, int>> queue{{true, seed}};  // (is_row, index)
        while (!queue.empty()) {
            auto [is_row, idx] = queue.front();
            queue.pop_front();
            if (is_row) {
                for (int c = 0; c < cols; ++c) {
                    const Polynomial& e = m.at(idx, c);
                    if (e.is_zero()) continue;
                    Exp want = g.row_shifts[static_cast<size_t>(idx)] + poly_degree(e);
                    if (col_known[static_cast<size_t>(c)]) {
                        if (g.col_degrees[static_cast<size_t>(c)] != want)
                            throw MathError("matrix columns admit no consistent grading");
                    } else {
                        col_known[static_cast<size_t>(c)] = 1;
                        g.col_degrees[static_cast<size_t>(c)] = want;
                        queue.emplace_back(false, c);
                    }
                }
            } else {
                for (int r = 0; r < rows; ++r) {
                    const Polynomial& e = m.at(r, idx);
                    if (e.is_zero()) continue;
                    Exp want = g.col_degrees[static_cast<size_t>(idx)] - poly_degree(e);
                    if (row_known[static_cast<size_t>(r)]) {
                        if (g.row_shifts[static_cast<size_t>(r)] != want)
                            throw MathError("matrix columns admit no consistent grading");
                    } else {
                        row_known[static_cast<size_t>(r)] = 1;
                        g.row_shifts[static_cast<size_t>(r)] = want;
                        queue.emplace_back(true, r);
                    }
                }
            }
        }
    }
    return g;
}

PolyMatrix minimalize_presentation(const QuotientRing& r, PolyMatrix p) {
    const PolyRing& ring = r.ambient();
    p = r.nf(p);
    while (true) {
        int pr = -1, pc = -1;
        for (int i = 0; i < p.rows() && pr < 0; ++i)
            for (int j = 0; j < p.cols(); ++j) {
                const Polynomial& e = p.at(i, j);
                if (!e.is_zero() && e.is_constant()) {
                    pr = i;
                    pc = j;
                    break;
                }
            }
        if (pr < 0) return p;

        uint32_t uinv = ring.field.inv(p.at(pr, pc).lead().coeff);
        // column operations clear the pivot row; the pivot coordinate is then
        // eliminated by deleting the pivot row and column
        PolyMatrix next(p.rows() - 1, p.cols() - 1);
        for (int j = 0; j < p.cols(); ++j) {
            if (j == pc) continue;
            Polynomial factor = poly_scale(ring, p.at(pr, j), uinv);
            int jj = j < pc ? j : j - 1;
            for (int i = 0; i < p.rows(); ++i) {
                if (i == pr) continue;
                Polynomial e = p.at(i, j);
                if (!factor.is_zero())
                    e = poly_sub(ring, e, poly_mul(ring, factor, p.at(i, pc)));
                int ii = i < pr ? i : i - 1;
                next.at(ii, jj) = r.nf(e);
            }
        }
        p = std::move(next);
    }
}

namespace {

// ascending degree, full term comparison as the deterministic tiebreak
void sort_gens_canonical(const PolyRing& ring, std::vector<Polynomial>& gens) {
    ModuleOrder ord(ring.order);
    std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        Exp da = poly_degree(a), db = poly_degree(b);
        if (da != db) return da < db;
        return modpoly_compare_full(ord, modpoly_from_poly(ring, ord, a, 0),
                                    modpoly_from_poly(ring, ord, b, 0)) < 0;
    });
}

struct ColumnSet {
    std::vector<std::vector<Polynomial>> cols;
    std::vector<Exp> degrees;
};

// greedy minimal generators of the column span over R, ascending column degree
ColumnSet minimal_columns(const QuotientRing& r, int rank, std::vector<std::vector<Polynomial>> cols,
                          std::vector<Exp> degrees) {
    const PolyRing& ring = r.ambient();
    std::vector<size_t> order(cols.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    ModuleOrder plain(ring.order);
    std::vector<ModPoly> as_vec(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) as_vec[i] = modpoly_from_column(ring, plain, cols[i]);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
        return modpoly_compare_full(plain, as_vec[a], as_vec[b]) < 0;
    });

    ColumnSet kept;
    std::vector<ModPoly> kept_vecs;
    for (size_t oi : order) {
        if (as_vec[oi].is_zero()) continue;
        std::vector<ModPoly> gens = kept_vecs;
        auto rel = r.relation_multiples(rank, plain);
        gens.insert(gens.end(), rel.begin(), rel.end());
        ModuleGB gb = module_groebner(ring, rank, plain, std::move(gens));
        if (module_normal_form(ring, as_vec[oi], gb).is_zero()) continue;
        kept_vecs.push_back(as_vec[oi]);
        kept.cols.push_back(cols[oi]);
        kept.degrees.push_back(degrees[oi]);
    }
    return kept;
}

// continue a partial resolution with syzygy stages until `stages` differentials exist
void extend_resolution(const QuotientRing& r, std::vector<int>& ranks,
                       std::vector<PolyMatrix>& diffs, std::vector<Exp> current_shifts,
                       int stages) {
    const PolyRing& ring = r.ambient();
    while (static_cast<int>(diffs.size()) < stages) {
        check_deadline();
        const PolyMatrix& prev = diffs.back();
        if (prev.cols() == 0) {
            ranks.push_back(0);
            diffs.emplace_back(0, 0);
            current_shifts.clear();
            continue;
        }
        PolyMatrix syz = syzygies(ring, prev, r.relations());
        std::vector<std::vector<Polynomial>> cols;
        std::vector<Exp> degs;
        for (int c = 0; c < syz.cols(); ++c) {
            auto col = syz.column(c);
            Exp deg = -1;
            for (int row = 0; row < syz.rows(); ++row) {
                const Polynomial& e = col[static_cast<size_t>(row)];
                if (e.is_zero()) continue;
                Exp d = poly_degree(e) + current_shifts[static_cast<size_t>(row)];
                if (deg < 0)
                    deg = d;
                else if (deg != d)
                    throw MathError("syzygy column is not homogeneous");
            }
            if (deg < 0) continue;  // zero column
            cols.push_back(std::move(col));
            degs.push_back(deg);
        }
        ColumnSet kept = minimal_columns(r, prev.cols(), std::move(cols), std::move(degs));
        ranks.push_back(static_cast<int>(kept.cols.size()));
        diffs.push_back(PolyMatrix::from_columns(prev.cols(), kept.cols));
        current_shifts = kept.degrees;
    }
}

}  // namespace

std::vector<Polynomial> minimal_generators(const QuotientRing& r, std::vector<Polynomial> gens) {
    const PolyRing& ring = r.ambient();
    for (auto& g : gens) {
        if (!poly_is_homogeneous(g))
            throw MathError("non-homogeneous generator: " + poly_to_string(ring, g));
        g = r.nf(g);
    }
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const Polynomial& g) { return g.is_zero(); }),
               gens.end());
    sort_gens_canonical(ring, gens);
    std::vector<Polynomial> kept;
    for (const auto& g : gens) {
        std::vector<Polynomial> span = kept;
        const auto& jg = r.relations().generators();
        span.insert(span.end(), jg.begin(), jg.end());
        if (!is_member(g, IdealHandle(ring, std::move(span)))) kept.push_back(g);
    }
    return kept;
}

FreeComplex resolve_ideal(const QuotientRing& r, const IdealHandle& i, int stages) {
    if (!(i.ring() == r.ambient())) throw MathError("ideal lives in a different ring");
    if (stages < 1) throw MathError("resolution needs at least one stage");
    std::vector<Polynomial> mingens = minimal_generators(r, i.generators());

    std::vector<int> ranks{1, static_cast<int>(mingens.size())};
    std::vector<Exp> shifts;
    std::vector<std::vector<Polynomial>> cols;
    for (const auto& g : mingens) {
        cols.push_back({g});
        shifts.push_back(poly_degree(g));
    }
    std::vector<PolyMatrix> diffs{PolyMatrix::from_columns(1, cols)};
    extend_resolution(r, ranks, diffs, std::move(shifts), stages);
    return make_complex(r, std::move(ranks), std::move(diffs));
}

FreeComplex resolve_module(const QuotientRing& r, const ModulePresentation& pres, int stages) {
    if (stages < 1) throw MathError("resolution needs at least one stage");
    if (pres.matrix.cols() > 0 && pres.matrix.rows() != pres.rank)
        throw MathError("presentation matrix height does not match rank");
    PolyMatrix p = pres.matrix.cols() > 0 ? pres.matrix : PolyMatrix(pres.rank, 0);
    p = minimalize_presentation(r, p);
    const int rank = p.rows();

    MatrixGrading grading = infer_grading(r.ambient(), p);
    std::vector<std::vector<Polynomial>> cols;
    std::vector<Exp> degs;
    for (int c = 0; c < p.cols(); ++c) {
        cols.push_back(p.column(c));
        degs.push_back(grading.col_degrees[static_cast<size_t>(c)]);
    }
    ColumnSet kept = minimal_columns(r, rank, std::move(cols), std::move(degs));

    std::vector<int> ranks{rank, static_cast<int>(kept.cols.size())};
    std::vector<PolyMatrix> diffs{PolyMatrix::from_columns(rank, kept.cols)};
    extend_resolution(r, ranks, diffs, kept.degrees, stages);
    return make_complex(r, std::move(ranks), std::move(diffs));
}

}  // namespace hk
