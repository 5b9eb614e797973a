#include "hk/quotient.hpp"

namespace hk {

QuotientRing::QuotientRing(uint32_t p, std::vector<std::string> vars,
                           std::vector<Polynomial> relations, OrderKind ord)
    : QuotientRing(PolyRing(p, std::move(vars), ord), std::move(relations)) {}

QuotientRing::QuotientRing(PolyRing ring, std::vector<Polynomial> relations)
    : ring_(std::move(ring)), j_(ring_, std::move(relations)), dim_(0) {
    for (const auto& g : j_.generators()) {
        if (!poly_is_homogeneous(g))
            throw MathError("non-homogeneous relation: " + poly_to_string(ring_, g));
        if (!g.is_zero() && poly_degree(g) == 0)
            throw MathError("relation of degree zero: " + poly_to_string(ring_, g));
    }
    if (j_.is_unit()) throw MathError("relations generate the unit ideal");
    dim_ = krull_dimension(j_);
}

PolyMatrix QuotientRing::nf(const PolyMatrix& m) const {
    PolyMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out.at(r, c) = nf(m.at(r, c));
    return out;
}

std::vector<Polynomial> QuotientRing::maximal_ideal() const {
    std::vector<Polynomial> vars;
    vars.reserve(static_cast<size_t>(ring_.nvars()));
    for (int i = 0; i < ring_.nvars(); ++i) vars.push_back(poly_variable(ring_, i));
    return vars;
}

std::vector<ModPoly> QuotientRing::relation_multiples(int rank, const ModuleOrder& ord) const {
    std::vector<ModPoly> out;
    out.reserve(j_.groebner().size() * static_cast<size_t>(rank));
    for (const auto& f : j_.groebner())
        for (int c = 0; c < rank; ++c) out.push_back(modpoly_from_poly(ring_, ord, f, c));
    return out;
}

}  // namespace hk
