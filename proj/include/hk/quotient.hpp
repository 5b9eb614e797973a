#pragma once

#include "hk/groebner.hpp"

namespace hk {

// Standard graded quotient R = F_p[vars]/J. Relations must be homogeneous of
// positive degree and must not generate the unit ideal.
class QuotientRing {
  public:
    QuotientRing(uint32_t p, std::vector<std::string> vars, std::vector<Polynomial> relations,
                 OrderKind ord = OrderKind::degrevlex);
    QuotientRing(PolyRing ring, std::vector<Polynomial> relations);

    const PolyRing& ambient() const { return ring_; }
    const IdealHandle& relations() const { return j_; }
    uint32_t p() const { return ring_.p(); }
    int dim() const { return dim_; }

    Polynomial nf(const Polynomial& f) const { return normal_form(f, j_); }
    PolyMatrix nf(const PolyMatrix& m) const;

    std::vector<Polynomial> maximal_ideal() const;  // the variables as polynomials

    // f * e_c for every reduced-basis relation f and component c < rank
    std::vector<ModPoly> relation_multiples(int rank, const ModuleOrder& ord) const;

  private:
    PolyRing ring_;
    IdealHandle j_;
    int dim_;
};

}  // namespace hk
