#pragma once

#include <climits>
#include <utility>

#include "hk/matrix.hpp"

namespace hk {

// ---------------------------------------------------------------------------
// free-module terms and vectors

struct ModTerm {
    Monomial mon;
    int comp = 0;
    uint32_t coeff = 0;
    bool operator==(const ModTerm&) const = default;
};

// Position-over-term order: lower component index wins, ring order breaks ties
// inside a component. Components at or above `split` form a Schreyer block:
// they compare by monomial times the recorded shift of their component, so
// syzygy coordinates stay subordinate to the module coordinates in front.
class ModuleOrder {
  public:
    explicit ModuleOrder(OrderKind k) : kind_(k) {}
    ModuleOrder(OrderKind k, int split, std::vector<std::pair<Monomial, int>> shifts)
        : kind_(k), split_(split), shifts_(std::move(shifts)) {}

    OrderKind ring_order() const { return kind_; }
    int compare(const Monomial& ma, int ca, const Monomial& mb, int cb) const;
    int compare(const ModTerm& a, const ModTerm& b) const { return compare(a.mon, a.comp, b.mon, b.comp); }

    bool operator==(const ModuleOrder&) const = default;

  private:
    OrderKind kind_;
    int split_ = INT_MAX;
    std::vector<std::pair<Monomial, int>> shifts_;  // lead of tracked generator, per block component
};

// Element of a free module S^rank: terms strictly descending under the module order.
class ModPoly {
  public:
    ModPoly() = default;

    static ModPoly from_terms(const PolyRing& ring, const ModuleOrder& ord, std::vector<ModTerm> ts);
    static ModPoly from_sorted_terms(std::vector<ModTerm> ts);

    const std::vector<ModTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const ModTerm& lead() const;
    int max_comp() const;  // -1 for zero

    bool operator==(const ModPoly&) const = default;

  private:
    std::vector<ModTerm> terms_;
};

ModPoly mod_add(const PolyRing& ring, const ModuleOrder& ord, const ModPoly& a, const ModPoly& b);
ModPoly mod_sub(const PolyRing& ring, const ModuleOrder& ord, const ModPoly& a, const ModPoly& b);
ModPoly mod_term_mul(const PolyRing& ring, const ModPoly& a, const Monomial& m, uint32_t c);
ModPoly mod_monic(const PolyRing& ring, const ModPoly& a);
ModPoly modpoly_resort(const PolyRing& ring, const ModuleOrder& ord, const ModPoly& a);
// full lexicographic-by-terms comparison, used only for deterministic tiebreaks
int modpoly_compare_full(const ModuleOrder& ord, const ModPoly& a, const ModPoly& b);

ModPoly modpoly_from_column(const PolyRing& ring, const ModuleOrder& ord,
                            const std::vector<Polynomial>& col);
std::vector<Polynomial> modpoly_to_column(const ModPoly& v, int rank);
// f placed in component comp
ModPoly modpoly_from_poly(const PolyRing& ring, const ModuleOrder& ord, const Polynomial& f, int comp);

// ---------------------------------------------------------------------------
// Groebner engine

struct ModuleGB {
    int rank = 1;
    ModuleOrder order{OrderKind::degrevlex};
    std::vector<ModPoly> elems;  // reduced, monic, descending leads
};

// reduced Groebner basis of the submodule of S^rank spanned by gens
ModuleGB module_groebner(const PolyRing& ring, int rank, const ModuleOrder& ord,
                         std::vector<ModPoly> gens);

struct ExtendedGB {
    ModuleGB gb;
    // gb.elems[i] == sum_j cofactors[i][j] * gens[j]
    std::vector<std::vector<Polynomial>> cofactors;
    // reduced basis of the syzygy module of gens, as vectors in S^{#gens}
    std::vector<ModPoly> syzygies;
};

ExtendedGB module_groebner_extended(const PolyRing& ring, int rank, OrderKind kind,
                                    const std::vector<ModPoly>& gens);

ModPoly module_normal_form(const PolyRing& ring, const ModPoly& v, const ModuleGB& gb);
// v = sum_i quotients[i] * gb.elems[i] + remainder
ModPoly module_divide(const PolyRing& ring, const ModPoly& v, const ModuleGB& gb,
                      std::vector<Polynomial>* quotients);

// ---------------------------------------------------------------------------
// ideals

// Ideal of S with its reduced Groebner basis computed at construction
// (consults the process-wide basis cache when one is installed).
class IdealHandle {
  public:
    IdealHandle(const PolyRing& ring, std::vector<Polynomial> gens);

    const PolyRing& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const std::vector<Polynomial>& groebner() const { return gb_; }

    bool is_zero() const { return gb_.empty(); }
    bool is_unit() const { return !gb_.empty() && gb_[0].is_constant(); }

  private:
    PolyRing ring_;
    std::vector<Polynomial> gens_, gb_;
};

Polynomial normal_form(const Polynomial& f, const IdealHandle& g);
bool is_member(const Polynomial& f, const IdealHandle& g);
bool same_ideal(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_sum(const IdealHandle& a, const std::vector<Polynomial>& extra);
// ideal generated by g^q for each generator g; q must be a power of p
IdealHandle bracket_power(const IdealHandle& i, Exp q);

long long colength(const IdealHandle& i);  // dim_k S/I; throws MathError when infinite
bool has_finite_colength(const IdealHandle& i);
int krull_dimension(const IdealHandle& i);

// ---------------------------------------------------------------------------
// Hilbert series

// numerator / (1-t)^den_exponent
struct HilbertSeries {
    std::vector<long long> numerator;  // numerator[i] = coefficient of t^i
    int den_exponent = 0;

    HilbertSeries reduced() const;  // cancel every (1-t) factor dividing the numerator
    bool operator==(const HilbertSeries&) const = default;
};

HilbertSeries hilbert_series(const IdealHandle& i);  // homogeneous generators required
long long hs_multiplicity(const HilbertSeries& h);

// ---------------------------------------------------------------------------
// syzygies over a quotient

// Columns span { v : M v == 0 modulo relations * S^rows }. relations may be zero.
PolyMatrix syzygies(const PolyRing& ring, const PolyMatrix& m, const IdealHandle& relations);

// ---------------------------------------------------------------------------
// staircase counting (exposed for tests)

bool staircase_is_finite(const std::vector<Monomial>& leads, int nvars);
long long staircase_complement_count(std::vector<Monomial> leads, int nvars);
std::vector<long long> staircase_numerator(std::vector<Monomial> leads, int nvars);

// per-component staircase count over all components; infinite length throws
long long module_colength(const PolyRing& ring, const ModuleGB& gb);

}  // namespace hk
