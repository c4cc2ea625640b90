// Groebner engine for submodules of free modules (ideals are the rank-1
// case). Position-over-term order with earlier positions dominating, which
// gives the elimination property used for syzygy and kernel computations.
// Basis elements track their expression over the original generators, so
// membership tests return certificate cofactors.
#pragma once

#include <optional>

#include "degenlab/matrix.hpp"
#include "degenlab/poly.hpp"

namespace degenlab {

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of a free module R^n as a dense vector of polynomials.
struct VecPoly {
    std::vector<Poly> entries;

    bool is_zero() const {
        for (const auto& p : entries)
            if (!p.is_zero()) return false;
        return true;
    }
    size_t rank() const { return entries.size(); }
};

VecPoly vec_zero(const RingPtr& ring, int rank);
VecPoly vec_unit(const RingPtr& ring, int rank, int pos);
VecPoly vec_add(const VecPoly& a, const VecPoly& b);
VecPoly vec_sub(const VecPoly& a, const VecPoly& b);
VecPoly vec_neg(const VecPoly& a);
VecPoly vec_mono_scaled(const VecPoly& a, const Monomial& m, const FieldElem& c);
VecPoly vec_poly_scaled(const VecPoly& a, const Poly& p);
bool vec_eq(const VecPoly& a, const VecPoly& b);
VecPoly vec_nf(const Ctx& ctx, const VecPoly& a);  // entrywise quotient normal form
VecPoly matrix_apply(const PolyMatrix& m, const VecPoly& v);
std::vector<VecPoly> matrix_columns(const PolyMatrix& m);
PolyMatrix columns_to_matrix(const RingPtr& ring, int rank, const std::vector<VecPoly>& cols);

// Leading (position, monomial) under position-over-term order.
struct ModTerm {
    int pos;
    Monomial mono;
    FieldElem coeff;
};

struct SpairBudget {
    long max_pairs = 200000;
};

// Reduced module Groebner basis over the polynomial ring underlying `ctx`;
// the quotient relation f*e_i is appended automatically when present.
class ModuleGB {
public:
    // `gens` live over ctx.ring with ambient rank `rank`.
    ModuleGB(Ctx ctx, int rank, std::vector<VecPoly> gens, SpairBudget budget = {});

    const Ctx& ctx() const { return ctx_; }
    int rank() const { return rank_; }
    size_t size() const { return basis_.size(); }
    const VecPoly& basis_at(size_t i) const { return basis_[i].v; }

    // Full normal form; `cofactors`, when requested, expresses v - nf over the
    // ORIGINAL generators (quotient relations folded away, so the certificate
    // is an identity modulo f).
    VecPoly normal_form(const VecPoly& v, std::vector<Poly>* cofactors = nullptr) const;

    bool contains(const VecPoly& v, std::vector<Poly>* cofactors = nullptr) const;

    // Generators of the syzygy module of the original generators over the
    // quotient ring: vectors c with sum c_i gens_i = 0 in R^rank.
    std::vector<VecPoly> syzygies() const;

private:
    struct Elem {
        VecPoly v;
        std::vector<Poly> rep;  // expression over augmented generators
    };

    VecPoly reduce_full(VecPoly v, std::vector<Poly>* rep,
                        size_t skip = static_cast<size_t>(-1)) const;
    static std::optional<ModTerm> lead(const VecPoly& v, MonomialOrder ord);

    Ctx ctx_;
    int rank_;
    size_t n_orig_;                 // original generator count (before f*e_i)
    std::vector<VecPoly> orig_;     // original generators (ring-level)
    std::vector<Elem> basis_;
    SpairBudget budget_;
};

// Submodule of a free module over a polynomial or quotient ring.
struct Submodule {
    Ctx ctx;
    int ambient_rank = 0;
    std::vector<VecPoly> gens;              // normal-formed, nonzero
    std::shared_ptr<const ModuleGB> gb;     // filled on construction paths

    static Submodule make(Ctx ctx, int rank, std::vector<VecPoly> gens,
                          bool with_gb = true, SpairBudget budget = {});
};

bool submodule_membership(const Submodule& s, const VecPoly& v,
                          std::vector<Poly>* cofactors = nullptr);
bool submodule_contains(const Submodule& a, const Submodule& b);
bool submodule_equal(const Submodule& a, const Submodule& b);
bool submodule_is_zero(const Submodule& s);

// Kernel of the map R^cols -> R^rows given by `m` over the quotient ring:
// generators of { v : m v = 0 }.
Submodule kernel_of_map(const Ctx& ctx, const PolyMatrix& m);

// Syzygy matrix of the columns of `m` (a presentation of the submodule they
// generate): columns are the kernel generators of [columns] as a map onto the
// column space.
PolyMatrix presentation_of_columns(const Ctx& ctx, const PolyMatrix& m);

// ---- Ideals: rank-1 wrappers -----------------------------------------------

struct Ideal {
    Ctx ctx;
    std::vector<Poly> gens;                 // normal-formed, nonzero
    std::shared_ptr<const ModuleGB> gb;

    static Ideal make(Ctx ctx, std::vector<Poly> gens, bool with_gb = true,
                      SpairBudget budget = {});
    bool is_zero_ideal() const { return gens.empty(); }
    bool is_unit_ideal() const;
};

Ideal buchberger(const Ideal& i);  // returns the ideal with a reduced GB cache
std::vector<Poly> reduced_groebner_polys(const Ideal& i);
bool ideal_membership(const Ideal& i, const Poly& p, std::vector<Poly>* cofactors = nullptr);
bool ideal_contains(const Ideal& i, const Ideal& j);  // i contains j
bool ideal_equal(const Ideal& i, const Ideal& j);

Ideal minors_ideal(const Ctx& ctx, const PolyMatrix& m, int j);

// Fitting ideal Fitt_i of the module presented by `pres` (generators =
// rows, relations = columns): I_{n-i}(pres) in the ambient quotient ring,
// with the unit / zero conventions for out-of-range minor sizes.
Ideal fitting_ideal(const Ctx& ctx, const PolyMatrix& pres, int i);

// Smallest 0 <= l <= l_max with t^l * J contained in I, over a ring that has
// the designated variable `t_var`.
struct SaturationResult {
    bool found = false;
    int l = 0;
};
SaturationResult saturation_bounded_contains(const Ideal& I, const Ideal& J,
                                             const std::string& t_var, int l_max);

}  // namespace degenlab
