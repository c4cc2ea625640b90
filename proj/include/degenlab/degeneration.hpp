// Degeneration semantics: witnesses over S[t] and their verification, the
// trace/determinant/minor-ideal necessary-condition screen, the Fitting-ideal
// screen, Zwara exact sequences with nilpotent endomorphism data, and the
// quotient-transfer / double-sharp witness lifts.
#pragma once

#include <map>

#include "degenlab/matfac.hpp"

namespace degenlab {

enum class Verdict {
    Valid, Invalid, Consistent, Obstructed, Inconclusive,
    Exact, NotExact, Yes, No, Unknown
};
std::string verdict_name(Verdict v);

struct Budgets {
    int l_max = 8;
    int i_max = 4;
    int j_max = 0;  // 0 means "matrix size"
    std::vector<long> c_samples{1, 2, 3};
    long spair_budget = 200000;
    int nilpotency_cap = 64;

    static Budgets from_env();  // honors DEGENLAB_BUDGET_PROFILE
    static Budgets profile(const std::string& name);
};

struct CheckItem {
    std::string name;
    bool ok = false;
    bool definitive = true;  // false when a bounded search came back empty
    std::string note;
};

// ---- degeneration witnesses -------------------------------------------------

// Matrix family xi over S[t] with xi^2 = -f I, special fiber nu at t = 0 and
// generic fiber in the class of mu at sampled nonzero t.
struct Witness {
    RingPtr s_ring;
    Poly f;  // over S
    std::string t_var = "t";
    RingPtr st_ring;  // S extended by t
    PolyMatrix xi;    // over st_ring
    PolyMatrix mu, nu;  // over s_ring
    std::string provenance;
    std::optional<PolyMatrix> t0_conj;        // P with xi(0) P = P nu
    std::map<long, PolyMatrix> fiber_conj;    // c -> P with xi(c) P = P mu

    MatrixRep source_rep() const { return MatrixRep{s_ring, f, Poly::zero(s_ring), mu}; }
    MatrixRep target_rep() const { return MatrixRep{s_ring, f, Poly::zero(s_ring), nu}; }
};

struct WitnessReport {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<CheckItem> checks;
    PolyMatrix relation_residual;
};

WitnessReport verify_witness(const Witness& w, const Budgets& b = Budgets::from_env());

// ---- necessary-condition screens ---------------------------------------------

struct MinorScreenEntry {
    int j = 0;
    bool found_l = false, found_lp = false;
    int l = 0, lp = 0;
    Verdict status = Verdict::Inconclusive;
};

struct FittingEntry {
    int i = 0;
    bool contains = false;
};

struct ScreenReport {
    Poly trace_residual, det_residual;
    std::vector<MinorScreenEntry> minors;
    std::vector<FittingEntry> fitting;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> obstructions;
};

// Corollary-2.7 screen: trace/det equality in S[t] and the bounded
// t-saturation containments per minor size j.
ScreenReport screen_necessary(const PolyMatrix& xi, const PolyMatrix& mu,
                              const std::string& t_var,
                              const Budgets& b = Budgets::from_env());

// Fitt_i(M) contains Fitt_i(N) for 0 <= i <= i_max, over the quotient ring.
ScreenReport fitting_screen(const Ctx& R, const PolyMatrix& m_pres, const PolyMatrix& n_pres,
                            int i_max);

// ---- Zwara sequences ----------------------------------------------------------

// 0 -> Z -> M + Z -> N -> 0 with eta nilpotent; Z = alpha(L) + x L,
// N = beta(M) + x Z, eta(alpha(s) + x t) = beta(t).
struct ZwaraSeq {
    Ctx R;
    int L_rank = 0;
    PolyMatrix alpha, beta;
    Poly x_reg;
    std::vector<VecPoly> Z_gens, M_gens, N_gens;
    std::vector<std::pair<VecPoly, VecPoly>> decomp;  // (s, t) with z = alpha(s) + x t
    std::vector<VecPoly> eta_of_z;                    // beta(t_j) per Z generator
    PolyMatrix eta;                                   // eta_of_z expressed over Z_gens
};

struct ZwaraBuild {
    bool ok = false;
    ZwaraSeq seq;
    std::vector<CheckItem> preconditions;
    std::vector<Poly> counterexample;  // witness vector of the first failure
};

ZwaraBuild zwara_construct(const Ctx& R, int L_rank, const PolyMatrix& alpha,
                           const PolyMatrix& beta, const Poly& x,
                           const std::vector<VecPoly>& M_gens);

struct ExactnessReport {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<CheckItem> checks;
};

ExactnessReport verify_exactness(const ZwaraSeq& seq);

struct NilpotencyResult {
    bool established = false;
    int index = 0;
    int bound = 0;
};

NilpotencyResult nilpotency_check(const ZwaraSeq& seq,
                                  const Budgets& b = Budgets::from_env());

// ---- extensions ----------------------------------------------------------------

// A finitely presented module: generators = rows of `rel`, relations = columns.
struct Presented {
    Ctx R;
    int ngens = 0;
    PolyMatrix rel;
    std::string label;
};

struct ExtensionRecord {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<CheckItem> checks;
    std::string degeneration;  // "M ~> L (+) N"
    std::string provenance = "extension";
};

// Verifies 0 -> L -> M -> N -> 0 with the given generator-level maps and, on
// success, records the degeneration of M to L (+) N.
ExtensionRecord extension_degeneration(const Presented& L, const Presented& M,
                                       const Presented& N, const PolyMatrix& incl,
                                       const PolyMatrix& proj);

// ---- corollaries ----------------------------------------------------------------

struct Cor45Result {
    std::vector<VecPoly> M_gens;
    std::vector<VecPoly> N_gens;          // as constructed, x^j-scaled
    std::vector<VecPoly> N_divided_gens;  // after exact division by x^j
    bool division_certified = false;      // x^j * divided == constructed, re-multiplied
    ZwaraBuild build;
};

// alpha(L) + x^j L degenerates to alpha(L) + x^{2i-j} L (i >= j >= 0).
Cor45Result corollary45_family(const Ctx& R, const PolyMatrix& alpha, const Poly& x,
                               int i, int j);

struct Cor44Result {
    PolyMatrix gamma;  // (0 alpha; beta 0)
    bool gamma_im_eq_ker = false;
    std::vector<VecPoly> K_first, K_second;  // components of K in R^n
    ZwaraBuild build;
};

// M (+) N degenerates to (alpha(N) + x^2 L) (+) (beta(M) + x^2 L).
Cor44Result corollary44_pair(const Ctx& R, const PolyMatrix& alpha, const PolyMatrix& beta,
                             const Poly& x, const std::vector<VecPoly>& M_gens,
                             const std::vector<VecPoly>& N_gens);

// ---- transfers and lifts ---------------------------------------------------------

struct TransferResult {
    bool regular_ok = false;
    Witness out;
};

// Substitutes var -> 0 throughout and shrinks the ring; requires var to be
// regular on the cokernel model of the target nu.
TransferResult quotient_transfer(const Witness& w, const std::string& var);

// xi -> (xi zeta; -eta_bar -xi) with lifted conjugation certificates.
Witness lift_witness_doublesharp(const Witness& w, const std::string& u_name = "u",
                                 const std::string& v_name = "v");

}  // namespace degenlab
