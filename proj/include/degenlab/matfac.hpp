// Matrix representations of hypersurface rings S[x]/(x^2 - lin*x + f), the
// Knoerrer sharp / double-sharp block constructions, the 2-periodic block
// matrices, and isomorphism-class recognition for the one- and two-
// dimensional catalog families.
#pragma once

#include <set>

#include "degenlab/module.hpp"
#include "degenlab/snf.hpp"

namespace degenlab {

// A square matrix mu over S encoding the action of x on an S-free module,
// subject to mu^2 = lin*mu - f*I. The classical frame of interest is lin = 0
// (so mu^2 = -f*I); the two-dimensional catalog uses lin = y, f = 0.
struct MatrixRep {
    RingPtr s_ring;
    Poly f;    // over S
    Poly lin;  // over S; zero in the classical frame
    PolyMatrix mu;

    int size() const { return mu.rows(); }
    bool classical_frame() const { return lin.is_zero(); }
};

// A pair (phi, psi) over S with phi*psi = psi*phi = f*I.
struct MatrixFactorization {
    RingPtr s_ring;
    Poly f;
    PolyMatrix phi, psi;
};

enum class Construction { None, Sharp, DoubleSharp, KnoerrerImage, Lemma41Block };
std::string construction_name(Construction c);

struct MfReport {
    bool valid = false;
    PolyMatrix residual;  // mu^2 - lin*mu + f*I
    Construction construction = Construction::None;
    std::vector<std::string> notes;
};

// The quotient ring R = S[x]/(x^2 - lin*x + f) with the presentation
// variable prepended to S's variables.
Ctx hypersurface_ctx(const MatrixRep& rep, const std::string& pres_var = "x");

MfReport validate_mr(const MatrixRep& rep);

// Syzygy on matrix representations: mu -> -mu (classical frame only).
MatrixRep syzygy_mr(const MatrixRep& rep);

// mu -> (mu u; -u -mu) over S[u]; squares to -(f + u^2) I.
MatrixRep sharp(const MatrixRep& rep, const std::string& u_name = "u");

// mu -> (mu zeta; -eta_bar -mu) with zeta = u + i v, eta_bar = u - i v;
// squares to -(f + u^2 + v^2) I. Requires sqrt(-1) in the field.
MatrixRep double_sharp(const MatrixRep& rep, const std::string& u_name = "u",
                       const std::string& v_name = "v");

// Validation of a (phi, phi) matrix factorization of f: phi^2 = f*I.
MfReport validate_mf_pair(const PolyMatrix& alpha, const Poly& f);

struct KnoerrerImageResult {
    PolyMatrix image_matrix;  // 2n x 4n block (alpha zeta z^h 0; eta_bar -alpha 0 z^h)
    RingPtr ext_ring;         // S extended by u, v
    Poly f_ext;               // f + u^2 + v^2
    MfReport precheck;        // alpha^2 - f*I residual, z regularity note
};

// The double-sharp side of Im(alpha z^h); alpha^2 = f*I over S, z a
// non-zerodivisor of S/(f).
KnoerrerImageResult knoerrer_image(const PolyMatrix& alpha, const Poly& f, const Poly& z,
                                   int h, const std::string& u_name = "u",
                                   const std::string& v_name = "v");

// The 4-term periodic blocks A = (alpha x I; 0 beta), B = (beta -x I; 0 alpha).
std::pair<PolyMatrix, PolyMatrix> lemma41_blocks(const PolyMatrix& alpha,
                                                 const PolyMatrix& beta, const Poly& x);

struct CokernelPresentation {
    PolyMatrix pres;  // (alpha -x^h I; 0 alpha)
    bool im_eq_ker = false;
    bool x_regular = false;
};

// Presentation of alpha(L) + x^h L as cok(alpha -x^h; 0 alpha), with the
// Im alpha = Ker alpha and regularity preconditions checked over R.
CokernelPresentation cokernel_presentation(const Ctx& R, const PolyMatrix& alpha,
                                           const Poly& x, int h);

// ---- recognition ------------------------------------------------------------

struct Dim1Summand {
    enum class Kind { Free, RmodX, Ideal } kind;
    uint32_t n = 0;  // exponent for Ideal summands

    bool operator<(const Dim1Summand& o) const {
        if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
        return n < o.n;
    }
    bool operator==(const Dim1Summand& o) const { return kind == o.kind && n == o.n; }
};

std::string dim1_summand_label(const Dim1Summand& s);

struct Dim1Recognition {
    bool square_zero = false;
    std::vector<Dim1Summand> summands;  // sorted canonical multiset
    // Certificate: mu * conj = conj * model, det(conj) a unit.
    bool certificate_ok = false;
    PolyMatrix model;
    PolyMatrix conj;
    std::string status;  // "ok", "inconclusive: ..." when no polynomial certificate
};

// Decomposition type of a square-zero matrix over k[y] via Smith invariant
// factors, certified a posteriori by an exact conjugation to the rebuilt
// block-diagonal model.
Dim1Recognition recognize_dim1(const PolyMatrix& mu);

// Exact conjugator P with a = P * b * P^{-1} for same-class recognized
// matrices; nullopt when either certificate is unavailable.
std::optional<PolyMatrix> dim1_conjugator(const PolyMatrix& a, const PolyMatrix& b);

struct Dim2Recognition {
    bool relation_ok = false;  // mu^2 = y*mu
    bool supported = false;    // matrix matched one of the two displayed families
    char family = '?';         // 'A' = (x, z^n), 'B' = (x-y, z^n)
    uint32_t n = 0;
    std::vector<VecPoly> kernel_gens;
    std::string status;
};

// Families (y z^n; 0 0) -> class (x, z^n) and (0 z^n; 0 y) -> (x-y, z^n)
// over k[y,z] (first variable in the y role, second in the z role).
Dim2Recognition recognize_dim2(const PolyMatrix& mu);

}  // namespace degenlab
