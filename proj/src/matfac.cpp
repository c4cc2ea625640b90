#include "degenlab/matfac.hpp"

namespace degenlab {

std::string construction_name(Construction c) {
    switch (c) {
        case Construction::None: return "none";
        case Construction::Sharp: return "sharp";
        case Construction::DoubleSharp: return "double_sharp";
        case Construction::KnoerrerImage: return "knoerrer_image";
        case Construction::Lemma41Block: return "lemma41_block";
    }
    return "none";
}

Ctx hypersurface_ctx(const MatrixRep& rep, const std::string& pres_var) {
    std::vector<std::string> vars{pres_var};
    for (const auto& v : rep.s_ring->vars()) vars.push_back(v);
    RingPtr base = PolyRing::make(vars, rep.s_ring->order(), rep.s_ring->field());
    Poly x = Poly::variable(base, pres_var);
    Poly F = x * x - rep.lin.into_ring(base) * x + rep.f.into_ring(base);
    auto quo = std::make_shared<QuotientRing>(base, F, pres_var);
    return Ctx{base, quo};
}

MfReport validate_mr(const MatrixRep& rep) {
    MfReport r;
    if (!rep.mu.is_square()) throw std::invalid_argument("matrix representation must be square");
    int n = rep.size();
    PolyMatrix fI = PolyMatrix::scalar(rep.s_ring, n, rep.f);
    PolyMatrix linMu = rep.mu.scaled(rep.lin);
    r.residual = rep.mu * rep.mu - linMu + fI;
    r.valid = r.residual.is_zero();
    return r;
}

MatrixRep syzygy_mr(const MatrixRep& rep) {
    if (!rep.classical_frame())
        throw std::invalid_argument("syzygy_mr requires the mu^2 = -f frame");
    MfReport v = validate_mr(rep);
    if (!v.valid) throw std::invalid_argument("syzygy_mr: input is not a matrix representation");
    return MatrixRep{rep.s_ring, rep.f, rep.lin, -rep.mu};
}

MatrixRep sharp(const MatrixRep& rep, const std::string& u_name) {
    if (!rep.classical_frame())
        throw std::invalid_argument("sharp requires the mu^2 = -f frame");
    RingPtr ext = rep.s_ring->extended({u_name});
    Poly u = Poly::variable(ext, u_name);
    int n = rep.size();
    PolyMatrix mu = rep.mu.into_ring(ext);
    PolyMatrix uI = PolyMatrix::scalar(ext, n, u);
    PolyMatrix blocked = block2x2(mu, uI, -uI, -mu);
    return MatrixRep{ext, rep.f.into_ring(ext) + u * u, Poly::zero(ext), blocked};
}

MatrixRep double_sharp(const MatrixRep& rep, const std::string& u_name,
                       const std::string& v_name) {
    if (!rep.classical_frame())
        throw std::invalid_argument("double_sharp requires the mu^2 = -f frame");
    if (!rep.s_ring->field().has_sqrt_minus_one())
        throw std::invalid_argument("double_sharp requires sqrt(-1) in the coefficient field");
    RingPtr ext = rep.s_ring->extended({u_name, v_name});
    Poly u = Poly::variable(ext, u_name);
    Poly v = Poly::variable(ext, v_name);
    Poly iconst = Poly::constant(ext, ext->field().imaginary_unit());
    Poly zeta = u + iconst * v;
    Poly eta_bar = u - iconst * v;
    int n = rep.size();
    PolyMatrix mu = rep.mu.into_ring(ext);
    PolyMatrix zI = PolyMatrix::scalar(ext, n, zeta);
    PolyMatrix eI = PolyMatrix::scalar(ext, n, eta_bar);
    PolyMatrix blocked = block2x2(mu, zI, -eI, -mu);
    return MatrixRep{ext, rep.f.into_ring(ext) + u * u + v * v, Poly::zero(ext), blocked};
}

MfReport validate_mf_pair(const PolyMatrix& alpha, const Poly& f) {
    MfReport r;
    if (!alpha.is_square()) throw std::invalid_argument("matrix factorization side must be square");
    r.residual = alpha * alpha - PolyMatrix::scalar(alpha.ring(), alpha.rows(), f);
    r.valid = r.residual.is_zero();
    return r;
}

KnoerrerImageResult knoerrer_image(const PolyMatrix& alpha, const Poly& f, const Poly& z,
                                   int h, const std::string& u_name,
                                   const std::string& v_name) {
    KnoerrerImageResult out;
    out.precheck = validate_mf_pair(alpha, f);
    out.precheck.construction = Construction::KnoerrerImage;
    const RingPtr& S = alpha.ring();
    if (!S->field().has_sqrt_minus_one())
        throw std::invalid_argument("knoerrer_image requires sqrt(-1) in the coefficient field");
    {
        // z must be a non-zerodivisor of S/(f)
        auto quo = std::make_shared<QuotientRing>(S, f);
        Ctx R{S, quo};
        PolyMatrix zm(S, 1, 1);
        zm.at(0, 0) = R.nf(z);
        if (!submodule_is_zero(kernel_of_map(R, zm))) {
            out.precheck.valid = false;
            out.precheck.notes.push_back("z is a zerodivisor modulo f");
        }
    }
    RingPtr ext = S->extended({u_name, v_name});
    Poly u = Poly::variable(ext, u_name);
    Poly v = Poly::variable(ext, v_name);
    Poly iconst = Poly::constant(ext, ext->field().imaginary_unit());
    Poly zeta = u + iconst * v;
    Poly eta_bar = u - iconst * v;
    int n = alpha.rows();
    PolyMatrix a = alpha.into_ring(ext);
    Poly zh = z.into_ring(ext).pow(static_cast<uint32_t>(h));
    PolyMatrix zhI = PolyMatrix::scalar(ext, n, zh);
    PolyMatrix zero(ext, n, n);
    PolyMatrix top = hconcat(hconcat(a, PolyMatrix::scalar(ext, n, zeta)),
                             hconcat(zhI, zero));
    PolyMatrix bot = hconcat(hconcat(PolyMatrix::scalar(ext, n, eta_bar), -a),
                             hconcat(zero, zhI));
    PolyMatrix img(ext, 2 * n, 4 * n);
    for (int j = 0; j < 4 * n; ++j) {
        for (int i = 0; i < n; ++i) img.at(i, j) = top.at(i, j);
        for (int i = 0; i < n; ++i) img.at(n + i, j) = bot.at(i, j);
    }
    out.image_matrix = img;
    out.ext_ring = ext;
    out.f_ext = f.into_ring(ext) + u * u + v * v;
    return out;
}

std::pair<PolyMatrix, PolyMatrix> lemma41_blocks(const PolyMatrix& alpha,
                                                 const PolyMatrix& beta, const Poly& x) {
    if (!alpha.is_square() || !beta.is_square() || alpha.rows() != beta.rows())
        throw std::invalid_argument("lemma41_blocks: size mismatch");
    int n = alpha.rows();
    const RingPtr& ring = alpha.ring();
    PolyMatrix xI = PolyMatrix::scalar(ring, n, x);
    PolyMatrix zero(ring, n, n);
    PolyMatrix A = block2x2(alpha, xI, zero, beta);
    PolyMatrix B = block2x2(beta, -xI, zero, alpha);
    return {A, B};
}

CokernelPresentation cokernel_presentation(const Ctx& R, const PolyMatrix& alpha,
                                           const Poly& x, int h) {
    CokernelPresentation out;
    int n = alpha.rows();
    PolyMatrix a = alpha.map([&](const Poly& p) { return R.nf(p); });
    // Im alpha = Ker alpha over R
    Submodule im = Submodule::make(R, n, matrix_columns(a));
    Submodule ker = kernel_of_map(R, a);
    out.im_eq_ker = submodule_equal(im, ker);
    // x regular on R^n
    PolyMatrix xm(R.ring, 1, 1);
    xm.at(0, 0) = R.nf(x);
    out.x_regular = submodule_is_zero(kernel_of_map(R, xm));
    Poly xh = x.pow(static_cast<uint32_t>(h));
    PolyMatrix xhI = PolyMatrix::scalar(R.ring, n, xh);
    PolyMatrix zero(R.ring, n, n);
    out.pres = block2x2(alpha, -xhI, zero, alpha);
    return out;
}

std::string dim1_summand_label(const Dim1Summand& s) {
    switch (s.kind) {
        case Dim1Summand::Kind::Free: return "R";
        case Dim1Summand::Kind::RmodX: return "R/(x)";
        case Dim1Summand::Kind::Ideal: return "(x,y^" + std::to_string(s.n) + ")";
    }
    return "?";
}

namespace {

// Lowest y-exponent among the terms of a univariate polynomial.
uint32_t trailing_degree(const Poly& p) {
    uint32_t m = UINT32_MAX;
    for (const auto& t : p.terms()) m = std::min(m, t.mono[0]);
    return m;
}

}  // namespace

Dim1Recognition recognize_dim1(const PolyMatrix& mu) {
    Dim1Recognition out;
    const RingPtr& ring = mu.ring();
    if (ring->nvars() != 1)
        throw std::invalid_argument("recognize_dim1 requires a univariate matrix");
    if (!mu.is_square()) throw std::invalid_argument("recognize_dim1 requires a square matrix");
    if (!(mu * mu).is_zero())
        throw std::invalid_argument("recognize_dim1: matrix is not square-zero");
    out.square_zero = true;

    int n = mu.rows();
    SmithResult s = smith_normal_form(mu);
    int r = s.rank;
    // multiset from the invariant factors; local units flag certificates off
    bool exact_powers = true;
    std::vector<uint32_t> powers;
    for (int i = 0; i < r; ++i) {
        const Poly& d = s.D.at(i, i);
        uint32_t m = trailing_degree(d);
        powers.push_back(m);
        Poly ym = Poly::variable(ring, ring->vars()[0]).pow(m);
        if (d != ym) exact_powers = false;  // monic with a non-trivial local unit factor
    }
    for (uint32_t m : powers)
        out.summands.push_back(m == 0 ? Dim1Summand{Dim1Summand::Kind::Free, 0}
                                      : Dim1Summand{Dim1Summand::Kind::Ideal, m});
    for (int i = 0; i < n - 2 * r; ++i)
        out.summands.push_back(Dim1Summand{Dim1Summand::Kind::RmodX, 0});
    std::sort(out.summands.begin(), out.summands.end());

    if (!exact_powers) {
        out.status = "inconclusive: invariant factors carry non-constant local units";
        return out;
    }

    // Constructive conjugation certificate: a stacked basis adapted to
    // Im mu inside Ker mu gives columns (u_i, w_i) with mu w_i = a_i u_i and
    // mu u_i = 0, plus spare kernel columns for the 1x1 zero blocks.
    if (r == 0) {
        out.model = PolyMatrix(ring, n, n);
        out.conj = PolyMatrix::identity(ring, n);
        out.certificate_ok = mu.is_zero();
        out.status = out.certificate_ok ? "ok" : "inconclusive: rank-zero certificate failed";
        return out;
    }

    PolyMatrix P_inv = unimodular_inverse(s.P);
    // kernel basis: columns r..n-1 of Q
    std::vector<int> all_rows(n), ker_cols;
    for (int i = 0; i < n; ++i) all_rows[i] = i;
    for (int j = r; j < n; ++j) ker_cols.push_back(j);
    PolyMatrix K = s.Q.submatrix(all_rows, ker_cols);  // n x (n-r)
    // image basis: d_i * (column i of P^{-1})
    PolyMatrix B(ring, n, r);
    for (int i = 0; i < r; ++i)
        for (int row = 0; row < n; ++row) B.at(row, i) = P_inv.at(row, i) * s.D.at(i, i);

    auto Xopt = solve_via_snf(K, B);
    if (!Xopt) {
        out.status = "inconclusive: image not expressible over the kernel basis";
        return out;
    }
    SmithResult sx = smith_normal_form(*Xopt);
    if (sx.rank != r) {
        out.status = "inconclusive: unexpected interior rank";
        return out;
    }
    PolyMatrix U = K * unimodular_inverse(sx.P);  // refreshed kernel basis

    // preimages w_i with mu w_i = a_i u_i
    PolyMatrix AU(ring, n, r);
    for (int i = 0; i < r; ++i)
        for (int row = 0; row < n; ++row) AU.at(row, i) = U.at(row, i) * sx.D.at(i, i);
    auto Wopt = solve_via_snf(mu, AU);
    if (!Wopt) {
        out.status = "inconclusive: no preimages for the image basis";
        return out;
    }

    // summand order in the certificate: invariant-factor order (units first,
    // ascending powers), then the spare kernel columns
    PolyMatrix T(ring, n, n);
    std::vector<PolyMatrix> blocks;
    int col = 0;
    for (int i = 0; i < r; ++i) {
        for (int row = 0; row < n; ++row) {
            T.at(row, col) = U.at(row, i);
            T.at(row, col + 1) = Wopt->at(row, i);
        }
        col += 2;
        PolyMatrix blk(ring, 2, 2);
        blk.at(0, 1) = sx.D.at(i, i);
        blocks.push_back(blk);
    }
    for (int j = r; j < n - r; ++j) {
        for (int row = 0; row < n; ++row) T.at(row, col) = U.at(row, j);
        ++col;
        PolyMatrix blk(ring, 1, 1);
        blocks.push_back(blk);
    }
    out.model = block_diag(blocks);
    out.conj = T;
    out.certificate_ok = is_unimodular(T) && (mu * T == T * out.model);
    out.status = out.certificate_ok ? "ok" : "inconclusive: certificate verification failed";
    return out;
}

std::optional<PolyMatrix> dim1_conjugator(const PolyMatrix& a, const PolyMatrix& b) {
    Dim1Recognition ra = recognize_dim1(a);
    Dim1Recognition rb = recognize_dim1(b);
    if (!ra.certificate_ok || !rb.certificate_ok) return std::nullopt;
    if (ra.summands != rb.summands) return std::nullopt;
    if (ra.model != rb.model) return std::nullopt;  // same multiset gives the same model
    // a * P = P * b with P = conj_a * conj_b^{-1}
    PolyMatrix P = ra.conj * unimodular_inverse(rb.conj);
    if (!(a * P == P * b)) return std::nullopt;
    return P;
}

Dim2Recognition recognize_dim2(const PolyMatrix& mu) {
    Dim2Recognition out;
    const RingPtr& ring = mu.ring();
    if (ring->nvars() != 2)
        throw std::invalid_argument("recognize_dim2 requires a two-variable matrix");
    if (mu.rows() != 2 || mu.cols() != 2)
        throw std::invalid_argument("recognize_dim2 supports 2x2 matrices only");
    Poly y = Poly::variable(ring, ring->vars()[0]);
    Poly z = Poly::variable(ring, ring->vars()[1]);
    if (!(mu * mu == mu.scaled(y)))
        throw std::invalid_argument("recognize_dim2: matrix does not satisfy mu^2 = y*mu");
    out.relation_ok = true;

    Ctx S{ring, nullptr};
    if (!(mu.trace() == y)) {
        out.status = "unsupported: trace differs from y";
        return out;
    }
    if (!mu.det().is_zero()) {
        out.status = "unsupported: nonzero determinant";
        return out;
    }
    // n from the z-part of the entry ideal: eliminate y via lex(y > z)
    RingPtr lex = ring->with_order(MonomialOrder::Lex);
    std::vector<Poly> entry_gens;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!mu.at(i, j).is_zero()) entry_gens.push_back(mu.at(i, j).into_ring(lex));
    Ideal I1 = Ideal::make(Ctx{lex, nullptr}, entry_gens);
    std::optional<uint32_t> npow;
    for (const auto& g : reduced_groebner_polys(I1)) {
        bool uses_y = g.uses_var(0);
        if (uses_y) continue;
        // expect a monic power of z
        if (g.terms().size() == 1 && g.terms()[0].mono[0] == 0) {
            uint32_t e = g.terms()[0].mono[1];
            if (!npow || e < *npow) npow = e;
        }
    }
    if (!npow || *npow == 0) {
        out.status = "unsupported: entry ideal has no pure z-power generator";
        return out;
    }
    // the entry ideal must be exactly (y, z^n)
    Ideal expected = Ideal::make(Ctx{lex, nullptr},
                                 {Poly::variable(lex, lex->vars()[0]),
                                  Poly::variable(lex, lex->vars()[1]).pow(*npow)});
    if (!ideal_equal(I1, expected)) {
        out.status = "unsupported: entry ideal is not (y, z^n)";
        return out;
    }
    out.n = *npow;

    Submodule ker = kernel_of_map(S, mu);
    out.kernel_gens = ker.gens;
    if (ker.gens.empty()) {
        out.status = "unsupported: zero kernel";
        return out;
    }
    std::vector<Poly> content;
    for (const auto& g : ker.gens)
        for (const auto& e : g.entries)
            if (!e.is_zero()) content.push_back(e);
    Ideal content_ideal = Ideal::make(S, content);
    out.supported = true;
    out.family = content_ideal.is_unit_ideal() ? 'B' : 'A';
    out.status = "ok";
    return out;
}

}  // namespace degenlab
