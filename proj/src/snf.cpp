#include "degenlab/snf.hpp"

namespace degenlab {

namespace {

uint32_t udeg(const Poly& p) { return p.degree(); }

// Euclidean step in k[y]: a = q*b + r with deg r < deg b.
void divmod1(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    DivisionResult d = divide(a, {b});
    q = d.quotients[0];
    r = d.remainder;
}

struct Worker {
    PolyMatrix A, P, Q;
    RingPtr ring;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < A.cols(); ++c) std::swap(A.at(i, c), A.at(j, c));
        for (int c = 0; c < P.cols(); ++c) std::swap(P.at(i, c), P.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < A.rows(); ++r) std::swap(A.at(r, i), A.at(r, j));
        for (int r = 0; r < Q.rows(); ++r) std::swap(Q.at(r, i), Q.at(r, j));
    }
    void add_row(int dst, int src, const Poly& c) {  // row_dst += c*row_src
        for (int k = 0; k < A.cols(); ++k) A.at(dst, k) = A.at(dst, k) + c * A.at(src, k);
        for (int k = 0; k < P.cols(); ++k) P.at(dst, k) = P.at(dst, k) + c * P.at(src, k);
    }
    void add_col(int dst, int src, const Poly& c) {  // col_dst += c*col_src
        for (int k = 0; k < A.rows(); ++k) A.at(k, dst) = A.at(k, dst) + c * A.at(k, src);
        for (int k = 0; k < Q.rows(); ++k) Q.at(k, dst) = Q.at(k, dst) + c * Q.at(k, src);
    }
    void scale_row(int i, const FieldElem& c) {
        Poly s = Poly::constant(ring, c);
        for (int k = 0; k < A.cols(); ++k) A.at(i, k) = A.at(i, k) * s;
        for (int k = 0; k < P.cols(); ++k) P.at(i, k) = P.at(i, k) * s;
    }
};

}  // namespace

SmithResult smith_normal_form(const PolyMatrix& a) {
    const RingPtr& ring = a.ring();
    if (ring->nvars() != 1)
        throw std::invalid_argument("smith_normal_form requires a univariate ring");
    Worker w{a, PolyMatrix::identity(ring, a.rows()), PolyMatrix::identity(ring, a.cols()), ring};

    int pmax = std::min(a.rows(), a.cols());
    int rank = 0;
    for (int p = 0; p < pmax; ++p) {
        while (true) {
            // smallest-degree nonzero pivot candidate in the trailing block
            int bi = -1, bj = -1;
            uint32_t best = 0;
            for (int i = p; i < w.A.rows(); ++i)
                for (int j = p; j < w.A.cols(); ++j) {
                    const Poly& e = w.A.at(i, j);
                    if (e.is_zero()) continue;
                    if (bi < 0 || udeg(e) < best) { bi = i; bj = j; best = udeg(e); }
                }
            if (bi < 0) { p = pmax; break; }
            w.swap_rows(p, bi);
            w.swap_cols(p, bj);

            bool dirty = false;
            for (int i = p + 1; i < w.A.rows(); ++i) {
                if (w.A.at(i, p).is_zero()) continue;
                Poly q, r;
                divmod1(w.A.at(i, p), w.A.at(p, p), q, r);
                w.add_row(i, p, -q);
                if (!r.is_zero()) dirty = true;
            }
            for (int j = p + 1; j < w.A.cols(); ++j) {
                if (w.A.at(p, j).is_zero()) continue;
                Poly q, r;
                divmod1(w.A.at(p, j), w.A.at(p, p), q, r);
                w.add_col(j, p, -q);
                if (!r.is_zero()) dirty = true;
            }
            if (dirty) continue;

            // pivot row/column clean; enforce divisibility of the rest
            bool fixed = true;
            for (int i = p + 1; i < w.A.rows() && fixed; ++i)
                for (int j = p + 1; j < w.A.cols() && fixed; ++j) {
                    if (w.A.at(i, j).is_zero()) continue;
                    Poly q, r;
                    divmod1(w.A.at(i, j), w.A.at(p, p), q, r);
                    if (!r.is_zero()) {
                        w.add_row(p, i, Poly::from_int(ring, 1));
                        fixed = false;
                    }
                }
            if (fixed) break;
        }
        if (p >= pmax) break;
        ++rank;
    }

    // make invariant factors monic
    const CoeffField& F = ring->field();
    for (int p = 0; p < rank; ++p) {
        const Poly& d = w.A.at(p, p);
        if (!d.is_zero() && !F.is_one(d.leading().coeff))
            w.scale_row(p, F.inv(d.leading().coeff));
    }
    return SmithResult{w.A, w.P, w.Q, rank};
}

std::optional<PolyMatrix> solve_via_snf(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    SmithResult s = smith_normal_form(a);
    PolyMatrix c = s.P * b;  // D * (Qinv X) = P b
    const RingPtr& ring = a.ring();
    PolyMatrix y(ring, a.cols(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            if (i < s.rank) {
                DivisionResult d = divide(c.at(i, j), {s.D.at(i, i)});
                if (!d.remainder.is_zero()) return std::nullopt;
                if (i < a.cols()) y.at(i, j) = d.quotients[0];
            } else if (!c.at(i, j).is_zero()) {
                return std::nullopt;
            }
        }
    }
    return s.Q * y;
}

}  // namespace degenlab
