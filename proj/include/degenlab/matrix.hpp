// Dense matrices of exact polynomials with cofactor-expansion determinants.
#pragma once

#include <functional>
#include <vector>

#include "degenlab/poly.hpp"

namespace degenlab {

class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(RingPtr ring, int rows, int cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * cols, Poly::zero(ring_)) {}

    static PolyMatrix identity(RingPtr ring, int n);
    static PolyMatrix scalar(RingPtr ring, int n, const Poly& s);  // s*I

    const RingPtr& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Poly& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    Poly& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator-() const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix scaled(const Poly& s) const;
    PolyMatrix transposed() const;

    // Entries mapped through Poly::substitute / into_ring / a callback.
    PolyMatrix substitute(const std::string& var, const FieldElem& value) const;
    PolyMatrix substitute(const std::string& var, const Poly& value) const;
    PolyMatrix into_ring(const RingPtr& target) const;
    PolyMatrix map(const std::function<Poly(const Poly&)>& fn) const;

    PolyMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

    Poly trace() const;
    Poly det() const;  // exact cofactor expansion with column-subset memoization

    // All j x j minors, in row-major subset order.
    std::vector<Poly> minors(int j) const;

    std::vector<Poly> column(int c) const;

private:
    RingPtr ring_;
    int rows_, cols_;
    std::vector<Poly> a_;
};

// 2x2 block assembly: [[a, b], [c, d]] with matching shapes.
PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b,
                    const PolyMatrix& c, const PolyMatrix& d);
PolyMatrix block_diag(const std::vector<PolyMatrix>& blocks);
PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b);

// Adjugate-based inverse for matrices whose determinant is a nonzero scalar.
// Throws when det is not a unit of the coefficient field.
PolyMatrix unimodular_inverse(const PolyMatrix& m);

// det(m) is a nonzero element of the coefficient field.
bool is_unimodular(const PolyMatrix& m);

}  // namespace degenlab
