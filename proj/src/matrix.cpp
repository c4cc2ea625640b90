#include "degenlab/matrix.hpp"

#include <functional>
#include <map>

namespace degenlab {

PolyMatrix PolyMatrix::identity(RingPtr ring, int n) {
    return scalar(ring, n, Poly::from_int(ring, 1));
}

PolyMatrix PolyMatrix::scalar(RingPtr ring, int n, const Poly& s) {
    PolyMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : a_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const { return *this + (-o); }

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    PolyMatrix r(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Poly& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
            }
        }
    return r;
}

PolyMatrix PolyMatrix::scaled(const Poly& s) const {
    PolyMatrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix r(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::substitute(const std::string& var, const FieldElem& value) const {
    return map([&](const Poly& p) { return p.substitute(var, value); });
}

PolyMatrix PolyMatrix::substitute(const std::string& var, const Poly& value) const {
    return map([&](const Poly& p) { return p.substitute(var, value); });
}

PolyMatrix PolyMatrix::into_ring(const RingPtr& target) const {
    return map([&](const Poly& p) { return p.into_ring(target); });
}

PolyMatrix PolyMatrix::map(const std::function<Poly(const Poly&)>& fn) const {
    if (a_.empty()) return *this;
    Poly probe = fn(a_[0]);
    PolyMatrix r(probe.ring(), rows_, cols_);
    r.a_[0] = probe;
    for (size_t i = 1; i < a_.size(); ++i) r.a_[i] = fn(a_[i]);
    return r;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& row_idx,
                                 const std::vector<int>& col_idx) const {
    PolyMatrix r(ring_, static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (size_t i = 0; i < row_idx.size(); ++i)
        for (size_t j = 0; j < col_idx.size(); ++j) r.at(int(i), int(j)) = at(row_idx[i], col_idx[j]);
    return r;
}

Poly PolyMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
    Poly t = Poly::zero(ring_);
    for (int i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

namespace {

// Expansion along the first remaining row; memoized on the set of remaining
// columns. Exact over arbitrary commutative coefficient entries, which rules
// out fraction-based elimination.
Poly det_memo(const PolyMatrix& m, uint32_t col_mask, int row,
              std::map<uint32_t, Poly>& memo) {
    auto it = memo.find(col_mask);
    if (it != memo.end()) return it->second;
    const RingPtr& ring = m.ring();
    if (col_mask == 0) return Poly::from_int(ring, 1);
    Poly acc = Poly::zero(ring);
    int sign = 1;
    for (int c = 0, seen = 0; c < m.cols(); ++c) {
        if (!(col_mask & (1u << c))) continue;
        const Poly& entry = m.at(row, c);
        if (!entry.is_zero()) {
            Poly sub = det_memo(m, col_mask & ~(1u << c), row + 1, memo);
            Poly contrib = entry * sub;
            acc = (sign > 0) ? acc + contrib : acc - contrib;
        }
        sign = -sign;
        ++seen;
    }
    memo.emplace(col_mask, acc);
    return acc;
}

}  // namespace

Poly PolyMatrix::det() const {
    if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    if (rows_ == 0) return Poly::from_int(ring_, 1);
    if (rows_ > 16) throw std::invalid_argument("determinant size out of supported range");
    std::map<uint32_t, Poly> memo;
    uint32_t full = (rows_ == 32) ? ~0u : ((1u << rows_) - 1);
    return det_memo(*this, full, 0, memo);
}

namespace {

void subsets_rec(int n, int k, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) { out.push_back(cur); return; }
    for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        subsets_rec(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_rec(n, k, 0, cur, out);
    return out;
}

}  // namespace

std::vector<Poly> PolyMatrix::minors(int j) const {
    if (j < 0 || j > std::min(rows_, cols_))
        throw std::invalid_argument("minor size out of range");
    if (j == 0) return {Poly::from_int(ring_, 1)};
    std::vector<Poly> out;
    for (const auto& rs : subsets(rows_, j))
        for (const auto& cs : subsets(cols_, j)) out.push_back(submatrix(rs, cs).det());
    return out;
}

std::vector<Poly> PolyMatrix::column(int c) const {
    std::vector<Poly> v;
    v.reserve(rows_);
    for (int i = 0; i < rows_; ++i) v.push_back(at(i, c));
    return v;
}

PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b,
                    const PolyMatrix& c, const PolyMatrix& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
        b.cols() != d.cols())
        throw std::invalid_argument("block shape mismatch");
    PolyMatrix r(a.ring(), a.rows() + c.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    for (int i = 0; i < c.rows(); ++i) {
        for (int j = 0; j < c.cols(); ++j) r.at(a.rows() + i, j) = c.at(i, j);
        for (int j = 0; j < d.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = d.at(i, j);
    }
    return r;
}

PolyMatrix block_diag(const std::vector<PolyMatrix>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("empty block list");
    int rows = 0, cols = 0;
    for (const auto& b : blocks) { rows += b.rows(); cols += b.cols(); }
    PolyMatrix r(blocks[0].ring(), rows, cols);
    int ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) r.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return r;
}

PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat row mismatch");
    PolyMatrix r(a.ring(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

bool is_unimodular(const PolyMatrix& m) {
    if (!m.is_square()) return false;
    Poly d = m.det();
    return !d.is_zero() && d.is_constant();
}

PolyMatrix unimodular_inverse(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    Poly d = m.det();
    if (d.is_zero() || !d.is_constant())
        throw std::invalid_argument("matrix determinant is not a unit");
    const CoeffField& F = m.ring()->field();
    FieldElem dinv = F.inv(d.leading().coeff);
    int n = m.rows();
    PolyMatrix inv(m.ring(), n, n);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> rs, cs;
            for (int k = 0; k < n; ++k) {
                if (k != j) rs.push_back(k);
                if (k != i) cs.push_back(k);
            }
            Poly cof = (n == 1) ? Poly::from_int(m.ring(), 1) : m.submatrix(rs, cs).det();
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at(i, j) = cof.scaled(dinv);
        }
    return inv;
}

}  // namespace degenlab
