// Exact multivariate polynomials with canonically sorted term lists.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degenlab/ring.hpp"

namespace degenlab {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct Term {
    Monomial mono;
    FieldElem coeff;
};

// Immutable after construction; terms strictly descending in the ring order,
// no zero coefficients. The zero polynomial has an empty term list.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const FieldElem& c);
    static Poly from_int(RingPtr ring, long v);
    static Poly variable(RingPtr ring, const std::string& name, uint32_t power = 1);
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);  // sorts & collects

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    const Term& leading() const;  // throws on zero
    uint32_t degree() const;      // total degree; 0 for the zero polynomial
    uint32_t degree_in(int var) const;
    bool uses_var(int var) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const FieldElem& c) const;
    Poly mono_scaled(const Monomial& m, const FieldElem& c) const;  // c*m*this
    Poly pow(uint32_t e) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Make the leading coefficient one.
    Poly monic() const;

    // Substitute one variable by a polynomial in the same ring or by one in
    // the ring without the variable; the result lives in `value`'s ring when
    // given, else in the ring without `var`.
    Poly substitute(const std::string& var, const Poly& value) const;
    Poly substitute(const std::string& var, const FieldElem& value) const;

    // Re-express in `target`, matching variables by name. Throws if a used
    // variable is missing or the coefficient field does not embed.
    Poly into_ring(const RingPtr& target) const;

    // Exact evaluation at a full point (one value per ring variable),
    // computed term-by-term in `eval_field` (coefficients are mapped through
    // from_mpq / imaginary_unit). Used by the test oracles.
    FieldElem evaluate(const std::vector<FieldElem>& point, const CoeffField& eval_field) const;

    std::string render() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

// Multivariate division: p = sum q_i d_i + r with no term of r divisible by
// any divisor's leading term.
struct DivisionResult {
    std::vector<Poly> quotients;
    Poly remainder;
};
DivisionResult divide(const Poly& p, const std::vector<Poly>& divisors);

Poly parse_poly(const std::string& text, const RingPtr& ring);

// Hypersurface quotient ring: base/(f). When `presentation_var` is set, f is
// monic of degree `pres_degree` in that variable.
class QuotientRing {
public:
    QuotientRing(RingPtr base, Poly f, std::optional<std::string> presentation_var = {});

    const RingPtr& base() const { return base_; }
    const Poly& f() const { return f_; }
    const std::optional<std::string>& presentation_var() const { return pres_var_; }
    int pres_degree() const { return pres_degree_; }

    Poly normal_form(const Poly& p) const;

    bool same_as(const QuotientRing& o) const {
        return rings_match(base_, o.base_) && f_ == o.f_;
    }

private:
    RingPtr base_;
    Poly f_;
    std::optional<std::string> pres_var_;
    int pres_degree_ = 0;
};

using QuotientPtr = std::shared_ptr<const QuotientRing>;

// Computation context: a polynomial ring, optionally with a hypersurface
// quotient on top. All ideal/module computations lift through `ring` and
// append f (resp. f*e_i) when `quo` is present.
struct Ctx {
    RingPtr ring;
    QuotientPtr quo;  // may be null; quo->base() == ring otherwise

    Poly nf(const Poly& p) const { return quo ? quo->normal_form(p) : p; }
    bool same_as(const Ctx& o) const {
        if (!rings_match(ring, o.ring)) return false;
        if (!quo != !o.quo) return false;
        return !quo || quo->same_as(*o.quo);
    }
};

}  // namespace degenlab
