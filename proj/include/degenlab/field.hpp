// Exact coefficient fields: Q, Q(i), and prime fields F_p (p > 2).
//
// Elements are pairs (re, im) of exact rationals. The imaginary part is only
// used for gaussian rationals; prime-field elements keep a canonical integer
// representative in [0, p) in `re`, and sqrt(-1) for p = 1 mod 4 is a concrete
// residue, not a separate component.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace degenlab {

enum class FieldKind { Rationals, GaussianRationals, PrimeField };

struct FieldElem {
    mpq_class re;
    mpq_class im;

    FieldElem() : re(0), im(0) {}
    FieldElem(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
};

class CoeffField {
public:
    static CoeffField rationals();
    static CoeffField gaussian_rationals();
    static CoeffField prime_field(const mpz_class& p);

    FieldKind kind() const { return kind_; }
    const mpz_class& characteristic() const { return p_; }  // 0 for char-0 fields
    bool has_sqrt_minus_one() const { return has_i_; }

    bool operator==(const CoeffField& o) const {
        return kind_ == o.kind_ && p_ == o.p_;
    }
    bool operator!=(const CoeffField& o) const { return !(*this == o); }

    // True when elements of this field embed into `bigger` unchanged
    // (Q into Q(i), and every field into itself).
    bool embeds_into(const CoeffField& bigger) const;

    FieldElem zero() const { return FieldElem(); }
    FieldElem one() const { return from_int(1); }
    FieldElem from_int(long v) const;
    FieldElem from_mpq(const mpq_class& v) const;
    // The element i with i^2 = -1; throws if the field lacks it.
    FieldElem imaginary_unit() const;

    bool is_zero(const FieldElem& a) const;
    bool is_one(const FieldElem& a) const;
    bool eq(const FieldElem& a, const FieldElem& b) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem inv(const FieldElem& a) const;  // throws on zero
    FieldElem div(const FieldElem& a, const FieldElem& b) const;

    std::string to_string(const FieldElem& a) const;

private:
    CoeffField(FieldKind k, mpz_class p, bool has_i, mpz_class i_res)
        : kind_(k), p_(std::move(p)), has_i_(has_i), i_residue_(std::move(i_res)) {}

    FieldElem reduce(FieldElem a) const;  // canonicalize (mod p for F_p)

    FieldKind kind_;
    mpz_class p_;         // 0 unless prime field
    bool has_i_;
    mpz_class i_residue_; // residue r with r^2 = -1 mod p, when it exists
};

}  // namespace degenlab
