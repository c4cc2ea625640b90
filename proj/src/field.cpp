#include "degenlab/field.hpp"

namespace degenlab {

namespace {

mpz_class mod_pos(const mpz_class& a, const mpz_class& p) {
    mpz_class r = a % p;
    if (r < 0) r += p;
    return r;
}

mpz_class pow_mod(mpz_class base, mpz_class exp, const mpz_class& p) {
    mpz_class out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    return out;
}

// Residue r with r^2 = -1 mod p, for p = 1 mod 4: r = n^((p-1)/4) for a
// quadratic non-residue n. Returns min(r, p-r) for determinism.
mpz_class sqrt_minus_one_mod(const mpz_class& p) {
    mpz_class e = (p - 1) / 2;
    for (mpz_class n = 2;; ++n) {
        if (pow_mod(n, e, p) == p - 1) {
            mpz_class r = pow_mod(n, (p - 1) / 4, p);
            mpz_class r2 = p - r;
            return r < r2 ? r : r2;
        }
    }
}

}  // namespace

CoeffField CoeffField::rationals() {
    return CoeffField(FieldKind::Rationals, 0, false, 0);
}

CoeffField CoeffField::gaussian_rationals() {
    return CoeffField(FieldKind::GaussianRationals, 0, true, 0);
}

CoeffField CoeffField::prime_field(const mpz_class& p) {
    if (p <= 2) throw std::invalid_argument("prime field characteristic must exceed 2");
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("prime field characteristic is not prime: " + p.get_str());
    bool has_i = mod_pos(p, 4) == 1;
    mpz_class res = has_i ? sqrt_minus_one_mod(p) : mpz_class(0);
    return CoeffField(FieldKind::PrimeField, p, has_i, res);
}

bool CoeffField::embeds_into(const CoeffField& bigger) const {
    if (*this == bigger) return true;
    return kind_ == FieldKind::Rationals && bigger.kind_ == FieldKind::GaussianRationals;
}

FieldElem CoeffField::reduce(FieldElem a) const {
    a.re.canonicalize();
    a.im.canonicalize();
    if (kind_ == FieldKind::PrimeField) {
        // a.re is num/den with den invertible mod p
        mpz_class num = mod_pos(a.re.get_num(), p_);
        mpz_class den = mod_pos(a.re.get_den(), p_);
        if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
        if (den != 1) {
            mpz_class den_inv;
            if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t()) == 0)
                throw std::domain_error("non-invertible denominator in prime field");
            num = mod_pos(num * den_inv, p_);
        }
        a.re = mpq_class(num);
        a.im = 0;
    } else if (kind_ == FieldKind::Rationals) {
        if (a.im != 0) throw std::domain_error("imaginary part in a rational field element");
    }
    return a;
}

FieldElem CoeffField::from_int(long v) const {
    return reduce(FieldElem(mpq_class(v), mpq_class(0)));
}

FieldElem CoeffField::from_mpq(const mpq_class& v) const {
    return reduce(FieldElem(v, mpq_class(0)));
}

FieldElem CoeffField::imaginary_unit() const {
    if (!has_i_) throw std::domain_error("field has no square root of -1");
    if (kind_ == FieldKind::GaussianRationals) return FieldElem(mpq_class(0), mpq_class(1));
    return FieldElem(mpq_class(i_residue_), mpq_class(0));
}

bool CoeffField::is_zero(const FieldElem& a) const { return a.re == 0 && a.im == 0; }

bool CoeffField::is_one(const FieldElem& a) const { return a.re == 1 && a.im == 0; }

bool CoeffField::eq(const FieldElem& a, const FieldElem& b) const {
    return a.re == b.re && a.im == b.im;
}

FieldElem CoeffField::add(const FieldElem& a, const FieldElem& b) const {
    return reduce(FieldElem(a.re + b.re, a.im + b.im));
}

FieldElem CoeffField::sub(const FieldElem& a, const FieldElem& b) const {
    return reduce(FieldElem(a.re - b.re, a.im - b.im));
}

FieldElem CoeffField::neg(const FieldElem& a) const {
    return reduce(FieldElem(-a.re, -a.im));
}

FieldElem CoeffField::mul(const FieldElem& a, const FieldElem& b) const {
    if (kind_ == FieldKind::GaussianRationals)
        return reduce(FieldElem(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re));
    return reduce(FieldElem(a.re * b.re, mpq_class(0)));
}

FieldElem CoeffField::inv(const FieldElem& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero in coefficient field");
    if (kind_ == FieldKind::GaussianRationals) {
        mpq_class n = a.re * a.re + a.im * a.im;
        return reduce(FieldElem(a.re / n, -a.im / n));
    }
    if (kind_ == FieldKind::PrimeField) {
        mpz_class inv_z;
        mpz_class num = mod_pos(a.re.get_num(), p_);
        if (mpz_invert(inv_z.get_mpz_t(), num.get_mpz_t(), p_.get_mpz_t()) == 0)
            throw std::domain_error("non-invertible element in prime field");
        return FieldElem(mpq_class(inv_z), mpq_class(0));
    }
    return FieldElem(1 / a.re, mpq_class(0));
}

FieldElem CoeffField::div(const FieldElem& a, const FieldElem& b) const {
    return mul(a, inv(b));
}

std::string CoeffField::to_string(const FieldElem& a) const {
    auto rat = [](const mpq_class& q) { return q.get_str(); };
    if (a.im == 0) return rat(a.re);
    std::string im_part = (a.im == 1) ? "i" : (a.im == -1 ? "-i" : rat(a.im) + "*i");
    if (a.re == 0) return im_part;
    if (a.im > 0) return rat(a.re) + "+" + (a.im == 1 ? "i" : rat(a.im) + "*i");
    mpq_class m = -a.im;
    return rat(a.re) + "-" + (m == 1 ? "i" : m.get_str() + "*i");
}

}  // namespace degenlab
