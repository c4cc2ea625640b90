#include "degenlab/poly.hpp"

#include <sstream>

namespace degenlab {

namespace {

void check_same_ring(const Poly& a, const Poly& b) {
    if (!rings_match(a.ring(), b.ring()))
        throw std::invalid_argument("ring mismatch between polynomial operands");
}

}  // namespace

Poly Poly::constant(RingPtr ring, const FieldElem& c) {
    Poly p(ring);
    if (!ring->field().is_zero(c))
        p.terms_.push_back(Term{Monomial(ring->nvars(), 0), c});
    return p;
}

Poly Poly::from_int(RingPtr ring, long v) {
    FieldElem c = ring->field().from_int(v);
    return constant(std::move(ring), c);
}

Poly Poly::variable(RingPtr ring, const std::string& name, uint32_t power) {
    int idx = ring->var_index(name);
    if (idx < 0) throw std::invalid_argument("unknown variable name: " + name);
    Poly p(ring);
    if (power == 0) return from_int(std::move(ring), 1);
    Monomial m(ring->nvars(), 0);
    m[static_cast<size_t>(idx)] = power;
    p.terms_.push_back(Term{std::move(m), ring->field().one()});
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    const CoeffField& F = ring->field();
    MonomialOrder ord = ring->order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return mono_cmp(a.mono, b.mono, ord) > 0;
    });
    Poly p(ring);
    for (auto& t : terms) {
        if (t.mono.size() != ring->nvars())
            throw std::invalid_argument("monomial length does not match ring");
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = F.add(p.terms_.back().coeff, t.coeff);
            if (F.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
        } else if (!F.is_zero(t.coeff)) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].mono) == 0);
}

bool Poly::is_one() const {
    return terms_.size() == 1 && total_degree(terms_[0].mono) == 0 &&
           ring_->field().is_one(terms_[0].coeff);
}

const Term& Poly::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
}

uint32_t Poly::degree() const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
    return d;
}

uint32_t Poly::degree_in(int var) const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[static_cast<size_t>(var)]);
    return d;
}

bool Poly::uses_var(int var) const {
    for (const auto& t : terms_)
        if (t.mono[static_cast<size_t>(var)] > 0) return true;
    return false;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(*this, o);
    const CoeffField& F = ring_->field();
    MonomialOrder ord = ring_->order();
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].mono, o.terms_[j].mono, ord);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            FieldElem s = F.add(terms_[i].coeff, o.terms_[j].coeff);
            if (!F.is_zero(s)) r.terms_.push_back(Term{terms_[i].mono, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Poly Poly::operator-() const {
    const CoeffField& F = ring_->field();
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, F.neg(t.coeff)});
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mono_scaled(const Monomial& m, const FieldElem& c) const {
    const CoeffField& F = ring_->field();
    Poly r(ring_);
    if (F.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back(Term{mono_mul(t.mono, m), F.mul(t.coeff, c)});
    return r;
}

Poly Poly::scaled(const FieldElem& c) const {
    return mono_scaled(Monomial(ring_->nvars(), 0), c);
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(*this, o);
    const CoeffField& F = ring_->field();
    MonomialOrder ord = ring_->order();
    auto cmp = [&](const Monomial& a, const Monomial& b) { return mono_cmp(a, b, ord) > 0; };
    std::map<Monomial, FieldElem, decltype(cmp)> acc(cmp);
    for (const auto& s : terms_) {
        for (const auto& t : o.terms_) {
            Monomial m = mono_mul(s.mono, t.mono);
            FieldElem c = F.mul(s.coeff, t.coeff);
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(std::move(m), std::move(c));
            else it->second = F.add(it->second, c);
        }
    }
    Poly r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!F.is_zero(c)) r.terms_.push_back(Term{m, c});
    return r;
}

Poly Poly::pow(uint32_t e) const {
    Poly r = from_int(ring_, 1);
    Poly b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = (e >>= 1) ? b * b : b;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!rings_match(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    const CoeffField& F = ring_->field();
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || !F.eq(terms_[i].coeff, o.terms_[i].coeff))
            return false;
    return true;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(ring_->field().inv(terms_[0].coeff));
}

Poly Poly::substitute(const std::string& var, const Poly& value) const {
    int idx = ring_->var_index(var);
    if (idx < 0) throw std::invalid_argument("variable not found: " + var);
    const RingPtr& target = value.ring();
    if (target->var_index(var) >= 0 && value.uses_var(target->var_index(var)))
        throw std::invalid_argument("substitution value must not involve " + var);
    const CoeffField& F = target->field();
    // Map each residual monomial into the target ring and multiply by value^k.
    std::vector<Poly> value_pows{Poly::from_int(target, 1)};
    Poly out = Poly::zero(target);
    for (const auto& t : terms_) {
        uint32_t k = t.mono[static_cast<size_t>(idx)];
        while (value_pows.size() <= k) value_pows.push_back(value_pows.back() * value);
        Monomial m(target->nvars(), 0);
        for (size_t i = 0; i < ring_->nvars(); ++i) {
            if (static_cast<int>(i) == idx) continue;
            if (t.mono[i] == 0) continue;
            int ti = target->var_index(ring_->vars()[i]);
            if (ti < 0)
                throw std::invalid_argument("target ring lacks variable " + ring_->vars()[i]);
            m[static_cast<size_t>(ti)] = t.mono[i];
        }
        FieldElem c(t.coeff);
        if (!ring_->field().embeds_into(F))
            throw std::invalid_argument("coefficient field does not embed for substitution");
        out = out + value_pows[k].mono_scaled(m, c);
    }
    return out;
}

Poly Poly::substitute(const std::string& var, const FieldElem& value) const {
    RingPtr target = ring_->without(var);
    return substitute(var, Poly::constant(target, value));
}

Poly Poly::into_ring(const RingPtr& target) const {
    if (rings_match(ring_, target)) {
        if (ring_ == target) return *this;
    }
    if (!ring_->field().embeds_into(target->field()))
        throw std::invalid_argument("coefficient field does not embed into target ring");
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->nvars(), 0);
        for (size_t i = 0; i < ring_->nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            int ti = target->var_index(ring_->vars()[i]);
            if (ti < 0)
                throw std::invalid_argument("target ring lacks variable " + ring_->vars()[i]);
            m[static_cast<size_t>(ti)] = t.mono[i];
        }
        ts.push_back(Term{std::move(m), t.coeff});
    }
    return from_terms(target, std::move(ts));
}

FieldElem Poly::evaluate(const std::vector<FieldElem>& point, const CoeffField& eval_field) const {
    if (point.size() != ring_->nvars())
        throw std::invalid_argument("evaluation point arity mismatch");
    const CoeffField& F = eval_field;
    FieldElem acc = F.zero();
    for (const auto& t : terms_) {
        FieldElem v = F.from_mpq(t.coeff.re);
        if (t.coeff.im != 0)
            v = F.add(v, F.mul(F.from_mpq(t.coeff.im), F.imaginary_unit()));
        for (size_t i = 0; i < point.size(); ++i) {
            for (uint32_t e = 0; e < t.mono[i]; ++e) v = F.mul(v, point[i]);
        }
        acc = F.add(acc, v);
    }
    return acc;
}

namespace {

// One canonical rendering per term: rational coefficient, then "i" when the
// imaginary part is carried, then variable powers joined by '*'.
void render_term(std::ostringstream& os, const PolyRing& ring, const Monomial& m,
                 const mpq_class& coeff_abs, bool imaginary) {
    bool printed = false;
    if (coeff_abs != 1 || (total_degree(m) == 0 && !imaginary)) {
        os << coeff_abs.get_str();
        printed = true;
    }
    if (imaginary) {
        if (printed) os << "*";
        os << "i";
        printed = true;
    }
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (printed) os << "*";
        os << ring.vars()[i];
        if (m[i] > 1) os << "^" << m[i];
        printed = true;
    }
    if (!printed) os << "1";
}

}  // namespace

std::string Poly::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        // Split a + b*i coefficients into two rendered terms so the output
        // stays inside the input grammar.
        struct Part { mpq_class v; bool imag; };
        std::vector<Part> parts;
        if (t.coeff.re != 0) parts.push_back({t.coeff.re, false});
        if (t.coeff.im != 0) parts.push_back({t.coeff.im, true});
        for (const auto& part : parts) {
            bool negative = part.v < 0;
            if (first) {
                if (negative) os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            render_term(os, *ring_, t.mono, negative ? mpq_class(-part.v) : part.v, part.imag);
        }
    }
    return os.str();
}

DivisionResult divide(const Poly& p, const std::vector<Poly>& divisors) {
    for (const auto& d : divisors) {
        check_same_ring(p, d);
        if (d.is_zero()) throw std::invalid_argument("zero divisor polynomial");
    }
    const RingPtr& ring = p.ring();
    const CoeffField& F = ring->field();
    DivisionResult out;
    out.quotients.assign(divisors.size(), Poly::zero(ring));
    out.remainder = Poly::zero(ring);
    Poly work = p;
    while (!work.is_zero()) {
        const Term& lt = work.leading();
        bool reduced = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            const Term& dt = divisors[i].leading();
            if (!mono_divides(dt.mono, lt.mono)) continue;
            Monomial q = mono_div(lt.mono, dt.mono);
            FieldElem c = F.div(lt.coeff, dt.coeff);
            out.quotients[i] = out.quotients[i] +
                Poly::from_terms(ring, {Term{q, c}});
            work = work - divisors[i].mono_scaled(q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            Poly lt_poly = Poly::from_terms(ring, {lt});
            out.remainder = out.remainder + lt_poly;
            work = work - lt_poly;
        }
    }
    return out;
}

QuotientRing::QuotientRing(RingPtr base, Poly f, std::optional<std::string> presentation_var)
    : base_(std::move(base)), f_(std::move(f)), pres_var_(std::move(presentation_var)) {
    if (f_.is_zero()) throw std::invalid_argument("defining polynomial must be nonzero");
    if (!rings_match(f_.ring(), base_)) throw std::invalid_argument("defining polynomial ring mismatch");
    for (const auto& t : f_.terms())
        if (total_degree(t.mono) == 0)
            throw std::invalid_argument("defining polynomial must have no constant term");
    if (pres_var_) {
        int idx = base_->var_index(*pres_var_);
        if (idx < 0) throw std::invalid_argument("presentation variable not in ring");
        pres_degree_ = static_cast<int>(f_.degree_in(idx));
        // monic in the presentation variable: the x^d coefficient is a nonzero
        // scalar, normalized to 1 by convention.
        Poly top = Poly::zero(base_);
        std::vector<Term> tops;
        for (const auto& t : f_.terms())
            if (t.mono[static_cast<size_t>(idx)] == static_cast<uint32_t>(pres_degree_)) {
                Monomial m = t.mono;
                m[static_cast<size_t>(idx)] = 0;
                tops.push_back(Term{std::move(m), t.coeff});
            }
        top = Poly::from_terms(base_, std::move(tops));
        if (!top.is_one())
            throw std::invalid_argument("defining polynomial is not monic in " + *pres_var_);
    }
}

Poly QuotientRing::normal_form(const Poly& p) const {
    // A single polynomial is a Groebner basis of its principal ideal, so
    // division by f is a true normal form.
    return divide(p, {f_}).remainder;
}

}  // namespace degenlab
