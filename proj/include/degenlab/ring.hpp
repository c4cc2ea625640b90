// Polynomial rings: named variables with a monomial order over a coefficient
// field, plus hypersurface quotient rings S[x]/(F) with F monic in a
// distinguished presentation variable.
#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "degenlab/field.hpp"

namespace degenlab {

enum class MonomialOrder { Lex, GrLex, GrevLex };

// Exponent vector; length always equals the owning ring's variable count.
using Monomial = std::vector<uint32_t>;

inline uint32_t total_degree(const Monomial& m) {
    uint32_t d = 0;
    for (uint32_t e : m) d += e;
    return d;
}

// Returns <0, 0, >0 as a is smaller, equal, greater than b under `ord`.
// Variables earlier in the ring's list have higher precedence.
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder ord);

bool mono_divides(const Monomial& d, const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& m, const Monomial& d);  // assumes divisibility
Monomial mono_lcm(const Monomial& a, const Monomial& b);

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
    static RingPtr make(std::vector<std::string> vars, MonomialOrder ord, CoeffField field);

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    MonomialOrder order() const { return order_; }
    const CoeffField& field() const { return field_; }

    int var_index(const std::string& name) const;  // -1 when absent
    bool same_as(const PolyRing& o) const {
        return vars_ == o.vars_ && order_ == o.order_ && field_ == o.field_;
    }

    // Derived rings. `extended` appends fresh variables at the end (so the
    // existing precedence is preserved); `without` drops one variable;
    // `with_order` re-declares the monomial order; `with_field` swaps the
    // coefficient field (used to embed Q-data into Q(i)).
    RingPtr extended(const std::vector<std::string>& extra) const;
    RingPtr without(const std::string& var) const;
    RingPtr with_order(MonomialOrder ord) const;
    RingPtr with_field(const CoeffField& f) const;

private:
    PolyRing(std::vector<std::string> vars, MonomialOrder ord, CoeffField field)
        : vars_(std::move(vars)), order_(ord), field_(std::move(field)) {}

    std::vector<std::string> vars_;
    MonomialOrder order_;
    CoeffField field_;
};

inline bool rings_match(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

std::string order_name(MonomialOrder ord);
MonomialOrder order_from_name(const std::string& s);

}  // namespace degenlab
