#include "degenlab/ring.hpp"

#include <cctype>
#include <stdexcept>

namespace degenlab {

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    switch (ord) {
        case MonomialOrder::Lex: {
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        }
        case MonomialOrder::GrLex: {
            uint32_t da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db ? -1 : 1;
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        }
        case MonomialOrder::GrevLex: {
            uint32_t da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db ? -1 : 1;
            for (size_t i = a.size(); i-- > 0;)
                if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mono_div(const Monomial& m, const Monomial& d) {
    Monomial r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = m[i] - d[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

RingPtr PolyRing::make(std::vector<std::string> vars, MonomialOrder ord, CoeffField field) {
    for (const auto& v : vars) {
        if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0]))))
            throw std::invalid_argument("variable name must start with a letter: '" + v + "'");
        for (char c : v)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw std::invalid_argument("bad character in variable name: '" + v + "'");
    }
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw std::invalid_argument("duplicate variable name: " + vars[i]);
    return RingPtr(new PolyRing(std::move(vars), ord, std::move(field)));
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr PolyRing::extended(const std::vector<std::string>& extra) const {
    std::vector<std::string> v = vars_;
    for (const auto& e : extra) {
        if (var_index(e) >= 0) throw std::invalid_argument("variable clash on " + e);
        v.push_back(e);
    }
    return make(std::move(v), order_, field_);
}

RingPtr PolyRing::without(const std::string& var) const {
    std::vector<std::string> v;
    bool found = false;
    for (const auto& x : vars_) {
        if (x == var) { found = true; continue; }
        v.push_back(x);
    }
    if (!found) throw std::invalid_argument("variable not found: " + var);
    return make(std::move(v), order_, field_);
}

RingPtr PolyRing::with_order(MonomialOrder ord) const {
    return make(vars_, ord, field_);
}

RingPtr PolyRing::with_field(const CoeffField& f) const {
    return make(vars_, order_, f);
}

std::string order_name(MonomialOrder ord) {
    switch (ord) {
        case MonomialOrder::Lex: return "lex";
        case MonomialOrder::GrLex: return "grlex";
        case MonomialOrder::GrevLex: return "grevlex";
    }
    return "grevlex";
}

MonomialOrder order_from_name(const std::string& s) {
    if (s == "lex") return MonomialOrder::Lex;
    if (s == "grlex") return MonomialOrder::GrLex;
    if (s == "grevlex") return MonomialOrder::GrevLex;
    throw std::invalid_argument("unknown monomial order: " + s);
}

}  // namespace degenlab
