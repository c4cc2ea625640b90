#include "degenlab/module.hpp"

#include <deque>

namespace degenlab {

VecPoly vec_zero(const RingPtr& ring, int rank) {
    VecPoly v;
    v.entries.assign(static_cast<size_t>(rank), Poly::zero(ring));
    return v;
}

VecPoly vec_unit(const RingPtr& ring, int rank, int pos) {
    VecPoly v = vec_zero(ring, rank);
    v.entries[static_cast<size_t>(pos)] = Poly::from_int(ring, 1);
    return v;
}

VecPoly vec_add(const VecPoly& a, const VecPoly& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("vector rank mismatch");
    VecPoly r = a;
    for (size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = r.entries[i] + b.entries[i];
    return r;
}

VecPoly vec_sub(const VecPoly& a, const VecPoly& b) { return vec_add(a, vec_neg(b)); }

VecPoly vec_neg(const VecPoly& a) {
    VecPoly r = a;
    for (auto& p : r.entries) p = -p;
    return r;
}

VecPoly vec_mono_scaled(const VecPoly& a, const Monomial& m, const FieldElem& c) {
    VecPoly r = a;
    for (auto& p : r.entries) p = p.mono_scaled(m, c);
    return r;
}

VecPoly vec_poly_scaled(const VecPoly& a, const Poly& p) {
    VecPoly r = a;
    for (auto& q : r.entries) q = q * p;
    return r;
}

bool vec_eq(const VecPoly& a, const VecPoly& b) {
    if (a.rank() != b.rank()) return false;
    for (size_t i = 0; i < a.entries.size(); ++i)
        if (a.entries[i] != b.entries[i]) return false;
    return true;
}

VecPoly vec_nf(const Ctx& ctx, const VecPoly& a) {
    VecPoly r = a;
    for (auto& p : r.entries) p = ctx.nf(p);
    return r;
}

VecPoly matrix_apply(const PolyMatrix& m, const VecPoly& v) {
    if (static_cast<size_t>(m.cols()) != v.rank())
        throw std::invalid_argument("matrix/vector shape mismatch");
    VecPoly r = vec_zero(m.ring(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && !v.entries[j].is_zero())
                r.entries[i] = r.entries[i] + m.at(i, j) * v.entries[j];
    return r;
}

std::vector<VecPoly> matrix_columns(const PolyMatrix& m) {
    std::vector<VecPoly> cols;
    for (int j = 0; j < m.cols(); ++j) {
        VecPoly v;
        v.entries = m.column(j);
        cols.push_back(std::move(v));
    }
    return cols;
}

PolyMatrix columns_to_matrix(const RingPtr& ring, int rank, const std::vector<VecPoly>& cols) {
    PolyMatrix m(ring, rank, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < rank; ++i) m.at(i, static_cast<int>(j)) = cols[j].entries[i];
    return m;
}

std::optional<ModTerm> ModuleGB::lead(const VecPoly& v, MonomialOrder) {
    for (size_t i = 0; i < v.entries.size(); ++i) {
        if (!v.entries[i].is_zero()) {
            const Term& t = v.entries[i].leading();
            return ModTerm{static_cast<int>(i), t.mono, t.coeff};
        }
    }
    return std::nullopt;
}

ModuleGB::ModuleGB(Ctx ctx, int rank, std::vector<VecPoly> gens, SpairBudget budget)
    : ctx_(std::move(ctx)), rank_(rank), budget_(budget) {
    const RingPtr& ring = ctx_.ring;
    const CoeffField& F = ring->field();
    orig_ = gens;
    n_orig_ = gens.size();
    // Augment with the quotient relations f*e_i.
    std::vector<VecPoly> all = std::move(gens);
    if (ctx_.quo) {
        for (int i = 0; i < rank_; ++i) {
            VecPoly w = vec_zero(ring, rank_);
            w.entries[static_cast<size_t>(i)] = ctx_.quo->f();
            all.push_back(std::move(w));
        }
    }
    size_t n_all = all.size();
    for (size_t i = 0; i < n_all; ++i) {
        if (all[i].is_zero()) continue;
        std::vector<Poly> rep(n_all, Poly::zero(ring));
        rep[i] = Poly::from_int(ring, 1);
        // monic normalization
        auto lt = lead(all[i], ring->order());
        FieldElem inv = F.inv(lt->coeff);
        Elem e{vec_mono_scaled(all[i], Monomial(ring->nvars(), 0), inv), rep};
        for (auto& r : e.rep) r = r.scaled(inv);
        basis_.push_back(std::move(e));
    }

    // Buchberger loop.
    std::deque<std::pair<size_t, size_t>> pairs;
    auto enqueue_with = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    };
    for (size_t j = 0; j < basis_.size(); ++j) enqueue_with(j);

    long processed = 0;
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        if (++processed > budget_.max_pairs)
            throw ResourceLimitError("S-pair budget exceeded in module Groebner computation");
        auto li = lead(basis_[i].v, ring->order());
        auto lj = lead(basis_[j].v, ring->order());
        if (li->pos != lj->pos) continue;
        Monomial l = mono_lcm(li->mono, lj->mono);
        // Buchberger's product criterion is only valid in the rank-one
        // (ideal) case.
        if (rank_ == 1 && mono_mul(li->mono, lj->mono) == l) continue;
        Monomial mi = mono_div(l, li->mono);
        Monomial mj = mono_div(l, lj->mono);
        FieldElem one = F.one();
        VecPoly sp = vec_sub(vec_mono_scaled(basis_[i].v, mi, one),
                             vec_mono_scaled(basis_[j].v, mj, one));
        std::vector<Poly> rep(n_all, Poly::zero(ring));
        for (size_t k = 0; k < n_all; ++k)
            rep[k] = basis_[i].rep[k].mono_scaled(mi, one) -
                     basis_[j].rep[k].mono_scaled(mj, one);
        std::vector<Poly> red_rep(n_all, Poly::zero(ring));
        VecPoly nf = reduce_full(sp, &red_rep);
        if (!nf.is_zero()) {
            for (size_t k = 0; k < n_all; ++k) rep[k] = rep[k] - red_rep[k];
            auto lt = lead(nf, ring->order());
            FieldElem inv = F.inv(lt->coeff);
            VecPoly v = vec_mono_scaled(nf, Monomial(ring->nvars(), 0), inv);
            for (auto& r : rep) r = r.scaled(inv);
            basis_.push_back(Elem{std::move(v), std::move(rep)});
            enqueue_with(basis_.size() - 1);
        }
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<bool> keep(basis_.size(), true);
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (!keep[i]) continue;
        auto li = lead(basis_[i].v, ring->order());
        for (size_t j = 0; j < basis_.size(); ++j) {
            if (i == j || !keep[j]) continue;
            auto lj = lead(basis_[j].v, ring->order());
            if (li->pos == lj->pos && mono_divides(lj->mono, li->mono)) {
                if (lj->mono == li->mono && j > i) continue;  // keep the earlier one
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<Elem> mini;
    for (size_t i = 0; i < basis_.size(); ++i)
        if (keep[i]) mini.push_back(std::move(basis_[i]));
    basis_ = std::move(mini);

    // Tail-reduce each element against the others.
    for (size_t i = 0; i < basis_.size(); ++i) {
        std::vector<Poly> red_rep(n_all, Poly::zero(ring));
        VecPoly nf = reduce_full(basis_[i].v, &red_rep, i);
        for (size_t k = 0; k < n_all; ++k) basis_[i].rep[k] = basis_[i].rep[k] - red_rep[k];
        basis_[i].v = std::move(nf);
    }
}

VecPoly ModuleGB::reduce_full(VecPoly v, std::vector<Poly>* rep, size_t skip) const {
    const RingPtr& ring = ctx_.ring;
    const CoeffField& F = ring->field();
    VecPoly rem = vec_zero(ring, rank_);
    while (true) {
        auto lt = lead(v, ring->order());
        if (!lt) break;
        bool reduced = false;
        for (size_t g = 0; g < basis_.size(); ++g) {
            if (g == skip) continue;
            auto lg = lead(basis_[g].v, ring->order());
            if (!lg || lg->pos != lt->pos || !mono_divides(lg->mono, lt->mono)) continue;
            Monomial m = mono_div(lt->mono, lg->mono);
            FieldElem c = F.div(lt->coeff, lg->coeff);
            v = vec_sub(v, vec_mono_scaled(basis_[g].v, m, c));
            if (rep) {
                for (size_t k = 0; k < rep->size(); ++k)
                    (*rep)[k] = (*rep)[k] + basis_[g].rep[k].mono_scaled(m, c);
            }
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the leading term into the remainder
            Poly lt_poly = Poly::from_terms(ring, {Term{lt->mono, lt->coeff}});
            rem.entries[static_cast<size_t>(lt->pos)] =
                rem.entries[static_cast<size_t>(lt->pos)] + lt_poly;
            v.entries[static_cast<size_t>(lt->pos)] =
                v.entries[static_cast<size_t>(lt->pos)] - lt_poly;
        }
    }
    return rem;
}

VecPoly ModuleGB::normal_form(const VecPoly& v, std::vector<Poly>* cofactors) const {
    if (v.rank() != static_cast<size_t>(rank_))
        throw std::invalid_argument("vector rank does not match module ambient rank");
    size_t n_all = basis_.empty() ? n_orig_ + (ctx_.quo ? rank_ : 0) : basis_[0].rep.size();
    std::vector<Poly> rep(n_all, Poly::zero(ctx_.ring));
    VecPoly nf = reduce_full(v, &rep);
    if (cofactors) {
        cofactors->assign(n_orig_, Poly::zero(ctx_.ring));
        for (size_t k = 0; k < n_orig_; ++k) (*cofactors)[k] = ctx_.nf(rep[k]);
    }
    return nf;
}

bool ModuleGB::contains(const VecPoly& v, std::vector<Poly>* cofactors) const {
    return normal_form(v, cofactors).is_zero();
}

std::vector<VecPoly> ModuleGB::syzygies() const {
    const RingPtr& ring = ctx_.ring;
    // Tagged generators (v_i ; e_i) for every augmented generator, ambient
    // positions dominating the tags; GB elements supported entirely in the
    // tag block are exactly the syzygies.
    std::vector<VecPoly> all = orig_;
    if (ctx_.quo) {
        for (int i = 0; i < rank_; ++i) {
            VecPoly w = vec_zero(ring, rank_);
            w.entries[static_cast<size_t>(i)] = ctx_.quo->f();
            all.push_back(std::move(w));
        }
    }
    size_t k = all.size();
    int big_rank = rank_ + static_cast<int>(k);
    std::vector<VecPoly> tagged;
    for (size_t i = 0; i < k; ++i) {
        VecPoly w = vec_zero(ring, big_rank);
        for (int r = 0; r < rank_; ++r) w.entries[static_cast<size_t>(r)] = all[i].entries[static_cast<size_t>(r)];
        w.entries[static_cast<size_t>(rank_) + i] = Poly::from_int(ring, 1);
        tagged.push_back(std::move(w));
    }
    Ctx plain{ring, nullptr};
    ModuleGB big(plain, big_rank, std::move(tagged), budget_);
    std::vector<VecPoly> syz;
    for (const auto& e : big.basis_) {
        bool ambient_zero = true;
        for (int r = 0; r < rank_; ++r)
            if (!e.v.entries[static_cast<size_t>(r)].is_zero()) { ambient_zero = false; break; }
        if (!ambient_zero) continue;
        VecPoly c = vec_zero(ring, static_cast<int>(n_orig_));
        for (size_t i = 0; i < n_orig_; ++i)
            c.entries[i] = ctx_.nf(e.v.entries[static_cast<size_t>(rank_) + i]);
        if (!c.is_zero()) syz.push_back(std::move(c));
    }
    return syz;
}

Submodule Submodule::make(Ctx ctx, int rank, std::vector<VecPoly> gens, bool with_gb,
                          SpairBudget budget) {
    Submodule s;
    s.ctx = ctx;
    s.ambient_rank = rank;
    for (auto& g : gens) {
        if (static_cast<int>(g.rank()) != rank)
            throw std::invalid_argument("generator rank does not match ambient rank");
        VecPoly n = vec_nf(ctx, g);
        if (!n.is_zero()) s.gens.push_back(std::move(n));
    }
    if (with_gb) s.gb = std::make_shared<ModuleGB>(ctx, rank, s.gens, budget);
    return s;
}

namespace {

std::shared_ptr<const ModuleGB> module_gb_of(const Submodule& s) {
    if (s.gb) return s.gb;
    return std::make_shared<ModuleGB>(s.ctx, s.ambient_rank, s.gens);
}

}  // namespace

bool submodule_membership(const Submodule& s, const VecPoly& v, std::vector<Poly>* cofactors) {
    return module_gb_of(s)->contains(vec_nf(s.ctx, v), cofactors);
}

bool submodule_contains(const Submodule& a, const Submodule& b) {
    auto gb = module_gb_of(a);
    for (const auto& g : b.gens)
        if (!gb->contains(g)) return false;
    return true;
}

bool submodule_equal(const Submodule& a, const Submodule& b) {
    if (!a.ctx.same_as(b.ctx) || a.ambient_rank != b.ambient_rank) return false;
    return submodule_contains(a, b) && submodule_contains(b, a);
}

bool submodule_is_zero(const Submodule& s) { return s.gens.empty(); }

Submodule kernel_of_map(const Ctx& ctx, const PolyMatrix& m) {
    std::vector<VecPoly> cols = matrix_columns(m.map([&](const Poly& p) { return ctx.nf(p); }));
    ModuleGB gb(ctx, m.rows(), cols);
    std::vector<VecPoly> syz = gb.syzygies();
    return Submodule::make(ctx, m.cols(), std::move(syz));
}

PolyMatrix presentation_of_columns(const Ctx& ctx, const PolyMatrix& m) {
    Submodule ker = kernel_of_map(ctx, m);
    return columns_to_matrix(ctx.ring, m.cols(), ker.gens);
}

Ideal Ideal::make(Ctx ctx, std::vector<Poly> gens, bool with_gb, SpairBudget budget) {
    Ideal i;
    i.ctx = ctx;
    for (auto& g : gens) {
        if (!rings_match(g.ring(), ctx.ring))
            throw std::invalid_argument("ideal generator ring mismatch");
        Poly n = ctx.nf(g);
        if (!n.is_zero()) i.gens.push_back(std::move(n));
    }
    if (with_gb) {
        std::vector<VecPoly> vg;
        for (const auto& g : i.gens) vg.push_back(VecPoly{{g}});
        i.gb = std::make_shared<ModuleGB>(ctx, 1, std::move(vg), budget);
    }
    return i;
}

bool Ideal::is_unit_ideal() const {
    Ideal tmp = gb ? *this : make(ctx, gens);
    return ideal_membership(tmp, Poly::from_int(ctx.ring, 1));
}

Ideal buchberger(const Ideal& i) {
    if (i.gb) return i;
    return Ideal::make(i.ctx, i.gens);
}

std::vector<Poly> reduced_groebner_polys(const Ideal& i) {
    Ideal j = buchberger(i);
    std::vector<Poly> out;
    for (size_t k = 0; k < j.gb->size(); ++k) out.push_back(j.gb->basis_at(k).entries[0]);
    return out;
}

bool ideal_membership(const Ideal& i, const Poly& p, std::vector<Poly>* cofactors) {
    Ideal j = buchberger(i);
    return j.gb->contains(VecPoly{{j.ctx.nf(p)}}, cofactors);
}

bool ideal_contains(const Ideal& i, const Ideal& j) {
    Ideal gi = buchberger(i);
    for (const auto& g : j.gens)
        if (!ideal_membership(gi, g)) return false;
    return true;
}

bool ideal_equal(const Ideal& i, const Ideal& j) {
    return ideal_contains(i, j) && ideal_contains(j, i);
}

Ideal minors_ideal(const Ctx& ctx, const PolyMatrix& m, int j) {
    if (j < 0 || j > std::min(m.rows(), m.cols()))
        throw std::invalid_argument("minor size out of range");
    return Ideal::make(ctx, m.minors(j));
}

Ideal fitting_ideal(const Ctx& ctx, const PolyMatrix& pres, int i) {
    if (i < 0) throw std::invalid_argument("Fitting index must be non-negative");
    int n = pres.rows();
    if (i >= n) return Ideal::make(ctx, {Poly::from_int(ctx.ring, 1)});
    int j = n - i;
    if (j > pres.cols()) return Ideal::make(ctx, {});  // no j-minors: zero ideal
    return minors_ideal(ctx, pres, j);
}

SaturationResult saturation_bounded_contains(const Ideal& I, const Ideal& J,
                                             const std::string& t_var, int l_max) {
    if (!I.ctx.same_as(J.ctx)) throw std::invalid_argument("saturation: context mismatch");
    if (I.ctx.ring->var_index(t_var) < 0)
        throw std::invalid_argument("saturation: ring lacks variable " + t_var);
    Ideal gi = buchberger(I);
    Poly t = Poly::variable(I.ctx.ring, t_var);
    for (int l = 0; l <= l_max; ++l) {
        Poly tl = t.pow(static_cast<uint32_t>(l));
        bool ok = true;
        for (const auto& g : J.gens)
            if (!ideal_membership(gi, tl * g)) { ok = false; break; }
        if (ok) return SaturationResult{true, l};
    }
    return SaturationResult{false, 0};
}

}  // namespace degenlab
