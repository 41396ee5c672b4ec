#include "starrees/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace starrees {

GroebnerLimits GroebnerLimits::from_env() {
    GroebnerLimits l;
    auto read = [](const char* name, auto& slot) {
        if (const char* v = std::getenv(name)) {
            char* end = nullptr;
            unsigned long long x = std::strtoull(v, &end, 10);
            if (end == v || *end != '\0' || x == 0)
                fail(ErrorKind::Parse, std::string("bad value for ") + name + ": '" + v + "'");
            slot = static_cast<std::remove_reference_t<decltype(slot)>>(x);
        }
    };
    read("STARREES_GB_MAX_BASIS", l.max_basis);
    read("STARREES_GB_MAX_DEGREE", l.max_degree);
    return l;
}

namespace {

std::uint64_t divmask(const Monomial& m) {
    std::uint64_t k = 0;
    for (int v = 0; v < m.size(); ++v)
        if (m.e[v]) k |= 1ull << (v % 64);
    return k;
}

long wdeg(const MonomialOrder& o, const Monomial& m) {
    const auto& w = o.weights();
    long d = 0;
    for (int v = 0; v < m.size(); ++v) d += long(v < static_cast<int>(w.size()) ? w[v] : 1) * m.e[v];
    return d;
}

struct Element {
    Poly p;
    std::uint64_t mask;
    long sugar;
    bool active;
};

struct Pair {
    int i, j;
    Monomial lcm;
    long sugar;
};

class Engine {
  public:
    Engine(const RingPtr& ring, const GroebnerLimits& limits, GroebnerStats* stats)
        : ring_(ring), order_(ring->order), limits_(limits), stats_(stats) {}

    std::vector<Poly> run(const std::vector<Poly>& gens) {
        for (const auto& g0 : gens) {
            Poly g = g0.in_ring(ring_);
            if (g.is_zero()) continue;
            long sugar = 0;
            for (const auto& t : g.terms()) sugar = std::max(sugar, wdeg(order_, t.mono));
            Poly h = reduce(g);
            if (h.is_zero()) continue;
            if (add(h.monic(), sugar)) return {Poly::constant(ring_, 1)};
        }
        while (!pairs_.empty()) {
            std::pop_heap(pairs_.begin(), pairs_.end(), worse_);
            Pair p = std::move(pairs_.back());
            pairs_.pop_back();
            if (stats_) ++stats_->pairs_reduced;
            if (p.sugar > long(limits_.max_degree))
                fail(ErrorKind::Resource, "Groebner degree cap " + std::to_string(limits_.max_degree) + " exceeded");
            const Poly& a = elems_[p.i].p;
            const Poly& b = elems_[p.j].p;
            Poly s = a.mul_term(a.lm().quotient_of(p.lcm), Scalar::one(ring_->field));
            s = s.sub_mul_term(Scalar::one(ring_->field), b.lm().quotient_of(p.lcm), b);
            Poly h = reduce(s);
            if (h.is_zero()) {
                if (stats_) ++stats_->zero_reductions;
                continue;
            }
            if (add(h.monic(), p.sugar)) return {Poly::constant(ring_, 1)};
        }
        return finish();
    }

  private:
    // Heap order: the best pair (lowest sugar, then lcm, then indices) on top.
    struct Worse {
        const MonomialOrder* order;
        bool operator()(const Pair& y, const Pair& x) const {
            if (x.sugar != y.sugar) return x.sugar < y.sugar;
            int c = order->compare(x.lcm, y.lcm);
            if (c != 0) return c < 0;
            if (x.j != y.j) return x.j < y.j;
            return x.i < y.i;
        }
    };

    const Element* find_divisor(const Monomial& m, std::uint64_t mask, int skip = -1) const {
        for (int k = 0; k < static_cast<int>(elems_.size()); ++k) {
            const Element& e = elems_[k];
            if (!e.active || k == skip) continue;
            if (e.mask & ~mask) continue;
            if (e.p.lm().divides(m)) return &e;
        }
        return nullptr;
    }

    Poly reduce(Poly f, int skip = -1) const {
        std::vector<Term> rest;
        while (!f.is_zero()) {
            const Term& lt = f.lead();
            if (const Element* d = find_divisor(lt.mono, divmask(lt.mono), skip)) {
                f = f.sub_mul_term(lt.coeff, d->p.lm().quotient_of(lt.mono), d->p);
            } else {
                rest.push_back(lt);
                f.drop_lead();
            }
        }
        return Poly::from_terms(ring_, std::move(rest));
    }

    // Gebauer-Moller update. Returns true when h is a nonzero constant.
    bool add(Poly h, long sugar) {
        if (h.lm().is_one()) return true;
        const int hi = static_cast<int>(elems_.size());
        const Monomial& lh = h.lm();
        elems_.push_back({h, divmask(lh), sugar, true});
        if (stats_) stats_->max_basis = std::max(stats_->max_basis, elems_.size());
        if (elems_.size() > limits_.max_basis)
            fail(ErrorKind::Resource, "Groebner basis size cap " + std::to_string(limits_.max_basis) + " exceeded");

        struct Cand {
            int g;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> c;
        for (int g = 0; g < hi; ++g) {
            if (!elems_[g].active) continue;
            const Monomial& lg = elems_[g].p.lm();
            c.push_back({g, lh.lcm(lg), lh.coprime(lg)});
        }
        // Chain criterion among the new pairs.
        std::vector<Cand> d;
        for (std::size_t k = 0; k < c.size(); ++k) {
            bool keep = c[k].coprime;
            if (!keep) {
                keep = true;
                for (std::size_t l = k + 1; l < c.size() && keep; ++l)
                    if (c[l].lcm.divides(c[k].lcm)) keep = false;
                for (std::size_t l = 0; l < d.size() && keep; ++l)
                    if (d[l].lcm.divides(c[k].lcm)) keep = false;
            }
            if (keep) d.push_back(c[k]);
        }
        // Old pairs made redundant by h.
        std::vector<Pair> kept;
        kept.reserve(pairs_.size());
        for (auto& p : pairs_) {
            if (lh.divides(p.lcm)) {
                Monomial li = elems_[p.i].p.lm().lcm(lh);
                Monomial lj = elems_[p.j].p.lm().lcm(lh);
                if (li != p.lcm && lj != p.lcm) {
                    if (stats_) ++stats_->pairs_considered;
                    continue;
                }
            }
            kept.push_back(std::move(p));
        }
        pairs_ = std::move(kept);
        // Product criterion.
        for (auto& cand : d) {
            if (stats_) ++stats_->pairs_considered;
            if (cand.coprime) continue;
            const Element& g = elems_[cand.g];
            long s = std::max(g.sugar + wdeg(order_, cand.lcm) - wdeg(order_, g.p.lm()),
                              sugar + wdeg(order_, cand.lcm) - wdeg(order_, lh));
            pairs_.push_back({cand.g, hi, std::move(cand.lcm), s});
        }
        std::make_heap(pairs_.begin(), pairs_.end(), worse_);
        for (int g = 0; g < hi; ++g)
            if (elems_[g].active && lh.divides(elems_[g].p.lm())) elems_[g].active = false;
        return false;
    }

    std::vector<Poly> finish() {
        std::vector<Poly> out;
        for (int k = 0; k < static_cast<int>(elems_.size()); ++k) {
            if (!elems_[k].active) continue;
            Poly p = elems_[k].p;
            Term lead = p.lead();
            p.drop_lead();
            Poly tail = reduce(p, k);
            out.push_back(Poly::monomial(ring_, lead.mono, lead.coeff) + tail);
        }
        std::sort(out.begin(), out.end(),
                  [this](const Poly& a, const Poly& b) { return order_.compare(a.lm(), b.lm()) < 0; });
        return out;
    }

    RingPtr ring_;
    const MonomialOrder& order_;
    GroebnerLimits limits_;
    GroebnerStats* stats_;
    std::vector<Element> elems_;
    std::vector<Pair> pairs_;
    Worse worse_{&order_};
};

} // namespace

GroebnerBasis buchberger_reduced(const RingPtr& ring, const std::vector<Poly>& gens, const GroebnerLimits& limits,
                                 GroebnerStats* stats) {
    Engine engine(ring, limits, stats);
    std::vector<Poly> source;
    source.reserve(gens.size());
    for (const auto& g : gens) source.push_back(g.in_ring(ring));
    auto basis = engine.run(source);
    return GroebnerBasis(ring, std::move(basis), std::move(source));
}

Poly reduce_by(const Poly& f0, const std::vector<Poly>& divisors) {
    Poly f = f0;
    std::vector<Term> rest;
    std::vector<std::uint64_t> masks;
    for (const auto& d : divisors) masks.push_back(d.is_zero() ? 0 : divmask(d.lm()));
    while (!f.is_zero()) {
        const Term& lt = f.lead();
        const std::uint64_t m = divmask(lt.mono);
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            const Poly& d = divisors[k];
            if (d.is_zero() || (masks[k] & ~m) || !d.lm().divides(lt.mono)) continue;
            f = f.sub_mul_term(lt.coeff / d.lc(), d.lm().quotient_of(lt.mono), d);
            reduced = true;
            break;
        }
        if (!reduced) {
            rest.push_back(lt);
            f.drop_lead();
        }
    }
    return Poly::from_terms(f0.ring(), std::move(rest));
}

Poly GroebnerBasis::normal_form(const Poly& f) const { return reduce_by(f.in_ring(ring_), basis_); }

bool GroebnerBasis::is_unit_ideal() const { return basis_.size() == 1 && basis_[0].lm().is_one(); }

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
    return same_ring(ring_, o.ring_) && basis_ == o.basis_;
}

bool ideal_member(const Poly& f, const GroebnerBasis& gb) { return gb.member(f); }

bool ideal_equal(const RingPtr& ring, const std::vector<Poly>& a, const std::vector<Poly>& b) {
    RingPtr r = with_order(ring, MonomialOrder::degrevlex());
    return buchberger_reduced(r, a) == buchberger_reduced(r, b);
}

bool ideal_contains(const RingPtr& ring, const std::vector<Poly>& a, const std::vector<Poly>& b) {
    RingPtr r = with_order(ring, MonomialOrder::degrevlex());
    GroebnerBasis gb = buchberger_reduced(r, a);
    return std::all_of(b.begin(), b.end(), [&](const Poly& f) { return gb.member(f); });
}

std::vector<Poly> eliminate(const RingPtr& ring, const std::vector<Poly>& gens, const std::vector<int>& block,
                            const std::vector<unsigned>& weights) {
    for (int v : block)
        if (v < 0 || v >= ring->nvars()) fail(ErrorKind::Parameter, "elimination variable out of range");
    RingPtr r = make_ring(ring->vars, ring->field, MonomialOrder::block(block, weights));
    GroebnerBasis gb = buchberger_reduced(r, gens);
    std::vector<Poly> out;
    for (const auto& p : gb.basis()) {
        bool free = std::none_of(block.begin(), block.end(), [&](int v) { return p.involves(v); });
        if (free) out.push_back(p.in_ring(ring));
    }
    return out;
}

namespace {

// Identity on shared variables; the auxiliary variable (absent from the
// target) must not occur.
Poly drop_aux(const Poly& f, const RingPtr& target) {
    std::vector<int> map(f.ring()->nvars());
    for (int v = 0; v < target->nvars() && v < static_cast<int>(map.size()); ++v) map[v] = v;
    return embed(f, target, map);
}

std::vector<int> identity_map(int n) {
    std::vector<int> m(n);
    for (int v = 0; v < n; ++v) m[v] = v;
    return m;
}

} // namespace

std::vector<Poly> ideal_intersect(const RingPtr& ring, const std::vector<Poly>& a, const std::vector<Poly>& b) {
    if (ring->vars.has_aux()) fail(ErrorKind::Parameter, "intersection ring already uses the auxiliary variable");
    RingPtr rs = make_ring(ring->vars.with_aux(), ring->field);
    const int s = rs->vars.aux();
    const auto map = identity_map(ring->nvars());
    Poly sv = Poly::variable(rs, s);
    Poly one_minus_s = Poly::constant(rs, 1) - sv;
    std::vector<Poly> gens;
    for (const auto& f : a) gens.push_back(sv * embed(f, rs, map));
    for (const auto& f : b) gens.push_back(one_minus_s * embed(f, rs, map));
    std::vector<Poly> out;
    for (const auto& p : eliminate(rs, gens, {s})) out.push_back(drop_aux(p, ring));
    return out;
}

namespace {

long x_degree(const VarSpace& vars, const Monomial& m) {
    long d = 0;
    for (int v = 0; v < vars.nx(); ++v) d += long(vars.x_weight(v)) * m.e[v];
    return d;
}

void check_x_only(const Poly& f, int nx) {
    for (const auto& t : f.terms())
        for (int v = nx; v < t.mono.size(); ++v)
            if (t.mono.e[v]) fail(ErrorKind::Parameter, "generator involves non-x variables");
}

} // namespace

std::vector<Poly> rees_ideal_oracle(const RingPtr& target, const std::vector<Poly>& g) {
    const VarSpace& tv = target->vars;
    const int nx = tv.nx();
    const int mu = static_cast<int>(g.size());
    if (tv.nt() != mu) fail(ErrorKind::Parameter, "target ring needs one T-variable per generator");
    for (const auto& gi : g) {
        if (gi.is_zero()) fail(ErrorKind::Parameter, "Rees oracle needs nonzero generators");
        if (gi.ring()->vars.nx() != nx) fail(ErrorKind::IncompatibleOperands, "generator ring has a different x-block");
        check_x_only(gi, nx);
    }
    VarSpace vs = tv.with_aux();
    std::vector<unsigned> weights(vs.size(), 1);
    for (int v = 0; v < nx; ++v) weights[v] = tv.x_weight(v);
    for (int i = 0; i < mu; ++i) {
        long d = 0;
        for (const auto& t : g[i].terms()) d = std::max(d, x_degree(tv, t.mono));
        weights[tv.T(i + 1)] = static_cast<unsigned>(d + 1);
    }
    RingPtr rs = make_ring(vs, target->field);
    const int s = vs.aux();
    std::vector<int> xmap(g.empty() ? 0 : g[0].ring()->nvars());
    for (int v = 0; v < static_cast<int>(xmap.size()); ++v) xmap[v] = v < nx ? v : 0;
    std::vector<Poly> gens;
    for (int i = 0; i < mu; ++i) {
        if (g[i].ring()->nvars() != static_cast<int>(xmap.size()))
            fail(ErrorKind::IncompatibleOperands, "generators live in different rings");
        Poly gi = embed(g[i], rs, xmap);
        gens.push_back(Poly::variable(rs, tv.T(i + 1)) - Poly::variable(rs, s) * gi);
    }
    std::vector<Poly> out;
    for (const auto& p : eliminate(rs, gens, {s}, weights)) out.push_back(drop_aux(p, target));
    return out;
}

Poly rees_substitute(const Poly& f, const std::vector<Poly>& g) {
    const VarSpace& fv = f.ring()->vars;
    const int nx = fv.nx();
    if (fv.nt() != static_cast<int>(g.size())) fail(ErrorKind::Parameter, "one generator per T-variable expected");
    RingPtr rs = make_ring(VarSpace(nx, 0, true, fv.x_weights(), fv.x_names()), f.ring()->field);
    Poly s = Poly::variable(rs, rs->vars.aux());
    std::vector<Poly> images(fv.size());
    for (int v = 0; v < nx; ++v) images[v] = Poly::variable(rs, v);
    for (int i = 0; i < fv.nt(); ++i) {
        check_x_only(g[i], nx);
        std::vector<int> map(g[i].ring()->nvars());
        for (int v = 0; v < static_cast<int>(map.size()); ++v) map[v] = v < nx ? v : 0;
        images[fv.T(i + 1)] = s * embed(g[i], rs, map);
    }
    if (fv.has_aux()) images[fv.aux()] = s;
    return substitute(f, rs, images);
}

} // namespace starrees
