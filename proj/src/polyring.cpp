#include "starrees/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>

namespace starrees {

VarSpace::VarSpace(int nx, int nt, bool aux, std::vector<unsigned> x_weights,
                   std::vector<std::string> x_names)
    : nx_(nx), nt_(nt), aux_(aux), x_weights_(std::move(x_weights)), x_names_(std::move(x_names)) {
    if (nx < 0 || nt < 0) fail(ErrorKind::Parameter, "negative variable count");
    if (x_weights_.empty()) x_weights_.assign(nx, 1);
    if (static_cast<int>(x_weights_.size()) != nx) fail(ErrorKind::Parameter, "x-weight count mismatch");
    for (unsigned w : x_weights_)
        if (w == 0) fail(ErrorKind::Parameter, "x-weights must be positive");
    if (x_names_.empty())
        for (int i = 1; i <= nx; ++i) x_names_.push_back("x" + std::to_string(i));
    if (static_cast<int>(x_names_.size()) != nx) fail(ErrorKind::Parameter, "x-name count mismatch");
}

int VarSpace::aux() const {
    if (!aux_) fail(ErrorKind::Parameter, "variable space has no auxiliary variable");
    return nx_ + nt_;
}

std::string VarSpace::name(int v) const {
    if (v < nx_) return x_names_[v];
    if (v < nx_ + nt_) return "T" + std::to_string(v - nx_ + 1);
    return "s";
}

std::optional<int> VarSpace::lookup(std::string_view name) const {
    for (int i = 0; i < nx_; ++i)
        if (x_names_[i] == name) return i;
    if (name.size() > 1 && name[0] == 'T') {
        int j = 0;
        auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), j);
        if (ec == std::errc() && ptr == name.data() + name.size() && j >= 1 && j <= nt_) return T(j);
    }
    if (aux_ && name == "s") return aux();
    return std::nullopt;
}

VarSpace VarSpace::with_aux(bool aux) const {
    VarSpace v = *this;
    v.aux_ = aux;
    return v;
}

VarSpace VarSpace::with_nt(int nt) const {
    VarSpace v = *this;
    v.nt_ = nt;
    return v;
}

Monomial Monomial::variable(int nvars, int v, unsigned power) {
    Monomial m(nvars);
    m.e[v] = static_cast<std::uint16_t>(power);
    return m;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(e.begin(), e.end(), [](auto x) { return x <= 1; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) {
        unsigned s = unsigned(e[i]) + o.e[i];
        if (s > 0xffff) fail(ErrorKind::Resource, "exponent overflow");
        r.e[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
    Monomial r = o;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<std::uint16_t>(o.e[i] - e[i]);
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(e[i], o.e[i]);
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::min(e[i], o.e[i]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] && o.e[i]) return false;
    return true;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e) h = (h ^ x) * 1099511628211ull;
    return h;
}

MonomialOrder MonomialOrder::degrevlex(std::vector<unsigned> weights) {
    MonomialOrder o;
    o.kind_ = Kind::Degrevlex;
    o.weights_ = std::move(weights);
    return o;
}

MonomialOrder MonomialOrder::lex() {
    MonomialOrder o;
    o.kind_ = Kind::Lex;
    return o;
}

MonomialOrder MonomialOrder::block(std::vector<int> block_vars, std::vector<unsigned> weights) {
    MonomialOrder o;
    o.kind_ = Kind::Block;
    std::sort(block_vars.begin(), block_vars.end());
    block_vars.erase(std::unique(block_vars.begin(), block_vars.end()), block_vars.end());
    o.block_ = std::move(block_vars);
    if (!o.block_.empty()) {
        if (o.block_.front() < 0) fail(ErrorKind::Parameter, "negative block variable");
        o.block_mask_.assign(o.block_.back() + 1, 0);
        for (int v : o.block_) o.block_mask_[v] = 1;
    }
    o.weights_ = std::move(weights);
    return o;
}

// Weighted degree, then reverse lexicographic, restricted to the block
// variables (block_part) or to the rest.
int MonomialOrder::grevlex_on(const Monomial& a, const Monomial& b, bool block_part) const {
    const int n = a.size();
    const std::uint16_t* pa = a.e.data();
    const std::uint16_t* pb = b.e.data();
    const bool blocked = kind_ == Kind::Block;
    long d = 0;
    if (!blocked && weights_.empty()) {
        for (int v = 0; v < n; ++v) d += long(pa[v]) - long(pb[v]);
    } else {
        for (int v = 0; v < n; ++v)
            if (!blocked || in_block(v) == block_part) d += long(weight(v)) * (long(pa[v]) - long(pb[v]));
    }
    if (d) return d < 0 ? -1 : 1;
    for (int v = n - 1; v >= 0; --v)
        if (pa[v] != pb[v] && (!blocked || in_block(v) == block_part)) return pa[v] > pb[v] ? -1 : 1;
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
    case Kind::Lex:
        for (int v = 0; v < a.size(); ++v)
            if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
        return 0;
    case Kind::Degrevlex:
        return grevlex_on(a, b, false);
    case Kind::Block:
        if (int c = grevlex_on(a, b, true)) return c;
        return grevlex_on(a, b, false);
    }
    return 0;
}

std::string MonomialOrder::to_string() const {
    switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::Degrevlex: return weights_.empty() ? "degrevlex" : "weighted-degrevlex";
    case Kind::Block: return "block-elimination";
    }
    return "?";
}

RingPtr make_ring(VarSpace vars, Field field, MonomialOrder order) {
    return std::make_shared<const Ring>(Ring{std::move(vars), field, std::move(order)});
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
    if (ring->order == order) return ring;
    return make_ring(ring->vars, ring->field, std::move(order));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->field == b->field && a->vars == b->vars && a->order == b->order;
}

// ---- Poly

namespace {

struct TermGreater {
    const MonomialOrder* order;
    bool operator()(const Term& a, const Term& b) const { return order->compare(a.mono, b.mono) > 0; }
};

void require_ring(const RingPtr& r) {
    if (!r) fail(ErrorKind::IncompatibleOperands, "polynomial has no ring");
}

} // namespace

Poly Poly::constant(const RingPtr& ring, const Scalar& c) {
    require_ring(ring);
    if (c.field() != ring->field) fail(ErrorKind::IncompatibleOperands, "scalar from a different field");
    Poly p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), c});
    return p;
}

Poly Poly::constant(const RingPtr& ring, long c) {
    require_ring(ring);
    return constant(ring, Scalar::from_int(ring->field, c));
}

Poly Poly::variable(const RingPtr& ring, int v) {
    require_ring(ring);
    if (v < 0 || v >= ring->nvars()) fail(ErrorKind::Parameter, "variable index out of range");
    return monomial(ring, Monomial::variable(ring->nvars(), v), Scalar::one(ring->field));
}

Poly Poly::monomial(const RingPtr& ring, Monomial m, Scalar c) {
    require_ring(ring);
    if (m.size() != ring->nvars()) fail(ErrorKind::IncompatibleOperands, "monomial length mismatch");
    Poly p(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Poly Poly::from_terms(const RingPtr& ring, std::vector<Term> terms) {
    require_ring(ring);
    std::sort(terms.begin(), terms.end(), TermGreater{&ring->order});
    Poly p(ring);
    for (auto& t : terms) {
        if (t.mono.size() != ring->nvars()) fail(ErrorKind::IncompatibleOperands, "monomial length mismatch");
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Poly::lead() const {
    if (terms_.empty()) fail(ErrorKind::UndefinedContent, "zero polynomial has no leading term");
    return terms_.front();
}

void Poly::check_compatible(const Poly& o) const {
    if (!same_ring(ring_, o.ring_))
        fail(ErrorKind::IncompatibleOperands, "polynomials live in different rings or orders");
}

Poly Poly::operator+(const Poly& o) const {
    check_compatible(o);
    const auto& ord = ring_->order;
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    r.terms_.insert(r.terms_.end(), terms_.begin() + i, terms_.end());
    r.terms_.insert(r.terms_.end(), o.terms_.begin() + j, o.terms_.end());
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (!ring_ && o.ring_) return -o;
    return sub_mul_term(Scalar::one(ring_->field), Monomial(ring_->nvars()), o);
}

Poly Poly::sub_mul_term(const Scalar& c, const Monomial& m, const Poly& g) const {
    check_compatible(g);
    const auto& ord = ring_->order;
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    // Multiplication by a monomial preserves the order, so the products stay sorted.
    auto product = [&](std::size_t k) { return Term{m * g.terms_[k].mono, -(c * g.terms_[k].coeff)}; };
    while (i < terms_.size() && j < g.terms_.size()) {
        Term gt = product(j);
        int cmp = ord.compare(terms_[i].mono, gt.mono);
        if (cmp > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            r.terms_.push_back(std::move(gt));
            ++j;
        } else {
            Scalar s = terms_[i].coeff + gt.coeff;
            if (!s.is_zero()) r.terms_.push_back({std::move(gt.mono), std::move(s)});
            ++i;
            ++j;
        }
    }
    r.terms_.insert(r.terms_.end(), terms_.begin() + i, terms_.end());
    for (; j < g.terms_.size(); ++j) r.terms_.push_back(product(j));
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return from_terms(ring_, std::move(prod));
}

Poly Poly::scale(const Scalar& c) const {
    if (c.is_zero()) return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Poly Poly::mul_term(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) {
        t.mono = t.mono * m;
        t.coeff *= c;
    }
    return r;
}

Poly Poly::pow(unsigned k) const {
    require_ring(ring_);
    Poly result = constant(ring_, 1);
    Poly base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Poly Poly::monic() const {
    if (is_zero() || lc().is_one()) return *this;
    return scale(lc().inverse());
}

bool Poly::operator==(const Poly& o) const {
    if (is_zero() && o.is_zero()) return true;
    if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

std::string monomial_text(const VarSpace& vars, const Monomial& m) {
    std::string out;
    for (int v = 0; v < m.size(); ++v) {
        if (!m.e[v]) continue;
        if (!out.empty()) out += '*';
        out += vars.name(v);
        if (m.e[v] > 1) out += "^" + std::to_string(m.e[v]);
    }
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = t.coeff.coefficient_text();
        bool negative = c[0] == '-';
        if (negative) c.erase(0, 1);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string mono = monomial_text(ring_->vars, t.mono);
        if (mono.empty())
            out += c;
        else if (c == "1")
            out += mono;
        else
            out += c + "*" + mono;
    }
    return out;
}

Poly Poly::with_order(const MonomialOrder& order) const {
    require_ring(ring_);
    return in_ring(starrees::with_order(ring_, order));
}

Poly Poly::in_ring(const RingPtr& target) const {
    require_ring(ring_);
    if (same_ring(ring_, target)) {
        Poly r = *this;
        r.ring_ = target;
        return r;
    }
    if (target->nvars() != ring_->nvars() || !(target->field == ring_->field))
        fail(ErrorKind::IncompatibleOperands, "target ring has different variables or field");
    return from_terms(target, terms_);
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Poly::involves(int v) const {
    return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono.e[v] != 0; });
}

// ---- parsing

namespace {

class Parser {
  public:
    Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

    Poly run() {
        std::vector<Term> terms;
        skip_ws();
        if (at_end()) error("empty polynomial");
        bool first = true;
        while (!at_end()) {
            bool negative = false;
            if (accept('+')) {
            } else if (accept('-') || accept_unicode_minus()) {
                negative = true;
            } else if (!first) {
                error("expected '+' or '-'");
            }
            skip_ws();
            Term t = term();
            if (negative) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            first = false;
            skip_ws();
        }
        return Poly::from_terms(ring_, std::move(terms));
    }

  private:
    Term term() {
        Term t{Monomial(ring_->nvars()), Scalar::one(ring_->field)};
        factor(t);
        skip_ws();
        while (accept('*')) {
            skip_ws();
            factor(t);
            skip_ws();
        }
        return t;
    }

    void factor(Term& t) {
        if (at_end()) error("unexpected end of input");
        char ch = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (!at_end() && text_[pos_] == '/') {
                ++pos_;
                if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) error("malformed fraction");
                while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
            try {
                t.coeff *= Scalar::parse(text_.substr(start, pos_ - start), ring_->field);
            } catch (const Error& e) {
                error(e.what());
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            auto v = ring_->vars.lookup(name);
            if (!v) {
                pos_ = start;
                error("unknown variable '" + std::string(name) + "'");
            }
            unsigned power = 1;
            skip_ws();
            if (accept('^')) {
                skip_ws();
                std::size_t ps = pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                if (ps == pos_) error("expected exponent");
                std::from_chars(text_.data() + ps, text_.data() + pos_, power);
                if (power > 0xffff) error("exponent too large");
            }
            unsigned e = t.mono.e[*v] + power;
            if (e > 0xffff) error("exponent too large");
            t.mono.e[*v] = static_cast<std::uint16_t>(e);
            return;
        }
        error(std::string("unexpected character '") + ch + "'");
    }

    bool at_end() const { return pos_ >= text_.size(); }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    // U+2212, which shows up when formulas are pasted from typeset text.
    bool accept_unicode_minus() {
        if (text_.substr(pos_).starts_with("\xE2\x88\x92")) {
            pos_ += 3;
            return true;
        }
        return false;
    }
    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorKind::Parse, "column " + std::to_string(pos_ + 1) + ": " + msg + " in '" + std::string(text_) + "'");
    }

    const RingPtr& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Poly Poly::parse(const RingPtr& ring, std::string_view text) {
    require_ring(ring);
    return Parser(ring, text).run();
}

// ---- helpers

std::optional<std::pair<long, long>> bidegree(const Poly& f) {
    if (f.is_zero()) return std::pair<long, long>{0, 0};
    const VarSpace& vars = f.ring()->vars;
    std::optional<std::pair<long, long>> result;
    for (const auto& t : f.terms()) {
        long dx = 0, dT = 0;
        for (int v = 0; v < vars.nx(); ++v) dx += long(vars.x_weight(v)) * t.mono.e[v];
        for (int j = 1; j <= vars.nt(); ++j) dT += t.mono.e[vars.T(j)];
        if (!result)
            result = std::pair<long, long>{dx, dT};
        else if (result->first != dx || result->second != dT)
            return std::nullopt;
    }
    return result;
}

Monomial content_monomial(const Poly& f) {
    if (f.is_zero()) fail(ErrorKind::UndefinedContent, "content of the zero polynomial is undefined");
    Monomial g = f.terms().front().mono;
    for (const auto& t : f.terms()) g = g.gcd(t.mono);
    return g;
}

Poly divide_monomial(const Poly& f, const Monomial& m) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        if (!m.divides(t.mono)) fail(ErrorKind::InternalConsistency, "monomial does not divide polynomial");
        terms.push_back({m.quotient_of(t.mono), t.coeff});
    }
    return Poly::from_terms(f.ring(), std::move(terms));
}

std::optional<Poly> try_divide(const Poly& f, const Poly& g) {
    if (g.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero polynomial");
    Poly rem = f;
    std::vector<Term> quotient;
    const Term& lg = g.lead();
    const Scalar inv = lg.coeff.inverse();
    while (!rem.is_zero()) {
        const Term& lr = rem.lead();
        if (!lg.mono.divides(lr.mono)) return std::nullopt;
        Monomial q = lg.mono.quotient_of(lr.mono);
        Scalar c = lr.coeff * inv;
        rem = rem.sub_mul_term(c, q, g);
        quotient.push_back({std::move(q), std::move(c)});
    }
    return Poly::from_terms(f.ring(), std::move(quotient));
}

Poly divide_exact(const Poly& f, const Poly& g) {
    auto q = try_divide(f, g);
    if (!q) fail(ErrorKind::InternalConsistency, "inexact polynomial division");
    return *q;
}

Poly substitute(const Poly& f, const RingPtr& target, const std::vector<Poly>& images) {
    const int n = f.ring()->nvars();
    if (static_cast<int>(images.size()) != n) fail(ErrorKind::Parameter, "substitution needs one image per variable");
    // powers[v][k] = images[v]^k, built lazily
    std::vector<std::vector<Poly>> powers(n);
    auto power = [&](int v, unsigned k) -> const Poly& {
        auto& pv = powers[v];
        if (pv.empty()) pv.push_back(Poly::constant(target, 1));
        while (pv.size() <= k) pv.push_back(pv.back() * images[v]);
        return pv[k];
    };
    Poly result(target);
    for (const auto& t : f.terms()) {
        Poly term = Poly::constant(target, t.coeff);
        for (int v = 0; v < n; ++v)
            if (t.mono.e[v]) term *= power(v, t.mono.e[v]);
        result += term;
    }
    return result;
}

Poly embed(const Poly& f, const RingPtr& target, const std::vector<int>& var_map) {
    const int n = f.ring()->nvars();
    if (static_cast<int>(var_map.size()) != n) fail(ErrorKind::Parameter, "embedding needs one target per variable");
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m(target->nvars());
        for (int v = 0; v < n; ++v)
            if (t.mono.e[v]) m.e[var_map[v]] = static_cast<std::uint16_t>(m.e[var_map[v]] + t.mono.e[v]);
        terms.push_back({std::move(m), t.coeff});
    }
    return Poly::from_terms(target, std::move(terms));
}

bool proportional(const Poly& a, const Poly& b, Scalar* ratio) {
    if (a.is_zero() || b.is_zero()) return false;
    if (a.size() != b.size()) return false;
    Scalar r = a.lc() / b.lc();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.terms()[i].mono != b.terms()[i].mono) return false;
        if (a.terms()[i].coeff != r * b.terms()[i].coeff) return false;
    }
    if (ratio) *ratio = r;
    return true;
}

} // namespace starrees
