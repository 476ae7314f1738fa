#include "hermix/poly.hpp"

#include <algorithm>
#include <sstream>

#include "hermix/errors.hpp"

namespace hermix {

RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const PolyRing>(PolyRing{std::move(vars)});
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->vars == b->vars;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (unsigned e : exp) d += e;
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exp.size(); ++i)
        if (exp[i] > other.exp[i]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += other.exp[i];
    return r;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] -= other.exp[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exp.size(); ++i)
        r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
}

Monomial Monomial::one(std::size_t nvars) {
    Monomial m;
    m.exp.assign(nvars, 0);
    return m;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    if (kind == OrderKind::lex) {
        for (std::size_t i = 0; i < a.exp.size(); ++i) {
            if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
        }
        return false;
    }
    // degrevlex
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (std::size_t i = a.exp.size(); i-- > 0;) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
    }
    return false;
}

MultiPoly MultiPoly::zero(RingPtr ring) { return MultiPoly(std::move(ring)); }

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
    MultiPoly p(ring);
    if (c != 0) p.terms_.emplace(Monomial::one(ring->vars.size()), c);
    return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->vars.size())
        throw InvalidParameter("variable index out of range");
    MultiPoly p(ring);
    Monomial m = Monomial::one(ring->vars.size());
    m.exp[index] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

MultiPoly MultiPoly::term(RingPtr ring, Monomial m, const Rational& c) {
    if (m.exp.size() != ring->vars.size())
        throw RingMismatch("monomial arity does not match ring");
    MultiPoly p(ring);
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::require_same_ring(const MultiPoly& other) const {
    if (!hermix::same_ring(ring_, other.ring_))
        throw RingMismatch("polynomials belong to different rings");
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    require_same_ring(other);
    MultiPoly r = *this;
    for (const auto& [m, c] : other.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
    require_same_ring(other);
    MultiPoly r = *this;
    for (const auto& [m, c] : other.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    require_same_ring(other);
    MultiPoly r(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            r.add_term(ma.times(mb), ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(ring_);
    if (c == 0) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = MultiPoly::constant(ring_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
    return hermix::same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

template <typename T>
static T eval_impl(const std::map<Monomial, Rational>& terms,
                   const std::vector<T>& point, std::size_t nvars) {
    if (point.size() != nvars)
        throw InvalidParameter("evaluation point arity mismatch");
    T acc{};
    for (const auto& [m, c] : terms) {
        T t = T(to_double(c));
        for (std::size_t i = 0; i < nvars; ++i)
            for (unsigned k = 0; k < m.exp[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != ring_->vars.size())
        throw InvalidParameter("evaluation point arity mismatch");
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (unsigned k = 0; k < m.exp[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

double MultiPoly::eval(const std::vector<double>& point) const {
    return eval_impl(terms_, point, ring_->vars.size());
}

std::complex<double> MultiPoly::eval(
    const std::vector<std::complex<double>>& point) const {
    return eval_impl(terms_, point, ring_->vars.size());
}

const Monomial& MultiPoly::leading_monomial(const MonomialOrder& order) const {
    if (terms_.empty()) throw InvalidParameter("zero polynomial has no leading term");
    const Monomial* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (order.greater(m, *best)) best = &m;
    return *best;
}

Rational MultiPoly::leading_coeff(const MonomialOrder& order) const {
    return coeff(leading_monomial(order));
}

MultiPoly MultiPoly::monic(const MonomialOrder& order) const {
    Rational lc = leading_coeff(order);
    return scaled(Rational(1) / lc);
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    // Print highest degree first (storage order reversed reads naturally).
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = ac == 1;
        bool any_var = m.total_degree() > 0;
        if (!unit || !any_var) os << rational_to_string(ac);
        bool need_star = !unit || !any_var;
        for (std::size_t i = 0; i < m.exp.size(); ++i) {
            if (m.exp[i] == 0) continue;
            if (need_star) os << "*";
            os << ring_->vars[i];
            if (m.exp[i] > 1) os << "^" << m.exp[i];
            need_star = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Division and Buchberger

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& gens,
                      const MonomialOrder& order) {
    for (const auto& g : gens)
        if (!same_ring(f.ring(), g.ring()))
            throw RingMismatch("normal_form: ring mismatch");

    struct Lead {
        const MultiPoly* g;
        Monomial lm;
        Rational lc;
    };
    std::vector<Lead> leads;
    leads.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        leads.push_back({&g, g.leading_monomial(order), g.leading_coeff(order)});
    }

    MultiPoly p = f;
    MultiPoly r = MultiPoly::zero(f.ring());
    while (!p.is_zero()) {
        Monomial lm = p.leading_monomial(order);
        Rational lc = p.coeff(lm);
        bool reduced = false;
        for (const auto& lead : leads) {
            if (lead.lm.divides(lm)) {
                Monomial q = lm.divided_by(lead.lm);
                Rational factor = lc / lead.lc;
                p = p - lead.g->operator*(MultiPoly::term(f.ring(), q, factor));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r.add_term(lm, lc);
            MultiPoly t = MultiPoly::term(f.ring(), lm, lc);
            p = p - t;
        }
    }
    return r;
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& G) {
    if (!same_ring(f.ring(), G.ring))
        throw RingMismatch("normal_form: ring mismatch");
    return normal_form(f, G.elements, G.order);
}

namespace {

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g,
                       const MonomialOrder& order) {
    const Monomial& lf = f.leading_monomial(order);
    const Monomial& lg = g.leading_monomial(order);
    Monomial l = Monomial::lcm(lf, lg);
    MultiPoly tf = MultiPoly::term(f.ring(), l.divided_by(lf),
                                   Rational(1) / f.leading_coeff(order));
    MultiPoly tg = MultiPoly::term(g.ring(), l.divided_by(lg),
                                   Rational(1) / g.leading_coeff(order));
    return f * tf - g * tg;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] > 0 && b.exp[i] > 0) return false;
    return true;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned deg;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<MultiPoly>& generators,
                         const MonomialOrder& order) {
    std::vector<MultiPoly> basis;
    RingPtr ring;
    for (const auto& g : generators) {
        if (!ring) ring = g.ring();
        if (!same_ring(ring, g.ring()))
            throw RingMismatch("buchberger: generators from different rings");
        if (!g.is_zero()) basis.push_back(g.monic(order));
    }
    if (!ring) throw InvalidParameter("buchberger: no generators");
    if (basis.empty())
        throw InvalidParameter("buchberger: all generators are zero");

    auto make_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = Monomial::lcm(basis[i].leading_monomial(order),
                                   basis[j].leading_monomial(order));
        return Pair{i, j, l, l.total_degree()};
    };

    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            pairs.push_back(make_pair(i, j));

    auto chain_criterion = [&](const Pair& p) {
        // Some k with LT(k) | lcm(i,j) and both (i,k), (j,k) already handled.
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis[k].leading_monomial(order).divides(p.lcm)) continue;
            bool ik_pending = false, jk_pending = false;
            for (const auto& q : pairs) {
                if ((q.i == p.i && q.j == k) || (q.i == k && q.j == p.i))
                    ik_pending = true;
                if ((q.i == p.j && q.j == k) || (q.i == k && q.j == p.j))
                    jk_pending = true;
            }
            if (!ik_pending && !jk_pending) return true;
        }
        return false;
    };

    while (!pairs.empty()) {
        // Normal selection: minimal lcm degree first, then lexicographic on
        // indices for determinism.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            if (pairs[k].deg < pairs[best].deg ||
                (pairs[k].deg == pairs[best].deg &&
                 std::make_pair(pairs[k].i, pairs[k].j) <
                     std::make_pair(pairs[best].i, pairs[best].j)))
                best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        const Monomial& li = basis[p.i].leading_monomial(order);
        const Monomial& lj = basis[p.j].leading_monomial(order);
        if (coprime(li, lj)) continue;  // Buchberger's first criterion
        if (chain_criterion(p)) continue;

        MultiPoly s = s_polynomial(basis[p.i], basis[p.j], order);
        MultiPoly rem = normal_form(s, basis, order);
        if (rem.is_zero()) continue;
        rem = rem.monic(order);
        std::size_t idx = basis.size();
        basis.push_back(std::move(rem));
        for (std::size_t i = 0; i < idx; ++i) pairs.push_back(make_pair(i, idx));
    }

    // Minimalize: drop elements whose leading term is divisible by another's.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial& li = basis[i].leading_monomial(order);
            const Monomial& lj = basis[j].leading_monomial(order);
            if (lj.divides(li) && !(li == lj && j > i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(basis[i]);

    // Inter-reduce to the unique reduced basis.
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = normal_form(minimal[i], others, order);
        if (!r.is_zero()) reduced.push_back(r.monic(order));
    }

    std::sort(reduced.begin(), reduced.end(),
              [&](const MultiPoly& a, const MultiPoly& b) {
                  return order.less(a.leading_monomial(order),
                                    b.leading_monomial(order));
              });
    return GroebnerBasis{ring, order, std::move(reduced)};
}

QuotientBasis quotient_basis(const GroebnerBasis& G) {
    std::size_t nvars = G.ring->vars.size();
    std::vector<Monomial> leads;
    for (const auto& g : G.elements) leads.push_back(g.leading_monomial(G.order));

    // Unit ideal: empty quotient.
    for (const auto& lm : leads)
        if (lm.total_degree() == 0) return QuotientBasis{};

    // Staircase test: every variable needs a pure power among the leads.
    std::vector<unsigned> bound(nvars, 0);
    for (std::size_t v = 0; v < nvars; ++v) {
        bool found = false;
        for (const auto& lm : leads) {
            bool pure = lm.exp[v] > 0;
            for (std::size_t w = 0; w < nvars && pure; ++w)
                if (w != v && lm.exp[w] > 0) pure = false;
            if (pure) {
                bound[v] = found ? std::min(bound[v], lm.exp[v]) : lm.exp[v];
                found = true;
            }
        }
        if (!found)
            throw NotZeroDimensional(
                "ideal is not zero-dimensional: no pure power of variable '" +
                G.ring->vars[v] + "' among leading terms");
    }

    std::vector<Monomial> result;
    Monomial m = Monomial::one(nvars);
    // Enumerate the box below the pure-power bounds, keep standard monomials.
    while (true) {
        bool standard = true;
        for (const auto& lm : leads)
            if (lm.divides(m)) { standard = false; break; }
        if (standard) result.push_back(m);
        std::size_t v = 0;
        while (v < nvars) {
            if (++m.exp[v] < bound[v]) break;
            m.exp[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }

    std::sort(result.begin(), result.end(),
              [&](const Monomial& a, const Monomial& b) {
                  return G.order.less(a, b);
              });
    return QuotientBasis{std::move(result)};
}

}  // namespace hermix
