#include "fibredim/groebner.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "fibredim/numeric.hpp"

namespace fibredim {

namespace {

// Deterministic starting set: nonzero, deduplicated, sorted.
std::vector<Polynomial> prepare(std::span<const Polynomial> gens, const CoeffDomain& domain,
                                const MonomialOrder& order) {
    std::vector<Polynomial> out;
    for (const auto& g : gens) {
        if (g.domain() != domain)
            throw DomainMismatchError("generator domain " + g.domain().to_string() +
                                      " differs from basis domain " + domain.to_string());
        Polynomial p = g.order() == order ? g : g.with_order(order);
        if (!p.is_zero()) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(),
              [](const Polynomial& a, const Polynomial& b) { return Polynomial::compare(a, b) < 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct Pair {
    unsigned degree;    // total degree of the lcm of the leading monomials
    Monomial lcm;
    int kind;           // 0 = S-pair, 1 = G-pair (integer bases only)
    size_t i, j;
};

struct PairQueue {
    const MonomialOrder* order;
    std::vector<Pair> items;

    void push(Pair p) { items.push_back(std::move(p)); }

    bool empty() const { return items.empty(); }

    // Normal selection strategy: minimal lcm degree, then lcm order position,
    // then kind and indices for determinism.
    Pair pop() {
        size_t best = 0;
        for (size_t k = 1; k < items.size(); ++k) {
            const Pair& a = items[k];
            const Pair& b = items[best];
            int c;
            if (a.degree != b.degree)
                c = a.degree < b.degree ? -1 : 1;
            else if ((c = order->compare(a.lcm, b.lcm)) == 0) {
                if (a.kind != b.kind)
                    c = a.kind < b.kind ? -1 : 1;
                else if (a.i != b.i)
                    c = a.i < b.i ? -1 : 1;
                else
                    c = a.j < b.j ? -1 : (a.j > b.j ? 1 : 0);
            }
            if (c < 0) best = k;
        }
        Pair p = std::move(items[best]);
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(best));
        return p;
    }
};

// Chain criterion: pair (i,j) is redundant if some k with LM_k | lcm(i,j) has
// both (i,k) and (j,k) already treated.
bool chain_redundant(size_t i, size_t j, const Monomial& lcm_ij,
                     const std::vector<Polynomial>& basis,
                     const std::set<std::pair<size_t, size_t>>& treated) {
    auto done = [&treated](size_t a, size_t b) {
        return treated.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    for (size_t k = 0; k < basis.size(); ++k) {
        if (k == i || k == j) continue;
        if (basis[k].leading_term().monomial.divides(lcm_ij) && done(i, k) && done(j, k))
            return true;
    }
    return false;
}

// --- field case --------------------------------------------------------------

Polynomial s_poly_field(const Polynomial& f, const Polynomial& g) {
    const Term& lf = f.leading_term();
    const Term& lg = g.leading_term();
    Monomial l = Monomial::lcm(lf.monomial, lg.monomial);
    Polynomial a = f.times_term(lf.coeff.inverse(), l.quotient(lf.monomial));
    Polynomial b = g.times_term(lg.coeff.inverse(), l.quotient(lg.monomial));
    return a - b;
}

Polynomial normal_form_field(const Polynomial& f, const std::vector<Polynomial>& basis) {
    Polynomial work = f;
    std::vector<Term> remainder;
    while (!work.is_zero()) {
        const Term& lead = work.leading_term();
        bool reduced = false;
        for (const auto& g : basis) {
            const Term& lg = g.leading_term();
            if (!lg.monomial.divides(lead.monomial)) continue;
            Coefficient q = lead.coeff * lg.coeff.inverse();
            work = work - g.times_term(q, lead.monomial.quotient(lg.monomial));
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(lead);
            std::vector<Term> rest(work.terms().begin() + 1, work.terms().end());
            work = Polynomial::normalized(std::move(rest), f.domain(), f.order());
        }
    }
    return Polynomial::normalized(std::move(remainder), f.domain(), f.order());
}

std::vector<Polynomial> interreduce_field(std::vector<Polynomial> basis) {
    // Minimal generators of the leading-monomial ideal, then tail reduction to
    // the unique reduced basis.
    std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
        int c = a.order().compare(a.leading_term().monomial, b.leading_term().monomial);
        if (c != 0) return c < 0;
        return Polynomial::compare(a, b) < 0;
    });
    std::vector<Polynomial> minimal;
    for (const auto& g : basis) {
        bool redundant = false;
        for (const auto& kept : minimal) {
            if (kept.leading_term().monomial.divides(g.leading_term().monomial)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = normal_form_field(minimal[i], others);
            if (r != minimal[i]) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }
    for (auto& g : minimal) g = g.scaled(g.leading_term().coeff.inverse());
    std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.order().compare(a.leading_term().monomial, b.leading_term().monomial) < 0;
    });
    return minimal;
}

// --- integer case ------------------------------------------------------------

mpz_class lead_coeff(const Polynomial& f) { return f.leading_term().coeff.integer(); }

Polynomial sign_normalized(const Polynomial& f) {
    if (f.is_zero() || lead_coeff(f) > 0) return f;
    return -f;
}

Polynomial s_poly_integer(const Polynomial& f, const Polynomial& g) {
    const Term& lf = f.leading_term();
    const Term& lg = g.leading_term();
    mpz_class a = lf.coeff.integer(), b = lg.coeff.integer();
    mpz_class l = lcm(a, b);
    Monomial m = Monomial::lcm(lf.monomial, lg.monomial);
    CoeffDomain z = CoeffDomain::integers();
    Polynomial left = f.times_term(Coefficient(z, mpz_class(l / a)), m.quotient(lf.monomial));
    Polynomial right = g.times_term(Coefficient(z, mpz_class(l / b)), m.quotient(lg.monomial));
    return left - right;
}

// GCD-polynomial: leading term gcd(a, b) * lcm-monomial via a Bezout pair.
Polynomial g_poly_integer(const Polynomial& f, const Polynomial& g) {
    const Term& lf = f.leading_term();
    const Term& lg = g.leading_term();
    mpz_class d, u, v;
    ext_gcd(lf.coeff.integer(), lg.coeff.integer(), d, u, v);
    Monomial m = Monomial::lcm(lf.monomial, lg.monomial);
    CoeffDomain z = CoeffDomain::integers();
    Polynomial left = f.times_term(Coefficient(z, u), m.quotient(lf.monomial));
    Polynomial right = g.times_term(Coefficient(z, v), m.quotient(lg.monomial));
    return left + right;
}

// Euclidean reduction: every coefficient whose monomial is divisible by a
// basis leading monomial ends in the least non-negative residue class.
Polynomial normal_form_integer(const Polynomial& f, const std::vector<Polynomial>& basis) {
    CoeffDomain z = CoeffDomain::integers();
    Polynomial work = f;
    std::vector<Term> remainder;
    while (!work.is_zero()) {
        const Term lead = work.leading_term();
        bool reduced = false;
        for (const auto& g : basis) {
            const Term& lg = g.leading_term();
            if (!lg.monomial.divides(lead.monomial)) continue;
            mpz_class a = lg.coeff.integer();  // > 0 by normalization
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), lead.coeff.integer().get_mpz_t(), a.get_mpz_t());
            if (q == 0) continue;
            work = work - g.times_term(Coefficient(z, q), lead.monomial.quotient(lg.monomial));
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(lead);
            std::vector<Term> rest(work.terms().begin() + 1, work.terms().end());
            work = Polynomial::normalized(std::move(rest), f.domain(), f.order());
        }
    }
    return Polynomial::normalized(std::move(remainder), f.domain(), f.order());
}

// Tail reduction by exact division only; leading terms stay put.
Polynomial d_reduce_tail(const Polynomial& f, const std::vector<Polynomial>& others) {
    CoeffDomain z = CoeffDomain::integers();
    Polynomial work = f;
    bool changed = true;
    while (changed && !work.is_zero()) {
        changed = false;
        for (size_t t = 1; t < work.terms().size() && !changed; ++t) {
            const Term& term = work.terms()[t];
            for (const auto& g : others) {
                const Term& lg = g.leading_term();
                if (!lg.monomial.divides(term.monomial)) continue;
                mpz_class a = lg.coeff.integer();
                mpz_class c = term.coeff.integer();
                if (c % a != 0) continue;
                work = work - g.times_term(Coefficient(z, mpz_class(c / a)),
                                           term.monomial.quotient(lg.monomial));
                changed = true;
                break;
            }
        }
    }
    return work;
}

std::vector<Polynomial> interreduce_integer(std::vector<Polynomial> basis) {
    std::sort(basis.begin(), basis.end(),
              [](const Polynomial& a, const Polynomial& b) { return Polynomial::compare(a, b) < 0; });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    // Drop elements that reduce to zero against the rest.
    bool removed = true;
    while (removed) {
        removed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<Polynomial> others;
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            if (others.empty()) break;
            if (normal_form_integer(basis[i], others).is_zero()) {
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                removed = true;
                break;
            }
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<Polynomial> others;
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            Polynomial r = sign_normalized(d_reduce_tail(basis[i], others));
            if (r != basis[i]) {
                basis[i] = std::move(r);
                changed = true;
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
        int c = a.order().compare(a.leading_term().monomial, b.leading_term().monomial);
        if (c != 0) return c < 0;
        return Polynomial::compare(a, b) < 0;
    });
    return basis;
}

bool unit_constant(const Polynomial& p, bool integer_domain) {
    if (p.is_zero() || !p.is_constant()) return false;
    if (!integer_domain) return true;  // nonzero field constant
    mpz_class c = p.leading_term().coeff.integer();
    return c == 1 || c == -1;
}

}  // namespace

GroebnerBasis buchberger_field(std::span<const Polynomial> gens, const MonomialOrder& order,
                               const BuchbergerOptions& options) {
    CoeffDomain domain = gens.empty() ? CoeffDomain::rationals() : gens.front().domain();
    return buchberger_field(gens, domain, order, options);
}

GroebnerBasis buchberger_field(std::span<const Polynomial> gens, const CoeffDomain& domain,
                               const MonomialOrder& order, const BuchbergerOptions& options) {
    if (domain.kind == CoeffDomain::Kind::integers)
        throw DomainMismatchError("buchberger_field rejects integer coefficients; use buchberger_integer");

    std::vector<Polynomial> basis = prepare(gens, domain, order);
    GroebnerBasis out{domain, order, {}, BasisStrength::field_reduced};

    PairQueue queue{&order, {}};
    std::set<std::pair<size_t, size_t>> treated;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            Monomial l = Monomial::lcm(basis[i].leading_term().monomial,
                                       basis[j].leading_term().monomial);
            queue.push({l.total_degree(), l, 0, i, j});
        }

    while (!queue.empty()) {
        Pair p = queue.pop();
        treated.insert({p.i, p.j});
        const Monomial& mi = basis[p.i].leading_term().monomial;
        const Monomial& mj = basis[p.j].leading_term().monomial;
        if (Monomial::coprime(mi, mj)) continue;  // product criterion
        if (options.pair_pruning && chain_redundant(p.i, p.j, p.lcm, basis, treated)) continue;
        Polynomial r = normal_form_field(s_poly_field(basis[p.i], basis[p.j]), basis);
        if (r.is_zero()) continue;
        r = r.scaled(r.leading_term().coeff.inverse());
        if (unit_constant(r, false)) {
            out.elements = {Polynomial::constant(domain, order, 1)};
            return out;
        }
        size_t n = basis.size();
        for (size_t i = 0; i < n; ++i) {
            Monomial l = Monomial::lcm(basis[i].leading_term().monomial, r.leading_term().monomial);
            queue.push({l.total_degree(), l, 0, i, n});
        }
        basis.push_back(std::move(r));
    }

    out.elements = interreduce_field(std::move(basis));
    if (!out.elements.empty() && unit_constant(out.elements.front(), false))
        out.elements = {Polynomial::constant(domain, order, 1)};
    return out;
}

GroebnerBasis buchberger_integer(std::span<const Polynomial> gens, const MonomialOrder& order,
                                 const BuchbergerOptions& options) {
    (void)options;  // no pair criteria are applied over Z
    CoeffDomain domain = CoeffDomain::integers();
    if (!gens.empty() && gens.front().domain().kind != CoeffDomain::Kind::integers)
        throw DomainMismatchError("buchberger_integer requires integer coefficients");

    std::vector<Polynomial> basis = prepare(gens, domain, order);
    for (auto& g : basis) g = sign_normalized(g);
    GroebnerBasis out{domain, order, {}, BasisStrength::integer_strong};

    PairQueue queue{&order, {}};
    auto push_pairs = [&queue, &basis](size_t i, size_t j) {
        const Term& ti = basis[i].leading_term();
        const Term& tj = basis[j].leading_term();
        Monomial l = Monomial::lcm(ti.monomial, tj.monomial);
        queue.push({l.total_degree(), l, 0, i, j});
        // The G-pair is redundant when one leading coefficient divides the other.
        mpz_class a = ti.coeff.integer(), b = tj.coeff.integer();
        if (a % b != 0 && b % a != 0) queue.push({l.total_degree(), l, 1, i, j});
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) push_pairs(i, j);

    while (!queue.empty()) {
        Pair p = queue.pop();
        Polynomial combo = p.kind == 0 ? s_poly_integer(basis[p.i], basis[p.j])
                                       : g_poly_integer(basis[p.i], basis[p.j]);
        Polynomial r = sign_normalized(normal_form_integer(combo, basis));
        if (r.is_zero()) continue;
        if (unit_constant(r, true)) {
            out.elements = {Polynomial::constant(domain, order, 1)};
            return out;
        }
        size_t n = basis.size();
        basis.push_back(std::move(r));
        for (size_t i = 0; i < n; ++i) push_pairs(i, n);
    }

    out.elements = interreduce_integer(std::move(basis));
    if (!out.elements.empty() && unit_constant(out.elements.front(), true))
        out.elements = {Polynomial::constant(domain, order, 1)};
    return out;
}

GroebnerBasis groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order,
                             const BuchbergerOptions& options) {
    if (!gens.empty() && gens.front().domain().kind == CoeffDomain::Kind::integers)
        return buchberger_integer(gens, order, options);
    return buchberger_field(gens, order, options);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (gb.elements.empty()) return f;  // the zero ideal reduces nothing
    if (f.domain() != gb.domain)
        throw DomainMismatchError("normal_form: polynomial domain " + f.domain().to_string() +
                                  " does not match basis domain " + gb.domain.to_string());
    Polynomial p = f.order() == gb.order ? f : f.with_order(gb.order);
    if (p.var_count() != gb.order.var_count)
        throw ValidationError("normal_form: variable count mismatch");
    if (gb.strength == BasisStrength::integer_strong) return normal_form_integer(p, gb.elements);
    return normal_form_field(p, gb.elements);
}

bool is_trivial(const GroebnerBasis& gb) {
    bool integer_domain = gb.domain.kind == CoeffDomain::Kind::integers;
    for (const auto& g : gb.elements)
        if (unit_constant(g, integer_domain)) return true;
    return false;
}

namespace {

// Constant element of a strong integer basis, if any.
std::optional<mpz_class> basis_constant(const GroebnerBasis& gb) {
    for (const auto& g : gb.elements) {
        if (!g.is_zero() && g.is_constant()) {
            mpz_class c = g.leading_term().coeff.integer();
            return c < 0 ? mpz_class(-c) : c;
        }
    }
    return std::nullopt;
}

mpz_class characteristic_affine(const AffinePresentation& f) {
    std::vector<Polynomial> gens = f.relations;
    MonomialOrder order{MonomialOrder::Kind::grevlex, static_cast<int>(f.vars.size())};
    if (!gens.empty()) order = gens.front().order();
    if (f.base.kind == BaseRing::Kind::modular)
        gens.push_back(Polynomial::constant(CoeffDomain::integers(), order, f.base.modulus));
    GroebnerBasis gb = buchberger_integer(gens, order);
    if (auto c = basis_constant(gb)) return *c;
    return 0;
}

}  // namespace

mpz_class characteristic(const AlgebraPresentation& a) {
    if (a.base().kind != BaseRing::Kind::integers && a.base().kind != BaseRing::Kind::modular)
        throw ValidationError("characteristic requires base Z or Z/n, got " + a.base().to_string());
    mpz_class acc = 1;
    for (const auto& f : a.factors()) {
        mpz_class c = characteristic_affine(f);
        if (c == 0) return 0;
        acc = lcm(acc, c);
    }
    return acc;
}

std::string to_text(const GroebnerBasis& gb, const std::vector<std::string>& vars) {
    std::string out;
    for (const auto& g : gb.elements) out += g.to_expression(vars) + "\n";
    return out;
}

}  // namespace fibredim
