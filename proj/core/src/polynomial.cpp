#include "fibredim/polynomial.hpp"

#include <algorithm>
#include <map>

namespace fibredim {

Polynomial Polynomial::zero(const CoeffDomain& domain, const MonomialOrder& order) {
    return Polynomial(domain, order);
}

Polynomial Polynomial::constant(const CoeffDomain& domain, const MonomialOrder& order,
                                const mpz_class& n) {
    std::vector<Term> t;
    t.push_back({Monomial::unit(order.var_count), Coefficient(domain, n)});
    return normalized(std::move(t), domain, order);
}

Polynomial Polynomial::variable(const CoeffDomain& domain, const MonomialOrder& order, int index) {
    std::vector<Term> t;
    t.push_back({Monomial::variable(order.var_count, index), Coefficient::one(domain)});
    return normalized(std::move(t), domain, order);
}

Polynomial Polynomial::normalized(std::vector<Term> raw, const CoeffDomain& domain,
                                  const MonomialOrder& order) {
    auto cmp = [&order](const Monomial& a, const Monomial& b) { return order.less(a, b); };
    std::map<Monomial, Coefficient, decltype(cmp)> acc(cmp);
    for (auto& t : raw) {
        if (t.monomial.var_count() != order.var_count)
            throw ValidationError("monomial length does not match the variable count");
        if (t.coeff.domain() != domain)
            throw DomainMismatchError("term coefficient domain " + t.coeff.domain().to_string() +
                                      " differs from polynomial domain " + domain.to_string());
        auto it = acc.find(t.monomial);
        if (it == acc.end())
            acc.emplace(std::move(t.monomial), std::move(t.coeff));
        else
            it->second = it->second + t.coeff;
    }
    Polynomial p(domain, order);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
        if (!it->second.is_zero()) p.terms_.push_back({it->first, it->second});
    }
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw ValidationError("zero polynomial has no leading term");
    return terms_.front();
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    if (domain_ != rhs.domain_)
        throw DomainMismatchError("polynomial domains differ in addition");
    if (order_ != rhs.order_)
        throw ValidationError("polynomial orders or variable counts differ in addition");
    std::vector<Term> t = terms_;
    t.insert(t.end(), rhs.terms_.begin(), rhs.terms_.end());
    return normalized(std::move(t), domain_, order_);
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (domain_ != rhs.domain_)
        throw DomainMismatchError("polynomial domains differ in multiplication");
    if (order_ != rhs.order_)
        throw ValidationError("polynomial orders or variable counts differ in multiplication");
    std::vector<Term> t;
    t.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : rhs.terms_) t.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
    return normalized(std::move(t), domain_, order_);
}

Polynomial Polynomial::operator-() const {
    Polynomial p(domain_, order_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial, -t.coeff});
    return p;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    if (domain_ != rhs.domain_ || order_ != rhs.order_ || terms_.size() != rhs.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].monomial != rhs.terms_[i].monomial || terms_[i].coeff != rhs.terms_[i].coeff)
            return false;
    }
    return true;
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& term : terms_) t.push_back({term.monomial, term.coeff * c});
    return normalized(std::move(t), domain_, order_);
}

Polynomial Polynomial::times_term(const Coefficient& c, const Monomial& m) const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& term : terms_) t.push_back({term.monomial * m, term.coeff * c});
    return normalized(std::move(t), domain_, order_);
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(domain_, order_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
    if (order.var_count != order_.var_count)
        throw ValidationError("with_order: variable count mismatch");
    return normalized(terms_, domain_, order);
}

Polynomial Polynomial::reduced_mod(const mpz_class& p) const {
    if (domain_.kind != CoeffDomain::Kind::integers)
        throw DomainMismatchError("reduced_mod requires integer coefficients");
    CoeffDomain fp = CoeffDomain::prime_field(p);
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& term : terms_) t.push_back({term.monomial, Coefficient(fp, term.coeff.integer())});
    return normalized(std::move(t), fp, order_);
}

Polynomial Polynomial::over_rationals() const {
    if (domain_.kind != CoeffDomain::Kind::integers)
        throw DomainMismatchError("over_rationals requires integer coefficients");
    CoeffDomain q = CoeffDomain::rationals();
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& term : terms_) t.push_back({term.monomial, Coefficient(q, term.coeff.value())});
    return normalized(std::move(t), q, order_);
}

Polynomial Polynomial::embedded(int new_var_count, int offset) const {
    MonomialOrder order = order_.with_var_count(new_var_count);
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& term : terms_) {
        std::vector<unsigned> e(static_cast<size_t>(new_var_count), 0);
        for (int i = 0; i < var_count(); ++i) e[static_cast<size_t>(offset + i)] = term.monomial.exponent(i);
        t.push_back({Monomial(std::move(e)), term.coeff});
    }
    return normalized(std::move(t), domain_, order);
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = a.order_.compare(a.terms_[i].monomial, b.terms_[i].monomial);
        if (c != 0) return c;
        if (a.terms_[i].coeff.value() != b.terms_[i].coeff.value())
            return a.terms_[i].coeff.value() < b.terms_[i].coeff.value() ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

std::string Polynomial::to_expression(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        mpq_class c = t.coeff.value();
        bool negative = c < 0;
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        mpq_class a = negative ? mpq_class(-c) : c;
        std::string mag = a.get_den() == 1 ? a.get_num().get_str()
                                           : a.get_num().get_str() + "/" + a.get_den().get_str();
        std::string mono;
        for (int v = 0; v < var_count(); ++v) {
            unsigned e = t.monomial.exponent(v);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars.at(static_cast<size_t>(v));
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += mag;
        } else if (a == 1) {
            out += mono;
        } else {
            out += mag + "*" + mono;
        }
    }
    return out;
}

}  // namespace fibredim
