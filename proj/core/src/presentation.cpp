#include "fibredim/presentation.hpp"

#include <algorithm>
#include <set>

#include "fibredim/numeric.hpp"

namespace fibredim {

BaseRing BaseRing::modular(mpz_class n) {
    if (n < 2) throw ValidationError("Zmod modulus must be >= 2, got " + n.get_str());
    return {Kind::modular, std::move(n)};
}

BaseRing BaseRing::prime_field(mpz_class p) {
    if (!is_probable_prime(p))
        throw ValidationError("prime field characteristic " + p.get_str() + " is not prime");
    return {Kind::prime_field, std::move(p)};
}

CoeffDomain BaseRing::coefficient_domain() const {
    switch (kind) {
        case Kind::integers:
        case Kind::modular: return CoeffDomain::integers();
        case Kind::prime_field: return CoeffDomain::prime_field(modulus);
        case Kind::rationals: return CoeffDomain::rationals();
    }
    throw ValidationError("unreachable");
}

std::string BaseRing::to_string() const {
    switch (kind) {
        case Kind::integers: return "Z";
        case Kind::modular: return "Z/" + modulus.get_str();
        case Kind::prime_field: return "F" + modulus.get_str();
        case Kind::rationals: return "Q";
    }
    return "?";
}

namespace {

void validate_factor(const AffinePresentation& f) {
    std::set<std::string> seen;
    for (const auto& v : f.vars) {
        if (!seen.insert(v).second)
            throw ValidationError("duplicate variable name '" + v + "' in one factor");
    }
    CoeffDomain expected = f.base.coefficient_domain();
    for (const auto& r : f.relations) {
        if (r.domain() != expected)
            throw DomainMismatchError("relation coefficients live in " + r.domain().to_string() +
                                      " but the base " + f.base.to_string() + " requires " +
                                      expected.to_string());
        if (r.var_count() != static_cast<int>(f.vars.size()))
            throw ValidationError("relation variable count does not match the factor");
    }
}

}  // namespace

AlgebraPresentation AlgebraPresentation::affine(AffinePresentation factor) {
    validate_factor(factor);
    AlgebraPresentation a;
    a.factors_.push_back(std::move(factor));
    a.product_ = false;
    return a;
}

AlgebraPresentation AlgebraPresentation::product(std::vector<AffinePresentation> factors) {
    if (factors.empty()) throw ValidationError("product presentation needs at least one factor");
    for (const auto& f : factors) {
        validate_factor(f);
        if (f.base != factors.front().base)
            throw ValidationError("product factors must share one base ring");
    }
    AlgebraPresentation a;
    a.factors_ = std::move(factors);
    a.product_ = true;
    return a;
}

const AffinePresentation& AlgebraPresentation::single() const {
    if (product_ || factors_.size() != 1)
        throw ValidationError("presentation is a product, not affine");
    return factors_.front();
}

bool AlgebraPresentation::operator==(const AlgebraPresentation& rhs) const {
    if (product_ != rhs.product_ || factors_.size() != rhs.factors_.size()) return false;
    for (size_t i = 0; i < factors_.size(); ++i) {
        const auto& a = factors_[i];
        const auto& b = rhs.factors_[i];
        if (a.base != b.base || a.vars != b.vars || a.relations.size() != b.relations.size())
            return false;
        for (size_t j = 0; j < a.relations.size(); ++j)
            if (a.relations[j] != b.relations[j]) return false;
    }
    return true;
}

namespace {

AffinePresentation tensor_affine(const AffinePresentation& a, const AffinePresentation& b) {
    std::set<std::string> left(a.vars.begin(), a.vars.end());
    std::set<std::string> right(b.vars.begin(), b.vars.end());
    std::set<std::string> taken;

    auto rename = [&taken](const std::string& v, const char* suffix) {
        std::string name = v;
        do {
            name += suffix;
        } while (taken.count(name) > 0);
        return name;
    };

    std::vector<std::string> vars;
    for (const auto& v : a.vars) {
        std::string name = right.count(v) ? rename(v, "_L") : v;
        taken.insert(name);
        vars.push_back(std::move(name));
    }
    for (const auto& v : b.vars) {
        std::string name = (left.count(v) || taken.count(v)) ? rename(v, "_R") : v;
        taken.insert(name);
        vars.push_back(std::move(name));
    }

    int total = static_cast<int>(vars.size());
    int na = static_cast<int>(a.vars.size());
    std::vector<Polynomial> relations;
    relations.reserve(a.relations.size() + b.relations.size());
    for (const auto& r : a.relations) relations.push_back(r.embedded(total, 0));
    for (const auto& r : b.relations) relations.push_back(r.embedded(total, na));
    return {a.base, std::move(vars), std::move(relations)};
}

}  // namespace

AlgebraPresentation tensor_presentation(const AlgebraPresentation& a,
                                        const AlgebraPresentation& b) {
    if (a.base() != b.base())
        throw ValidationError("tensor product requires a shared base ring: " +
                              a.base().to_string() + " vs " + b.base().to_string());
    std::vector<AffinePresentation> factors;
    factors.reserve(a.factors().size() * b.factors().size());
    for (const auto& fa : a.factors())
        for (const auto& fb : b.factors()) factors.push_back(tensor_affine(fa, fb));
    if (!a.is_product() && !b.is_product()) return AlgebraPresentation::affine(std::move(factors.front()));
    return AlgebraPresentation::product(std::move(factors));
}

AlgebraPresentation boolean_atoms(int k, MonomialOrder::Kind order_kind) {
    if (k < 1) throw ValidationError("boolean_atoms count must be >= 1");
    MonomialOrder order{order_kind, 0};
    AffinePresentation atom{BaseRing::integers(), {},
                            {Polynomial::constant(CoeffDomain::integers(), order, 2)}};
    std::vector<AffinePresentation> factors(static_cast<size_t>(k), atom);
    return AlgebraPresentation::product(std::move(factors));
}

AlgebraPresentation adjoin_variable(const AlgebraPresentation& a, const std::string& name) {
    MonomialOrder::Kind kind = MonomialOrder::Kind::grevlex;
    for (const auto& f : a.factors()) {
        if (!f.relations.empty()) {
            kind = f.relations.front().order().kind;
            break;
        }
    }
    AffinePresentation line{a.base(), {name}, {}};
    (void)kind;
    AlgebraPresentation ext = AlgebraPresentation::affine(std::move(line));
    return tensor_presentation(a, ext);
}

bool is_boolean_atoms_presentation(const AlgebraPresentation& a) {
    if (a.base() != BaseRing::integers()) return false;
    for (const auto& f : a.factors()) {
        if (!f.vars.empty() || f.relations.size() != 1) return false;
        const Polynomial& r = f.relations.front();
        if (r.terms().size() != 1 || !r.is_constant()) return false;
        mpz_class c = r.terms().front().coeff.integer();
        if (c != 2 && c != -2) return false;
    }
    return true;
}

}  // namespace fibredim
