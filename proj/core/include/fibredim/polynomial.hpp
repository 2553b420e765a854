#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fibredim/coefficient.hpp"
#include "fibredim/monomial.hpp"

namespace fibredim {

struct Term {
    Monomial monomial;
    Coefficient coeff;
};

/// Exact multivariate polynomial. Terms are kept strictly descending in the
/// active monomial order, with no zero coefficients and no duplicate
/// monomials; construction goes through normalized().
class Polynomial {
public:
    static Polynomial zero(const CoeffDomain& domain, const MonomialOrder& order);
    static Polynomial constant(const CoeffDomain& domain, const MonomialOrder& order,
                               const mpz_class& n);
    static Polynomial variable(const CoeffDomain& domain, const MonomialOrder& order, int index);

    /// Merge, sort and drop zero terms. Idempotent. Raw monomials must all
    /// have length order.var_count and coefficients must share `domain`.
    static Polynomial normalized(std::vector<Term> raw, const CoeffDomain& domain,
                                 const MonomialOrder& order);

    const CoeffDomain& domain() const { return domain_; }
    const MonomialOrder& order() const { return order_; }
    int var_count() const { return order_.var_count; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_.front().monomial.is_unit(); }
    const Term& leading_term() const;
    unsigned total_degree() const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    Polynomial scaled(const Coefficient& c) const;
    Polynomial times_term(const Coefficient& c, const Monomial& m) const;
    Polynomial pow(unsigned e) const;

    /// Same terms re-sorted under another order kind (same variable count).
    Polynomial with_order(const MonomialOrder& order) const;

    /// Image under a ring map that reinterprets coefficients: integers into
    /// F_p (reduction) or into Q (inclusion). Requires an integer domain.
    Polynomial reduced_mod(const mpz_class& p) const;
    Polynomial over_rationals() const;

    /// Image under the variable embedding i -> offset + i into a ring with
    /// new_var_count variables.
    Polynomial embedded(int new_var_count, int offset) const;

    /// Total order for deterministic sorting of polynomial lists.
    static int compare(const Polynomial& a, const Polynomial& b);

    /// Human-readable expression, e.g. "3*x^2*y - 2". `vars` names the slots.
    std::string to_expression(const std::vector<std::string>& vars) const;

private:
    Polynomial(CoeffDomain domain, MonomialOrder order)
        : domain_(std::move(domain)), order_(order) {}

    CoeffDomain domain_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

}  // namespace fibredim
