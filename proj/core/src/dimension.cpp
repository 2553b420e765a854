#include "fibredim/dimension.hpp"

#include <algorithm>
#include <bit>

namespace fibredim {

DimensionValue DimensionValue::finite(long v) {
    if (v < 0) throw ValidationError("dimension value must be non-negative");
    return DimensionValue(v);
}

long DimensionValue::value() const {
    if (!value_) throw ValidationError("dimension value is Empty");
    return *value_;
}

DimensionValue DimensionValue::max(const DimensionValue& a, const DimensionValue& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    return finite(std::max(a.value(), b.value()));
}

DimensionValue DimensionValue::plus(const DimensionValue& a, const DimensionValue& b) {
    if (a.is_empty() || b.is_empty()) return empty();
    return finite(a.value() + b.value());
}

std::string DimensionValue::to_string() const {
    return value_ ? std::to_string(*value_) : "empty";
}

namespace {

bool mask_independent(std::uint32_t mask, std::span<const std::uint32_t> supports) {
    for (std::uint32_t s : supports)
        if ((s & ~mask) == 0) return false;  // monomial supported inside the subset
    return true;
}

int search_exhaustive(std::span<const std::uint32_t> supports, int n) {
    int best = -1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (mask_independent(mask, supports))
            best = std::max(best, std::popcount(mask));
    }
    return best;
}

// Independence is downward closed, so prune whole branches on the first
// dependent subset and bound by the remaining variable count.
void search_pruned(std::span<const std::uint32_t> supports, int n, int next, std::uint32_t mask,
                   int size, int& best) {
    best = std::max(best, size);
    for (int v = next; v < n; ++v) {
        if (size + (n - v) <= best) return;
        std::uint32_t candidate = mask | (std::uint32_t{1} << v);
        if (!mask_independent(candidate, supports)) continue;
        search_pruned(supports, n, v + 1, candidate, size + 1, best);
    }
}

}  // namespace

int independent_set_dimension(std::span<const Monomial> leading, int var_count, SubsetSearch mode) {
    if (var_count > 30) throw ValidationError("independent set search supports at most 30 variables");
    std::vector<std::uint32_t> supports;
    supports.reserve(leading.size());
    for (const auto& m : leading) {
        if (m.is_unit())
            throw ValidationError("constant leading monomial: the ideal is trivial");
        supports.push_back(static_cast<std::uint32_t>(m.support_mask()));
    }
    if (mode == SubsetSearch::exhaustive) return search_exhaustive(supports, var_count);
    int best = -1;
    if (mask_independent(0, supports)) search_pruned(supports, var_count, 0, 0, 0, best);
    return best;
}

DimensionValue krull_dim_ideal(std::span<const Polynomial> relations, const CoeffDomain& domain,
                               const MonomialOrder& order, SubsetSearch mode) {
    if (!domain.is_field())
        throw DomainMismatchError("krull_dim_ideal requires field coefficients");
    GroebnerBasis gb = buchberger_field(relations, domain, order);
    if (is_trivial(gb)) return DimensionValue::empty();
    std::vector<Monomial> leading;
    leading.reserve(gb.elements.size());
    for (const auto& g : gb.elements) leading.push_back(g.leading_term().monomial);
    return DimensionValue::finite(independent_set_dimension(leading, order.var_count, mode));
}

}  // namespace fibredim
