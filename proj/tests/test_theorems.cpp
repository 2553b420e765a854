#include <doctest.h>
#include <fibredim/random_gen.hpp>
#include <fibredim/theorems.hpp>

#include <random>

#include "test_support.hpp"

using namespace fibredim;

namespace {

AlgebraPresentation z_with_char(const std::string& vars_json, const std::string& c) {
    return ts::alg(R"({"base": {"kind": "Z"}, "vars": )" + vars_json + R"(, "relations": [")" + c +
                   R"("]})");
}

PrimeWitness fibre_witness(const FibreRing& fr, const std::vector<std::string>& exprs) {
    const FibreComponent& comp = fr.single();
    PrimeWitness w;
    for (const auto& e : exprs)
        w.generators.push_back(parse_expression(e, comp.vars, fr.field, fr.component_order(0)));
    return w;
}

}  // namespace

TEST_CASE("is_triplet examples") {
    CHECK_FALSE(is_triplet(z_with_char(R"(["x"])", "3"), z_with_char(R"(["y"])", "2")));
    CHECK(is_triplet(z_with_char(R"(["x"])", "12"), z_with_char(R"(["y"])", "18")));
    AlgebraPresentation zx = ts::alg(R"({"base": {"kind": "Z"}, "vars": ["x"]})");
    CHECK(is_triplet(zx, zx));
}

TEST_CASE("effective spectrum of a tensor product") {
    EffectiveSpectrum s =
        effective_spectrum_tensor(z_with_char(R"(["x"])", "12"), z_with_char(R"(["y"])", "18"));
    CHECK(s.closed_points == std::vector<mpz_class>{2, 3});
    CHECK_FALSE(s.includes_generic);

    AlgebraPresentation f5a = ts::alg(R"({"base": {"kind": "Fp", "n": 5}, "vars": ["x"]})");
    AlgebraPresentation f5b = ts::alg(R"({"base": {"kind": "Fp", "n": 5}, "vars": []})");
    EffectiveSpectrum sf = effective_spectrum_tensor(f5a, f5b);
    CHECK(sf.closed_points == std::vector<mpz_class>{5});

    // A misses 2, B lives only at 2
    AlgebraPresentation a =
        ts::alg(R"({"base": {"kind": "Z"}, "vars": ["x"], "relations": ["2*x - 1"]})");
    AlgebraPresentation b = ts::alg(R"({"base": {"kind": "Z"}, "vars": [], "relations": ["2"]})");
    CHECK(effective_spectrum_tensor(a, b).is_empty());
}

TEST_CASE("d_value closed form and witnesses") {
    // a field fibre: the only prime is (0)
    AlgebraPresentation f7 = ts::alg(R"({"base": {"kind": "Fp", "n": 7}, "vars": []})");
    DValueRequest field_req{3, 2, fibre_at(f7, SpecPoint::closed(7)),
                            DValueRequest::Mode::closed_form_affine,
                            {},
                            {}};
    CHECK(d_value(field_req) == DimensionValue::finite(2));

    // F_2[x,y]/(xy), s=3, d=1: closed form 1 + 1
    AlgebraPresentation xy =
        ts::alg(R"({"base": {"kind": "Fp", "n": 2}, "vars": ["x", "y"], "relations": ["x*y"]})");
    FibreRing fxy = fibre_at(xy, SpecPoint::closed(2));
    DValueRequest closed{3, 1, fxy, DValueRequest::Mode::closed_form_affine, {}, {}};
    CHECK(d_value(closed) == DimensionValue::finite(2));
    ComponentList comps{{fibre_witness(fxy, {"x"}), fibre_witness(fxy, {"y"})}};
    DValueRequest witnessed{3,
                            1,
                            fxy,
                            DValueRequest::Mode::witness_restricted,
                            {fibre_witness(fxy, {"x"}), fibre_witness(fxy, {"y"}),
                             fibre_witness(fxy, {"x", "y"})},
                            comps};
    CHECK(d_value(witnessed) == DimensionValue::finite(2));

    // s = d = 0 on Q[x]: the closed form and the witness supremum agree at 1
    AlgebraPresentation qx = ts::alg(R"({"base": {"kind": "Q"}, "vars": ["x"]})");
    FibreRing fqx = fibre_at(qx, SpecPoint::generic());
    DValueRequest zeros{0, 0, fqx, DValueRequest::Mode::closed_form_affine, {}, {}};
    CHECK(d_value(zeros) == DimensionValue::finite(1));
    ComponentList qcomps{{fibre_witness(fqx, {})}};
    DValueRequest wzeros{0,
                         0,
                         fqx,
                         DValueRequest::Mode::witness_restricted,
                         {fibre_witness(fqx, {}), fibre_witness(fqx, {"x"})},
                         qcomps};
    CHECK(d_value(wzeros) == DimensionValue::finite(1));

    CHECK_THROWS_AS(
        d_value(DValueRequest{1, 2, fqx, DValueRequest::Mode::closed_form_affine, {}, {}}),
        ValidationError);
    AlgebraPresentation zero = ts::alg(R"({"base": {"kind": "Q"}, "vars": [], "relations": ["1"]})");
    CHECK_THROWS_AS(d_value(DValueRequest{1, 0, fibre_at(zero, SpecPoint::generic()),
                                          DValueRequest::Mode::closed_form_affine,
                                          {},
                                          {}}),
                    ValidationError);
}

TEST_CASE("dim_tensor_at examples") {
    AlgebraPresentation a4 = z_with_char(R"(["x"])", "4");
    AlgebraPresentation b6 = z_with_char(R"(["y"])", "6");
    CHECK(dim_tensor_at(a4, b6, SpecPoint::closed(2)) == DimensionValue::finite(2));
    CHECK(dim_tensor_at(a4, b6, SpecPoint::closed(3)).is_empty());

    AlgebraPresentation atoms = boolean_atoms(2, MonomialOrder::Kind::grevlex);
    AlgebraPresentation zy = ts::alg(R"({"base": {"kind": "Z"}, "vars": ["y"]})");
    CHECK(dim_tensor_at(atoms, zy, SpecPoint::closed(2)) == DimensionValue::finite(1));
}

TEST_CASE("dim_tensor examples") {
    AlgebraPresentation a =
        ts::alg(R"({"base": {"kind": "Z"}, "vars": ["x"], "relations": ["12"]})");
    AlgebraPresentation b =
        ts::alg(R"({"base": {"kind": "Z"}, "vars": ["y"], "relations": ["18", "y^2"]})");
    TensorDimReport r = dim_tensor(a, b);
    CHECK(r.formula_dim == DimensionValue::finite(1));
    CHECK(r.oracle_dim == DimensionValue::finite(1));
    CHECK(r.agree);
    CHECK(r.points.size() == 2);  // points 2 and 3, each contributing 1 + 0
    CHECK(to_string(r.path) == "nonzero-char");

    // coprime characteristics: the zero ring
    TensorDimReport zero = dim_tensor(z_with_char(R"(["x"])", "3"), z_with_char(R"(["y"])", "2"));
    CHECK(zero.formula_dim.is_empty());
    CHECK(zero.oracle_dim.is_empty());
    CHECK(zero.agree);

    // classical affine additivity over a field
    AlgebraPresentation f5xy = ts::alg(R"({"base": {"kind": "Fp", "n": 5}, "vars": ["x", "y"]})");
    AlgebraPresentation f5z = ts::alg(R"({"base": {"kind": "Fp", "n": 5}, "vars": ["z"]})");
    TensorDimReport field = dim_tensor(f5xy, f5z);
    CHECK(field.formula_dim == DimensionValue::finite(3));
    CHECK(field.agree);
}

TEST_CASE("dim_tensor rejects the double characteristic-zero case over Z") {
    AlgebraPresentation zx = ts::alg(R"({"base": {"kind": "Z"}, "vars": ["x"]})");
    CHECK_THROWS_AS(dim_tensor(zx, zx), UnsupportedConfigError);
    CHECK(dim_tensor_at(zx, zx, SpecPoint::closed(7)) == DimensionValue::finite(2));
}

TEST_CASE("zero-dimensional factor path") {
    AlgebraPresentation a =
        ts::alg(R"({"base": {"kind": "Z"}, "vars": ["x"], "relations": ["8", "x^2"]})");
    AlgebraPresentation zy = ts::alg(R"({"base": {"kind": "Z"}, "vars": ["y"]})");
    TensorDimReport r = dim_tensor_zero_dim(a, zy);
    CHECK(r.formula_dim == DimensionValue::finite(1));
    CHECK(r.agree);
    CHECK(to_string(r.path) == "zero-dim-factor");

    AlgebraPresentation f3 = ts::alg(R"({"base": {"kind": "Fp", "n": 3}, "vars": []})");
    AlgebraPresentation f3xy = ts::alg(R"({"base": {"kind": "Fp", "n": 3}, "vars": ["x", "y"]})");
    CHECK(dim_tensor_zero_dim(f3, f3xy).formula_dim == DimensionValue::finite(2));

    AlgebraPresentation atoms = boolean_atoms(4, MonomialOrder::Kind::grevlex);
    AlgebraPresentation z = ts::alg(R"({"base": {"kind": "Z"}, "vars": []})");
    CHECK(dim_tensor_zero_dim(atoms, z).formula_dim == DimensionValue::finite(0));

    // a positive-dimensional factor is rejected
    AlgebraPresentation tall = z_with_char(R"(["x"])", "4");
    CHECK_THROWS_AS(dim_tensor_zero_dim(tall, zy), UnsupportedConfigError);
}

TEST_CASE("boolean examples") {
    AlgebraPresentation zxy = ts::alg(R"({"base": {"kind": "Z"}, "vars": ["x", "y"]})");
    TensorDimReport r = boolean_dim(2, zxy);
    CHECK(r.formula_dim == DimensionValue::finite(2));
    CHECK(r.oracle_dim == DimensionValue::finite(2));
    CHECK(r.agree);
    CHECK(to_string(r.path) == "boolean");

    CHECK(boolean_dim(1, ts::alg(R"({"base": {"kind": "Z"}, "vars": []})")).formula_dim ==
          DimensionValue::finite(0));
    CHECK(boolean_dim(3, ts::alg(
                             R"({"base": {"kind": "Z"}, "vars": ["x"], "relations": ["x^2 + x"]})"))
              .formula_dim == DimensionValue::finite(0));

    // B/2B = 0: not a triplet
    AlgebraPresentation odd =
        ts::alg(R"({"base": {"kind": "Z"}, "vars": [], "relations": ["3"]})");
    CHECK_THROWS_AS(boolean_dim(2, odd), UnsupportedConfigError);
}

TEST_CASE("boolean value does not depend on the atom count") {
    std::mt19937_64 rng(607);
    RandomAlgebraOptions opts;
    int tested = 0;
    for (int i = 0; i < 60 && tested < 10; ++i) {
        AlgebraPresentation b = random_affine_algebra(rng, BaseRing::integers(), opts);
        if (!is_effective(b, SpecPoint::closed(2))) continue;
        ++tested;
        DimensionValue v = boolean_dim(1, b).formula_dim;
        CHECK(boolean_dim(2, b).formula_dim == v);
        CHECK(boolean_dim(4, b).formula_dim == v);
        CHECK(v == dim_at(b, SpecPoint::closed(2)));
    }
    CHECK(tested == 10);
}

TEST_CASE("cross_check pairs") {
    AlgebraPresentation a4 = z_with_char(R"(["x"])", "4");
    AlgebraPresentation b6 = z_with_char(R"(["y"])", "6");
    CrossCheckReport r = cross_check(a4, b6, {.seed = 11, .membership_probes = 6});
    CHECK(r.failures == 0);
    CHECK(r.seed == 11);
    CHECK(r.probes_run > 0);
    REQUIRE(r.reports.size() == 1);
    CHECK(r.reports[0].formula_dim == DimensionValue::finite(2));
    CHECK(r.reports[0].points.size() == 1);  // only the point 2 is common

    CrossCheckReport coprime =
        cross_check(z_with_char(R"(["x"])", "3"), z_with_char(R"(["y"])", "2"), {});
    CHECK(coprime.failures == 0);
    CHECK(coprime.reports[0].formula_dim.is_empty());
}

TEST_CASE("field bases reproduce affine additivity (randomized)") {
    std::mt19937_64 rng(1212);
    RandomAlgebraOptions opts;
    for (const BaseRing& base : {BaseRing::prime_field(5), BaseRing::rationals()}) {
        for (int i = 0; i < 15; ++i) {
            AlgebraPresentation a = random_affine_algebra(rng, base, opts);
            AlgebraPresentation b = random_affine_algebra(rng, base, opts);
            SpecPoint pt = base.kind == BaseRing::Kind::rationals ? SpecPoint::generic()
                                                                  : SpecPoint::closed(5);
            DimensionValue da = dim_at(a, pt);
            DimensionValue db = dim_at(b, pt);
            TensorDimReport r = dim_tensor(a, b);
            CHECK(r.agree);
            CHECK(r.formula_dim == DimensionValue::plus(da, db));
            CHECK(r.oracle_dim == DimensionValue::plus(da, db));
        }
    }
}

TEST_CASE("tensor effective dimension is bounded by both factors (randomized)") {
    std::mt19937_64 rng(909);
    RandomAlgebraOptions opts;
    opts.force_nonzero_characteristic = true;
    for (int i = 0; i < 20; ++i) {
        AlgebraPresentation a = random_affine_algebra(rng, BaseRing::integers(), opts);
        AlgebraPresentation b = random_affine_algebra(rng, BaseRing::integers(), opts);
        AlgebraPresentation t = tensor_presentation(a, b);
        DimensionValue et = effective_dim(t);
        if (et.is_empty()) continue;
        DimensionValue ea = effective_dim(a);
        DimensionValue eb = effective_dim(b);
        CHECK(et.value() <= std::min(ea.value(), eb.value()));
        CHECK(et.value() == 0);

        // with vanishing effective dimension the dimension equals the fibre
        // dimension, and the sandwich collapses
        DimensionValue f = fibre_dim(t);
        TensorDimReport r = dim_tensor(a, b);
        CHECK(r.oracle_dim == f);
    }
}
