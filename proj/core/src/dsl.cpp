#include "fibredim/dsl.hpp"

#include <cctype>
#include <json.hpp>

#include "fibredim/numeric.hpp"

namespace fibredim {

namespace {

using nlohmann::ordered_json;

// --- expression parser -----------------------------------------------------

class ExprParser {
public:
    ExprParser(std::string_view text, const std::vector<std::string>& vars,
               const CoeffDomain& domain, const MonomialOrder& order)
        : text_(text), vars_(vars), domain_(domain), order_(order) {}

    Polynomial parse() {
        Polynomial p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, 1, static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expression() {
        bool negate = false;
        skip_ws();
        if (eat('-')) negate = true;
        else eat('+');
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-')
                fail("exponent must be a non-negative integer literal");
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("exponent must be a non-negative integer literal");
            mpz_class e = integer_literal();
            if (e > 100000) fail("exponent too large");
            return base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(domain_, order_, integer_literal());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            ++pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (vars_[i] == name)
                    return Polynomial::variable(domain_, order_, static_cast<int>(i));
            }
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    mpz_class integer_literal() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    const CoeffDomain& domain_;
    const MonomialOrder& order_;
    size_t pos_ = 0;
};

// --- JSON helpers ------------------------------------------------------------

std::pair<int, int> line_col_of_offset(std::string_view text, size_t offset) {
    int line = 1, col = 1;
    for (size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

mpz_class integer_field(const ordered_json& j, const std::string& key) {
    const auto& v = j.at(key);
    if (v.is_number_integer()) return mpz_class(std::to_string(v.get<long long>()));
    if (v.is_number_unsigned()) return mpz_class(std::to_string(v.get<unsigned long long>()));
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.empty() || s.find_first_not_of("0123456789-") != std::string::npos)
            throw ValidationError("'" + key + "' must be an integer or a decimal string");
        return mpz_class(s, 10);
    }
    throw ValidationError("'" + key + "' must be an integer or a decimal string");
}

BaseRing parse_base(const ordered_json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ValidationError("'base' must be an object with a 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Z") return BaseRing::integers();
    if (kind == "Q") return BaseRing::rationals();
    if (kind == "Zmod") return BaseRing::modular(integer_field(j, "n"));
    if (kind == "Fp") return BaseRing::prime_field(integer_field(j, "n"));
    throw ValidationError("unknown base kind '" + kind +
                          "' (supported: Z, Zmod, Fp, Q; localizations, power series and other "
                          "constructions are not expressible)");
}

std::string valid_name(const std::string& name) {
    bool ok = !name.empty() && std::isalpha(static_cast<unsigned char>(name[0]));
    for (size_t i = 1; ok && i < name.size(); ++i)
        ok = std::isalnum(static_cast<unsigned char>(name[i])) || name[i] == '_';
    if (!ok) throw ValidationError("invalid variable name '" + name + "'");
    return name;
}

AffinePresentation parse_affine(const ordered_json& j, MonomialOrder::Kind order_kind,
                                const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "base" && key != "vars" && key != "relations")
            throw ValidationError("unknown key '" + key + "' " + where);
    }
    if (!j.contains("base")) throw ValidationError("missing 'base' " + where);
    AffinePresentation f;
    f.base = parse_base(j.at("base"));
    if (j.contains("vars")) {
        for (const auto& v : j.at("vars")) f.vars.push_back(valid_name(v.get<std::string>()));
    }
    CoeffDomain domain = f.base.coefficient_domain();
    MonomialOrder order{order_kind, static_cast<int>(f.vars.size())};
    if (j.contains("relations")) {
        int index = 0;
        for (const auto& r : j.at("relations")) {
            if (!r.is_string()) throw ValidationError("relations must be expression strings");
            try {
                f.relations.push_back(parse_expression(r.get<std::string>(), f.vars, domain, order));
            } catch (const ParseError& e) {
                throw ParseError("relation " + std::to_string(index) + " " + where + ": " +
                                     e.what(),
                                 e.line(), e.column());
            }
            ++index;
        }
    }
    return f;
}

}  // namespace

Polynomial parse_expression(std::string_view text, const std::vector<std::string>& vars,
                            const CoeffDomain& domain, const MonomialOrder& order) {
    return ExprParser(text, vars, domain, order).parse();
}

AlgebraPresentation parse_algebra(std::string_view text, MonomialOrder::Kind order_kind) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("JSON syntax error: ") + e.what(), line, col);
    }
    if (!doc.is_object()) throw ValidationError("document must be a JSON object");

    if (doc.contains("boolean_atoms")) {
        if (doc.size() != 1) throw ValidationError("'boolean_atoms' must be the only key");
        mpz_class k = integer_field(doc, "boolean_atoms");
        if (k < 1 || k > 1024) throw ValidationError("'boolean_atoms' count must be in [1, 1024]");
        return boolean_atoms(static_cast<int>(k.get_si()), order_kind);
    }
    if (doc.contains("product")) {
        if (doc.size() != 1) throw ValidationError("'product' must be the only key");
        const auto& arr = doc.at("product");
        if (!arr.is_array() || arr.empty())
            throw ValidationError("'product' must be a non-empty array of affine presentations");
        std::vector<AffinePresentation> factors;
        int i = 0;
        for (const auto& item : arr) {
            factors.push_back(parse_affine(item, order_kind, "in product factor " + std::to_string(i)));
            ++i;
        }
        return AlgebraPresentation::product(std::move(factors));
    }
    return AlgebraPresentation::affine(parse_affine(doc, order_kind, "in presentation"));
}

namespace {

ordered_json render_base(const BaseRing& base) {
    ordered_json j;
    switch (base.kind) {
        case BaseRing::Kind::integers: j["kind"] = "Z"; break;
        case BaseRing::Kind::rationals: j["kind"] = "Q"; break;
        case BaseRing::Kind::modular: j["kind"] = "Zmod"; break;
        case BaseRing::Kind::prime_field: j["kind"] = "Fp"; break;
    }
    if (base.kind == BaseRing::Kind::modular || base.kind == BaseRing::Kind::prime_field) {
        if (base.modulus.fits_slong_p())
            j["n"] = base.modulus.get_si();
        else
            j["n"] = base.modulus.get_str();
    }
    return j;
}

ordered_json render_affine(const AffinePresentation& f) {
    ordered_json j;
    j["base"] = render_base(f.base);
    j["vars"] = f.vars;
    ordered_json rels = ordered_json::array();
    for (const auto& r : f.relations) rels.push_back(r.to_expression(f.vars));
    j["relations"] = std::move(rels);
    return j;
}

}  // namespace

namespace {

ordered_json render_document(const AlgebraPresentation& a) {
    ordered_json j;
    if (a.is_product()) {
        ordered_json arr = ordered_json::array();
        for (const auto& f : a.factors()) arr.push_back(render_affine(f));
        j["product"] = std::move(arr);
    } else {
        j = render_affine(a.single());
    }
    return j;
}

}  // namespace

std::string render(const AlgebraPresentation& a) { return render_document(a).dump(2) + "\n"; }

std::string render_compact(const AlgebraPresentation& a) { return render_document(a).dump(); }

}  // namespace fibredim
