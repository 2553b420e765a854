#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fibredim/dsl.hpp"
#include "fibredim/report.hpp"
#include "fibredim/theorems.hpp"

namespace fibredim::cli {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Output {
    bool json = false;
    bool color = false;
    std::ostream* out = nullptr;

    std::string mark(bool ok) const {
        std::string word = ok ? "yes" : "NO";
        if (!color) return word;
        return (ok ? "\033[32m" : "\033[31m") + word + "\033[0m";
    }

    void emit(const std::string& verb, const std::vector<std::string>& inputs,
              const std::string& order, const ordered_json& result,
              const std::string& human) const {
        if (json) {
            ordered_json envelope;
            envelope["verb"] = verb;
            envelope["inputs"] = inputs;
            envelope["order"] = order;
            envelope["result"] = result;
            *out << envelope.dump() << "\n";
        } else {
            *out << human;
        }
    }
};

ordered_json parse_fragment(const std::string& text) { return ordered_json::parse(text); }

SpecPoint point_from_flags(const std::string& at, bool generic) {
    if (generic) return SpecPoint::generic();
    return SpecPoint::closed(mpz_class(at, 10));
}

std::string describe_spectrum(const EffectiveSpectrum& s) {
    if (s.is_empty()) return "empty (zero ring)";
    std::string text;
    if (s.includes_generic) text += "generic";
    if (s.cofinite) {
        if (!text.empty()) text += " + ";
        text += "all closed points";
        if (!s.closed_points.empty()) {
            text += " except {";
            for (size_t i = 0; i < s.closed_points.size(); ++i)
                text += (i ? ", " : "") + s.closed_points[i].get_str();
            text += "}";
        }
    } else if (!s.closed_points.empty()) {
        if (!text.empty()) text += " + ";
        text += "closed points {";
        for (size_t i = 0; i < s.closed_points.size(); ++i)
            text += (i ? ", " : "") + s.closed_points[i].get_str();
        text += "}";
    }
    return text;
}

std::string describe_tensor_report(const TensorDimReport& r, const Output& output) {
    std::ostringstream os;
    os << "path: " << to_string(r.path) << "\n";
    for (const auto& cmp : r.points) {
        os << "  at " << cmp.point.to_string() << ": dim_left=" << cmp.dim_left.to_string()
           << " dim_right=" << cmp.dim_right.to_string()
           << " formula=" << cmp.formula.to_string() << " oracle=" << cmp.oracle.to_string()
           << "\n";
    }
    os << "formula dim = " << r.formula_dim.to_string()
       << ", oracle dim = " << r.oracle_dim.to_string() << ", agree: " << output.mark(r.agree)
       << "\n";
    return os.str();
}

// Overall dimension; callable only when the effective dimension vanishes.
DimensionValue overall_dim(const AlgebraPresentation& a) {
    if (a.base().kind == BaseRing::Kind::integers) {
        if (characteristic(a) == 0)
            throw UnsupportedConfigError(
                "the absolute dimension over base Z is computed only for algebras of nonzero "
                "characteristic (vanishing effective dimension); use --at or --generic for "
                "per-point dimensions");
        return fibre_dim(a);
    }
    // Field and Z/n bases have zero-dimensional spectra, so the dimension is
    // the fibre dimension.
    return fibre_dim(a);
}

TensorDimReport routed_tensor_check(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    if (a.base().kind == BaseRing::Kind::integers && is_boolean_atoms_presentation(a))
        return boolean_dim(static_cast<int>(a.factors().size()), b);
    DimensionValue fd = fibre_dim(a);
    if (!fd.is_empty() && fd.value() == 0) return dim_tensor_zero_dim(a, b);
    return dim_tensor(a, b);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             bool use_color) {
    CLI::App app{"dimension-theoretic invariants of finitely presented algebras"};
    app.require_subcommand(1);

    bool json = false;
    std::string order = "grevlex";
    app.add_flag("--json", json, "emit one JSON object on stdout");
    app.add_option("--order", order, "monomial order (grevlex|lex)")
        ->check(CLI::IsMember({"grevlex", "lex"}));

    std::string at;
    bool generic = false;
    std::string witness_path;
    std::uint64_t seed = 0;
    int probes = 4;
    bool tensor_check = false;

    auto* cmd_dim = app.add_subcommand("dim", "Krull dimension (overall or at a point)");
    std::string dim_input;
    cmd_dim->add_option("input", dim_input)->required();
    cmd_dim->add_option("--at", at, "closed point (prime)");
    cmd_dim->add_flag("--generic", generic, "the generic point");

    auto* cmd_fibre = app.add_subcommand("fibre", "fibre presentation at a point");
    std::string fibre_input;
    cmd_fibre->add_option("input", fibre_input)->required();
    cmd_fibre->add_option("--at", at, "closed point (prime)");
    cmd_fibre->add_flag("--generic", generic, "the generic point");

    auto* cmd_effspec = app.add_subcommand("effspec", "effective spectrum of the base");
    std::string effspec_input;
    cmd_effspec->add_option("input", effspec_input)->required();

    auto* cmd_tensor = app.add_subcommand("tensor", "tensor presentation, optionally checked");
    std::string tensor_left, tensor_right;
    cmd_tensor->add_option("left", tensor_left)->required();
    cmd_tensor->add_option("right", tensor_right)->required();
    cmd_tensor->add_flag("--check", tensor_check, "compare formula and oracle dimensions");

    auto* cmd_bounds = app.add_subcommand("bounds", "dimension bounds from fibre data");
    std::string bounds_input;
    cmd_bounds->add_option("input", bounds_input)->required();

    auto* cmd_af = app.add_subcommand("af", "altitude-formula check for a witnessed prime");
    std::string af_input;
    cmd_af->add_option("input", af_input)->required();
    cmd_af->add_option("--witness", witness_path, "witness JSON file")->required();
    cmd_af->add_option("--at", at, "cross-check against the witness point");

    auto* cmd_check = app.add_subcommand("check", "formula vs oracle cross-check for a pair");
    std::string check_left, check_right;
    cmd_check->add_option("left", check_left)->required();
    cmd_check->add_option("right", check_right)->required();
    cmd_check->add_option("--seed", seed, "seed for membership probes (echoed)");
    cmd_check->add_option("--probes", probes, "membership probes per common point");

    // Global flags (--json, --order) may follow the subcommand.
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    MonomialOrder::Kind kind =
        order == "lex" ? MonomialOrder::Kind::lex : MonomialOrder::Kind::grevlex;
    Output output{json, use_color, &out};

    if (!at.empty() && generic)
        throw ValidationError("--at and --generic are mutually exclusive");

    if (cmd_dim->parsed()) {
        AlgebraPresentation a = parse_algebra(read_file(dim_input), kind);
        ordered_json result;
        std::string human;
        if (!at.empty() || generic) {
            SpecPoint pt = point_from_flags(at, generic);
            validate_point(a.base(), pt);
            DimensionValue d = dim_at(a, pt);
            result["point"] = parse_fragment(to_json_string(pt));
            result["dim"] = parse_fragment(to_json_string(d));
            human = "dim at " + pt.to_string() + " = " + d.to_string() + "\n";
        } else {
            DimensionValue d = overall_dim(a);
            result["dim"] = parse_fragment(to_json_string(d));
            result["method"] = "fibre dimension (vanishing effective dimension)";
            human = "dim = " + d.to_string() + "\n";
        }
        output.emit("dim", {dim_input}, order, result, human);
        return 0;
    }

    if (cmd_fibre->parsed()) {
        if (at.empty() && !generic)
            throw ValidationError("fibre requires a point: --at <prime> or --generic");
        AlgebraPresentation a = parse_algebra(read_file(fibre_input), kind);
        SpecPoint pt = point_from_flags(at, generic);
        validate_point(a.base(), pt);
        FibreRing fr = fibre_at(a, pt);
        ordered_json result = parse_fragment(to_json_string(fr));
        std::ostringstream human;
        human << "fibre at " << pt.to_string() << " over "
              << (fr.field.kind == CoeffDomain::Kind::rationals ? std::string("Q")
                                                                : "F" + fr.field.modulus.get_str())
              << "\n";
        for (const auto& comp : fr.components) {
            human << "  factor [";
            for (size_t i = 0; i < comp.vars.size(); ++i) human << (i ? ", " : "") << comp.vars[i];
            human << "] relations:";
            if (comp.relations.empty()) human << " (none)";
            human << "\n";
            for (const auto& r : comp.relations) human << "    " << r.to_expression(comp.vars) << "\n";
        }
        output.emit("fibre", {fibre_input}, order, result, human.str());
        return 0;
    }

    if (cmd_effspec->parsed()) {
        AlgebraPresentation a = parse_algebra(read_file(effspec_input), kind);
        EffectiveSpectrum s = effective_spectrum(a);
        ordered_json result = parse_fragment(spectrum_report_json(s));
        result["effective_dim"] = parse_fragment(to_json_string(effective_dim(s, a.base())));
        std::string human = "effective spectrum: " + describe_spectrum(s) + "\n";
        output.emit("effspec", {effspec_input}, order, result, human);
        return 0;
    }

    if (cmd_tensor->parsed()) {
        AlgebraPresentation a = parse_algebra(read_file(tensor_left), kind);
        AlgebraPresentation b = parse_algebra(read_file(tensor_right), kind);
        AlgebraPresentation t = tensor_presentation(a, b);
        ordered_json result;
        result["presentation"] = parse_fragment(render(t));
        std::string human = render(t);
        if (tensor_check) {
            TensorDimReport report = routed_tensor_check(a, b);
            result["check"] = parse_fragment(to_json_string(report));
            human += describe_tensor_report(report, output);
        }
        output.emit("tensor", {tensor_left, tensor_right}, order, result, human);
        return 0;
    }

    if (cmd_bounds->parsed()) {
        AlgebraPresentation a = parse_algebra(read_file(bounds_input), kind);
        SeidenbergBounds b = seidenberg_bounds(a);
        ordered_json result = parse_fragment(to_json_string(b));
        std::ostringstream human;
        human << "bounds: " << b.lower.to_string() << " <= dim <= " << b.upper.to_string() << "\n";
        if (b.refined_lower)
            human << "refined lower bound (polynomial ring): " << b.refined_lower->to_string()
                  << "\n";
        if (b.dim_if_known)
            human << "dim = " << b.dim_if_known->to_string() << " (effective dimension 0)\n";
        output.emit("bounds", {bounds_input}, order, result, human.str());
        return 0;
    }

    if (cmd_af->parsed()) {
        AlgebraPresentation a = parse_algebra(read_file(af_input), kind);
        WitnessData w = parse_witness(read_file(witness_path), a, kind);
        if (!at.empty() || generic) {
            SpecPoint flag_pt = point_from_flags(at, generic);
            if (flag_pt != w.point)
                throw ValidationError("--at disagrees with the witness file's fibre point");
        }
        AltitudeCheck check = altitude_check(a, w.point, w.prime, w.components);
        ordered_json result = parse_fragment(to_json_string(check, w.point));
        std::ostringstream human;
        human << "altitude formula at " << w.point.to_string() << ": holds = "
              << output.mark(check.holds) << " (height " << check.height.to_string() << " + td "
              << check.td_quotient.to_string() << " vs td " << check.td_localized.to_string()
              << ")\n";
        output.emit("af", {af_input, witness_path}, order, result, human.str());
        return 0;
    }

    if (cmd_check->parsed()) {
        AlgebraPresentation a = parse_algebra(read_file(check_left), kind);
        AlgebraPresentation b = parse_algebra(read_file(check_right), kind);
        CrossCheckReport report = cross_check(a, b, {seed, probes});
        ordered_json result = parse_fragment(to_json_string(report));
        std::ostringstream human;
        human << "seed = " << report.seed << ", membership probes = " << report.probes_run
              << ", failures = " << report.failures << "\n";
        for (const auto& r : report.reports) human << describe_tensor_report(r, output);
        output.emit("check", {check_left, check_right}, order, result, human.str());
        return report.failures == 0 ? 0 : 1;
    }

    err << "error: no subcommand\n";
    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool use_color) {
    try {
        return dispatch(args, out, err, use_color);
    } catch (const ParseError& e) {
        err << "error (line " << e.line() << ", column " << e.column() << "): " << e.what()
            << "\n";
        return 2;
    } catch (const InconsistentWitnessError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const UnsupportedConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace fibredim::cli
