#include "sector_radius/cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

#include "sector_radius/certify.hpp"
#include "sector_radius/cli/matrix_io.hpp"
#include "sector_radius/errors.hpp"
#include "sector_radius/extremal.hpp"
#include "sector_radius/matcore.hpp"
#include "sector_radius/numrange.hpp"
#include "sector_radius/verify/acceptance.hpp"

namespace sector_radius::cli {
namespace {

// Tolerance fields settable with --tolerance name=value.
const std::map<std::string, double Tolerances::*>& real_fields() {
    static const std::map<std::string, double Tolerances::*> fields{
        {"hermitian", &Tolerances::hermitian},       {"jacobi_offdiag", &Tolerances::jacobi_offdiag},
        {"rank", &Tolerances::rank},                 {"psd", &Tolerances::psd},
        {"radius_theta", &Tolerances::radius_theta}, {"certify", &Tolerances::certify},
        {"canonical", &Tolerances::canonical},       {"ratio_slack", &Tolerances::ratio_slack},
        {"singular_tie", &Tolerances::singular_tie}, {"degenerate", &Tolerances::degenerate},
    };
    return fields;
}

const std::map<std::string, int Tolerances::*>& int_fields() {
    static const std::map<std::string, int Tolerances::*> fields{
        {"jacobi_max_sweeps", &Tolerances::jacobi_max_sweeps},
        {"radius_grid", &Tolerances::radius_grid},
        {"radius_brackets", &Tolerances::radius_brackets},
    };
    return fields;
}

double parse_positive(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || !(value > 0.0) || !std::isfinite(value))
        throw InputError(what + ": expected a positive number, got '" + text + "'");
    return value;
}

void apply_override(Tolerances& tol, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw InputError("--tolerance expects name=value, got '" + assignment + "'");
    const std::string name = assignment.substr(0, eq);
    const std::string text = assignment.substr(eq + 1);
    if (auto it = real_fields().find(name); it != real_fields().end()) {
        tol.*(it->second) = parse_positive(text, name);
    } else if (auto jt = int_fields().find(name); jt != int_fields().end()) {
        const double v = parse_positive(text, name);
        if (v != std::floor(v) || v > 1e9) throw InputError(name + ": expected a positive integer");
        tol.*(jt->second) = static_cast<int>(v);
    } else {
        throw InputError("unknown tolerance '" + name + "'");
    }
}

class Session {
public:
    Session(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    std::string in_path = "-";
    std::string out_path = "-";
    Tolerances tol;

    ComplexMatrix input() const {
        if (in_path == "-") return read_matrix_document(in_);
        std::ifstream file(in_path);
        if (!file) throw InputError("cannot open '" + in_path + "'");
        return read_matrix_document(file);
    }

    void emit(const std::string& text) const {
        if (out_path == "-") {
            out_ << text;
            return;
        }
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw InputError("cannot write '" + out_path + "'");
        file << text;
    }

    void emit(const Json& value) const { emit(dump(value) + "\n"); }

private:
    std::istream& in_;
    std::ostream& out_;
};

Json optional_real(std::optional<double> x) { return x ? Json(*x) : Json(nullptr); }

Json report_to_json(const CertificationReport& r) {
    Json doc = Json::object();
    doc["verdict"] = to_string(r.verdict);
    doc["alpha"] = r.alpha.radians();
    doc["ratio"] = r.ratio;
    doc["tau"] = r.tau;
    if (r.attaining_vector) {
        Json v = Json::array();
        for (const auto& z : *r.attaining_vector) v.push_back(complex_to_json(z));
        doc["attaining_vector"] = std::move(v);
    } else {
        doc["attaining_vector"] = nullptr;
    }
    doc["compression"] = r.compression ? matrix_to_json(*r.compression) : Json(nullptr);
    doc["block_offdiag_norm"] = optional_real(r.block_offdiag_norm);
    doc["tail_radius"] = optional_real(r.tail_radius);
    doc["detail"] = r.detail;
    return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Session s(in, out);
    std::vector<std::string> overrides;
    std::optional<double> certify_tol;
    double alpha = 0.0, r = 1.0, theta = 0.0, d = 0.0, b1 = 0.0, b2 = 0.0;
    int m = 360, n = 4;
    std::optional<double> eps;
    std::uint64_t seed = 0;
    std::function<void()> action;

    CLI::App app{"Numerical ranges, sector containment and norm-to-radius extremal matrices"};
    app.require_subcommand(1);
    app.add_option("--tolerance", overrides, "Override a tolerance, name=value (repeatable)");

    auto matrix_command = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--in", s.in_path, "Matrix document, '-' for stdin")->capture_default_str();
        sub->add_option("--out", s.out_path, "Output file, '-' for stdout")->capture_default_str();
        return sub;
    };
    auto producer = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--out", s.out_path, "Output file, '-' for stdout")->capture_default_str();
        return sub;
    };

    matrix_command("radius", "Numerical radius w(T)")->callback([&] {
        action = [&] { s.emit(Json{{"w", numerical_radius(s.input(), s.tol)}}); };
    });
    matrix_command("norm", "Operator norm |T|")->callback([&] {
        action = [&] { s.emit(Json{{"norm", operator_norm(s.input(), s.tol)}}); };
    });
    matrix_command("ratio", "|T|/w(T) against the sharp bound for the smallest containing sector")->callback([&] {
        action = [&] {
            const auto rc = ratio_check(s.input(), s.tol);
            Json doc = Json::object();
            doc["ratio"] = rc.ratio;
            doc["bound"] = rc.bound;
            doc["alpha_min"] = rc.alpha_min ? Json(rc.alpha_min->radians()) : Json(nullptr);
            doc["ok"] = rc.ok;
            s.emit(doc);
        };
    });
    auto* sector = matrix_command("sector", "Is W(T) inside S(alpha)?");
    sector->add_option("--alpha", alpha, "Sector half-angle in radians")->required();
    sector->callback([&] {
        action = [&] {
            const SectorAngle a(alpha);
            Json doc = Json::object();
            doc["alpha"] = a.radians();
            doc["contained"] = sector_contains(s.input(), a, s.tol);
            s.emit(doc);
        };
    });
    matrix_command("sector-angle", "Smallest alpha with W(T) inside S(alpha)")->callback([&] {
        action = [&] {
            const auto a = min_sector_angle(s.input(), s.tol);
            s.emit(Json{{"alpha_min", a ? Json(a->radians()) : Json(nullptr)}});
        };
    });
    auto* boundary = matrix_command("boundary", "Support-function samples of the boundary of W(T), as CSV");
    boundary->add_option("--m", m, "Number of directions")->capture_default_str();
    boundary->callback([&] {
        action = [&] {
            std::string csv = "theta,re,im\n";
            for (const auto& p : boundary_points(s.input(), m, s.tol))
                csv += format_real(p.theta) + "," + format_real(p.boundary_point.real()) + "," +
                       format_real(p.boundary_point.imag()) + "\n";
            s.emit(csv);
        };
    });
    matrix_command("ellipse", "Foci and axes of W(A) for a 2x2 matrix")->callback([&] {
        action = [&] {
            const auto e = ellipse_2x2(s.input());
            Json doc = Json::object();
            doc["focus1"] = complex_to_json(e.focus1);
            doc["focus2"] = complex_to_json(e.focus2);
            doc["minor_axis_length"] = e.minor_axis_length;
            doc["major_axis_length"] = e.major_axis_length;
            s.emit(doc);
        };
    });

    auto* extremal = producer("extremal", "Unit-norm 2x2 matrix attaining tau(alpha)");
    extremal->add_option("--alpha", alpha, "Sector half-angle in (0, pi/2]")->required();
    extremal->callback([&] { action = [&] { s.emit(matrix_to_json(extremal_2x2(SectorAngle(alpha)))); }; });

    auto* canon = producer("canonical-b", "Real canonical form B with its norming vector");
    canon->add_option("--alpha", alpha, "Sector half-angle in (0, pi/2]")->required();
    canon->callback([&] {
        action = [&] {
            const auto cb = canonical_B(SectorAngle(alpha));
            Json doc = matrix_to_json(cb.matrix);
            doc["x"] = cb.x;
            doc["norm"] = cb.norm;
            s.emit(doc);
        };
    });

    auto* family = producer("r-family", "Member [[r e^{i theta}, 2c], [0, e^{-i theta}/r]] of the sector family");
    family->add_option("--r", r, "r >= 1")->required();
    family->add_option("--theta", theta, "0 <= theta <= alpha")->required();
    family->add_option("--alpha", alpha, "Sector half-angle")->required();
    family->callback([&] { action = [&] { s.emit(matrix_to_json(r_alpha_matrix(r, theta, SectorAngle(alpha)))); }; });

    auto* three = producer("three-by-three", "3x3 half-plane extremal matrix");
    three->add_option("--d", d)->required();
    three->add_option("--b1", b1)->required();
    three->add_option("--b2", b2)->required();
    three->callback([&] { action = [&] { s.emit(matrix_to_json(three_by_three({d, b1, b2}))); }; });

    auto* irreducible = producer("irreducible", "n x n irreducible half-plane extremal matrix");
    irreducible->add_option("--n", n, "Dimension, at least 4")->required();
    irreducible->add_option("--d", d, "Coupling in (0, 1/sqrt(45))")->required();
    irreducible->add_option("--eps", eps, "Chain parameter; searched when absent");
    irreducible->callback([&] {
        action = [&] {
            const auto fam = irreducible_family(n, d, eps, s.tol);
            Json doc = matrix_to_json(fam.matrix);
            doc["epsilon"] = fam.epsilon;
            s.emit(doc);
        };
    });

    auto* cert = matrix_command("certify", "Decide whether T attains tau(alpha) and report its block structure");
    cert->add_option("--alpha", alpha, "Sector half-angle in (0, pi/2]")->required();
    cert->add_option("--tol", certify_tol, "Certification tolerance (default 1e-7, or SECTOR_RADIUS_TOL)");
    cert->callback([&] {
        action = [&] { s.emit(report_to_json(certify_extremal(s.input(), SectorAngle(alpha), certify_tol, s.tol))); };
    });

    bool verify_ok = true;
    auto* verify = producer("verify", "Run the acceptance checks and print one line per check");
    verify->add_option("--seed", seed, "Random seed")->capture_default_str();
    verify->callback([&] {
        action = [&] {
            const auto results = acceptance::run_all(seed);
            s.emit(acceptance::render(results));
            verify_ok = acceptance::all_passed(results);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    }

    try {
        if (const char* env = std::getenv("SECTOR_RADIUS_TOL"); env && *env)
            s.tol.certify = parse_positive(env, "SECTOR_RADIUS_TOL");
        for (const auto& o : overrides) apply_override(s.tol, o);
        action();
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return usage_error;
    } catch (const ConstraintError& e) {
        err << "infeasible parameters: " << e.what() << "\n";
        return computation_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return computation_error;
    }
    return verify_ok ? ok : computation_error;
}

}  // namespace sector_radius::cli
