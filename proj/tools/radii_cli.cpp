// Command-line front end: JSON in, JSON (or aligned table) out, exact
// rationals everywhere. Exit codes: 0 ok, 1 validation error, 2 a check or
// oracle comparison failed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radii/radii.hpp"

namespace {

using nlohmann::json;
using namespace radii;

json read_json(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw ValidationError("cannot open " + path);
        in = &file;
    }
    json j;
    try {
        *in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    return j;
}

void print_table(const json& j, std::ostream& out, const std::string& prefix = "") {
    std::size_t width = 0;
    for (const auto& [key, value] : j.items()) width = std::max(width, key.size());
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            print_table(value, out, prefix + key + ".");
            continue;
        }
        std::string text = value.is_string() ? value.get<std::string>() : value.dump();
        out << prefix << key << std::string(width - key.size() + 2, ' ') << text << "\n";
    }
}

struct Output {
    std::string format = "json";

    void emit(const json& j) const {
        if (format == "table")
            print_table(j, std::cout);
        else
            std::cout << j.dump(2) << "\n";
    }
};

// With --base p, radius literals like "1/4" (exact powers of p) are turned
// into log-values at parse time; without it, entries are log-values already.
Rat parse_logvalue(const json& entry, const Int& base, const std::string& where) {
    Rat r = rat_from_json(entry, where);
    if (base == 0) return r;
    if (r <= 0 || r > 1) throw ValidationError(where + ": radius literal must be in (0,1]");
    Int v = valuation(r, base);
    Rat power(1);
    for (Int i = 0; i < -v; ++i) power *= base;
    if (r * power != 1)
        throw ValidationError(where + ": radius literal must be an exact power of the base");
    return Rat(-v);
}

json convert_radius_entries(json j, const Int& base) {
    if (base == 0) return j;
    if (j.contains("logvalues"))
        for (auto& e : j.at("logvalues")) e = to_string(parse_logvalue(e, base, "/logvalues"));
    if (j.contains("points"))
        for (auto& p : j.at("points"))
            if (p.contains("radii"))
                for (auto& e : p.at("radii")) e = to_string(parse_logvalue(e, base, "/radii"));
    return j;
}

MorphismProfile profile_from_file(const std::string& path) {
    Pwm pwm = pwm_from_json(read_json(path));
    return MorphismProfile::make(pwm, pwm.slopes().back() == 1);
}

json ndata_to_json(const NData& nd) {
    json steps = json::array();
    for (const auto& [w, n] : nd.steps())
        steps.push_back(json::array({rat_to_json(w), int_to_json(n)}));
    return json{{"steps", std::move(steps)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus of profile functions and pushforward radii"};
    app.require_subcommand(1);

    Output out;
    std::string base_str;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--base", base_str, "prime base: inputs give radii as powers of p");

    std::string path, path2;
    long long n_arg = 0, p_arg = 0, sep_arg = 1;
    std::string delta_str, val_a_str, u_str;

    auto* profile = app.add_subcommand("profile", "profile function calculus");
    auto* p_series = profile->add_subcommand("from-series", "profile of a series");
    p_series->add_option("input", path)->required();
    auto* p_compose = profile->add_subcommand("compose", "outer after inner");
    p_compose->add_option("outer", path)->required();
    p_compose->add_option("inner", path2)->required();
    auto* p_invert = profile->add_subcommand("invert", "inverse profile");
    p_invert->add_option("input", path)->required();
    auto* p_pow = profile->add_subcommand("pow", "pointwise power");
    p_pow->add_option("input", path)->required();
    p_pow->add_option("-n", n_arg, "exponent")->required();
    auto* p_mul = profile->add_subcommand("mul", "pointwise product");
    p_mul->add_option("left", path)->required();
    p_mul->add_option("right", path2)->required();
    auto* p_nfun = profile->add_subcommand("n-function", "component counts");
    p_nfun->add_option("input", path)->required();

    auto* push = app.add_subcommand("pushforward", "pushforward engines");
    auto* pf_radii = push->add_subcommand("radii", "multiradius of the pushforward");
    pf_radii->add_option("input", path)->required();
    bool oracle = false;
    pf_radii->add_flag("--oracle", oracle, "also run the brute-force and profile routes");
    auto* pf_profile = push->add_subcommand("profile", "equation profile of the pushforward");
    pf_profile->add_option("input", path)->required();
    auto* pf_const = push->add_subcommand("constant", "pushforward of the constant connection");
    pf_const->add_option("input", path)->required();
    pf_const->add_option("--sep", sep_arg, "separable degree");

    auto* herb = app.add_subcommand("herbrand", "ramification filtration");
    auto* h_jumps = herb->add_subcommand("jumps", "jumps of a profile");
    h_jumps->add_option("input", path)->required();
    auto* h_radii = herb->add_subcommand("radii", "multiradius from ramification data");
    h_radii->add_option("input", path)->required();

    auto* poly = app.add_subcommand("polygon", "convergence polygon of a multiradius");
    poly->add_option("input", path)->required();

    auto* irr = app.add_subcommand("irregularity", "irregularity of a direction model");
    irr->add_option("input", path)->required();

    auto* check = app.add_subcommand("check", "identity validators");
    auto* c_rh = check->add_subcommand("rh", "local Riemann-Hurwitz");
    c_rh->add_option("input", path)->required();
    auto* c_lap = check->add_subcommand("laplacian", "Laplacian transfer");
    c_lap->add_option("input", path)->required();
    auto* c_height = check->add_subcommand("height", "height formula");
    c_height->add_option("input", path)->required();
    auto* c_bound = check->add_subcommand("bound", "partial-height Laplacian bound");
    c_bound->add_option("input", path)->required();

    auto* gen = app.add_subcommand("gen", "named profile generators");
    auto* g_frob = gen->add_subcommand("frobenius", "Frobenius profile");
    g_frob->add_option("-p", p_arg, "prime")->required();
    auto* g_tame = gen->add_subcommand("tame", "identity profile");
    auto* g_insep = gen->add_subcommand("inseparable", "degree-p inseparable profile");
    g_insep->add_option("-p", p_arg, "prime")->required();
    g_insep->add_option("--delta", delta_str, "log-value of the different")->required();
    auto* g_off = gen->add_subcommand("off-frobenius", "off-centered Frobenius profile");
    g_off->add_option("-p", p_arg, "prime")->required();
    g_off->add_option("--val-a", val_a_str, "log-value of the center")->required();
    g_off->add_option("--u", u_str, "log-value of the point radius")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        Int base = base_str.empty() ? Int(0) : Int(base_str);
        if (!base_str.empty() && base < 2) throw ValidationError("--base must be at least 2");

        if (p_series->parsed()) {
            out.emit(pwm_to_json(profile_from_series(series_from_json(read_json(path)))));
        } else if (p_compose->parsed()) {
            out.emit(pwm_to_json(
                pwm_compose(pwm_from_json(read_json(path)), pwm_from_json(read_json(path2)))));
        } else if (p_invert->parsed()) {
            out.emit(pwm_to_json(pwm_inverse(pwm_from_json(read_json(path)))));
        } else if (p_pow->parsed()) {
            out.emit(pwm_to_json(pwm_pow(pwm_from_json(read_json(path)), Int(n_arg))));
        } else if (p_mul->parsed()) {
            out.emit(pwm_to_json(
                pwm_mul(pwm_from_json(read_json(path)), pwm_from_json(read_json(path2)))));
        } else if (p_nfun->parsed()) {
            out.emit(ndata_to_json(n_function(profile_from_file(path))));
        } else if (pf_radii->parsed()) {
            FiberConfiguration fc =
                fiber_configuration_from_json(convert_radius_entries(read_json(path), base));
            MultiRadius direct = pushforward_radii(fc);
            json result = multiradius_to_json(direct);
            if (oracle) {
                MultiRadius brute = pushforward_radii_bruteforce(fc);
                EquationProfile prof = pushforward_profile(fc);
                bool agree = direct == brute && equation_profile(direct) == prof;
                result["agreement"] = agree;
                result["phi"] = phi_table_to_json(phi_table(fc));
                out.emit(result);
                return agree ? 0 : 2;
            }
            out.emit(result);
        } else if (pf_profile->parsed()) {
            FiberConfiguration fc =
                fiber_configuration_from_json(convert_radius_entries(read_json(path), base));
            out.emit(pwm_to_json(pushforward_profile(fc).pwm()));
        } else if (pf_const->parsed()) {
            out.emit(multiradius_to_json(
                constant_pushforward(profile_from_file(path), Int(sep_arg))));
        } else if (h_jumps->parsed()) {
            out.emit(ramification_to_json(herbrand_jumps(profile_from_file(path))));
        } else if (h_radii->parsed()) {
            out.emit(multiradius_to_json(
                herbrand_multiradius(ramification_from_json(read_json(path)))));
        } else if (poly->parsed()) {
            MultiRadius mr =
                multiradius_from_json(convert_radius_entries(read_json(path), base));
            out.emit(polygon_to_json(polygon(mr)));
        } else if (irr->parsed()) {
            out.emit(json{
                {"irregularity",
                 int_to_json(irregularity(direction_model_from_json(read_json(path))))}});
        } else if (c_rh->parsed()) {
            json j = read_json(path);
            std::vector<std::pair<Int, Int>> branches;
            for (const auto& b : j.at("branches"))
                branches.emplace_back(int_from_json(b[0], "/branches"),
                                      int_from_json(b[1], "/branches"));
            bool ok = riemann_hurwitz_check(int_from_json(j.at("g_y"), "/g_y"),
                                            int_from_json(j.at("g_x"), "/g_x"),
                                            int_from_json(j.at("d"), "/d"), branches);
            out.emit(json{{"holds", ok}});
            return ok ? 0 : 2;
        } else if (c_lap->parsed()) {
            json j = read_json(path);
            std::vector<Int> nus;
            for (const auto& nu : j.at("nus")) nus.push_back(int_from_json(nu, "/nus"));
            bool ok = laplacian_pushforward_check(int_from_json(j.at("delta_y"), "/delta_y"),
                                                  int_from_json(j.at("delta_x"), "/delta_x"),
                                                  int_from_json(j.at("r"), "/r"), nus);
            out.emit(json{{"holds", ok}});
            return ok ? 0 : 2;
        } else if (c_height->parsed()) {
            json j = read_json(path);
            AnnulusDirection dir = annulus_direction_from_json(j.at("dir"));
            Rat h = pushforward_height(dir, int_from_json(j.at("r"), "/r"),
                                       rat_from_json(j.at("h_e"), "/h_e"),
                                       rat_from_json(j.at("u"), "/u"));
            json result{{"height", rat_to_json(h)}};
            if (j.contains("expected")) {
                bool ok = h == rat_from_json(j.at("expected"), "/expected");
                result["holds"] = ok;
                out.emit(result);
                return ok ? 0 : 2;
            }
            out.emit(result);
        } else if (c_bound->parsed()) {
            json j = read_json(path);
            BoundReport report = laplacian_bound_check(
                int_from_json(j.at("g"), "/g"), int_from_json(j.at("gamma_size"), "/gamma_size"),
                int_from_json(j.at("i"), "/i"), int_from_json(j.at("delta_i"), "/delta_i"),
                j.value("equality_expected", false));
            out.emit(json{{"bound", int_to_json(report.bound)},
                          {"satisfied", report.satisfied},
                          {"equality", report.equality},
                          {"holds", report.ok()}});
            return report.ok() ? 0 : 2;
        } else if (g_frob->parsed()) {
            out.emit(pwm_to_json(frobenius_profile(Int(p_arg)).pwm()));
        } else if (g_tame->parsed()) {
            out.emit(pwm_to_json(tame_profile().pwm()));
        } else if (g_insep->parsed()) {
            out.emit(pwm_to_json(
                inseparable_p_profile(Int(p_arg), rat_from_string(delta_str)).pwm()));
        } else if (g_off->parsed()) {
            out.emit(pwm_to_json(off_centered_frobenius_profile(Int(p_arg),
                                                                rat_from_string(val_a_str),
                                                                rat_from_string(u_str))
                                     .pwm()));
        } else {
            std::cerr << app.help() << "\n";
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
