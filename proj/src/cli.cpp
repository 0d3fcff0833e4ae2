#include "hopfact/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <random>

#include "CLI11.hpp"

#include "hopfact/errors.hpp"
#include "hopfact/problem_io.hpp"

namespace hopfact {

namespace {

constexpr std::uint64_t default_seed = 0x40F;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ProblemFile load(const std::string& path) {
    auto p = load_problem(path);
    if (const char* env = std::getenv("HOPFACT_MAX_XPOW")) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(env, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || env[used] != '\0' || v == 0) throw Usage("HOPFACT_MAX_XPOW must be a positive integer");
        p.descriptor.max_x_power = v;
    }
    return p;
}

void print_report(const Report& r, const std::string& what, std::ostream& err) {
    if (r.ok()) {
        err << what << ": ok\n";
        return;
    }
    err << what << ": " << r.violations.size() << " violation(s)\n";
    for (const auto& v : r.violations) {
        err << "  " << v.axiom;
        for (const auto& w : v.witnesses) err << " " << w;
        err << ": " << v.lhs << " != " << v.rhs << "\n";
    }
    for (const auto& w : r.warnings) err << "  warning: " << w << "\n";
}

std::vector<FieldElement> random_point(const Field& f, std::size_t dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-2, 2);
    std::vector<FieldElement> v;
    for (std::size_t k = 0; k < dim; ++k) v.push_back(f.from_int(dist(rng)));
    return v;
}

std::vector<Matrix> arrow_mats(const ProblemFile& p) {
    const auto& a = *p.action;
    if (a.mats) return *a.mats;
    if (p.quiver->arrow_count() == 0)
        return std::vector<Matrix>(p.descriptor.group.size(), Matrix(p.descriptor.field, 0, 0));
    throw SchemaError("/action", "missing key 'arrow_mats'");
}

int cmd_verify(const std::string& file, std::ostream& out, std::ostream& err) {
    auto p = load(file);
    auto ad = to_action_data(p);
    auto r = verify(ad);
    out << canonical_dump(report_to_json(r));
    print_report(r, "verify", err);
    return r.ok() ? 0 : 1;
}

int cmd_oracle(const std::string& file, std::size_t max_len, std::ostream& out, std::ostream& err) {
    auto p = load(file);
    auto ad = to_action_data(p);
    auto r = oracle_hopf_check(ad, {max_len, false});
    out << canonical_dump(report_to_json(r));
    print_report(r, "oracle", err);
    return r.ok() ? 0 : 1;
}

int cmd_act(const std::string& file, const std::string& element, const std::string& target, std::ostream& out,
            std::ostream& err) {
    auto p = load(file);
    auto ad = to_action_data(p);
    auto r = parse_r_element(p.descriptor, element);
    auto u = parse_path_element(p.quiver, p.descriptor.field, target);
    auto v = act(ad, r, u);
    out << canonical_dump({{"element", r.to_string(p.descriptor.group)},
                           {"target", u.to_string()},
                           {"result", path_element_to_json(v)},
                           {"text", v.to_string()}});
    err << v.to_string() << "\n";
    return 0;
}

int cmd_factor(const std::string& file, const std::string& quotient, long n, long w, std::ostream& out,
               std::ostream& err) {
    if (quotient != "B") throw Usage("unknown quotient '" + quotient + "' (only B is supported)");
    auto p = load(file);
    auto ad = to_action_data(p);
    auto c = factor_check_B(ad, n, w);
    out << canonical_dump(certificate_to_json(c, *p.quiver));
    err << "factor-check: " << (c.pass() ? "pass" : "fail") << "\n";
    return c.pass() ? 0 : 1;
}

int cmd_enumerate(const std::string& file, std::size_t samples, std::uint64_t seed, std::ostream& out,
                  std::ostream& err) {
    auto p = load(file);
    if (!p.action) throw SchemaError("/action", "enumerate needs the vertex permutations");
    const auto& d = p.descriptor;
    const auto& F = d.field;
    auto perms = p.action->perms;
    auto mats = arrow_mats(p);

    auto fam = enumerate_vertex_actions(d, *p.quiver, perms);
    Json j;
    j["gamma"] = family_to_json(fam);

    std::optional<std::vector<FieldElement>> gamma = p.action->gamma;
    if (!gamma && !fam.empty) gamma = fam.base;
    if (gamma) j["sigma"] = sigma_space_to_json(solve_sigma_space(d, p.quiver, {perms, *gamma}, mats), *p.quiver);
    else j["sigma"] = nullptr;

    int code = 0;
    if (samples > 0) {
        std::mt19937_64 rng(seed);
        Json list = Json::array();
        for (std::size_t k = 0; k < samples; ++k) {
            if (fam.empty) break;
            auto g = fam.point(random_point(F, fam.dimension(), rng));
            auto space = solve_sigma_space(d, p.quiver, {perms, g}, mats);
            if (space.family.empty) {
                err << "sample " << k << ": no sigma for this gamma\n";
                code = 1;
                continue;
            }
            auto sigma = sigma_from_coordinates(p.quiver, F, space.slots,
                                                space.family.point(random_point(F, space.family.dimension(), rng)));
            ProblemFile s = p;
            s.action = ActionBlock{perms, g, mats, sigma};
            auto r = oracle_hopf_check(to_action_data(s), {3, false});
            if (!r.ok()) code = 1;
            print_report(r, "sample " + std::to_string(k), err);
            list.push_back({{"problem", problem_to_json(s)}, {"oracle", report_to_json(r)}});
        }
        j["samples"] = list;
        j["seed"] = seed;
    }
    if (fam.empty) {
        err << "enumerate: no gamma is compatible with the permutations\n";
        code = 1;
    }
    out << canonical_dump(j);
    return code;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Filtered actions of Hopf-Ore extensions on path algebras", "hopfact"};
    app.require_subcommand(1);
    std::string file, element, target, quotient;
    std::size_t max_len = 3, samples = 0;
    std::uint64_t seed = default_seed;
    long n = 0, w = 0;

    auto* verify_cmd = app.add_subcommand("verify", "Check the vertex and arrow conditions of the action");
    verify_cmd->add_option("file", file, "Problem file")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "Solve for all gamma and sigma compatible with the group action");
    enum_cmd->add_option("file", file, "Problem file")->required();
    enum_cmd->add_option("--sample", samples, "Number of random members to print");
    enum_cmd->add_option("--seed", seed, "Seed for --sample")->capture_default_str();

    auto* act_cmd = app.add_subcommand("act", "Apply an element of R to an element of kQ");
    act_cmd->add_option("file", file, "Problem file")->required();
    act_cmd->add_option("--element", element, "Element of R, e.g. \"x*g - 2*g\"")->required();
    act_cmd->add_option("--target", target, "Element of kQ, e.g. \"e_1 + a*b\"")->required();

    auto* factor_cmd = app.add_subcommand("factor-check", "Check whether the action factors through B(n, w, q)");
    factor_cmd->add_option("file", file, "Problem file")->required();
    factor_cmd->add_option("--quotient", quotient, "Quotient family")->required();
    factor_cmd->add_option("--n", n, "n")->required()->check(CLI::PositiveNumber);
    factor_cmd->add_option("--w", w, "w")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force module-algebra check on short paths");
    oracle_cmd->add_option("file", file, "Problem file")->required();
    oracle_cmd->add_option("--max-len", max_len, "Longest path checked")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify_cmd->parsed()) return cmd_verify(file, out, err);
        if (enum_cmd->parsed()) return cmd_enumerate(file, samples, seed, out, err);
        if (act_cmd->parsed()) return cmd_act(file, element, target, out, err);
        if (factor_cmd->parsed()) return cmd_factor(file, quotient, n, w, out, err);
        if (oracle_cmd->parsed()) return cmd_oracle(file, max_len, out, err);
    } catch (const Usage& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace hopfact
