#include "confcohom/commands.hpp"
#include "confcohom/errors.hpp"
#include "confcohom/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

using namespace confcohom;

namespace {

constexpr int kExitParse = 3;

SpaceSpec resolve_space(const std::string& arg) {
    if (arg.empty()) throw ParseError("--space is required");
    const std::string prefix = "builtin:";
    if (arg.rfind(prefix, 0) == 0) return builtin_fixture(arg.substr(prefix.size()));
    return load_space_file(arg);
}

// "m0..m1"
std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw ParseError("--range must look like m0..m1");
    try {
        size_t used0 = 0, used1 = 0;
        std::string a = text.substr(0, dots), b = text.substr(dots + 2);
        int m0 = std::stoi(a, &used0), m1 = std::stoi(b, &used1);
        if (used0 != a.size() || used1 != b.size() || m0 < 0 || m1 < m0) throw ParseError("");
        return {m0, m1};
    } catch (const std::exception&) {
        throw ParseError("--range must look like m0..m1 with 0 <= m0 <= m1");
    }
}

void emit(const json& doc, const std::string& format) {
    if (format == "plain") std::cout << render_plain(doc);
    else if (format == "latex") std::cout << render_latex(doc);
    else std::cout << doc.dump(2) << "\n";
}

int fail(ErrorKind kind, const std::string& message, const std::string& flag = "") {
    json err{{"error", message}, {"exit_code", static_cast<int>(kind)}};
    if (!flag.empty()) err["flag"] = flag;
    std::cerr << err.dump() << "\n";
    return static_cast<int>(kind);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology of configuration spaces from compactly supported Poincare polynomials"};
    app.require_subcommand(1);

    std::string space_arg, format = "json", cycle_type = "all", target = "Fm", range;
    int m = -1, degree = 0, a = 0;
    std::optional<int> l;
    bool closed = false;
    std::vector<std::string> generators;

    auto add_space = [&](CLI::App* sub) { sub->add_option("--space", space_arg, "space file, or builtin:NAME")->required(); };
    auto add_m = [&](CLI::App* sub) { sub->add_option("--m", m, "number of points")->required(); };
    auto add_range = [&](CLI::App* sub) { sub->add_option("--range", range, "m0..m1")->required(); };

    auto* poincare = app.add_subcommand("poincare", "compactly supported Poincare polynomial");
    add_space(poincare);
    add_m(poincare);
    poincare->add_option("--target", target, "Fm|delta|delta_le|ordinary|cf|bf|sym|cyc");
    poincare->add_option("--l", l, "number of distinct coordinates");

    auto* character = app.add_subcommand("character", "S_m character series of F_m(X)");
    add_space(character);
    add_m(character);
    character->add_option("--cycle-type", cycle_type, "1^a,2^b,... or all");

    auto* universal = app.add_subcommand("universal", "universal polynomial in Z[P,T]");
    universal->add_option("--l", l)->required();
    add_m(universal);
    universal->add_flag("--closed", closed, "Delta_{<=l} instead of Delta_l");

    auto* quotient = app.add_subcommand("quotient", "P_c(F_m(X)/H) for H generated by permutations");
    add_space(quotient);
    add_m(quotient);
    quotient->add_option("--generators", generators, "cycle notation, e.g. \"(1 2 3)\"")->required();

    auto* stability = app.add_subcommand("stability", "multiplicity tables of H_BM^i(Delta_{m-a} X^m)");
    add_space(stability);
    add_range(stability);
    stability->add_option("--i", degree, "cohomological degree")->required();
    stability->add_option("--a", a, "codimension index a");

    auto* bf = app.add_subcommand("bf", "Betti_BM^i(F_m(X)/S_m) over a range of m");
    add_space(bf);
    add_range(bf);
    bf->add_option("--i", degree, "cohomological degree")->required();

    auto* selftest = app.add_subcommand("selftest", "invariant suite on the built-in fixtures");
    auto* fixtures = app.add_subcommand("fixtures", "list the built-in fixtures");

    for (auto* sub : app.get_subcommands({}))
        sub->add_option("--format", format, "json|plain|latex")->check(CLI::IsMember({"json", "plain", "latex"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        json doc;
        if (poincare->parsed()) doc = cmd_poincare(resolve_space(space_arg), target, m, l);
        else if (character->parsed()) doc = cmd_character(resolve_space(space_arg), m, cycle_type);
        else if (universal->parsed()) doc = cmd_universal(*l, m, closed);
        else if (quotient->parsed()) doc = cmd_quotient(resolve_space(space_arg), m, generators);
        else if (stability->parsed()) {
            SpaceSpec x = resolve_space(space_arg);
            auto [m0, m1] = parse_range(range);
            doc = cmd_stability(x, degree, a, m0, m1);
        } else if (bf->parsed()) {
            SpaceSpec x = resolve_space(space_arg);
            auto [m0, m1] = parse_range(range);
            doc = cmd_bf_constancy(x, degree, m0, m1);
        } else if (selftest->parsed()) doc = cmd_selftest();
        else if (fixtures->parsed()) doc = cmd_fixtures();
        emit(doc, format);
        return all_checks_passed(doc) ? 0 : static_cast<int>(ErrorKind::consistency);
    } catch (const HypothesisViolation& e) {
        return fail(e.kind(), e.what(), e.flag());
    } catch (const Error& e) {
        return fail(e.kind(), e.what());
    } catch (const std::invalid_argument& e) {
        return fail(ErrorKind::parse_error, e.what());
    } catch (const std::out_of_range& e) {
        return fail(ErrorKind::parse_error, e.what());
    }
}
