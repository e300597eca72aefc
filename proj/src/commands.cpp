#include "confcohom/commands.hpp"

#include "confcohom/charseries.hpp"
#include "confcohom/combinat.hpp"
#include "confcohom/errors.hpp"
#include "confcohom/limits.hpp"
#include "confcohom/repstab.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace confcohom {

namespace {

json check(const std::string& name, bool passed) { return json{{"name", name}, {"passed", passed}}; }

json document(const std::string& command, json inputs, json result, json checks) {
    return json{{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}, {"checks", std::move(checks)}};
}

json space_input(const SpaceSpec& x) { return space_to_json(x); }

}  // namespace

bool all_checks_passed(const json& doc) {
    if (!doc.contains("checks")) return true;
    return std::all_of(doc["checks"].begin(), doc["checks"].end(), [](const json& c) { return c["passed"].get<bool>(); });
}

// ------------------------------------------------------------------ poincare

json cmd_poincare(const SpaceSpec& x, const std::string& target, int m, std::optional<int> l) {
    json inputs{{"space", space_input(x)}, {"target", target}, {"m", m}};
    if (l) inputs["l"] = *l;
    if (m < 0) throw ParseError("--m must be nonnegative");
    json checks = json::array();
    LaurentPoly result;

    auto need_l = [&]() {
        if (!l) throw ParseError("target '" + target + "' requires --l");
        if (*l < 1 || *l > m) throw ParseError("--l must satisfy 1 <= l <= m");
        return *l;
    };
    auto need_positive_m = [&]() {
        if (m < 1) throw ParseError("target '" + target + "' requires m >= 1");
    };

    if (target == "Fm") {
        result = poincare_Fm(x, m);
        checks.push_back(check("euler_characteristic", result.eval(-1) == euler_char_Fm(x, m)));
        if (m >= 1)
            checks.push_back(check("recurrence", result == poincare_Fm(x, m - 1) * (x.pc + LaurentPoly::T() * Integer(m - 1))));
    } else if (target == "delta" || target == "delta_le") {
        need_positive_m();
        int ll = need_l();
        bool closed = target == "delta_le";
        result = poincare_Delta(x, ll, m, closed);
        checks.push_back(check("universal_polynomial", bp_eval_P(universal_poly(ll, m, closed), x.pc) == result));
        if (closed && ll == m) checks.push_back(check("equals_product_space", result == x.pc.pow(static_cast<unsigned>(m))));
    } else if (target == "ordinary") {
        need_positive_m();
        result = poincare_ordinary(x, m);
        checks.push_back(check("duality_round_trip", lp_dual(result, m * x.dim) == poincare_Fm(x, m)));
    } else if (target == "cf") {
        need_positive_m();
        result = poincare_CF(x, m);
        if (m <= limits().max_cycle_m) {
            Permutation sigma = Permutation::representative(CycleType::full_cycle(m));
            SubgroupClasses cm = subgroup_closure({sigma}, m);
            checks.push_back(check("cyclic_average", quotient_poincare(series_Fm(x, m), cm) == result));
        }
    } else if (target == "bf") {
        need_positive_m();
        result = poincare_BF(x, m);
        checks.push_back(check("symmetric_average", quotient_poincare(series_Fm(x, m), full_symmetric(m)) == result));
    } else if (target == "sym" || target == "cyc") {
        need_positive_m();
        bool cyclic = target == "cyc";
        result = poincare_sym_product(x, m, cyclic);
        if (!cyclic) checks.push_back(check("generating_function", symmetric_product_gf(x.pc, m) == result));
        else checks.push_back(check("cyclic_average", quotient_poincare(series_Xm(x, m), cyclic_subgroup(m)) == result));
    } else {
        throw ParseError("unknown poincare target '" + target + "' (Fm|delta|delta_le|ordinary|cf|bf|sym|cyc)");
    }
    checks.push_back(check("nonnegative_coefficients", result.nonnegative()));
    return document("poincare", inputs, poly_to_json(result), checks);
}

// ----------------------------------------------------------------- character

json cmd_character(const SpaceSpec& x, int m, const std::string& cycle_type) {
    json inputs{{"space", space_input(x)}, {"m", m}, {"cycle_type", cycle_type}};
    if (m < 1) throw ParseError("--m must be >= 1");
    require_i_acyclic(x, "character");
    json checks = json::array();
    if (cycle_type != "all") {
        CycleType t = CycleType::parse(cycle_type, m);
        LaurentPoly v = char_Fm(x, t);
        if (t.is_identity()) checks.push_back(check("identity_is_poincare", v == lp_negate_var(poincare_Fm(x, m))));
        return document("character", inputs, poly_to_json(v), checks);
    }
    ClassSeries s = series_Fm(x, m);
    json result = json::object();
    for (const auto& [t, v] : s.values()) result[t.to_string()] = poly_to_json(v);
    // both cross-checks enumerate set partitions; beyond m = 10 only the closed form is emitted
    const int check_cap = std::min(limits().max_oracle_m, 10);
    if (m <= check_cap)
        checks.push_back(check("reconstruction_from_products", reconstruct_char_Fm(x, m) == s));
    if (m <= check_cap) {
        bool ok = true;
        for (const auto& [t, v] : s.values())
            ok = ok && char_Delta_oracle(x, m, m, Permutation::representative(t)) == v;
        checks.push_back(check("open_decomposition_oracle", ok));
    }
    return document("character", inputs, result, checks);
}

// ----------------------------------------------------------------- universal

json cmd_universal(int l, int m, bool closed) {
    json inputs{{"l", l}, {"m", m}, {"closed", closed}};
    if (l < 1 || l > m) throw ParseError("universal: need 1 <= l <= m");
    BiPoly q = universal_poly(l, m, closed);
    json checks = json::array();
    checks.push_back(check("homogeneous_degree_l", q.is_homogeneous(l)));
    if (closed && l == m) checks.push_back(check("top_is_P_power", q == BiPoly::monomial(1, m, 0)));
    return document("universal", inputs, bipoly_to_json(q), checks);
}

// ------------------------------------------------------------------ quotient

json cmd_quotient(const SpaceSpec& x, int m, const std::vector<std::string>& generators) {
    json inputs{{"space", space_input(x)}, {"m", m}, {"generators", generators}};
    if (m < 1) throw ParseError("--m must be >= 1");
    require_i_acyclic(x, "quotient");
    std::vector<Permutation> gens;
    for (const auto& g : generators) gens.push_back(Permutation::parse(g, m));
    SubgroupClasses h = subgroup_closure(gens, m);
    LaurentPoly p = quotient_poincare(series_Fm(x, m), h);
    json classes = json::object();
    for (const auto& [t, c] : h.counts) classes[t.to_string()] = integer_to_json(c);
    json checks = json::array();
    checks.push_back(check("nonnegative_coefficients", p.nonnegative()));
    if (h.order == m && h.counts.count(CycleType::full_cycle(m)))
        checks.push_back(check("cyclic_closed_form", poincare_CF(x, m) == p));
    if (h.order == factorial(static_cast<unsigned>(m))) checks.push_back(check("unordered_closed_form", poincare_BF(x, m) == p));
    json result{{"poincare_c", poly_to_json(p)}, {"order", integer_to_json(h.order)}, {"classes", classes}};
    return document("quotient", inputs, result, checks);
}

// ----------------------------------------------------------------- stability

namespace {

json verdicts_to_json(const std::vector<Verdict>& verdicts) {
    json out = json::array();
    for (const auto& v : verdicts) {
        const char* status = v.status == VerdictStatus::pass ? "pass" : v.status == VerdictStatus::fail ? "fail" : "undetermined";
        out.push_back(json{{"name", v.name}, {"status", status}, {"detail", v.detail}});
    }
    return out;
}

json by_m(const std::map<int, Integer>& values, const std::string& key) {
    json out = json::array();
    for (const auto& [m, v] : values) out.push_back(json{{"m", m}, {key, integer_to_json(v)}});
    return out;
}

}  // namespace

json cmd_stability(const SpaceSpec& x, int degree, int a, int m_first, int m_last) {
    json inputs{{"space", space_input(x)}, {"i", degree}, {"a", a}, {"range", {m_first, m_last}}};
    StabilityReport r = stability_report(x, degree, a, m_first, m_last);
    json table = json::object();
    std::map<int, Integer> counted;
    for (const auto& [core, row] : r.table) {
        table[partition_to_string(core)] = by_m(row, "multiplicity");
        for (const auto& [m, c] : row) counted[m] += c * irrep_dimension(PaddedPartition{core, m}.padded());
    }
    bool dims_match = true;
    for (const auto& [m, b] : r.betti)
        if ((counted.count(m) ? counted[m] : Integer(0)) != b) dims_match = false;
    json result{{"multiplicities", table},
                {"betti_bm", by_m(r.betti, "betti")},
                {"monotone_bound", r.monotone_bound},
                {"stable_bound", r.stable_bound},
                {"verdicts", verdicts_to_json(r.verdicts)}};
    json checks = json::array({check("multiplicities_times_dimensions_equal_betti", dims_match)});
    return document("stability", inputs, result, checks);
}

json cmd_bf_constancy(const SpaceSpec& x, int degree, int m_first, int m_last) {
    json inputs{{"space", space_input(x)}, {"i", degree}, {"range", {m_first, m_last}}};
    BfReport r = bf_constancy(x, degree, m_first, m_last);
    bool averaging = true;
    for (const auto& [m, b] : r.betti) {
        if (m > limits().max_cycle_m || m > 8) break;
        if (!(quotient_poincare(series_Fm(x, m), full_symmetric(m)) == poincare_BF(x, m))) averaging = false;
    }
    json result{{"betti_bm", by_m(r.betti, "betti")}, {"constant_from", r.constant_from}, {"verdicts", verdicts_to_json(r.verdicts)}};
    json checks = json::array({check("closed_form_equals_symmetric_average", averaging)});
    return document("bf_constancy", inputs, result, checks);
}

json cmd_fixtures() {
    json list = json::array();
    for (const auto& x : builtin_fixtures()) list.push_back(space_to_json(x));
    return document("fixtures", json::object(), list, json::array());
}

// ------------------------------------------------------------------ selftest

json cmd_selftest() {
    json checks = json::array();
    auto run = [&](const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        try {
            ok = body();
        } catch (const std::exception&) {
            ok = false;
        }
        checks.push_back(check(name, ok));
    };
    const auto fixtures = i_acyclic_fixtures();

    run("universal_polynomials_m6", [] {
        BiPoly q = universal_poly(3, 6, true);
        return q == BiPoly::monomial(90, 3, 0) + BiPoly::monomial(239, 2, 1) + BiPoly::monomial(150, 1, 2) &&
               universal_poly(6, 6, true) == BiPoly::monomial(1, 6, 0);
    });
    run("stirling_recurrence_vs_explicit", [] {
        for (int i = 0; i <= 12; ++i)
            for (int j = 0; j <= i; ++j)
                if (stirling(StirlingKind::second, i, j) != stirling2_explicit(i, j)) return false;
        return true;
    });
    run("stirling_matrices_inverse", [] {
        for (int i = 0; i <= 12; ++i)
            for (int j = 0; j <= 12; ++j) {
                Integer s = 0;
                for (int k = 0; k <= 12; ++k)
                    s += stirling(StirlingKind::first_signed, i, k) * stirling(StirlingKind::second, k, j);
                if (s != (i == j ? 1 : 0)) return false;
            }
        return true;
    });
    run("class_sizes_sum_to_factorial", [] {
        for (int m = 0; m <= 10; ++m) {
            Integer s = 0;
            for (const auto& t : partitions(m)) s += class_size(t);
            if (s != factorial(static_cast<unsigned>(m))) return false;
        }
        return true;
    });
    run("fundamental_complex_assembly", [&] {
        for (const auto& x : fixtures)
            for (int m = 1; m <= 4; ++m)
                for (const auto& t : partitions(m))
                    if (!(char_Delta_le(x, m, m, Permutation::representative(t)) == char_Xm(x, t))) return false;
        return true;
    });
    run("oracle_triangle", [&] {
        for (const auto& x : fixtures)
            for (int m = 1; m <= 4; ++m) {
                ClassSeries direct = series_Fm(x, m);
                if (!(reconstruct_char_Fm(x, m) == direct)) return false;
                for (const auto& [t, v] : direct.values())
                    if (!(char_Delta_oracle(x, m, m, Permutation::representative(t)) == v)) return false;
            }
        return true;
    });
    run("product_character_vs_tensor_oracle", [] {
        for (GradedDims dims : {GradedDims{0, 1}, GradedDims{0, 0, 1}, GradedDims{1, 1}, GradedDims{0, 2, 1}}) {
            SpaceSpec x{"tensor", LaurentPoly(), 3, false, true, true};
            for (size_t k = 0; k < dims.size(); ++k) x.pc += LaurentPoly::monomial(dims[k], static_cast<int>(k));
            for (int m = 1; m <= 4; ++m)
                for (const auto& t : partitions(m))
                    if (!(char_Xm(x, t) == tensor_trace_oracle(dims, t))) return false;
        }
        return true;
    });
    run("quotients_match_averaging", [&] {
        for (const auto& x : fixtures)
            for (int m = 1; m <= 6; ++m) {
                ClassSeries s = series_Fm(x, m);
                Permutation sigma = Permutation::representative(CycleType::full_cycle(m));
                if (!(quotient_poincare(s, subgroup_closure({sigma}, m)) == poincare_CF(x, m))) return false;
                if (!(quotient_poincare(s, full_symmetric(m)) == poincare_BF(x, m))) return false;
            }
        return true;
    });
    run("symmetric_product_generating_function", [&] {
        for (const auto& x : builtin_fixtures())
            for (int m = 1; m <= 6; ++m)
                if (!(poincare_sym_product(x, m, false) == symmetric_product_gf(x.pc, m))) return false;
        return true;
    });
    run("unordered_configurations_of_plane", [] {
        const SpaceSpec& c = builtin_fixture("c");
        for (int m = 2; m <= 8; ++m) {
            LaurentPoly dual = lp_dual(poincare_BF(c, m), 2 * m);
            if (!(dual == LaurentPoly{{0, 1}, {1, 1}})) return false;
        }
        return true;
    });
    run("representation_stability_plane_degree1", [] {
        StabilityReport r = stability_report(builtin_fixture("c"), 1, 0, 1, 8);
        return r.all_passed();
    });
    return document("selftest", json::object(), json::object(), checks);
}

// ----------------------------------------------------------------- renderers

namespace {

bool all_keys(const json& j, const std::function<bool(const std::string&)>& pred) {
    if (!j.is_object() || j.empty()) return false;
    for (const auto& [k, v] : j.items())
        if (!pred(k) || !(v.is_number_integer() || v.is_string())) return false;
    return true;
}

bool is_int(const std::string& s) {
    if (s.empty()) return false;
    size_t start = s[0] == '-' ? 1 : 0;
    return start < s.size() && std::all_of(s.begin() + static_cast<long>(start), s.end(), ::isdigit);
}

bool is_pair(const std::string& s) {
    auto comma = s.find(',');
    return comma != std::string::npos && is_int(s.substr(0, comma)) && is_int(s.substr(comma + 1));
}

BiPoly bipoly_from_json(const json& j) {
    BiPoly q;
    for (const auto& [k, v] : j.items()) {
        auto comma = k.find(',');
        Integer c = v.is_string() ? Integer(v.get<std::string>()) : Integer(v.get<long>());
        q += BiPoly::monomial(c, std::stoi(k.substr(0, comma)), std::stoi(k.substr(comma + 1)));
    }
    return q;
}

bool is_flat(const json& j) {
    return j.is_object() && std::none_of(j.begin(), j.end(), [](const json& c) { return c.is_structured(); });
}

void render_value(std::ostringstream& os, const json& v, int indent, bool latex) {
    std::string pad(static_cast<size_t>(indent), ' ');
    if (all_keys(v, is_int)) {
        LaurentPoly p = poly_from_json(v);
        os << (latex ? "$" + poly_to_latex(p) + "$" : p.to_string());
        return;
    }
    if (all_keys(v, is_pair)) {
        BiPoly q = bipoly_from_json(v);
        os << (latex ? "$" + bipoly_to_latex(q) + "$" : q.to_string());
        return;
    }
    if (v.is_object()) {
        for (const auto& [k, child] : v.items()) {
            os << "\n" << pad << k << ":" << (child.is_structured() && !all_keys(child, is_int) && !all_keys(child, is_pair) ? "" : " ");
            render_value(os, child, indent + 2, latex);
        }
        return;
    }
    if (v.is_array() && !v.empty() && v.front().is_object()) {
        for (const auto& child : v) {
            os << "\n" << pad << "-";
            if (is_flat(child)) {
                const char* sep = " ";
                for (const auto& [k, c] : child.items()) {
                    os << sep << k << ": " << (c.is_string() ? c.get<std::string>() : c.dump());
                    sep = ", ";
                }
            } else {
                render_value(os, child, indent + 2, latex);
            }
        }
        return;
    }
    os << (v.is_string() ? v.get<std::string>() : v.dump());
}

std::string render(const json& doc, bool latex) {
    std::ostringstream os;
    os << "command: " << doc.value("command", "");
    const json& result = doc["result"];
    os << "\nresult:" << (result.is_structured() && !all_keys(result, is_int) && !all_keys(result, is_pair) ? "" : " ");
    render_value(os, doc["result"], 2, latex);
    if (doc.contains("checks") && !doc["checks"].empty()) {
        os << "\nchecks:";
        for (const auto& c : doc["checks"])
            os << "\n  " << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
    }
    os << "\n";
    return os.str();
}

}  // namespace

std::string render_plain(const json& doc) { return render(doc, false); }

std::string render_latex(const json& doc) { return render(doc, true); }

}  // namespace confcohom
