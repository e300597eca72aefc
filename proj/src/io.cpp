#include "confcohom/io.hpp"

#include "confcohom/errors.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace confcohom {

SpaceSpec space_from_json(const json& doc) {
    static const std::set<std::string> known{"name", "poincare_c", "dim", "i_acyclic", "orientable", "connected"};
    if (!doc.is_object()) throw ParseError("space file: top level must be an object");
    for (const auto& [key, value] : doc.items())
        if (!known.count(key)) throw ParseError("space file: unknown key '" + key + "'");
    for (const char* key : {"name", "poincare_c", "dim"})
        if (!doc.contains(key)) throw ParseError(std::string("space file: missing key '") + key + "'");

    SpaceSpec x;
    try {
        x.name = doc.at("name").get<std::string>();
        x.dim = doc.at("dim").get<int>();
        const auto& coeffs = doc.at("poincare_c");
        if (!coeffs.is_array()) throw ParseError("space file: poincare_c must be an array");
        for (size_t k = 0; k < coeffs.size(); ++k) {
            if (!coeffs[k].is_number_integer()) throw ParseError("space file: poincare_c entries must be integers");
            x.pc += LaurentPoly::monomial(Integer(coeffs[k].get<long>()), static_cast<int>(k));
        }
        auto flag = [&](const char* key) {
            if (!doc.contains(key)) return false;
            if (!doc.at(key).is_boolean()) throw ParseError(std::string("space file: '") + key + "' must be a boolean");
            return doc.at(key).get<bool>();
        };
        x.i_acyclic = flag("i_acyclic");
        x.orientable = flag("orientable");
        x.connected = flag("connected");
    } catch (const json::exception& e) {
        throw ParseError(std::string("space file: ") + e.what());
    }
    x.validate();
    return x;
}

json space_to_json(const SpaceSpec& x) {
    json coeffs = json::array();
    int top = x.pc.is_zero() ? -1 : x.pc.max_exponent();
    for (int k = 0; k <= top; ++k) coeffs.push_back(x.pc.coeff(k).get_si());
    return json{{"name", x.name},           {"poincare_c", coeffs},       {"dim", x.dim},
                {"i_acyclic", x.i_acyclic}, {"orientable", x.orientable}, {"connected", x.connected}};
}

SpaceSpec load_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open space file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError("space file '" + path + "': " + e.what());
    }
    return space_from_json(doc);
}

const std::vector<SpaceSpec>& builtin_fixtures() {
    static const std::vector<SpaceSpec> fixtures = [] {
        std::vector<SpaceSpec> v;
        for (int d = 1; d <= 4; ++d) v.push_back({"r" + std::to_string(d), LaurentPoly::T(d), d, true, true, true});
        v.push_back({"c", LaurentPoly::T(2), 2, true, true, true});
        for (int a = 1; a <= 3; ++a)
            v.push_back({"c_minus_" + std::to_string(a), LaurentPoly{{1, a}, {2, 1}}, 2, true, true, true});
        v.push_back({"cstar", LaurentPoly{{1, 1}, {2, 1}}, 2, true, true, true});
        v.push_back({"klein_punctured", LaurentPoly::T(1), 2, false, false, true});
        return v;
    }();
    return fixtures;
}

const SpaceSpec& builtin_fixture(const std::string& name) {
    for (const auto& x : builtin_fixtures())
        if (x.name == name) return x;
    throw ParseError("unknown built-in fixture '" + name + "'");
}

std::vector<SpaceSpec> i_acyclic_fixtures() {
    std::vector<SpaceSpec> out;
    for (const auto& x : builtin_fixtures())
        if (x.i_acyclic) out.push_back(x);
    return out;
}

json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

json poly_to_json(const LaurentPoly& p) {
    json out = json::object();
    for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = integer_to_json(c);
    return out;
}

LaurentPoly poly_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("polynomial must be an object of exponent -> coefficient");
    LaurentPoly p;
    for (const auto& [key, value] : doc.items()) {
        int e;
        try {
            size_t used = 0;
            e = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ParseError("polynomial: bad exponent '" + key + "'");
        }
        Integer c;
        bool ok = true;
        if (value.is_number_integer()) c = Integer(value.get<long>());
        else if (value.is_string()) ok = c.set_str(value.get<std::string>(), 10) == 0;
        else ok = false;
        if (!ok) throw ParseError("polynomial: bad coefficient for exponent " + key);
        p += LaurentPoly::monomial(c, e);
    }
    return p;
}

json bipoly_to_json(const BiPoly& q) {
    json out = json::object();
    for (const auto& [k, c] : q.terms()) out[std::to_string(k.first) + "," + std::to_string(k.second)] = integer_to_json(c);
    return out;
}

namespace {

template <class Terms, class Monomial>
std::string latex_sum(const Terms& terms, Monomial&& monomial) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& c = it->second;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono = monomial(it->first);
        if (mag != 1 || mono.empty()) os << mag.get_str();
        os << mono;
    }
    return os.str();
}

std::string power(const char* var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^{" + std::to_string(e) + "}";
}

}  // namespace

std::string poly_to_latex(const LaurentPoly& p) {
    return latex_sum(p.terms(), [](int e) { return power("T", e); });
}

std::string bipoly_to_latex(const BiPoly& q) {
    return latex_sum(q.terms(), [](const BiPoly::Key& k) { return power("P", k.first) + power("T", k.second); });
}

}  // namespace confcohom
