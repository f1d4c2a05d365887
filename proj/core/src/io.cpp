#include "zarchow/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zarchow/errors.hpp"

namespace zarchow {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
    throw DomainError("parse-error", path + ": " + why);
}

Rational rational_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    fail(path, "expected an integer or a rational string");
}

Vec vec_from_json(const json& j, const std::string& path) {
    if (!j.is_array())
        fail(path, "expected an array");
    Vec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v[i] = rational_from_json(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

json vec_to_json(const Vec& v) {
    json j = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_integer())
            j.push_back(to_int64(v[i].numerator()));
        else
            j.push_back(v[i].str());
    }
    return j;
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw DomainError("parse-error", "malformed JSON");
    return j;
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("file-not-found", path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SurfaceFile parse_surface(const std::string& json_text) {
    const json j = parse_text(json_text);
    if (!j.is_object())
        fail("$", "surface file must be a JSON object");
    if (!j.contains("basis") || !j["basis"].is_array())
        fail("basis", "missing or not an array");
    std::vector<std::string> basis;
    for (std::size_t i = 0; i < j["basis"].size(); ++i) {
        if (!j["basis"][i].is_string())
            fail("basis[" + std::to_string(i) + "]", "expected a string");
        basis.push_back(j["basis"][i].get<std::string>());
    }
    const std::size_t rank = basis.size();

    if (!j.contains("form") || !j["form"].is_array() || j["form"].size() != rank)
        fail("form", "must be a " + std::to_string(rank) + "x" + std::to_string(rank) +
                         " integer matrix");
    Mat form(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) {
        const json& row = j["form"][i];
        if (!row.is_array() || row.size() != rank)
            fail("form[" + std::to_string(i) + "]", "wrong row length");
        for (std::size_t k = 0; k < rank; ++k) {
            if (!row[k].is_number_integer())
                fail("form[" + std::to_string(i) + "][" + std::to_string(k) + "]",
                     "expected an integer");
            form(i, k) = Rational(row[k].get<long long>());
        }
    }
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t k = i + 1; k < rank; ++k)
            if (form(i, k) != form(k, i))
                fail("form[" + std::to_string(i) + "][" + std::to_string(k) + "]",
                     "matrix is not symmetric");

    if (!j.contains("curves") || !j["curves"].is_array())
        fail("curves", "missing or not an array");
    std::vector<Vec> curves;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < j["curves"].size(); ++i) {
        const json& c = j["curves"][i];
        const std::string path = "curves[" + std::to_string(i) + "]";
        if (!c.is_object() || !c.contains("name") || !c.contains("coords"))
            fail(path, "expected {name, coords}");
        labels.push_back(c["name"].get<std::string>());
        Vec v = vec_from_json(c["coords"], path + ".coords");
        if (v.size() != rank)
            fail(path + ".coords", "wrong dimension");
        curves.push_back(v);
    }

    SurfaceFile out{SurfaceLattice(form, basis, curves, labels), {}};
    if (j.contains("nef_generators")) {
        if (!j["nef_generators"].is_array())
            fail("nef_generators", "expected an array");
        for (std::size_t i = 0; i < j["nef_generators"].size(); ++i) {
            Vec v = vec_from_json(j["nef_generators"][i],
                                  "nef_generators[" + std::to_string(i) + "]");
            if (v.size() != rank)
                fail("nef_generators[" + std::to_string(i) + "]", "wrong dimension");
            out.nef_generators.push_back(v);
        }
    }
    return out;
}

SurfaceFile parse_surface_file(const std::string& path) {
    return parse_surface(read_file(path));
}

std::string surface_to_json(const SurfaceFile& s) {
    json j;
    j["basis"] = s.lattice.basis_labels();
    json form = json::array();
    for (std::size_t i = 0; i < s.lattice.rank(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < s.lattice.rank(); ++k)
            row.push_back(to_int64(s.lattice.form()(i, k).numerator()));
        form.push_back(row);
    }
    j["form"] = form;
    json curves = json::array();
    for (std::size_t i = 0; i < s.lattice.curves().size(); ++i) {
        json c;
        c["name"] = s.lattice.curve_labels()[i];
        c["coords"] = vec_to_json(s.lattice.curve(i));
        curves.push_back(c);
    }
    j["curves"] = curves;
    if (!s.nef_generators.empty()) {
        json nef = json::array();
        for (const Vec& v : s.nef_generators)
            nef.push_back(vec_to_json(v));
        j["nef_generators"] = nef;
    }
    return j.dump(2);
}

Fan parse_fan(const std::string& json_text) {
    const json j = parse_text(json_text);
    if (!j.is_object())
        fail("$", "fan file must be a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        fail("dim", "missing or not an integer");
    const std::size_t dim = j["dim"].get<std::size_t>();
    if (!j.contains("rays") || !j["rays"].is_array())
        fail("rays", "missing or not an array");
    std::vector<Vec> rays;
    for (std::size_t i = 0; i < j["rays"].size(); ++i) {
        Vec v = vec_from_json(j["rays"][i], "rays[" + std::to_string(i) + "]");
        if (v.size() != dim)
            fail("rays[" + std::to_string(i) + "]", "wrong dimension");
        if (!v.is_integral() || v.is_zero() || primitive(v) != v)
            fail("rays[" + std::to_string(i) + "]", "ray must be a primitive integer vector");
        rays.push_back(v);
    }
    if (!j.contains("max_cones") || !j["max_cones"].is_array())
        fail("max_cones", "missing or not an array");
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t i = 0; i < j["max_cones"].size(); ++i) {
        const json& c = j["max_cones"][i];
        const std::string path = "max_cones[" + std::to_string(i) + "]";
        if (!c.is_array())
            fail(path, "expected an index array");
        std::vector<std::size_t> cone;
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (!c[k].is_number_integer())
                fail(path + "[" + std::to_string(k) + "]", "expected an index");
            const long long idx = c[k].get<long long>();
            if (idx < 0 || static_cast<std::size_t>(idx) >= rays.size())
                fail(path + "[" + std::to_string(k) + "]", "ray index out of range");
            cone.push_back(static_cast<std::size_t>(idx));
        }
        cones.push_back(cone);
    }
    std::vector<std::string> names;
    if (j.contains("ray_names")) {
        if (!j["ray_names"].is_array() || j["ray_names"].size() != rays.size())
            fail("ray_names", "must list one name per ray");
        for (const auto& n : j["ray_names"])
            names.push_back(n.get<std::string>());
    }
    return Fan(dim, std::move(rays), std::move(cones), std::move(names));
}

Fan parse_fan_file(const std::string& path) { return parse_fan(read_file(path)); }

std::string fan_to_json(const Fan& f) {
    json j;
    j["dim"] = f.dim;
    json rays = json::array();
    for (const Vec& v : f.rays)
        rays.push_back(vec_to_json(v));
    j["rays"] = rays;
    json cones = json::array();
    for (const auto& c : f.max_cones)
        cones.push_back(c);
    j["max_cones"] = cones;
    j["ray_names"] = f.ray_names;
    return j.dump(2);
}

Divisor parse_divisor(const std::string& text, const std::vector<std::string>& labels) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    if (s.empty())
        throw DomainError("bad-divisor", "empty divisor expression");

    if (s[0] == '[') {
        const json j = parse_text(s);
        Vec v = vec_from_json(j, "divisor");
        if (v.size() != labels.size())
            throw DomainError("bad-divisor", "coordinate count must be " +
                                                 std::to_string(labels.size()));
        return v;
    }

    Divisor d(labels.size());
    std::size_t pos = 0;
    if (s == "0")
        return d;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::string num;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            num.push_back(s[pos++]);
        if (pos < s.size() && s[pos] == '*')
            ++pos;
        std::string name;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-')
            name.push_back(s[pos++]);
        if (name.empty())
            throw DomainError("bad-divisor", "missing basis label in '" + text + "'");
        Rational coeff = num.empty() ? Rational(1) : Rational::parse(num);
        if (sign < 0)
            coeff = -coeff;
        bool found = false;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == name) {
                d[i] += coeff;
                found = true;
                break;
            }
        if (!found)
            throw DomainError("bad-divisor", "unknown basis label '" + name + "'");
    }
    return d;
}

std::string divisor_str(const Divisor& d, const std::vector<std::string>& labels) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << d[i].str() << " " << labels[i];
    }
    if (first)
        os << "0";
    return os.str();
}

RationalSeries parse_series(const std::string& json_text) {
    const json j = parse_text(json_text);
    if (!j.is_object() || !j.contains("arity"))
        fail("arity", "series file must be an object with an arity");
    const std::size_t arity = j["arity"].get<std::size_t>();
    MultiPoly num(arity);
    if (j.contains("numerator")) {
        if (!j["numerator"].is_array())
            fail("numerator", "expected an array of terms");
        for (std::size_t i = 0; i < j["numerator"].size(); ++i) {
            const json& t = j["numerator"][i];
            const std::string path = "numerator[" + std::to_string(i) + "]";
            if (!t.is_object() || !t.contains("exp") || !t.contains("coeff"))
                fail(path, "expected {exp, coeff}");
            if (!t["exp"].is_array() || t["exp"].size() != arity)
                fail(path + ".exp", "wrong arity");
            ExpVec e(arity);
            for (std::size_t k = 0; k < arity; ++k)
                e[k] = t["exp"][k].get<int>();
            Integer c = t["coeff"].is_string() ? Integer(t["coeff"].get<std::string>())
                                               : Integer(t["coeff"].get<long long>());
            num.add_term(e, c);
        }
    }
    std::vector<DenomFactor> den;
    if (j.contains("denominator")) {
        if (!j["denominator"].is_array())
            fail("denominator", "expected an array of factors");
        for (std::size_t i = 0; i < j["denominator"].size(); ++i) {
            const json& t = j["denominator"][i];
            const std::string path = "denominator[" + std::to_string(i) + "]";
            if (!t.is_object() || !t.contains("v") || !t.contains("m"))
                fail(path, "expected {v, m}");
            if (!t["v"].is_array() || t["v"].size() != arity)
                fail(path + ".v", "wrong arity");
            ExpVec v(arity);
            for (std::size_t k = 0; k < arity; ++k)
                v[k] = t["v"][k].get<int>();
            den.push_back(DenomFactor{v, t["m"].get<int>()});
        }
    }
    return RationalSeries(std::move(num), std::move(den));
}

RationalSeries parse_series_file(const std::string& path) {
    return parse_series(read_file(path));
}

std::string series_to_json(const RationalSeries& r) {
    json j;
    j["arity"] = r.arity();
    json num = json::array();
    for (const auto& [e, c] : r.numerator().terms()) {
        json t;
        t["exp"] = e;
        t["coeff"] = c.str();
        num.push_back(t);
    }
    j["numerator"] = num;
    json den = json::array();
    for (const auto& f : r.denominator()) {
        json t;
        t["v"] = f.v;
        t["m"] = f.mult;
        den.push_back(t);
    }
    j["denominator"] = den;
    return j.dump(2);
}

} // namespace zarchow
