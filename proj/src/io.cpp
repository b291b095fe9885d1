#include "freespec/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <type_traits>
#include <variant>

#include "freespec/errors.hpp"

namespace freespec::io {

namespace {

cplx parse_entry(const json& e) {
    if (e.is_number()) return {e.get<double>(), 0.0};
    if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
        return {e[0].get<double>(), e[1].get<double>()};
    throw PreconditionError("matrix entry must be a number or a [re, im] pair");
}

double parse_double(const std::string& s) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double x = std::strtod(begin, &end);
    if (end == begin || *end != '\0') throw PreconditionError("not a number: '" + s + "'");
    return x;
}

std::string quote(const std::string& f) {
    if (f.find_first_of(",\"\r\n") == std::string::npos) return f;
    std::string out = "\"";
    for (char c : f) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

json shape_to_json(const SpectrumRegion& r) {
    json j;
    j["kind"] = r.kind();
    j["ambient"] = to_string(r.ambient);
    json p = json::object();
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Annulus>) {
                p["r_inner"] = number(s.r_inner);
                p["r_outer"] = number(s.r_outer);
            } else if constexpr (std::is_same_v<T, Disk>) {
                p["center"] = complex_number(s.center);
                p["radius"] = number(s.radius);
            } else if constexpr (std::is_same_v<T, PointSet>) {
                json pts = json::array();
                for (auto z : s.points) pts.push_back(complex_number(z));
                p["points"] = pts;
            } else if constexpr (std::is_same_v<T, ImplicitCardioid>) {
                p["c"] = number(s.c);
                p["inequality"] = "|z-1|^2 <= c|z|";
            } else {
                json parts = json::array();
                for (const auto& part : s.parts) parts.push_back(shape_to_json(part));
                p["parts"] = parts;
            }
        },
        r.shape);
    j["parameters"] = p;
    return j;
}

}  // namespace

Mat2 parse_matrix(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw PreconditionError(std::string("invalid matrix JSON: ") + e.what());
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
        j[1].size() != 2)
        throw PreconditionError("matrix must be a 2x2 JSON array");
    return mat2::make(parse_entry(j[0][0]), parse_entry(j[0][1]), parse_entry(j[1][0]), parse_entry(j[1][1]));
}

cplx parse_scalar(const std::string& text) {
    try {
        return parse_entry(json::parse(text));
    } catch (const json::parse_error& e) {
        throw PreconditionError("invalid scalar '" + text + "'");
    }
}

json matrix_to_json(const Mat2& m) {
    json out = json::array();
    for (int i = 0; i < 2; ++i) {
        json row = json::array();
        for (int j = 0; j < 2; ++j) row.push_back(complex_number(m(i, j)));
        out.push_back(row);
    }
    return out;
}

json number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

json complex_number(std::complex<double> z) { return json::array({number(z.real()), number(z.imag())}); }

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os_ << ',';
        os_ << quote(fields[i]);
    }
    os_ << "\r\n";
}

std::vector<std::vector<std::string>> read_csv(std::istream& is) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> rec;
    std::string field;
    bool quoted = false, any = false;
    char c;
    auto end_record = [&]() {
        rec.push_back(field);
        field.clear();
        if (!(rec.size() == 1 && rec[0].empty())) out.push_back(rec);
        rec.clear();
        any = false;
    };
    while (is.get(c)) {
        any = true;
        if (quoted) {
            if (c == '"') {
                if (is.peek() == '"') {
                    is.get(c);
                    field += '"';
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            rec.push_back(field);
            field.clear();
        } else if (c == '\r') {
            if (is.peek() == '\n') is.get(c);
            end_record();
        } else if (c == '\n') {
            end_record();
        } else {
            field += c;
        }
    }
    if (quoted) throw IoError("unterminated quoted CSV field");
    if (any) end_record();
    return out;
}

void write_measure_csv(std::ostream& os, const MeasureR& mu) {
    CsvWriter w(os);
    w.row({"kind", "t", "value"});
    for (const auto& a : mu.atoms()) w.row({"atom", format_double(a.location), format_double(a.mass)});
    if (const auto& c = mu.continuous())
        for (std::size_t i = 0; i < c->grid.size(); ++i)
            w.row({"density", format_double(c->grid[i]), format_double(c->density[i])});
}

MeasureR read_measure_csv(std::istream& is) {
    const auto rows = read_csv(is);
    if (rows.empty() || rows[0] != std::vector<std::string>{"kind", "t", "value"})
        throw IoError("measure CSV must start with the header kind,t,value");
    std::vector<Atom> atoms;
    std::vector<double> grid, density;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() != 3) throw IoError("measure CSV record " + std::to_string(i) + " needs 3 fields");
        if (r[0] == "atom")
            atoms.push_back({parse_double(r[1]), parse_double(r[2])});
        else if (r[0] == "density") {
            grid.push_back(parse_double(r[1]));
            density.push_back(parse_double(r[2]));
        } else {
            throw IoError("unknown measure CSV kind '" + r[0] + "'");
        }
    }
    if (grid.empty()) return MeasureR::from_atoms(std::move(atoms));
    return MeasureR::from_density(std::move(grid), std::move(density), std::move(atoms), true);
}

MeasureR load_measure(const std::string& spec) {
    if (spec == "arcsine01") return arcsine01();
    if (spec == "arcsine_sym") return arcsine_sym();
    if (spec.rfind("dirac:", 0) == 0) return dirac(parse_double(spec.substr(6)));
    if (spec.rfind("atoms:", 0) == 0) {
        std::vector<Atom> atoms;
        std::stringstream ss(spec.substr(6));
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos) throw PreconditionError("atom must be location:mass");
            atoms.push_back({parse_double(item.substr(0, colon)), parse_double(item.substr(colon + 1))});
        }
        return MeasureR::from_atoms(std::move(atoms));
    }
    std::ifstream in(spec, std::ios::binary);
    if (!in) throw IoError("cannot open measure file '" + spec + "'");
    return read_measure_csv(in);
}

void write_radial_csv(std::ostream& os, const RadialMeasure& nu) {
    CsvWriter w(os);
    w.row({"s", "F", "r_inner", "r_outer", "atom_at_zero"});
    const auto& s = nu.s_table();
    const auto& F = nu.F_table();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == 0)
            w.row({format_double(s[i]), format_double(F[i]), format_double(nu.r_inner()), format_double(nu.r_outer()),
                   format_double(nu.atom_at_zero())});
        else
            w.row({format_double(s[i]), format_double(F[i]), "", "", ""});
    }
}

json radial_summary(const RadialMeasure& nu) {
    json j;
    j["schema"] = 1;
    j["kind"] = "radial";
    j["atom_at_zero"] = number(nu.atom_at_zero());
    j["r_inner"] = number(nu.r_inner());
    j["r_outer"] = number(nu.r_outer());
    j["support"] = nu.r_inner() > 0.0 ? "annulus" : (nu.r_outer() > 0.0 ? "disk" : "point");
    return j;
}

json mixture_summary(const ShiftedMixture& m) {
    json j;
    j["schema"] = 1;
    j["kind"] = "mixture";
    json atoms = json::array();
    for (const auto& a : m.atoms) atoms.push_back({{"location", complex_number(a.location)}, {"mass", number(a.mass)}});
    j["atoms"] = atoms;
    j["component_weight"] = number(m.component_weight);
    j["center"] = complex_number(m.center);
    if (m.component) {
        json c = radial_summary(*m.component);
        c.erase("schema");
        j["component"] = c;
    } else {
        j["component"] = nullptr;
    }
    return j;
}

json region_to_json(const SpectrumRegion& r) {
    json j = shape_to_json(r);
    j["schema"] = 1;
    return j;
}

void write_points_csv(std::ostream& os, const std::vector<std::complex<double>>& pts) {
    CsvWriter w(os);
    w.row({"re", "im"});
    for (auto z : pts) w.row({format_double(z.real()), format_double(z.imag())});
}

void write_cloud_csv(std::ostream& os, const EmpiricalSpectrum& spec) {
    CsvWriter w(os);
    if (spec.singular_values) {
        w.row({"trial", "sigma"});
        for (std::size_t i = 0; i < spec.samples.size(); ++i)
            w.row({std::to_string(spec.trial[i]), format_double(spec.samples[i].real())});
    } else {
        w.row({"trial", "re", "im"});
        for (std::size_t i = 0; i < spec.samples.size(); ++i)
            w.row({std::to_string(spec.trial[i]), format_double(spec.samples[i].real()),
                   format_double(spec.samples[i].imag())});
    }
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw IoError("failed writing to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace freespec::io
