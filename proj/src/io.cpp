#include "hfgrowth/io.hpp"

#include <fstream>
#include <istream>
#include <iterator>
#include <sstream>

namespace hfg {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what) {}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;  // empty for a blank line
};

// Comment lines are dropped; blank lines are kept because they separate forms.
std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    for (std::size_t n = 1; std::getline(in, raw); ++n) {
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream ss(raw);
        Line l{n, {std::istream_iterator<std::string>(ss), std::istream_iterator<std::string>()}};
        if (!l.tokens.empty() && l.tokens[0][0] == '#') continue;
        out.push_back(std::move(l));
    }
    return out;
}

long parse_int(const Line& l, const std::string& tok, long min_value) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(l.number, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(l.number, "expected an integer, got '" + tok + "'");
    if (v < min_value) throw ParseError(l.number, "value " + tok + " is below " + std::to_string(min_value));
    return v;
}

Rational parse_rational_at(const Line& l, const std::string& tok) {
    try {
        return parse_rational(tok);
    } catch (const Error& e) {
        throw ParseError(l.number, e.what());
    }
}

// First non-blank line; its tokens must start with the keyword.
std::size_t header(const std::vector<Line>& lines, const std::string& keyword) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].tokens.empty()) continue;
        if (lines[i].tokens[0] != keyword)
            throw ParseError(lines[i].number, "expected header starting with '" + keyword + "'");
        return i;
    }
    throw ParseError("empty input, expected header starting with '" + keyword + "'");
}

Exponent parse_exponent(const Line& l, std::size_t first, int r) {
    if (l.tokens.size() != first + static_cast<std::size_t>(r))
        throw ParseError(l.number, "expected " + std::to_string(r) + " exponents, got " +
                                       std::to_string(l.tokens.size() - first));
    Exponent e(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        e[static_cast<std::size_t>(i)] = static_cast<int>(parse_int(l, l.tokens[first + static_cast<std::size_t>(i)], 0));
    return e;
}

MonomialIdeal parse_monomial_ideal(const std::vector<Line>& lines) {
    const std::size_t h = header(lines, "vars");
    const Line& hl = lines[h];
    if (hl.tokens.size() != 2) throw ParseError(hl.number, "monomial ideal header is 'vars r'");
    const int r = static_cast<int>(parse_int(hl, hl.tokens[1], 1));
    std::vector<Exponent> gens;
    for (std::size_t i = h + 1; i < lines.size(); ++i)
        if (!lines[i].tokens.empty()) gens.push_back(parse_exponent(lines[i], 0, r));
    return MonomialIdeal(r, std::move(gens));
}

std::pair<int, std::vector<Form>> parse_forms(const std::vector<Line>& lines) {
    const std::size_t h = header(lines, "vars");
    const Line& hl = lines[h];
    if (hl.tokens.size() != 4 || hl.tokens[2] != "deg") throw ParseError(hl.number, "form list header is 'vars r deg d'");
    const int r = static_cast<int>(parse_int(hl, hl.tokens[1], 1));
    int d = static_cast<int>(parse_int(hl, hl.tokens[3], 0));
    std::vector<Form> forms;
    std::optional<Form> cur;
    auto flush = [&] {
        if (cur) forms.push_back(std::move(*cur));
        cur.reset();
    };
    for (std::size_t i = h + 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens.empty()) {
            flush();
            continue;
        }
        if (l.tokens[0] == "deg") {
            if (l.tokens.size() != 2) throw ParseError(l.number, "degree line is 'deg d'");
            flush();
            d = static_cast<int>(parse_int(l, l.tokens[1], 0));
            continue;
        }
        Rational c = parse_rational_at(l, l.tokens[0]);
        Exponent e = parse_exponent(l, 1, r);
        if (total_degree(e) != d)
            throw ParseError(l.number, "term of degree " + std::to_string(total_degree(e)) + " in a form of degree " +
                                           std::to_string(d));
        if (!cur) cur.emplace(r, d);
        cur->add_term(e, c);
    }
    flush();
    return {r, std::move(forms)};
}

}  // namespace

MonomialIdeal read_monomial_ideal(std::istream& in) { return parse_monomial_ideal(tokenize(in)); }

std::vector<Form> read_forms(std::istream& in) { return parse_forms(tokenize(in)).second; }

PointSet read_points(std::istream& in) {
    std::vector<Line> lines = tokenize(in);
    const std::size_t h = header(lines, "ambient");
    const Line& hl = lines[h];
    if (hl.tokens.size() != 2) throw ParseError(hl.number, "point file header is 'ambient r'");
    const int r = static_cast<int>(parse_int(hl, hl.tokens[1], 1));
    std::vector<Vector> pts;
    for (std::size_t i = h + 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens.empty()) continue;
        if (l.tokens.size() != static_cast<std::size_t>(r) + 1)
            throw ParseError(l.number, "expected " + std::to_string(r + 1) + " coordinates, got " +
                                           std::to_string(l.tokens.size()));
        Vector p;
        for (const auto& tok : l.tokens) p.push_back(parse_rational_at(l, tok));
        try {
            pts.push_back(normalize_point(std::move(p)));
        } catch (const Error& e) {
            throw ParseError(l.number, e.what());
        }
    }
    try {
        return PointSet(r, std::move(pts));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

IdealInput read_ideal(std::istream& in) {
    std::vector<Line> lines = tokenize(in);
    const std::size_t h = header(lines, "vars");
    IdealInput out;
    if (lines[h].tokens.size() == 2) {
        out.monomial = parse_monomial_ideal(lines);
        out.num_vars = out.monomial->num_vars;
    } else {
        auto [r, forms] = parse_forms(lines);
        out.num_vars = r;
        out.forms = std::move(forms);
    }
    return out;
}

GradedSpan IdealInput::span(int d_max) const {
    if (monomial) return span_from_monomials(*monomial, 0, d_max);
    return span_from_generators(forms, num_vars, 0, d_max);
}

std::string read_source(const std::string& path, std::istream& stdin_source) {
    if (path == "-") return {std::istreambuf_iterator<char>(stdin_source), std::istreambuf_iterator<char>()};
    std::ifstream f(path);
    if (!f) throw Error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_monomial_ideal(std::ostream& out, const MonomialIdeal& ideal) {
    out << "vars " << ideal.num_vars << "\n";
    for (const Exponent& e : ideal.generators) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << "\n";
    }
}

void write_forms(std::ostream& out, int num_vars, const std::vector<Form>& forms) {
    int d = forms.empty() ? 0 : forms.front().degree();
    out << "vars " << num_vars << " deg " << d << "\n";
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const Form& f = forms[i];
        if (f.num_vars() != num_vars) throw Error("form list mixes polynomial rings");
        if (i) out << "\n";
        if (f.degree() != d) {
            d = f.degree();
            out << "deg " << d << "\n";
        }
        for (const auto& [e, c] : f.terms()) {
            out << to_string(c);
            for (int x : e) out << " " << x;
            out << "\n";
        }
    }
}

void write_points(std::ostream& out, const PointSet& z) {
    out << "ambient " << z.ambient_dim() << "\n";
    for (const Vector& p : z.points()) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << to_string(p[i]);
        out << "\n";
    }
}

nlohmann::json to_json(const HVector& h) { return h.values; }

nlohmann::json to_json(const DavisDecomposition& d) {
    return {{"gcd", d.gcd.to_string()},
            {"gcd_degree", d.gcd.degree()},
            {"z1_indices", d.z1_indices},
            {"z2_indices", d.z2_indices},
            {"dh_z", d.dh_z.values},
            {"dh_z1", d.dh_z1.values},
            {"dh_z2", d.dh_z2.values},
            {"h_z1", d.h_z1},
            {"z2_vanishes", d.z2_vanishes},
            {"identity_with_h", d.identity_with_h},
            {"identity_with_delta", d.identity_with_delta},
            {"alarms", d.alarms}};
}

}  // namespace hfg
