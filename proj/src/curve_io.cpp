#include "trp/curve_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "trp/errors.hpp"

namespace trp {

namespace {

struct Token {
    std::string text;
    int column = 1;
};

struct Line {
    int number = 0;
    std::string raw;
    std::vector<Token> tokens;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        Line line{number, raw, {}};
        size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            if (i >= raw.size()) break;
            size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
            line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
            i = j;
        }
        if (line.tokens.empty() || line.tokens[0].text[0] == '#') continue;
        out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(const Line& l, const Token& t, const std::string& what) { throw ParseError(l.number, t.column, what); }
[[noreturn]] void fail_end(const Line& l, const std::string& what) {
    throw ParseError(l.number, static_cast<int>(l.raw.size()) + 1, what);
}

Integer parse_integer(const Line& l, const Token& t) {
    static const std::regex re("-?[0-9]+");
    if (!std::regex_match(t.text, re)) fail(l, t, "expected an integer, found '" + t.text + "'");
    return Integer(t.text);
}

int parse_small(const Line& l, const Token& t, int lo) {
    Integer v = parse_integer(l, t);
    if (v < lo || v > 1000000) fail(l, t, "integer out of range: " + t.text);
    return static_cast<int>(v.get_si());
}

// Reduced fraction num/den with den > 0, given as two integer tokens.
Rational parse_pair(const Line& l, const Token& num, const Token& den) {
    Integer n = parse_integer(l, num), d = parse_integer(l, den);
    if (d <= 0) fail(l, den, "denominator must be positive");
    Integer g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) fail(l, num, "fraction " + num.text + "/" + den.text + " is not reduced");
    return make_rational(n, d);
}

// Reduced fraction written p or p/q.
Rational parse_slash(const Line& l, const Token& t) {
    static const std::regex re("(-?[0-9]+)(/([0-9]+))?");
    std::smatch m;
    if (!std::regex_match(t.text, m, re)) fail(l, t, "expected a rational, found '" + t.text + "'");
    Integer n(m[1].str()), d = m[3].matched ? Integer(m[3].str()) : Integer(1);
    if (d <= 0) fail(l, t, "denominator must be positive");
    Integer g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) fail(l, t, "fraction " + t.text + " is not reduced");
    return make_rational(n, d);
}

void expect_count(const Line& l, size_t n) {
    if (l.tokens.size() < n) fail_end(l, "expected " + std::to_string(n - 1) + " values after '" + l.tokens[0].text + "'");
    if (l.tokens.size() > n) fail(l, l.tokens[n], "unexpected '" + l.tokens[n].text + "'");
}

std::string rest_of_line(const Line& l) {
    const size_t start = static_cast<size_t>(l.tokens[0].column - 1) + l.tokens[0].text.size();
    return start + 1 <= l.raw.size() ? l.raw.substr(start + 1) : std::string();
}

void check_version(const std::vector<Line>& lines) {
    if (lines.empty()) throw ParseError(1, 1, "empty document");
    const Line& l = lines.front();
    if (l.tokens[0].text != "format_version") fail(l, l.tokens[0], "document must start with 'format_version'");
    expect_count(l, 2);
    if (l.tokens[1].text != "1") fail(l, l.tokens[1], "unsupported format version " + l.tokens[1].text);
}

// Coefficient lines of a form of the given degree, starting at lines[i]; stops at the first
// line that is not a coef line.
TernaryForm parse_coefs(const std::vector<Line>& lines, size_t& i, int degree, const Line& owner) {
    std::map<Exponent, Rational> coeffs;
    for (; i < lines.size() && lines[i].tokens[0].text == "coef"; ++i) {
        const Line& l = lines[i];
        expect_count(l, 6);
        Exponent e{};
        for (size_t k = 0; k < 3; ++k) e[k] = parse_small(l, l.tokens[k + 1], 0);
        if (e[0] + e[1] + e[2] != degree)
            fail(l, l.tokens[1], "exponents sum to " + std::to_string(e[0] + e[1] + e[2]) + ", degree is " +
                                     std::to_string(degree));
        Rational v = parse_pair(l, l.tokens[4], l.tokens[5]);
        if (v == 0) fail(l, l.tokens[4], "zero coefficients are not written");
        if (coeffs.count(e)) fail(l, l.tokens[1], "repeated exponent triple");
        coeffs[e] = v;
    }
    if (coeffs.empty()) fail_end(owner, "form has no nonzero coefficient");
    return TernaryForm(degree, std::move(coeffs));
}

void write_coefs(std::ostringstream& os, const TernaryForm& f) {
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        const auto& [e, v] = *it;
        os << "coef " << e[0] << ' ' << e[1] << ' ' << e[2] << ' ' << to_string(Integer(v.get_num())) << ' '
           << to_string(Integer(v.get_den())) << '\n';
    }
}

}  // namespace

CurveDocument parse_curve(const std::string& text) {
    auto lines = split_lines(text);
    check_version(lines);
    CurveDocument doc;
    std::optional<int> degree;
    for (size_t i = 1; i < lines.size();) {
        const Line& l = lines[i];
        const std::string& key = l.tokens[0].text;
        if (key == "name" || key == "note") {
            (key == "name" ? doc.name : doc.note) = rest_of_line(l);
            ++i;
        } else if (key == "degree") {
            if (degree) fail(l, l.tokens[0], "repeated degree");
            expect_count(l, 2);
            degree = parse_small(l, l.tokens[1], 1);
            ++i;
            doc.form = parse_coefs(lines, i, *degree, l);
        } else if (key == "coef") {
            fail(l, l.tokens[0], "coefficient before degree");
        } else {
            fail(l, l.tokens[0], "unknown field '" + key + "'");
        }
    }
    if (!degree) throw ParseError(lines.back().number + 1, 1, "missing degree");
    return doc;
}

std::string serialize_curve(const CurveDocument& doc) {
    std::ostringstream os;
    os << "format_version " << doc.format_version << '\n';
    if (!doc.name.empty()) os << "name " << doc.name << '\n';
    if (!doc.note.empty()) os << "note " << doc.note << '\n';
    os << "degree " << doc.form.degree() << '\n';
    write_coefs(os, doc.form);
    return os.str();
}

Pencil parse_pencil(const std::string& text) {
    auto lines = split_lines(text);
    check_version(lines);
    Pencil p;
    std::optional<int> k;
    bool have_f = false, have_g = false;
    for (size_t i = 1; i < lines.size();) {
        const Line& l = lines[i];
        const std::string& key = l.tokens[0].text;
        if (key == "pencil_degree") {
            expect_count(l, 2);
            k = parse_small(l, l.tokens[1], 1);
            ++i;
        } else if (key == "base") {
            expect_count(l, 4);
            Rational v[3];
            for (size_t c = 0; c < 3; ++c) v[c] = parse_slash(l, l.tokens[c + 1]);
            if (v[0] == 0 && v[1] == 0 && v[2] == 0) fail(l, l.tokens[1], "base point with all coordinates zero");
            p.base_points.emplace_back(v[0], v[1], v[2]);
            ++i;
        } else if (key == "generator") {
            if (!k) fail(l, l.tokens[0], "generator before pencil_degree");
            expect_count(l, 2);
            const std::string which = l.tokens[1].text;
            if (which != "f" && which != "g") fail(l, l.tokens[1], "generator must be f or g");
            bool& have = which == "f" ? have_f : have_g;
            if (have) fail(l, l.tokens[1], "repeated generator " + which);
            have = true;
            ++i;
            (which == "f" ? p.f : p.g) = parse_coefs(lines, i, *k, l);
        } else {
            fail(l, l.tokens[0], "unknown field '" + key + "'");
        }
    }
    const int end = lines.back().number + 1;
    if (!k) throw ParseError(end, 1, "missing pencil_degree");
    if (!have_f || !have_g) throw ParseError(end, 1, "missing generator");
    p.k = *k;
    for (const auto& b : p.base_points)
        if (p.f(b) != 0 || p.g(b) != 0) throw ParseError(end, 1, "base point " + to_string(b) + " is not on both generators");
    return p;
}

std::string serialize_pencil(const Pencil& p) {
    std::ostringstream os;
    os << "format_version 1\n";
    os << "pencil_degree " << p.k << '\n';
    for (const auto& b : p.base_points) {
        auto n = b.normalized();
        os << "base " << to_string(n[0]) << ' ' << to_string(n[1]) << ' ' << to_string(n[2]) << '\n';
    }
    os << "generator f\n";
    write_coefs(os, p.f);
    os << "generator g\n";
    write_coefs(os, p.g);
    return os.str();
}

std::string serialize_certificate(const TotalRealityCertificate& cert, const Pencil& p) {
    std::ostringstream os;
    os << "format_version 1\n";
    os << "verdict " << (cert.totally_real ? "totally-real" : "not-totally-real") << '\n';
    os << "# members are g + lambda f; inf stands for f\n";
    for (const auto& c : cert.critical_parameters)
        os << "critical " << to_string(c.low) << ' ' << to_string(c.high) << '\n';
    for (const auto& ch : cert.checks)
        os << "check " << to_string(ch.parameter) << ' ' << ch.role << ' ' << ch.real << ' ' << ch.total << '\n';
    if (cert.witness) os << "witness " << to_string(*cert.witness) << '\n';
    os << "pencil\n" << serialize_pencil(p);
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write " + path);
    out << text;
}

}  // namespace trp
