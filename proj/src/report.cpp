#include "trp/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "trp/curve_io.hpp"

namespace trp {

using nlohmann::ordered_json;

namespace {

ordered_json point_json(const ProjectivePoint& p) {
    auto n = p.normalized();
    return ordered_json::array({to_string(n[0]), to_string(n[1]), to_string(n[2])});
}

std::string kind_name(ComponentKind k) { return k == ComponentKind::oval ? "oval" : "pseudo-line"; }

std::string sign_name(const std::optional<OvalSign>& s) {
    if (!s) return "pseudo-line";
    return *s == OvalSign::positive ? "positive" : "negative";
}

ordered_json certificate_json(const TotalRealityCertificate& cert, const Pencil& p) {
    ordered_json j;
    j["verdict"] = cert.totally_real ? "totally-real" : "not-totally-real";
    j["critical_parameters"] = ordered_json::array();
    for (const auto& c : cert.critical_parameters)
        j["critical_parameters"].push_back({to_string(c.low), to_string(c.high)});
    j["checks"] = ordered_json::array();
    for (const auto& ch : cert.checks)
        j["checks"].push_back({{"parameter", to_string(ch.parameter)}, {"role", ch.role}, {"real", ch.real}, {"total", ch.total}});
    j["witness"] = cert.witness ? ordered_json(to_string(*cert.witness)) : ordered_json(nullptr);
    j["pencil"] = serialize_pencil(p);
    return j;
}

}  // namespace

std::string digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string topology_summary(const CurveTopology& t) {
    if (t.count() == 0) return "0 components";
    std::string s;
    const int ovals = t.oval_count();
    if (t.pseudo_line() >= 0) s = "pseudo-line";
    if (ovals > 0) {
        if (!s.empty()) s += " + ";
        s += std::to_string(ovals) + (ovals == 1 ? " oval" : " ovals");
    }
    s += t.has_nesting() ? ", nested" : ", no nesting";
    return s;
}

std::string topology_report(const CurveTopology& t, Format f) {
    const MLabel m = classify_m_label(t);
    if (f == Format::machine) {
        ordered_json j;
        j["degree"] = t.degree;
        j["genus"] = t.genus;
        j["components"] = t.count();
        j["m_label"] = m.i;
        j["summary"] = topology_summary(t);
        j["component_list"] = ordered_json::array();
        for (int i = 0; i < t.count(); ++i) {
            const auto& c = t.components[static_cast<size_t>(i)];
            j["component_list"].push_back({{"index", i},
                                           {"kind", kind_name(c.kind)},
                                           {"parent", t.parent[static_cast<size_t>(i)]},
                                           {"witness", point_json(c.witness)}});
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "degree " << t.degree << "\ngenus " << t.genus << "\ncomponents " << t.count() << "\n";
    os << "m_label M-" << m.i << "\n";
    os << "summary " << topology_summary(t) << "\n";
    for (int i = 0; i < t.count(); ++i) {
        const auto& c = t.components[static_cast<size_t>(i)];
        os << "component " << i << ' ' << kind_name(c.kind) << " parent " << t.parent[static_cast<size_t>(i)]
           << " witness " << to_string(c.witness.normalized()) << "\n";
    }
    return os.str();
}

std::string certificate_report(const TotalRealityCertificate& cert, const Pencil& p, Format f) {
    if (f == Format::machine) return certificate_json(cert, p).dump(2) + "\n";
    return serialize_certificate(cert, p);
}

std::string search_report(const SearchReport& r, Format f) {
    if (f == Format::machine) {
        ordered_json j;
        j["found"] = ordered_json::array();
        for (const auto& fp : r.found) j["found"].push_back(certificate_json(fp.certificate, fp.pencil));
        j["attempts"] = ordered_json::array();
        for (const auto& a : r.attempts) {
            ordered_json pts = ordered_json::array();
            for (const auto& p : a.points) pts.push_back(point_json(p));
            j["attempts"].push_back({{"components", a.components}, {"points", pts}, {"outcome", a.outcome}});
        }
        j["exhausted"] = r.exhausted();
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "found " << r.found.size() << "\nattempts " << r.attempts.size() << "\n";
    for (const auto& a : r.attempts) {
        os << "attempt";
        for (size_t i = 0; i < a.points.size(); ++i)
            os << " [" << a.components[i] << "] " << to_string(a.points[i].normalized());
        os << " : " << a.outcome << "\n";
    }
    for (size_t i = 0; i < r.found.size(); ++i)
        os << "\ncertificate " << i + 1 << "\n" << serialize_certificate(r.found[i].certificate, r.found[i].pencil);
    return os.str();
}

std::string quintic_report(const QuinticReport& q, Format f) {
    const auto& v = q.verdict;
    if (f == Format::machine) {
        ordered_json j;
        j["components"] = q.components;
        j["position"] = to_string(v.position);
        j["conclusion"] = to_string(v.conclusion);
        if (v.triangle) {
            ordered_json lines = ordered_json::array();
            for (const auto& l : v.triangle->lines) lines.push_back(to_string(l));
            ordered_json pts = ordered_json::array();
            for (const auto& p : v.triangle->points) pts.push_back(point_json(p));
            j["triangle"] = {{"ovals", v.triangle->ovals}, {"inner", v.triangle->inner}, {"points", pts}, {"lines", lines}};
        }
        if (q.orientation) j["orientation"] = q.orientation->flags;
        if (!q.signs.empty()) {
            ordered_json s = ordered_json::array();
            for (const auto& x : q.signs) s.push_back(sign_name(x));
            j["oval_signs"] = s;
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "components " << q.components << "\n";
    os << "position " << to_string(v.position) << "\nconclusion " << to_string(v.conclusion) << "\n";
    if (v.position == Position::inapplicable) os << "summary inapplicable\n";
    else os << "summary " << to_string(v.position) << " ⇒ " << to_string(v.conclusion) << "\n";
    if (v.triangle) {
        const auto& t = *v.triangle;
        os << "triangle ovals " << t.ovals[0] << ' ' << t.ovals[1] << ' ' << t.ovals[2] << " inner " << t.inner << "\n";
        for (size_t i = 0; i < 3; ++i) os << "triangle point " << to_string(t.points[i].normalized()) << "\n";
        for (size_t i = 0; i < 3; ++i) os << "triangle line " << to_string(t.lines[i]) << "\n";
    }
    if (q.orientation) {
        os << "orientation";
        for (int x : q.orientation->flags) os << ' ' << (x > 0 ? "forward" : "backward");
        os << "\n";
    }
    if (!q.signs.empty()) {
        os << "oval_signs";
        for (const auto& x : q.signs) os << ' ' << sign_name(x);
        os << "\n";
    }
    return os.str();
}

std::string run_report(const std::string& command, const std::string& input, std::uint64_t seed,
                       const std::string& body, Format f) {
    if (f == Format::machine) {
        ordered_json j;
        j["command"] = command;
        j["input_digest"] = digest(input);
        j["seed"] = seed;
        j["version"] = kVersion;
        j["result"] = ordered_json::parse(body);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "# command " << command << "\n# input_digest " << digest(input) << "\n# seed " << seed << "\n# version "
       << kVersion << "\n"
       << body;
    return os.str();
}

}  // namespace trp
