#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "trp/catalog.hpp"
#include "trp/curve_io.hpp"
#include "trp/errors.hpp"
#include "trp/invariants.hpp"
#include "trp/orientation.hpp"
#include "trp/pencil.hpp"
#include "trp/render.hpp"
#include "trp/report.hpp"
#include "trp/topology.hpp"

namespace {

using namespace trp;

enum Exit { ok = 0, other = 1, parse = 2, singular = 3, domain = 4, not_totally_real = 10, exhausted = 11 };

// File problems are not domain errors; they exit with the generic code.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = kDefaultSeed;
    std::string output;
    std::string format = "text";

    Format fmt() const { return format == "machine" ? Format::machine : Format::text; }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const Globals& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output, std::ios::binary);
    if (!out) throw IoError("cannot write " + g.output);
    out << text;
}

ProjectivePoint parse_point(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() == 2) parts.push_back("1");
    if (parts.size() != 3) throw DomainError("point must be written x:y:z or x:y, found '" + s + "'");
    return ProjectivePoint(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]));
}

int pencil_degree(const std::string& text, int d) {
    if (text == "auto") {
        if (d - 3 < 1) throw DomainError("--degree auto needs a curve of degree at least 4");
        return d - 3;
    }
    try {
        size_t used = 0;
        const int k = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return k;
    } catch (const std::logic_error&) {
        throw DomainError("--degree must be an integer or auto, found '" + text + "'");
    }
}

std::vector<int> parse_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw DomainError("--partition must be comma-separated integers, found '" + s + "'");
        }
    }
    return out;
}

int run_topology(const Globals& g, const std::string& file) {
    const std::string text = slurp(file);
    const auto doc = parse_curve(text);
    const auto t = compute_topology(doc.form, g.seed);
    emit(g, run_report("topology", text, g.seed, topology_report(t, g.fmt()), g.fmt()));
    return ok;
}

int run_pencil_build(const Globals& g, const std::string& file, const std::vector<std::string>& points,
                     const std::string& degree) {
    const std::string text = slurp(file);
    const auto doc = parse_curve(text);
    std::vector<ProjectivePoint> pts;
    for (const auto& s : points) pts.push_back(parse_point(s));
    const Pencil p = build_pencil(pts, pencil_degree(degree, doc.form.degree()));
    emit(g, serialize_pencil(p));
    return ok;
}

int run_pencil_certify(const Globals& g, const std::string& file, const std::string& pencil_file) {
    const std::string text = slurp(file);
    const auto doc = parse_curve(text);
    const std::string ptext = slurp(pencil_file);
    const Pencil p = parse_pencil(ptext);
    const auto cert = certify_totally_real(doc.form, p, g.seed);
    emit(g, run_report("pencil certify", text + ptext, g.seed, certificate_report(cert, p, g.fmt()), g.fmt()));
    return cert.totally_real ? ok : not_totally_real;
}

int run_pencil_search(const Globals& g, const std::string& file, const std::string& degree, int budget, int count,
                      bool interior_only, const std::string& save_pencil) {
    const std::string text = slurp(file);
    const auto doc = parse_curve(text);
    if (budget < 1 || count < 1) throw DomainError("--budget and --count must be positive");
    const auto t = compute_topology(doc.form, g.seed);
    SearchOptions o;
    o.degree = pencil_degree(degree, doc.form.degree());
    o.budget = budget;
    o.wanted = count;
    o.interior_only = interior_only;
    o.seed = g.seed;
    const auto r = search_totally_real_pencil(doc.form, t, o);
    if (!save_pencil.empty() && !r.exhausted()) {
        std::ofstream out(save_pencil, std::ios::binary);
        if (!out) throw IoError("cannot write " + save_pencil);
        out << serialize_pencil(r.found.front().pencil);
    }
    emit(g, run_report("pencil search", text, g.seed, search_report(r, g.fmt()), g.fmt()));
    return r.exhausted() ? exhausted : ok;
}

int run_quintic(const Globals& g, const std::string& file) {
    const std::string text = slurp(file);
    const auto doc = parse_curve(text);
    if (doc.form.degree() != 5) throw DomainError("quintic classification needs a curve of degree 5");
    const auto t = compute_topology(doc.form, g.seed);
    QuinticReport q;
    q.components = t.count();
    q.verdict = non_convex_position(t);
    if (q.verdict.position == Position::non_convex) {
        SearchOptions o;
        o.degree = 2;
        o.seed = g.seed;
        const auto r = search_totally_real_pencil(doc.form, t, o);
        if (!r.exhausted()) {
            const auto& fp = r.found.front();
            q.orientation = induced_orientation(doc.form, t, fp.pencil, fp.certificate);
            q.signs = oval_signs(t, *q.orientation);
        }
    }
    emit(g, run_report("quintic classify", text, g.seed, quintic_report(q, g.fmt()), g.fmt()));
    return ok;
}

struct BoundsArgs {
    std::optional<int> degree, genus, components;
    std::string partition;
    std::string which = "unknown";
};

int run_bounds(const Globals& g, const BoundsArgs& a) {
    nlohmann::ordered_json j;
    std::ostringstream os;
    std::optional<int> genus = a.genus;
    if (a.degree) {
        if (*a.degree < 1) throw DomainError("--degree must be positive");
        const int gg = genus_of_degree(*a.degree);
        if (genus && *genus != gg) throw DomainError("--genus contradicts --degree");
        genus = gg;
        j["degree"] = *a.degree;
        j["harnack"] = harnack_bound(*a.degree);
        os << "degree " << *a.degree << "\ngenus " << gg << "\nharnack " << harnack_bound(*a.degree) << "\n";
        if (gg >= 1) {
            const int l = gg - 1;
            j["m2_components"] = l;
            os << "m2_components " << l << "\n";
        }
    }
    if (!genus) throw DomainError("bounds need --degree or --genus");
    if (*genus < 0) throw DomainError("--genus must be non-negative");
    j["genus"] = *genus;
    if (!a.degree) os << "genus " << *genus << "\n";
    std::optional<int> l = a.components;
    if (!l && a.degree && *genus >= 1) l = *genus - 1;
    if (l) {
        const int gb = gabard_bound(*genus, *l);
        j["components"] = *l;
        j["gabard"] = gb;
        os << "components " << *l << "\ngabard " << gb << "\n";
    }
    if (*genus >= 2) {
        const auto [lo, hi] = m2_sepgon_range(*genus);
        j["sepgon_range"] = {lo, hi};
        os << "sepgon_range " << lo << ' ' << hi << "\n";
    }
    if (!a.partition.empty()) {
        SepgonCase c = SepgonCase::unknown;
        if (a.which == "g") c = SepgonCase::g;
        else if (a.which == "g-1") c = SepgonCase::g_minus_1;
        else if (a.which != "unknown") throw DomainError("--case must be g, g-1 or unknown");
        const auto v = parse_list(a.partition);
        j["partition"] = v;
        j["cones"] = nlohmann::ordered_json::array();
        os << "partition " << a.partition << "\n";
        for (const auto& cone : semigroup_cones(*genus, c)) {
            const bool in = cone.contains(v);
            j["cones"].push_back({{"anchor", cone.anchor}, {"member", in}});
            os << "cone";
            for (int x : cone.anchor) os << ' ' << x;
            os << (in ? " member" : " non-member") << "\n";
        }
    }
    const std::string body = g.fmt() == Format::machine ? j.dump(2) + "\n" : os.str();
    emit(g, run_report("bounds", "", g.seed, body, g.fmt()));
    return ok;
}

struct RenderArgs {
    std::string file, pencil;
    int members = 6;
    bool triangle = false;
};

int run_render(const Globals& g, const RenderArgs& a) {
    const auto doc = parse_curve(slurp(a.file));
    const auto t = compute_topology(doc.form, g.seed);
    RenderOptions o;
    if (!a.pencil.empty()) {
        try {
            o.pencil = parse_pencil(slurp(a.pencil));
            for (int i = 0; i < a.members; ++i)
                o.members.push_back({make_rational(2 * i - (a.members - 1), 2)});
        } catch (const std::exception& e) {
            std::cerr << "warning: pencil overlay skipped: " << e.what() << "\n";
        }
    }
    if (a.triangle) {
        const auto v = non_convex_position(t);
        if (v.triangle) o.triangle = v.triangle;
        else std::cerr << "warning: no triangle witness for this curve\n";
    }
    emit(g, render_svg(t, o));
    return ok;
}

int run_catalog(const Globals& g, const std::string& action, const std::string& arg) {
    if (action == "list") {
        std::ostringstream os;
        for (const auto& e : catalog()) os << e.name << " degree " << e.form.degree() << "\n";
        emit(g, os.str());
    } else if (action == "show") {
        const auto& e = catalog_entry(arg);
        emit(g, serialize_curve({1, e.name, e.note, e.form}));
    } else if (action == "write") {
        if (arg.empty()) throw DomainError("catalog write needs a directory");
        std::filesystem::create_directories(arg);
        for (const auto& e : catalog()) {
            const auto path = std::filesystem::path(arg) / (e.name + ".curve");
            std::ofstream out(path, std::ios::binary);
            if (!out) throw IoError("cannot write " + path.string());
            out << serialize_curve({1, e.name, e.note, e.form});
        }
    } else {
        throw DomainError("catalog action must be list, show or write");
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topology of real plane curves and totally real pencils", "trp"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    Globals g;
    auto add_globals = [&](CLI::App* c) {
        c->add_option("--seed", g.seed, "Seed for random coordinate changes");
        c->add_option("--output", g.output, "Write the report to this path");
        c->add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "machine"}));
    };
    std::function<int()> action;

    std::string curve;
    auto* topo = app.add_subcommand("topology", "Components, nesting and witnesses of a smooth curve");
    topo->add_option("curve", curve, "Curve file")->required();
    add_globals(topo);
    topo->callback([&] { action = [&] { return run_topology(g, curve); }; });

    auto* pencil = app.add_subcommand("pencil", "Build, certify or search pencils");
    pencil->require_subcommand(1);
    std::vector<std::string> points;
    std::string degree = "auto", pencil_file, save_pencil;
    int budget = 50, count = 1;
    bool interior_only = false;
    auto* build = pencil->add_subcommand("build", "Pencil of degree-k forms through base points");
    build->add_option("curve", curve, "Curve file")->required();
    build->add_option("--point", points, "Base point x:y:z (rationals p or p/q)")->required();
    build->add_option("--degree", degree, "Pencil degree, integer or auto (d - 3)");
    add_globals(build);
    build->callback([&] { action = [&] { return run_pencil_build(g, curve, points, degree); }; });
    auto* certify = pencil->add_subcommand("certify", "Decide total reality of a pencil");
    certify->add_option("curve", curve, "Curve file")->required();
    certify->add_option("--pencil", pencil_file, "Pencil file")->required();
    add_globals(certify);
    certify->callback([&] { action = [&] { return run_pencil_certify(g, curve, pencil_file); }; });
    auto* search = pencil->add_subcommand("search", "Search base configurations for totally real pencils");
    search->add_option("curve", curve, "Curve file")->required();
    search->add_option("--degree", degree, "Pencil degree, integer or auto (d - 3)");
    search->add_option("--budget", budget, "Maximum number of certified candidates");
    search->add_option("--count", count, "Stop after this many totally real pencils");
    search->add_flag("--interior-only", interior_only, "Use interior points of ovals only");
    search->add_option("--save-pencil", save_pencil, "Write the first pencil found to this path");
    add_globals(search);
    search->callback([&] { action = [&] { return run_pencil_search(g, curve, degree, budget, count, interior_only, save_pencil); }; });

    auto* quintic = app.add_subcommand("quintic", "Quintic position verdict");
    quintic->require_subcommand(1);
    auto* classify = quintic->add_subcommand("classify", "Convex or non-convex position of the ovals");
    classify->add_option("curve", curve, "Curve file")->required();
    add_globals(classify);
    classify->callback([&] { action = [&] { return run_quintic(g, curve); }; });

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "Harnack, Gabard and sepgon bounds, cone memberships");
    bounds->add_option("--degree", ba.degree, "Curve degree");
    bounds->add_option("--genus", ba.genus, "Genus");
    bounds->add_option("--components", ba.components, "Number of real components");
    bounds->add_option("--partition", ba.partition, "Degree partition, comma separated");
    bounds->add_option("--case", ba.which, "Sepgon case: g, g-1 or unknown");
    add_globals(bounds);
    bounds->callback([&] { action = [&] { return run_bounds(g, ba); }; });

    RenderArgs ra;
    auto* render = app.add_subcommand("render", "SVG picture of a curve with overlays");
    render->add_option("curve", ra.file, "Curve file")->required();
    render->add_option("--pencil", ra.pencil, "Pencil file to overlay");
    render->add_option("--members", ra.members, "Number of pencil members drawn");
    render->add_flag("--triangle", ra.triangle, "Overlay the quintic triangle witness");
    add_globals(render);
    render->callback([&] { action = [&] { return run_render(g, ra); }; });

    std::string cat_action = "list", cat_arg;
    auto* cat = app.add_subcommand("catalog", "List, show or write the fixture curves");
    cat->add_option("action", cat_action, "list, show NAME or write DIR");
    cat->add_option("arg", cat_arg, "Fixture name or directory");
    add_globals(cat);
    cat->callback([&] { action = [&] { return run_catalog(g, cat_action, cat_arg); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : other;
    }
    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse;
    } catch (const SingularCurveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return singular;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return domain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return other;
    }
}
