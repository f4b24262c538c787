#include "specfm/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "specfm/error.hpp"
#include "specfm/json_io.hpp"
#include "specfm/nodelocal.hpp"
#include "specfm/parse.hpp"
#include "specfm/univariate.hpp"

namespace specfm {

namespace {

struct CommonArgs {
    std::string family_path;
    std::string cover_path;
    std::string lambda_text;
    std::string t_text;
    int trunc = 8;
    std::string out_path;
    std::string format = "json";
};

void render(const Json& j, const std::string& table, const CommonArgs& args, std::ostream& out) {
    std::ostringstream body;
    if (args.format == "table")
        body << table;
    else
        body << j.dump(2) << "\n";
    if (!args.out_path.empty())
        write_json_file(args.out_path, j);  // files always carry the JSON form
    if (args.out_path.empty() || args.format == "table") out << body.str();
}

WeierstrassFamily load_family(const CommonArgs& args) {
    if (args.family_path.empty()) fail_input("missing --family");
    return family_from_json(load_json_file(args.family_path));
}

std::optional<Scalar> lambda_value(const CommonArgs& args) {
    if (args.lambda_text.empty()) return std::nullopt;
    auto q = rational_from_string(args.lambda_text);
    if (!q) fail_input("--lambda expects a rational number");
    return Scalar(*q);
}

SpectralCover load_cover(const WeierstrassFamily& fam, const CommonArgs& args) {
    if (args.cover_path.empty()) fail_input("missing --cover");
    return cover_from_json(fam, load_json_file(args.cover_path));
}

// Applies --lambda to family and cover ahead of non-analyze subcommands.
void apply_lambda(WeierstrassFamily& fam, SpectralCover& cover, const Scalar& v) {
    if (!cover.affine.uses_param(Param::Lambda) && !fam.uses_lambda())
        fail_input("--lambda given, but the inputs do not involve lambda");
    if (v.is_zero()) fail_input("lambda = 0 is excluded");
    auto subst = [&](const Scalar& c) { return c.specialize(Param::Lambda, v); };
    std::vector<Poly> gens;
    for (const auto& g : cover.affine.gens) gens.push_back(g.map_coeffs(subst));
    fam = WeierstrassFamily::from_coeffs(fam.a2().map_coeffs(subst), fam.a4().map_coeffs(subst),
                                         fam.a6().map_coeffs(subst));
    cover = make_cover(fam, Ideal::make(cover.affine.vars, std::move(gens)),
                       cover.section_at_infinity);
}

FibreParam fibre_from_args(const CommonArgs& args) {
    if (args.t_text.empty() || args.t_text == "generic") return FibreParam::generic_point();
    auto q = rational_from_string(args.t_text);
    if (!q) fail_input("--t expects a rational number or 'generic'");
    return FibreParam::at(Scalar(*q));
}

int cmd_discriminant(const CommonArgs& args, std::ostream& out) {
    const WeierstrassFamily fam = load_family(args);
    const Poly disc = fam.discriminant();
    const RootReport roots = squarefree_linear_roots(disc, Var::t);
    Json j;
    j["discriminant"] = disc.str();
    j["degree"] = disc.degree_in(Var::t);
    j["rational_roots"] = Json::array();
    for (const auto& [t0, mult] : roots.roots)
        j["rational_roots"].push_back({{"t", t0.str()}, {"multiplicity", mult}});
    if (roots.residual_degree >= 2) j["unresolved_degree"] = roots.residual_degree;

    std::ostringstream tb;
    tb << "discriminant (degree " << disc.degree_in(Var::t) << "):\n  " << disc.str() << "\n";
    tb << "rational roots:\n";
    for (const auto& [t0, mult] : roots.roots)
        tb << "  t = " << t0.str() << "  (multiplicity " << mult << ")\n";
    if (roots.residual_degree >= 2)
        tb << "  + unresolved factor of degree " << roots.residual_degree << "\n";
    render(j, tb.str(), args, out);
    return 0;
}

int cmd_singular_fibres(const CommonArgs& args, std::ostream& out) {
    const WeierstrassFamily fam = load_family(args);
    const SingularFibreReport rep = singular_fibres(fam);
    Json j;
    j["singular_fibres"] = Json::array();
    for (const auto& s : rep.fibres)
        j["singular_fibres"].push_back({{"t", s.t0.str()},
                                        {"point", Json::array({s.point.X.str(), s.point.Y.str(),
                                                               s.point.Z.str()})},
                                        {"type", s.is_node ? "node" : "cusp"}});
    if (!rep.unresolved_t_degrees.empty()) j["unresolved_t_degrees"] = rep.unresolved_t_degrees;

    std::ostringstream tb;
    for (const auto& s : rep.fibres)
        tb << "t = " << s.t0.str() << ": " << (s.is_node ? "node" : "cusp") << " at "
           << s.point.str() << "\n";
    for (auto d : rep.unresolved_t_degrees)
        tb << "unresolved singular parameters: factor of degree " << d << "\n";
    render(j, tb.str(), args, out);
    const bool undet = !rep.unresolved_t_degrees.empty() || !rep.unresolved_point_degrees.empty();
    return undet ? 3 : 0;
}

int cmd_fibre_length(const CommonArgs& args, std::ostream& out) {
    WeierstrassFamily fam = load_family(args);
    SpectralCover cover = load_cover(fam, args);
    if (auto v = lambda_value(args)) apply_lambda(fam, cover, *v);
    const FibreParam fibre = fibre_from_args(args);
    const Ideal ideal = fibre_ideal(cover, fibre);
    const auto len = quotient_length(buchberger(ideal, MonomialOrder::grevlex({Var::x, Var::y})));
    Json j;
    j["t"] = fibre.str();
    if (len)
        j["length"] = *len;
    else
        j["length"] = "infinite";
    std::ostringstream tb;
    tb << "fibre t = " << fibre.str() << ": length "
       << (len ? std::to_string(*len) : std::string("infinite")) << "\n";
    render(j, tb.str(), args, out);
    return 0;
}

int cmd_support(const CommonArgs& args, std::ostream& out) {
    WeierstrassFamily fam = load_family(args);
    SpectralCover cover = load_cover(fam, args);
    if (auto v = lambda_value(args)) apply_lambda(fam, cover, *v);
    const FibreParam fibre = fibre_from_args(args);
    const SupportReport rep = support_points(fibre_ideal(cover, fibre));
    Json j;
    j["t"] = fibre.str();
    j["total_length"] = rep.total_length;
    j["points"] = Json::array();
    for (const auto& p : rep.points)
        j["points"].push_back({{"point", Json::array({p.x.str(), p.y.str(), "1"})},
                               {"length", p.local_length}});
    j["clusters"] = Json::array();
    for (const auto& c : rep.clusters) {
        Json e{{"degree", c.degree}, {"length", c.total_length}};
        if (c.at_x) e["x"] = c.at_x->str();
        j["clusters"].push_back(e);
    }
    std::ostringstream tb;
    tb << "fibre t = " << fibre.str() << ", total length " << rep.total_length << "\n";
    for (const auto& p : rep.points)
        tb << "  point (" << p.x.str() << ", " << p.y.str() << ")  length " << p.local_length
           << "\n";
    for (const auto& c : rep.clusters)
        tb << "  cluster degree " << c.degree << "  length " << c.total_length << "\n";
    render(j, tb.str(), args, out);
    return rep.clusters.empty() ? 0 : 3;
}

int cmd_localize(const CommonArgs& args, std::ostream& out) {
    WeierstrassFamily fam = load_family(args);
    SpectralCover cover = load_cover(fam, args);
    if (auto v = lambda_value(args)) apply_lambda(fam, cover, *v);
    if (args.t_text.empty() || args.t_text == "generic")
        fail_input("localize needs --t (a singular fibre value)");
    const FibreParam fibre = fibre_from_args(args);

    const SingularFibreReport sings = singular_fibres(fam);
    const FibreSingularity* sing = nullptr;
    for (const auto& s : sings.fibres)
        if (s.for_all_t || s.t0 == fibre.t0) sing = &s;
    if (!sing) fail_input("localize: the fibre at t = " + fibre.t0.str() + " has no rational "
                          "singular point");

    const NodalChart chart = NodalChart::build(fam, *sing, args.trunc);
    const Ideal ideal = fibre_ideal(cover, fibre);
    const LocalModuleType type = classify_local_module(chart, ideal.gens);
    Json j;
    j["t"] = fibre.str();
    j["node"] = Json::array(
        {sing->point.X.str(), sing->point.Y.str(), sing->point.Z.str()});
    j["local_type"] = local_type_to_json(type);
    std::ostringstream tb;
    tb << "t = " << fibre.str() << ", node at " << sing->point.str() << ": " << type.str()
       << "\n";
    render(j, tb.str(), args, out);
    return 0;
}

int cmd_fm(const CommonArgs& args, std::ostream& out) {
    WeierstrassFamily fam = load_family(args);
    SpectralCover cover = load_cover(fam, args);
    if (auto v = lambda_value(args)) apply_lambda(fam, cover, *v);
    const FibreParam fibre = fibre_from_args(args);
    const auto torsion = decompose_fibre(fam, cover, fibre, args.trunc);
    const auto images = fm_torsion(torsion);
    Json j;
    j["t"] = fibre.str();
    j["torsion"] = Json::array();
    for (const auto& d : torsion) j["torsion"].push_back(torsion_to_json(d));
    j["fm"] = Json::array();
    for (const auto& s : images) j["fm"].push_back(sheaf_to_json(s));
    std::ostringstream tb;
    tb << "fibre t = " << fibre.str() << "\n";
    for (std::size_t i = 0; i < images.size(); ++i) tb << "  " << images[i].str() << "\n";
    render(j, tb.str(), args, out);
    return 0;
}

std::string flat_verdict_text(FlatVerdict v) {
    switch (v) {
        case FlatVerdict::Flat: return "flat";
        case FlatVerdict::NotFlat: return "not flat";
        case FlatVerdict::Undetermined: return "undetermined";
    }
    return "?";
}

int cmd_analyze(const CommonArgs& args, std::ostream& out) {
    const WeierstrassFamily fam = load_family(args);
    const SpectralCover cover = load_cover(fam, args);
    AnalyzeOptions opts;
    opts.trunc = args.trunc;
    opts.lambda_value = lambda_value(args);
    const DegenerationReport report = analyze(fam, cover, opts);
    const Json j = report_to_json(report);

    std::ostringstream tb;
    tb << "flatness: " << flat_verdict_text(report.flatness.verdict) << " (generic length "
       << report.flatness.generic_length << ")\n";
    auto fibre_line = [&](const FibreAnalysis& fa) {
        tb << "fibre t = " << fa.fibre.str() << ":";
        if (fa.undetermined) {
            tb << " undetermined (" << fa.undetermined_reason << ")\n";
            return;
        }
        tb << " length " << fa.length << ", FM = {";
        for (std::size_t i = 0; i < fa.fm.size(); ++i) {
            if (i) tb << ", ";
            tb << fa.fm[i].str();
        }
        tb << "}\n";
    };
    fibre_line(report.generic);
    for (const auto& fa : report.special) fibre_line(fa);
    if (report.section_component) tb << "section component: trivial line bundle on every fibre\n";
    for (const auto& w : report.warnings) tb << "warning: " << w << "\n";
    if (report.s_flat_fm_family) tb << "verdict: S-flat FM family\n";
    render(j, tb.str(), args, out);
    return report.has_undetermined ? 3 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact spectral-cover analysis on Weierstrass cubic fibrations"};
    app.require_subcommand(1);

    CommonArgs args;
    auto add_common = [&](CLI::App* cmd, bool with_cover) {
        cmd->add_option("--family", args.family_path, "family JSON file")->required();
        if (with_cover) cmd->add_option("--cover", args.cover_path, "cover JSON file")->required();
        cmd->add_option("--lambda", args.lambda_text, "rational value for lambda");
        cmd->add_option("--t", args.t_text, "rational fibre parameter or 'generic'");
        cmd->add_option("--trunc", args.trunc, "truncation order for local charts")
            ->check(CLI::Range(4, 64));
        cmd->add_option("--out", args.out_path, "write JSON output to this file");
        cmd->add_option("--format", args.format, "output format")
            ->check(CLI::IsMember({"json", "table"}));
    };

    auto* c_disc = app.add_subcommand("discriminant", "discriminant of the family");
    add_common(c_disc, false);
    auto* c_sing = app.add_subcommand("singular-fibres", "singular fibres and their types");
    add_common(c_sing, false);
    auto* c_len = app.add_subcommand("fibre-length", "length of a fibre of the cover");
    add_common(c_len, true);
    auto* c_sup = app.add_subcommand("support", "support points of a fibre");
    add_common(c_sup, true);
    auto* c_loc = app.add_subcommand("localize", "classify the module at the nodal point");
    add_common(c_loc, true);
    auto* c_fm = app.add_subcommand("fm", "Fourier-Mukai images of a fibre");
    add_common(c_fm, true);
    auto* c_ana = app.add_subcommand("analyze", "full degeneration report");
    add_common(c_ana, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_disc->parsed()) return cmd_discriminant(args, out);
        if (c_sing->parsed()) return cmd_singular_fibres(args, out);
        if (c_len->parsed()) return cmd_fibre_length(args, out);
        if (c_sup->parsed()) return cmd_support(args, out);
        if (c_loc->parsed()) return cmd_localize(args, out);
        if (c_fm->parsed()) return cmd_fm(args, out);
        if (c_ana->parsed()) return cmd_analyze(args, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const Error& e) {
        switch (e.kind()) {
            case Error::Kind::Input:
                err << "error: " << e.what() << "\n";
                return 2;
            case Error::Kind::Undetermined:
                err << "undetermined: " << e.what() << "\n";
                return 3;
            case Error::Kind::Internal:
                err << "internal error: " << e.what() << "\n";
                return 1;
        }
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace specfm
