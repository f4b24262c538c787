#include "specfm/json_io.hpp"

#include <fstream>

#include "specfm/error.hpp"
#include "specfm/parse.hpp"

namespace specfm {

namespace {

std::string require_string(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        fail_input(std::string("json: missing or non-string field '") + key + "'");
    return j[key].get<std::string>();
}

}  // namespace

WeierstrassFamily family_from_json(const Json& j) {
    const VarSet tset{Var::t};
    return WeierstrassFamily::from_coeffs(parse_poly(require_string(j, "a2"), tset),
                                          parse_poly(require_string(j, "a4"), tset),
                                          parse_poly(require_string(j, "a6"), tset));
}

Json family_to_json(const WeierstrassFamily& fam) {
    Json j;
    j["a2"] = fam.a2().str();
    j["a4"] = fam.a4().str();
    j["a6"] = fam.a6().str();
    return j;
}

Ideal ideal_from_json(const Json& j) {
    if (!j.contains("vars") || !j["vars"].is_array()) fail_input("json ideal: missing 'vars'");
    VarSet vars;
    for (const auto& v : j["vars"]) {
        auto var = var_from_name(v.get<std::string>());
        if (!var || *var == Var::w) fail_input("json ideal: bad variable name");
        vars.add(*var);
    }
    if (!j.contains("gens") || !j["gens"].is_array()) fail_input("json ideal: missing 'gens'");
    std::vector<Poly> gens;
    for (const auto& g : j["gens"]) gens.push_back(parse_poly(g.get<std::string>(), vars));
    return Ideal::make(vars, std::move(gens));
}

Json ideal_to_json(const Ideal& ideal) {
    Json j;
    j["vars"] = Json::array();
    for (Var v : ideal.vars.list()) j["vars"].push_back(var_name(v));
    j["gens"] = Json::array();
    for (const auto& g : ideal.gens) j["gens"].push_back(g.str());
    return j;
}

SpectralCover cover_from_json(const WeierstrassFamily& fam, const Json& j) {
    VarSet vars{Var::x, Var::y, Var::t};
    if (j.contains("vars")) {
        vars = VarSet{};
        for (const auto& v : j["vars"]) {
            auto var = var_from_name(v.get<std::string>());
            if (!var) fail_input("json cover: bad variable name");
            vars.add(*var);
        }
    }
    if (!j.contains("gens") || !j["gens"].is_array()) fail_input("json cover: missing 'gens'");
    std::vector<Poly> gens;
    for (const auto& g : j["gens"]) gens.push_back(parse_poly(g.get<std::string>(), vars));
    bool section = false;
    if (j.contains("infinity_components")) {
        for (const auto& c : j["infinity_components"]) {
            const std::string type = c.value("type", "");
            if (type == "section")
                section = true;
            else
                fail_input("json cover: unknown infinity component type '" + type + "'");
        }
    }
    return make_cover(fam, Ideal::make(vars, std::move(gens)), section);
}

Json cover_to_json(const SpectralCover& cover) {
    Json j = ideal_to_json(cover.affine);
    j["infinity_components"] = Json::array();
    if (cover.section_at_infinity) j["infinity_components"].push_back({{"type", "section"}});
    return j;
}

Json local_type_to_json(const LocalModuleType& t) {
    Json j;
    switch (t.kind) {
        case LocalModuleType::Kind::Simple:
            j["kind"] = "simple";
            break;
        case LocalModuleType::Kind::Band:
            j["kind"] = "band";
            j["word"] = Json::array({1, 1});
            j["multiplicity"] = 1;
            j["lambda"] = t.band_lambda.str();
            break;
        case LocalModuleType::Kind::String:
            j["kind"] = "string";
            j["orientation"] = t.orientation == LocalModuleType::Orientation::Xi ? "xi" : "eta";
            if (t.orientation == LocalModuleType::Orientation::Xi) j["name"] = "N(0()1)";
            break;
    }
    j["length"] = t.length;
    return j;
}

Json torsion_to_json(const TorsionModuleDescriptor& d) {
    Json j;
    j["t"] = d.fibre.str();
    if (d.is_cluster) {
        j["cluster_degree"] = d.cluster_degree;
    } else {
        j["point"] = Json::array({d.point.X.str(), d.point.Y.str(), d.point.Z.str()});
    }
    j["length"] = d.length;
    j["on_smooth_locus"] = d.on_smooth_locus;
    if (d.local_type) j["local_type"] = local_type_to_json(*d.local_type);
    j["at_section"] = d.at_section;
    if (d.i_moved) j["i_moved"] = true;
    return j;
}

Json sheaf_to_json(const SheafDescriptor& s) {
    Json j;
    j["rank"] = s.rank;
    j["degree"] = s.degree;
    j["locally_free"] = s.locally_free;
    j["indecomposable"] = s.indecomposable;
    j["semistable"] = s.semistable;
    switch (s.variant) {
        case SheafVariant::Trivial:
            j["variant"] = "trivial";
            break;
        case SheafVariant::LineBundle:
            j["variant"] = "line_bundle";
            if (s.line_identity_undetermined) j["identity"] = "undetermined";
            if (s.conjugate_cluster) j["conjugate_cluster"] = true;
            break;
        case SheafVariant::BandBundle:
            j["variant"] = "band_bundle";
            j["word"] = Json::array({1, -1});
            j["multiplicity"] = 1;
            j["lambda"] = s.band_lambda ? s.band_lambda->str() : "";
            break;
        case SheafVariant::StringSheaf:
            j["variant"] = "string_sheaf";
            j["params"] = s.string_params;
            break;
    }
    return j;
}

Json fibre_analysis_to_json(const FibreAnalysis& fa) {
    Json j;
    j["t"] = fa.fibre.str();
    if (fa.undetermined) {
        j["undetermined"] = true;
        j["reason"] = fa.undetermined_reason;
        return j;
    }
    j["length"] = fa.length;
    j["torsion"] = Json::array();
    for (const auto& d : fa.torsion) j["torsion"].push_back(torsion_to_json(d));
    j["fm"] = Json::array();
    for (const auto& s : fa.fm) j["fm"].push_back(sheaf_to_json(s));
    long tr = 0, td = 0, fr = 0, fd = 0;
    for (const auto& d : fa.torsion) {
        const ChargeVector c = charge_of(d);
        tr += c.rank;
        td += c.degree;
    }
    for (const auto& s : fa.fm) {
        const ChargeVector c = charge_of(s);
        fr += c.rank;
        fd += c.degree;
    }
    j["charges"] = Json{{"torsion_total", Json::array({tr, td})},
                        {"fm_total", Json::array({fr, fd})}};
    if (!fa.warnings.empty()) j["warnings"] = fa.warnings;
    return j;
}

Json report_to_json(const DegenerationReport& report) {
    Json j;
    j["schema_version"] = 1;
    j["family"] = family_to_json(report.family);
    j["cover"] = cover_to_json(report.cover);
    if (report.lambda_value) j["lambda"] = report.lambda_value->str();

    {
        Json d;
        d["poly"] = report.discriminant.str();
        d["degree"] = report.discriminant.degree_in(Var::t);
        d["rational_roots"] = Json::array();
        for (const auto& [t0, mult] : report.discriminant_roots)
            d["rational_roots"].push_back({{"t", t0.str()}, {"multiplicity", mult}});
        if (report.discriminant_unresolved_degree >= 2)
            d["unresolved_degree"] = report.discriminant_unresolved_degree;
        j["discriminant"] = d;
    }

    {
        Json f;
        switch (report.flatness.verdict) {
            case FlatVerdict::Flat: f["verdict"] = "flat"; break;
            case FlatVerdict::NotFlat: f["verdict"] = "not_flat"; break;
            case FlatVerdict::Undetermined: f["verdict"] = "undetermined"; break;
        }
        f["generic_length"] = report.flatness.generic_length;
        f["checked"] = Json::array();
        for (const auto& [t0, len] : report.flatness.checked) {
            Json e;
            e["t"] = t0.str();
            if (len)
                e["length"] = *len;
            else
                e["length"] = "infinite";
            f["checked"].push_back(e);
        }
        if (!report.flatness.unresolved_factors.empty()) {
            f["unresolved_factors"] = Json::array();
            for (const auto& p : report.flatness.unresolved_factors)
                f["unresolved_factors"].push_back(p.str());
            if (report.flatness.unresolved_t_regular)
                f["unresolved_t_regular"] = *report.flatness.unresolved_t_regular;
        }
        if (report.has_ideal_quotient_certificate)
            f["ideal_quotient_certificate"] =
                Json{{"t_regular", report.ideal_quotient_t_regular}};
        j["flatness"] = f;
    }

    j["generic_fibre"] = fibre_analysis_to_json(report.generic);
    j["special_fibres"] = Json::array();
    for (const auto& fa : report.special) j["special_fibres"].push_back(fibre_analysis_to_json(fa));

    if (report.section_component) {
        Json s;
        s["present"] = true;
        s["fm"] = "trivial line bundle on every fibre";
        j["section_component"] = s;
    }

    j["warnings"] = report.warnings;
    j["s_flat_fm_family"] = report.s_flat_fm_family;
    j["coverage"] = report.coverage_note;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_input("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail_input("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) fail_input("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace specfm
