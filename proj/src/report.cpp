#include "charclass/report.hpp"

#include "charclass/errors.hpp"

namespace charclass {

namespace {

Json coeff_array(const ChowClass& c) {
    Json a = Json::array();
    for (int k = 0; k <= c.dim(); ++k) a.push_back(rat_str(c.h_coeff(k)));
    return a;
}

Json exceptional_array(const ChowClass& c) {
    Json blocks = Json::array();
    for (int p = 0; p < c.ambient().m; ++p) {
        Json b = Json::array();
        for (int k = 1; k <= c.dim(); ++k) b.push_back(rat_str(c.e_coeff(p, k)));
        blocks.push_back(std::move(b));
    }
    return blocks;
}

// Inverse of class_to_json, used so the text renderer derives everything
// from the machine report.
ChowClass class_from_json(const Ambient& amb, const Json& cj) {
    ChowClass c(amb);
    const Json& coeffs = cj.is_object() ? cj.at("coefficients") : cj;
    for (int k = 0; k <= amb.n && k < static_cast<int>(coeffs.size()); ++k)
        c.set_h(k, parse_rational(coeffs[k].get<std::string>()));
    if (cj.is_object() && cj.contains("exceptional")) {
        const Json& blocks = cj.at("exceptional");
        for (int p = 0; p < amb.m && p < static_cast<int>(blocks.size()); ++p)
            for (int k = 1; k <= amb.n && k - 1 < static_cast<int>(blocks[p].size());
                 ++k)
                c.set_e(p, k, parse_rational(blocks[p][k - 1].get<std::string>()));
    }
    return c;
}

std::string class_text(const Json& report, const Json& cj) {
    const Ambient amb = parse_ambient(report.at("ambient").get<std::string>());
    return class_from_json(amb, cj).to_string();
}

std::string render_hypersurface(const Json& j) {
    std::string out;
    out += "ambient: " + j.at("ambient").get<std::string>() + "\n";
    out += "divisor: " + class_text(j, j.at("divisor")) + "\n";
    const Json& sing = j.at("singularities");
    if (sing.empty()) {
        out += "singular points: none\n";
    } else {
        out += "singular points:\n";
        for (const auto& s : sing) {
            out += "  " + s.at("point").get<std::string>() + " (chart " +
                   std::to_string(s.at("chart").get<int>()) +
                   "): mu = " + std::to_string(s.at("mu").get<long long>());
            if (s.at("certified").get<bool>())
                out += ", certified at cutoff " +
                       std::to_string(s.at("cutoff").get<int>());
            else
                out += ", NOT certified (cutoff " +
                       std::to_string(s.at("cutoff").get<int>()) + ")";
            out += "\n";
        }
    }
    if (j.contains("fulton")) {
        out += "fulton class: " + class_text(j, j.at("fulton")) + "\n";
        out += "mu class: " + class_text(j, j.at("mu_class")) + "\n";
        out += "csm class: " + class_text(j, j.at("csm")) + "\n";
        out += "euler(X): " + j.at("euler").dump() + "\n";
    }
    if (j.contains("routes")) {
        const Json& r = j.at("routes");
        out += "chi(complement) via log formula: " + r.at("log_formula").dump() + "\n";
        out += "chi(complement) via csm additivity: " +
               r.at("csm_additivity").dump() + "\n";
        out += std::string("routes consistent: ") +
               (j.at("consistent").get<bool>() ? "yes" : "NO") + "\n";
    }
    if (j.contains("chi_complement"))
        out += "chi(complement): " + j.at("chi_complement").dump() + "\n";
    if (j.contains("completeness")) {
        out += "chart completeness check:\n";
        for (const auto& c : j.at("completeness")) {
            out += "  chart " + std::to_string(c.at("chart").get<int>()) + ": ";
            if (c.at("status").get<std::string>() == "not finite") {
                out += "critical locus not finite\n";
            } else {
                out += "critical total " + c.at("critical_total").dump() +
                       ", claimed " + c.at("claimed").dump() + ", " +
                       (c.at("match").get<bool>() ? "match" : "MISMATCH") + "\n";
            }
        }
    }
    return out;
}

std::string render_verification(const Json& j) {
    std::string out;
    out += "scenario: " + j.at("scenario").get<std::string>() + "\n";
    out += "  lhs:  " + class_text(j, j.at("lhs")) + "\n";
    out += "  rhs:  " + class_text(j, j.at("rhs")) + "\n";
    if (!j.at("equal").get<bool>())
        out += "  diff: " + class_text(j, j.at("diff")) + "\n";
    out += std::string("  equal: ") + (j.at("equal").get<bool>() ? "yes" : "NO") +
           "\n";
    return out;
}

}  // namespace

Json class_to_json(const ChowClass& c) {
    if (!c.ambient().is_blowup()) return coeff_array(c);
    Json obj;
    obj["coefficients"] = coeff_array(c);
    obj["exceptional"] = exceptional_array(c);
    return obj;
}

Json singularities_to_json(const SingularityData& sing) {
    Json a = Json::array();
    for (const auto& rec : sing) {
        Json s;
        s["point"] = point_to_string(rec.point);
        s["chart"] = rec.chart;
        s["mu"] = rec.milnor.mu;
        s["cutoff"] = rec.milnor.cutoff;
        s["certified"] = rec.milnor.certified;
        a.push_back(std::move(s));
    }
    return a;
}

Json hypersurface_report(const HypersurfaceSpec& spec) {
    Json j;
    j["ambient"] = spec.ambient.to_string();
    j["divisor"] = class_to_json(spec.divisor_class);
    j["singularities"] = singularities_to_json(spec.singularities);
    j["fulton"] = class_to_json(fulton_divisor(spec));
    j["mu_class"] = class_to_json(mu_class_isolated(spec.singularities, spec.ambient));
    const ChowClass csm = csm_hypersurface(spec);
    j["csm"] = class_to_json(csm);
    j["euler"] = euler(csm).convert_to<long long>();
    j["chi_complement"] = chi_complement(spec).convert_to<long long>();
    return j;
}

Json milnor_to_json(const MilnorResult& r) {
    Json j;
    j["mu"] = r.mu;
    j["cutoff"] = r.cutoff;
    j["certified"] = r.certified;
    return j;
}

Json verification_to_json(const VerificationReport& r) {
    Json j;
    j["scenario"] = r.scenario;
    j["ambient"] = r.lhs.ambient().to_string();
    j["lhs"] = class_to_json(r.lhs);
    j["rhs"] = class_to_json(r.rhs);
    j["diff"] = class_to_json(r.diff);
    j["equal"] = r.equal;
    return j;
}

std::string render_text(const Json& j) {
    if (j.contains("scenarios")) {
        std::string out;
        for (const auto& s : j.at("scenarios")) out += render_verification(s);
        out += std::string("all equal: ") +
               (j.at("all_equal").get<bool>() ? "yes" : "NO") + "\n";
        return out;
    }
    if (j.contains("scenario")) return render_verification(j);
    if (j.contains("divisor")) return render_hypersurface(j);
    if (j.contains("expression")) {
        std::string out;
        out += "ambient: " + j.at("ambient").get<std::string>() + "\n";
        out += "expression: " + j.at("expression").get<std::string>() + "\n";
        out += "class: " + class_text(j, j.at("class")) + "\n";
        out += "degree: " + j.at("degree").get<std::string>() + "\n";
        return out;
    }
    if (j.contains("mu")) {
        std::string out;
        out += "mu: " + j.at("mu").dump() + "\n";
        out += "cutoff: " + j.at("cutoff").dump() + "\n";
        out += std::string("certified: ") +
               (j.at("certified").get<bool>() ? "yes" : "no") + "\n";
        return out;
    }
    return j.dump(2) + "\n";
}

}  // namespace charclass
