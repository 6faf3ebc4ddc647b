#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "chowlef/checker.hpp"
#include "chowlef/expr.hpp"
#include "chowlef/models.hpp"
#include "chowlef/report.hpp"
#include "chowlef/sympow.hpp"
#include "chowlef/version.hpp"

namespace chowlef {

// nlohmann's default object keeps keys sorted, so dumps are reproducible
// byte for byte. Timestamps are therefore opt-in: a report written twice
// from the same inputs must compare equal.
using Json = nlohmann::json;

inline Json report_json(const LefschetzReport& r, std::optional<std::string> timestamp = {}) {
    Json j;
    j["schema"] = "chowlef.report";
    j["schema_version"] = 1;
    j["tool"] = kToolName;
    j["tool_version"] = kToolVersion;
    j["check"] = r.check;
    j["model"] = r.model_id;
    Json params;
    params["p"] = r.p;
    if (r.s) params["s"] = *r.s;
    params["divisor"] = r.divisor;
    params["exponent"] = r.exponent;
    j["params"] = params;
    Json result;
    result["verdict"] = to_string(r.verdict);
    result["rank"] = r.rank;
    result["domain_dim"] = r.domain_dim;
    result["codomain_dim"] = r.codomain_dim;
    result["kernel_basis"] = r.kernel_basis;
    if (r.surjective) result["surjective"] = *r.surjective;
    j["result"] = result;
    if (timestamp) j["timestamp"] = *timestamp;
    return j;
}

inline Json report_json(const TriangularDescentReport& r, std::optional<std::string> timestamp = {}) {
    Json j;
    j["schema"] = "chowlef.report";
    j["schema_version"] = 1;
    j["tool"] = kToolName;
    j["tool_version"] = kToolVersion;
    j["check"] = "descent";
    j["model"] = r.model_id;
    j["params"] = Json{{"p", r.p}, {"exponent", r.exponent}};
    j["result"] = Json{{"block_triangular", r.block_triangular},
                       {"diagonal_blocks_match", r.diagonal_blocks_match},
                       {"diagonal_injective", r.diagonal_injective},
                       {"full_injective", r.full_injective},
                       {"descent_holds", r.descent_holds()},
                       {"verdict", r.passed() ? "pass" : "fail"}};
    if (timestamp) j["timestamp"] = *timestamp;
    return j;
}

inline Json report_json(const SystemReport& r, std::optional<std::string> timestamp = {}) {
    Json j;
    j["schema"] = "chowlef.report";
    j["schema_version"] = 1;
    j["tool"] = kToolName;
    j["tool_version"] = kToolVersion;
    j["check"] = "extract-system";
    j["model"] = "sympow:g=" + std::to_string(r.g) + ",mode=formal";
    j["params"] = Json{{"g", r.g}, {"p", r.p}, {"k", r.k}};
    Json eqs = Json::array();
    for (const RingElement& e : r.equations_a) eqs.push_back(e.str() + " = 0");
    Json ys = Json::array();
    for (const auto& [m, e] : r.expressions_y)
        ys.push_back("y" + std::to_string(m) + " = " + e.str());
    j["result"] = Json{{"equations", eqs},
                       {"expressions", ys},
                       {"substitution", r.substitution_trail},
                       {"matches_closed_form", r.matches_closed_form}};
    if (timestamp) j["timestamp"] = *timestamp;
    return j;
}

inline std::string sanitize_filename(std::string s) {
    for (char& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-') c = '_';
    if (s.size() > 120) s.resize(120);
    return s;
}

inline std::filesystem::path write_report_file(const std::filesystem::path& dir,
                                               const std::string& stem, const Json& j) {
    std::filesystem::create_directories(dir);
    std::filesystem::path path = dir / (sanitize_filename(stem) + ".json");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report file " + path.string());
    out << j.dump(2) << "\n";
    return path;
}

// ---------------------------------------------------------------------------
// Model spec files: a presentation plus the model-level annotations (ample
// class, hom generators, cycle-class images). Parsing then serializing is
// idempotent because keys and term orders are canonical.

inline Json model_json(const Model& m) {
    Json j;
    j["schema"] = "chowlef.model";
    j["schema_version"] = 1;
    j["name"] = m.id;
    j["kind"] = to_string(m.kind);
    j["g"] = m.g;
    const RingPresentation& pres = *m.pres;
    j["truncation"] = pres.truncation_dim();
    Json gens = Json::array();
    for (const GeneratorSpec& g : pres.generators())
        gens.push_back(Json{{"name", g.name},
                            {"codim", g.codim},
                            {"kweight", g.kweight},
                            {"parity", g.parity == Parity::odd ? "odd" : "even"}});
    j["generators"] = gens;
    Json rels = Json::array();
    for (const RewriteRule& r : pres.rules()) {
        std::string lead = pres.generator(r.gen).name;
        if (r.power != 1) lead += "^" + std::to_string(r.power);
        rels.push_back(Json{{"lead", lead}, {"rhs", format_raw_terms(pres, r.rhs)}});
    }
    j["relations"] = rels;
    Json bounds = Json::array();
    for (const DegreeBound& b : pres.extra_bounds()) {
        Json weights;
        for (std::size_t i = 0; i < pres.generator_count(); ++i)
            if (b.weights[i] != 0) weights[pres.generator(i).name] = b.weights[i];
        bounds.push_back(Json{{"cap", b.cap}, {"weights", weights}});
    }
    j["bounds"] = bounds;
    if (m.ample) j["ample"] = m.ample->str();
    Json hom = Json::array();
    for (std::size_t gi : m.hom_gens) hom.push_back(pres.generator(gi).name);
    if (m.hom_declared) j["hom_generators"] = hom;
    if (m.has_cycle_class()) {
        Json cl;
        for (std::size_t i = 0; i < pres.generator_count(); ++i)
            cl[pres.generator(i).name] = m.cl_images[i].str();
        j["cycle_class"] = cl;
    }
    return j;
}

inline Model model_from_json(const Json& j, const std::string& fallback_name = "custom") {
    if (j.value("schema", "chowlef.model") != "chowlef.model")
        throw std::invalid_argument("model file: wrong schema");

    PresentationData d;
    d.id = j.value("name", fallback_name);
    if (!j.contains("generators") || !j["generators"].is_array())
        throw std::invalid_argument("model file: missing generators array");
    for (const Json& g : j["generators"]) {
        GeneratorSpec spec;
        spec.name = g.at("name").get<std::string>();
        spec.codim = g.value("codim", 1);
        spec.kweight = g.value("kweight", 0);
        std::string parity = g.value("parity", "even");
        if (parity != "even" && parity != "odd")
            throw std::invalid_argument("model file: parity must be 'even' or 'odd'");
        spec.parity = parity == "odd" ? Parity::odd : Parity::even;
        d.generators.push_back(std::move(spec));
    }
    if (!j.contains("truncation"))
        throw std::invalid_argument("model file: missing truncation");
    d.truncation_dim = j.at("truncation").get<int>();

    auto find_gen = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < d.generators.size(); ++i)
            if (d.generators[i].name == name) return i;
        throw std::invalid_argument("model file: unknown generator '" + name + "'");
    };

    for (const Json& rel : j.value("relations", Json::array())) {
        std::string lead = rel.at("lead").get<std::string>();
        std::string name = lead;
        int power = 1;
        if (auto caret = lead.find('^'); caret != std::string::npos) {
            name = lead.substr(0, caret);
            power = std::stoi(lead.substr(caret + 1));
        }
        RewriteRule rule;
        rule.gen = find_gen(name);
        rule.power = power;
        std::string rhs = rel.at("rhs").get<std::string>();
        if (rhs != "0") rule.rhs = parse_raw_terms(d.generators, rhs);
        d.rules.push_back(std::move(rule));
    }

    for (const Json& b : j.value("bounds", Json::array())) {
        DegreeBound bound;
        bound.cap = b.at("cap").get<int>();
        bound.weights.assign(d.generators.size(), 0);
        for (const auto& [name, w] : b.at("weights").items())
            bound.weights[find_gen(name)] = w.get<int>();
        d.extra_bounds.push_back(std::move(bound));
    }

    Model m;
    std::string kind = j.value("kind", "custom");
    m.kind = kind == "theta"        ? ModelKind::theta
             : kind == "divisor"    ? ModelKind::divisor
             : kind == "cohomology" ? ModelKind::cohomology
             : kind == "curve"      ? ModelKind::curve
             : kind == "sympow"     ? ModelKind::sympow
                                    : ModelKind::custom;
    m.g = j.value("g", 0);
    m.pres = build_presentation(std::move(d));
    m.id = m.pres->id();

    if (j.contains("ample")) m.ample = parse_element(m.pres, j.at("ample").get<std::string>());

    if (j.contains("hom_generators")) {
        m.hom_declared = true;
        for (const Json& name : j.at("hom_generators")) {
            auto gi = m.pres->find_generator(name.get<std::string>());
            if (!gi) throw std::invalid_argument("model file: unknown hom generator");
            m.hom_gens.push_back(*gi);
        }
    }
    if (j.contains("cycle_class")) {
        if (m.g < 1)
            throw std::invalid_argument("model file: cycle_class requires g >= 1 for the target");
        m.cohomology = cohomology_presentation(m.g);
        m.cl_images.assign(m.pres->generator_count(), RingElement::zero(m.cohomology));
        for (const auto& [name, expr] : j.at("cycle_class").items()) {
            auto gi = m.pres->find_generator(name);
            if (!gi) throw std::invalid_argument("model file: cycle_class names unknown generator");
            m.cl_images[*gi] = parse_element(m.cohomology, expr.get<std::string>());
        }
        m.hom_declared = true;
        for (std::size_t i = 0; i < m.pres->generator_count(); ++i)
            if (m.cl_images[i].is_zero()) {
                bool present = false;
                for (std::size_t gi : m.hom_gens) present = present || gi == i;
                if (!present) m.hom_gens.push_back(i);
            }
        std::sort(m.hom_gens.begin(), m.hom_gens.end());
    }
    return m;
}

inline Model load_model_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open model file " + path.string());
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("model file " + path.string() + ": " + e.what());
    }
    return model_from_json(j, path.stem().string());
}

inline void write_model_file(const std::filesystem::path& path, const Model& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write model file " + path.string());
    out << model_json(m).dump(2) << "\n";
}

}  // namespace chowlef
