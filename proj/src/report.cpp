#include "lefschetz/report.hpp"

#include <chrono>
#include <sstream>

#include "lefschetz/apolar.hpp"
#include "lefschetz/version.hpp"

namespace lefschetz::cli {

using apolar::AGAlgebra;
using kernel::Rational;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
    return a.input == b.input && a.vars == b.vars && a.degree == b.degree &&
           a.hilbert == b.hilbert && a.is_cone == b.is_cone && a.vertex_dim == b.vertex_dim &&
           a.hessian_vanishes == b.hessian_vanishes && a.slp_holds == b.slp_holds &&
           a.slp_witness == b.slp_witness && a.jordan_type == b.jordan_type &&
           a.class_label == b.class_label && a.dual_dim == b.dual_dim &&
           a.stab_dim == b.stab_dim && a.seed == b.seed && a.version == b.version;
}

AnalysisReport analyze(const Form& f, std::uint64_t seed) {
    AnalysisReport r;
    r.input = f.poly().to_string();
    r.vars = static_cast<int>(f.nvars());
    r.degree = static_cast<int>(f.degree());
    r.seed = seed;
    r.version = kVersion;

    auto t0 = std::chrono::steady_clock::now();
    const AGAlgebra algebra = AGAlgebra::build(f);
    r.hilbert = algebra.hilbert();
    r.timings_ms["build_algebra"] = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto [cone, vdim] = apolar::is_cone(f);
    r.is_cone = cone;
    r.vertex_dim = vdim;
    r.hessian_vanishes = apolar::has_vanishing_hessian(f);
    r.timings_ms["invariants"] = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const apolar::SlpResult slp = apolar::has_slp(algebra, seed);
    r.slp_holds = slp.holds;
    if (slp.witness) {
        std::vector<std::string> w;
        for (const Rational& c : *slp.witness) w.push_back(c.to_string());
        r.slp_witness = std::move(w);
    }
    r.timings_ms["slp"] = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    r.jordan_type = apolar::generic_jordan_type(algebra, seed).parts;
    r.timings_ms["jordan"] = ms_since(t0);

    if (r.vars == 5 && r.degree == 3) {
        t0 = std::chrono::steady_clock::now();
        const cubics::CubicClass cls = cubics::classify(f, seed);
        r.class_label = cubics::to_string(cls.label);
        r.dual_dim = cls.invariants.dual_dim;
        r.stab_dim = cls.invariants.stab_dim;
        r.timings_ms["classify"] = ms_since(t0);
    } else {
        // Theorem-backed classification covers cubic threefolds in P^4 only
        r.class_label = "NOT_APPLICABLE";
    }
    return r;
}

nlohmann::json to_json(const AnalysisReport& r) {
    nlohmann::json j;
    j["input"] = r.input;
    j["vars"] = r.vars;
    j["degree"] = r.degree;
    j["hilbert"] = r.hilbert;
    j["cone"] = {{"is_cone", r.is_cone}, {"vertex_dim", r.vertex_dim}};
    j["hessian_vanishes"] = r.hessian_vanishes;
    j["slp"]["holds"] = r.slp_holds;
    if (r.slp_witness)
        j["slp"]["witness"] = *r.slp_witness;
    else
        j["slp"]["witness"] = nullptr;
    j["jordan_type"] = r.jordan_type;
    j["class"]["label"] = r.class_label;
    if (r.dual_dim)
        j["class"]["dual_dim"] = *r.dual_dim;
    else
        j["class"]["dual_dim"] = nullptr;
    if (r.stab_dim)
        j["class"]["stab_dim"] = *r.stab_dim;
    else
        j["class"]["stab_dim"] = nullptr;
    j["seed"] = r.seed;
    j["version"] = r.version;
    return j;
}

AnalysisReport report_from_json(const nlohmann::json& j) {
    AnalysisReport r;
    r.input = j.at("input").get<std::string>();
    r.vars = j.at("vars").get<int>();
    r.degree = j.at("degree").get<int>();
    r.hilbert = j.at("hilbert").get<std::vector<int>>();
    r.is_cone = j.at("cone").at("is_cone").get<bool>();
    r.vertex_dim = j.at("cone").at("vertex_dim").get<int>();
    r.hessian_vanishes = j.at("hessian_vanishes").get<bool>();
    r.slp_holds = j.at("slp").at("holds").get<bool>();
    if (!j.at("slp").at("witness").is_null())
        r.slp_witness = j.at("slp").at("witness").get<std::vector<std::string>>();
    r.jordan_type = j.at("jordan_type").get<std::vector<int>>();
    r.class_label = j.at("class").at("label").get<std::string>();
    if (!j.at("class").at("dual_dim").is_null())
        r.dual_dim = j.at("class").at("dual_dim").get<int>();
    if (!j.at("class").at("stab_dim").is_null())
        r.stab_dim = j.at("class").at("stab_dim").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.version = j.at("version").get<std::string>();
    return r;
}

std::string to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "input:            " << r.input << "\n";
    os << "vars / degree:    " << r.vars << " / " << r.degree << "\n";
    os << "hilbert:          (";
    for (std::size_t i = 0; i < r.hilbert.size(); ++i) os << (i ? "," : "") << r.hilbert[i];
    os << ")\n";
    os << "cone:             " << (r.is_cone ? "yes" : "no");
    if (r.is_cone) os << " (vertex dimension " << r.vertex_dim << ")";
    os << "\n";
    os << "hessian vanishes: " << (r.hessian_vanishes ? "yes" : "no") << "\n";
    os << "SLP:              " << (r.slp_holds ? "holds" : "fails");
    if (r.slp_witness) {
        os << "  witness l = (";
        for (std::size_t i = 0; i < r.slp_witness->size(); ++i)
            os << (i ? "," : "") << (*r.slp_witness)[i];
        os << ")";
    }
    os << "\n";
    os << "jordan type:      [";
    for (std::size_t i = 0; i < r.jordan_type.size(); ++i)
        os << (i ? "," : "") << r.jordan_type[i];
    os << "]\n";
    os << "class:            " << r.class_label;
    if (r.dual_dim) os << "  dual dim " << *r.dual_dim;
    if (r.stab_dim) os << "  stab dim " << *r.stab_dim;
    os << "\n";
    os << "seed:             " << r.seed << "\n";
    double total = 0;
    for (const auto& [k, v] : r.timings_ms) total += v;
    os << "elapsed:          " << total << " ms\n";
    return os.str();
}

}  // namespace lefschetz::cli
