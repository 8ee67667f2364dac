#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lefschetz/classify.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz::cli {

using poly::Form;

// Full analysis of one form: Hilbert vector, cone test, Hessian, SLP with
// witness, generic Jordan type, classification. Timings are advisory and
// excluded from serialization and equality.
struct AnalysisReport {
    std::string input;  // canonical polynomial string
    int vars = 0;
    int degree = 0;
    std::vector<int> hilbert;
    bool is_cone = false;
    int vertex_dim = -1;
    bool hessian_vanishes = false;
    bool slp_holds = false;
    std::optional<std::vector<std::string>> slp_witness;
    std::vector<int> jordan_type;
    std::string class_label;
    std::optional<int> dual_dim;
    std::optional<int> stab_dim;
    std::uint64_t seed = 0;
    std::string version;
    std::map<std::string, double> timings_ms;

    friend bool operator==(const AnalysisReport& a, const AnalysisReport& b);
};

// Runs build_algebra, the cone and Hessian tests, has_slp,
// generic_jordan_type and (for cubics in 5 variables) classify.
AnalysisReport analyze(const Form& f, std::uint64_t seed);

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);
std::string to_text(const AnalysisReport& r);

}  // namespace lefschetz::cli
