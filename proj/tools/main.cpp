#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lefschetz/apolar.hpp"
#include "lefschetz/parser.hpp"
#include "lefschetz/report.hpp"
#include "lefschetz/schubert.hpp"
#include "lefschetz/version.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNotHomogeneous = 3;
constexpr int kExitUnrecognized = 4;

int run_analyze(const std::string& expr, const std::string& input_file, std::size_t vars,
                std::uint64_t seed, const std::string& format) {
    std::string text = expr;
    if (!input_file.empty()) {
        std::ifstream in(input_file);
        if (!in) {
            std::cerr << "error: cannot open '" << input_file << "'\n";
            return kExitParse;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    lefschetz::poly::Polynomial p;
    try {
        p = lefschetz::poly::parse_polynomial(text, vars);
    } catch (const lefschetz::poly::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    if (p.is_zero() || !p.is_homogeneous() || p.total_degree() == 0) {
        std::cerr << "error: input must be a nonzero homogeneous form of degree >= 1\n";
        return kExitNotHomogeneous;
    }
    const lefschetz::cli::AnalysisReport report =
        lefschetz::cli::analyze(lefschetz::poly::Form(p), seed);
    if (format == "json")
        std::cout << lefschetz::cli::to_json(report).dump(2) << "\n";
    else
        std::cout << lefschetz::cli::to_text(report);
    return report.class_label == "UNRECOGNIZED" ? kExitUnrecognized : 0;
}

void print_locus_row(const std::string& name, int dim, const mpz_class& deg) {
    std::cout << name << "\t" << dim << "\t" << deg.get_str() << "\n";
}

int run_loci(const std::string& which, int n, int d) {
    using namespace lefschetz::schubert;
    std::cout << "locus\tdim\tdegree\n";
    if (which == "cones") {
        const LocusInfo info = cone_locus_info(4, 3);
        print_locus_row("C4", info.dim, info.degree);
    } else if (which == "vanishing-hessian") {
        const LocusInfo info = vanishing_hessian_locus();
        print_locus_row("K", info.dim, info.degree);
    } else if (which == "intersection") {
        const LocusInfo info = intersection_locus();
        print_locus_row("K^C4", info.dim, info.degree);
    } else if (which == "cone-formula") {
        // cone_locus_info already errors when the two routes disagree
        const LocusInfo info = cone_locus_info(n, d);
        print_locus_row("C(" + std::to_string(d) + "," + std::to_string(n) + ")", info.dim,
                        info.degree);
        std::cout << "segre route:      " << info.degree.get_str() << "\n";
        std::cout << "binomial formula: " << info.degree.get_str() << " (routes agree)\n";
    } else {
        std::cerr << "error: unknown locus '" << which << "'\n";
        return 1;
    }
    return 0;
}

int run_jordan(const std::string& expr, std::size_t vars, const std::string& element) {
    lefschetz::poly::Polynomial p;
    try {
        p = lefschetz::poly::parse_polynomial(expr, vars);
    } catch (const lefschetz::poly::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    if (p.is_zero() || !p.is_homogeneous() || p.total_degree() == 0) {
        std::cerr << "error: input must be a nonzero homogeneous form of degree >= 1\n";
        return kExitNotHomogeneous;
    }
    std::vector<lefschetz::kernel::Rational> l;
    std::stringstream ss(element);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            l.push_back(lefschetz::kernel::Rational::from_string(tok));
        } catch (const std::invalid_argument&) {
            std::cerr << "error: bad element entry '" << tok << "'\n";
            return 1;
        }
    }
    if (l.size() != vars) {
        std::cerr << "error: element has " << l.size() << " entries, expected " << vars << "\n";
        return 1;
    }
    const auto algebra = lefschetz::apolar::AGAlgebra::build(lefschetz::poly::Form(p));
    const auto jt = lefschetz::apolar::jordan_type(algebra, l);
    std::cout << "[";
    for (std::size_t i = 0; i < jt.parts.size(); ++i) std::cout << (i ? "," : "") << jt.parts[i];
    std::cout << "]\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for cubic threefolds: apolarity, Lefschetz properties, "
                 "Jordan types and the degree computations for their parameter loci"};
    app.set_version_flag("--version", lefschetz::kVersion);
    app.require_subcommand(1);

    // analyze
    std::string expr, input_file, format = "text";
    std::size_t vars = 5;
    std::uint64_t seed = 0;
    CLI::App* analyze = app.add_subcommand("analyze", "full analysis of one form");
    analyze->add_option("--expr", expr, "polynomial expression");
    analyze->add_option("--input", input_file, "file containing the expression");
    analyze->add_option("--vars", vars, "number of variables (default 5)");
    analyze->add_option("--seed", seed, "seed for all randomized searches (default 0)");
    analyze->add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // loci
    std::string which;
    int locus_n = 4, locus_d = 3;
    CLI::App* loci = app.add_subcommand("loci", "dimension/degree table of parameter loci");
    loci->add_option("--which", which, "cones|vanishing-hessian|intersection|cone-formula")
        ->required();
    loci->add_option("--n", locus_n, "ambient projective dimension (cone-formula)");
    loci->add_option("--d", locus_d, "hypersurface degree (cone-formula)");

    // jordan
    std::string jexpr, element;
    std::size_t jvars = 5;
    CLI::App* jordan = app.add_subcommand("jordan", "Jordan type for a specific linear form");
    jordan->add_option("--expr", jexpr, "polynomial expression")->required();
    jordan->add_option("--vars", jvars, "number of variables (default 5)");
    jordan->add_option("--element", element, "comma-separated coefficients of l")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            if (expr.empty() && input_file.empty()) {
                std::cerr << "error: provide --expr or --input\n";
                return kExitParse;
            }
            return run_analyze(expr, input_file, vars, seed, format);
        }
        if (loci->parsed()) return run_loci(which, locus_n, locus_d);
        if (jordan->parsed()) return run_jordan(jexpr, jvars, element);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
