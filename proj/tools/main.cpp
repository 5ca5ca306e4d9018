#include "blockspec/csv.hpp"
#include "blockspec/oracle.hpp"
#include "blockspec/sampler.hpp"
#include "blockspec/singularity.hpp"
#include "blockspec/spectrum.hpp"
#include "blockspec/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

using namespace blockspec;

namespace {

struct Output {
    std::unique_ptr<std::ofstream> file;
    std::ostream* stream = &std::cout;

    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file = std::make_unique<std::ofstream>(path);
        if (!*file) throw config_error("cannot open output file: " + path);
        stream = file.get();
    }
};

struct Config {
    int gamma = 1;
    int stack = 2;
    int arclen = 2;
    int order = 0;  // 0: pick a per-command default
    unsigned digits = 60;
    int n = -1;
    int k = 1;
    std::string type;
    int tail = 100;
    int bmax = 30;
    std::uint64_t seed = 20240808;
    int samples = 100000;
    std::string out;
    std::string format = "csv";
    bool limit = false;

    StructureParams params() const { return StructureParams(gamma, stack, arclen); }
    bool tsv() const { return format == "tsv"; }
    std::optional<BlockType> block_type() const {
        if (type.empty()) return std::nullopt;
        auto t = block_type_from_string(type);
        if (!t || *t == BlockType::Trivial || *t == BlockType::Other)
            throw config_error("type must be one of T, H, K, L, M");
        return t;
    }
};

void add_param_flags(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--gamma", cfg.gamma, "component genus bound (0..2)");
    cmd->add_option("--stack", cfg.stack, "minimum stack length r (1..4)");
    cmd->add_option("--arclen", cfg.arclen, "minimum arc length lambda (1..4)");
}

void add_output_flags(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--out", cfg.out, "output path (default: stdout)");
    cmd->add_option("--format", cfg.format, "csv or tsv")
        ->check(CLI::IsMember({"csv", "tsv"}));
}

std::string prob_str(const Rat& q, unsigned digits) { return to_decimal(q, digits); }
std::string prob_str(const Real& x, unsigned digits) { return to_decimal(x, digits); }

int cmd_series(const Config& cfg) {
    const int order = cfg.order > 0 ? cfg.order : 40;
    SeriesBundle b = solve_system(cfg.params(), order);
    auto types = block_type_series_all(b);
    Output out(cfg.out);
    TableWriter w(*out.stream, cfg.tsv());
    w.row({"n", "g", "f", "b0", "bgamma", "bT", "bH", "bK", "bL", "bM"});
    for (int n = 0; n < order; ++n)
        w.row({std::to_string(n), prob_str(b.g(n), cfg.digits), prob_str(b.f(n), cfg.digits),
               prob_str(b.B0[n], cfg.digits), prob_str(b.Bgamma[n], cfg.digits),
               prob_str(types.at(BlockType::T)[n], cfg.digits),
               prob_str(types.at(BlockType::H)[n], cfg.digits),
               prob_str(types.at(BlockType::K)[n], cfg.digits),
               prob_str(types.at(BlockType::L)[n], cfg.digits),
               prob_str(types.at(BlockType::M)[n], cfg.digits)});
    return 0;
}

int cmd_constants(const Config& cfg) {
    const int order = cfg.order > 0 ? cfg.order : 200;
    SeriesBundle b = solve_system(cfg.params(), order);
    SingularityOptions sopt;
    sopt.digits = cfg.digits;
    SingularityData d = analyze_singularity(b, sopt);
    ScopedPrecision guard(cfg.digits + 20);
    Output out(cfg.out);
    TableWriter w(*out.stream, cfg.tsv());
    w.row({"gamma", "r", "lambda", "rho", "tau", "tau_prime", "delta", "c", "eta", "alpha", "beta",
           "residual_q", "residual_qx", "tau_check"});
    Real tau_check = abs(d.tau - 1 / (1 - d.tau_prime));
    w.row({std::to_string(cfg.gamma), std::to_string(cfg.stack), std::to_string(cfg.arclen),
           to_decimal(d.rho, cfg.digits), to_decimal(d.tau, cfg.digits),
           to_decimal(d.tau_prime, cfg.digits), to_decimal(d.delta, cfg.digits),
           to_decimal(d.c, cfg.digits), to_decimal(d.eta, cfg.digits),
           to_decimal(d.alpha, cfg.digits), to_decimal(d.beta, cfg.digits),
           to_decimal(d.residual_q, 3), to_decimal(d.residual_qx, 3), to_decimal(tau_check, 3)});
    return 0;
}

int cmd_longest(const Config& cfg) {
    if (cfg.n < 0 && !cfg.limit)
        throw config_error("longest: pass --n for the exact law and/or --limit for the limit law");
    Output out(cfg.out);
    TableWriter w(*out.stream, cfg.tsv());
    if (cfg.n >= 0 && !cfg.limit) {
        const int order = std::max(cfg.order, cfg.n + 1);
        SeriesBundle b = solve_system(cfg.params(), order);
        Pmf law = longest_block_exact_dist(b, cfg.n);
        w.row({"m", "probability"});
        for (int m = 1; m <= cfg.n; ++m)
            w.row({std::to_string(m), prob_str(law.exact[static_cast<size_t>(m - 1)], cfg.digits)});
        return 0;
    }
    const int t = cfg.tail;
    const int order = std::max({cfg.order, 200, t + 2, cfg.n + 1});
    SeriesBundle b = solve_system(cfg.params(), order);
    SingularityOptions sopt;
    sopt.digits = cfg.digits;
    SingularityData d = analyze_singularity(b, sopt);
    LongestBlockLimitLaw lim(b, d);
    ScopedPrecision guard(cfg.digits + 20);
    if (cfg.n < 0) {
        // Limit law alone, with cumulative mass and the tail envelope.
        w.row({"k", "probability", "cumulative", "tail_bound"});
        Real cum(0);
        for (int k = 0; k <= t; ++k) {
            cum += lim.pmf(k);
            Real bound = 2 * d.alpha / sqrt(Real(k + 1));
            w.row({std::to_string(k), prob_str(lim.pmf(k), cfg.digits),
                   prob_str(cum, cfg.digits), prob_str(bound, cfg.digits)});
        }
        return 0;
    }
    // Exact-vs-limit comparison of the law of n - (longest block).
    Pmf law = longest_block_exact_dist(b, cfg.n);
    w.row({"k", "exact", "limit"});
    for (int k = 0; k <= std::min(t, cfg.n - 1); ++k)
        w.row({std::to_string(k),
               prob_str(law.exact[static_cast<size_t>(cfg.n - k - 1)], cfg.digits),
               prob_str(lim.pmf(k), cfg.digits)});
    return 0;
}

int cmd_tail(const Config& cfg) {
    const int order = std::max({cfg.order, 200, cfg.tail + 2});
    SeriesBundle b = solve_system(cfg.params(), order);
    SingularityOptions sopt;
    sopt.digits = cfg.digits;
    SingularityData d = analyze_singularity(b, sopt);
    Output out(cfg.out);
    *out.stream << to_decimal(tail_probability(b, d, cfg.tail), cfg.digits) << "\n";
    return 0;
}

int cmd_short(const Config& cfg) {
    if (cfg.k < 1) throw config_error("short: --k must be >= 1");
    if (cfg.n < 0 && !cfg.limit)
        throw config_error("short: pass --n for the exact law and/or --limit for the limit law");
    const int order = std::max({cfg.order, 200, cfg.n + 1, cfg.k + 2});
    SeriesBundle b = solve_system(cfg.params(), order);
    SingularityOptions sopt;
    sopt.digits = cfg.digits;
    SingularityData d = analyze_singularity(b, sopt);
    ShortBlockLimitLaw law = short_block_limit_law(b, d, cfg.k, cfg.block_type());
    ScopedPrecision guard(cfg.digits + 20);
    Output out(cfg.out);
    TableWriter w(*out.stream, cfg.tsv());
    *out.stream << "# nb_t=" << to_decimal(law.nb.t, cfg.digits)
                << " limit_expectation=" << to_decimal(law.limit_expectation, cfg.digits) << "\n";
    if (cfg.n >= 0) {
        Pmf exact = short_block_exact_dist(b, cfg.k, cfg.block_type(), cfg.n);
        w.row({"b", "exact", "nb"});
        for (size_t bb = 0; bb < exact.exact.size(); ++bb)
            w.row({std::to_string(bb), prob_str(exact.exact[bb], cfg.digits),
                   prob_str(law.nb.pmf(static_cast<int>(bb)), cfg.digits)});
    } else {
        w.row({"b", "nb"});
        for (int bb = 0; bb <= cfg.bmax; ++bb)
            w.row({std::to_string(bb), prob_str(law.nb.pmf(bb), cfg.digits)});
    }
    return 0;
}

int cmd_types(const Config& cfg) {
    const int order = std::max(cfg.order, 200);
    SeriesBundle b = solve_system(cfg.params(), order);
    SingularityOptions sopt;
    sopt.digits = cfg.digits;
    SingularityData d = analyze_singularity(b, sopt);
    TypeProbabilities tp = block_type_limit_prob(d);
    ScopedPrecision guard(cfg.digits + 20);
    Output out(cfg.out);
    TableWriter w(*out.stream, cfg.tsv());
    w.row({"type", "limit_probability", "conditional_probability", "rho_tau_form"});
    for (BlockType t : {BlockType::T, BlockType::H, BlockType::K, BlockType::L, BlockType::M})
        w.row({to_string(t), prob_str(tp.eta_form.at(t), cfg.digits),
               prob_str(tp.conditional.at(t), cfg.digits),
               prob_str(tp.rho_tau_form.at(t), cfg.digits)});
    return 0;
}

int cmd_oracle(const Config& cfg) {
    const int nmax = cfg.n >= 0 ? cfg.n : 10;
    if (nmax > 14) throw config_error("oracle: --n beyond the exhaustive bound 14");
    SeriesBundle b = solve_system(cfg.params(), nmax + 1);
    Output out(cfg.out);
    TableWriter w(*out.stream, cfg.tsv());
    w.row({"n", "oracle", "series", "equal"});
    bool all_equal = true;
    for (int n = 0; n <= nmax; ++n) {
        auto st = enumerate_structures(n, cfg.params());
        bool eq = b.g(n) == st.count;
        all_equal = all_equal && eq;
        w.row({std::to_string(n), std::to_string(st.count), prob_str(b.g(n), cfg.digits),
               eq ? "1" : "0"});
    }
    if (!all_equal) {
        std::cerr << "oracle: series/enumeration mismatch\n";
        return 4;
    }
    return 0;
}

int cmd_sample(const Config& cfg) {
    if (cfg.n < 0) throw config_error("sample: --n is required");
    const int order = std::max(cfg.order, cfg.n + 1);
    SeriesBundle b = solve_system(cfg.params(), order);
    BlockSequenceSampler sampler(b, cfg.n, cfg.seed);
    Output out(cfg.out);
    for (int i = 0; i < cfg.samples; ++i) *out.stream << sampler.sample(cfg.n).to_line() << "\n";
    return 0;
}

int cmd_analyze(const std::string& path, const Config& cfg) {
    Diagram d;
    if (path == "-") {
        d = parse_diagram(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) throw config_error("cannot open diagram file: " + path);
        d = parse_diagram(in);
    }
    Output out(cfg.out);
    std::ostream& os = *out.stream;
    os << format_diagram(d);
    os << "genus=" << genus(d) << "\n";
    os << "boundary_components=" << boundary_components(d) << "\n";
    auto comps = components(d);
    os << "components=" << comps.size() << "\n";
    for (const auto& b : blocks(d)) {
        os << "block " << b.begin << ".." << b.end << " length=" << b.length();
        switch (b.kind) {
            case BlockKind::Trivial: os << " trivial"; break;
            case BlockKind::ZeroBlock: os << " zero-block"; break;
            case BlockKind::GammaBlock: os << " gamma-block"; break;
        }
        if (b.shadow_type) os << " type=" << to_string(*b.shadow_type);
        os << "\n";
    }
    return 0;
}

int cmd_verify(const Config& cfg) {
    VerifyOptions opt;
    opt.digits = cfg.digits;
    opt.seed = cfg.seed;
    opt.samples = cfg.samples;
    auto results = run_acceptance(std::cout, opt);
    return all_passed(results) ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-spectrum toolkit for RNA pseudoknot structures"};
    app.require_subcommand(1);
    Config cfg;
    std::string analyze_path;

    auto* series = app.add_subcommand("series", "counting series as CSV");
    add_param_flags(series, cfg);
    series->add_option("--order", cfg.order, "truncation order N (default 40)");
    series->add_option("--digits", cfg.digits, "significant digits for decimals");
    add_output_flags(series, cfg);

    auto* constants = app.add_subcommand("constants", "dominant-singularity constants");
    add_param_flags(constants, cfg);
    constants->add_option("--order", cfg.order, "series order for seeding/validation (>= 200)");
    constants->add_option("--digits", cfg.digits, "working precision in decimal digits");
    add_output_flags(constants, cfg);

    auto* longest = app.add_subcommand("longest", "longest-block laws");
    add_param_flags(longest, cfg);
    longest->add_option("--n", cfg.n, "exact law at this length");
    longest->add_flag("--limit", cfg.limit, "limit law of n - (longest block)");
    longest->add_option("--tail", cfg.tail, "largest k in limit/comparison output");
    longest->add_option("--order", cfg.order, "series order override");
    longest->add_option("--digits", cfg.digits, "significant digits");
    add_output_flags(longest, cfg);

    auto* tail = app.add_subcommand("tail", "limit P(longest block >= n - t)");
    add_param_flags(tail, cfg);
    tail->add_option("--tail", cfg.tail, "threshold t (default 100)");
    tail->add_option("--order", cfg.order, "series order override");
    tail->add_option("--digits", cfg.digits, "working precision");
    add_output_flags(tail, cfg);

    auto* shortcmd = app.add_subcommand("short", "short-block laws");
    add_param_flags(shortcmd, cfg);
    shortcmd->add_option("--k", cfg.k, "block length k")->required();
    shortcmd->add_option("--type", cfg.type, "restrict to a block type (T, H, K, L, M)");
    shortcmd->add_option("--n", cfg.n, "exact law at this length");
    shortcmd->add_flag("--limit", cfg.limit, "negative-binomial limit law only");
    shortcmd->add_option("--bmax", cfg.bmax, "largest b in limit output");
    shortcmd->add_option("--order", cfg.order, "series order override");
    shortcmd->add_option("--digits", cfg.digits, "working precision");
    add_output_flags(shortcmd, cfg);

    auto* types = app.add_subcommand("types", "block-type limit probabilities");
    add_param_flags(types, cfg);
    types->add_option("--order", cfg.order, "series order override");
    types->add_option("--digits", cfg.digits, "working precision");
    add_output_flags(types, cfg);

    auto* oracle = app.add_subcommand("oracle", "series vs exhaustive enumeration");
    add_param_flags(oracle, cfg);
    oracle->add_option("--n", cfg.n, "largest length to enumerate (default 10, max 14)");
    add_output_flags(oracle, cfg);

    auto* sample = app.add_subcommand("sample", "draw block sequences");
    add_param_flags(sample, cfg);
    sample->add_option("--n", cfg.n, "structure length")->required();
    sample->add_option("--samples", cfg.samples, "number of samples");
    sample->add_option("--seed", cfg.seed, "RNG seed");
    sample->add_option("--order", cfg.order, "series order override");
    add_output_flags(sample, cfg);

    auto* analyze = app.add_subcommand("analyze", "genus/blocks report for a diagram file");
    analyze->add_option("file", analyze_path, "diagram file ('-' for stdin)")->required();
    add_output_flags(analyze, cfg);

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--digits", cfg.digits, "working precision");
    verify->add_option("--seed", cfg.seed, "sampler seed");
    verify->add_option("--samples", cfg.samples, "sampler draws");

    try {
        app.parse(argc, argv);
        if (series->parsed()) return cmd_series(cfg);
        if (constants->parsed()) return cmd_constants(cfg);
        if (longest->parsed()) return cmd_longest(cfg);
        if (tail->parsed()) return cmd_tail(cfg);
        if (shortcmd->parsed()) return cmd_short(cfg);
        if (types->parsed()) return cmd_types(cfg);
        if (oracle->parsed()) return cmd_oracle(cfg);
        if (sample->parsed()) return cmd_sample(cfg);
        if (analyze->parsed()) return cmd_analyze(analyze_path, cfg);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
