// diagsum: decide, certify, construct and explore doubly stochastic
// matrices with constant restricted diagonal sums.
//
// Exit codes: 0 = affirmative decision / success, 1 = negative decision,
// 2 = error (bad input, violated precondition, I/O failure).

#include "rcds/assignment.hpp"
#include "rcds/constructors.hpp"
#include "rcds/io.hpp"
#include "rcds/numeric.hpp"
#include "rcds/oracle.hpp"
#include "rcds/permanent.hpp"
#include "rcds/potentials.hpp"
#include "rcds/search.hpp"
#include "rcds/structure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace rcds;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RatMatrix load_matrix(const std::string& path) {
    const std::string text = slurp(path);
    return parse_matrix(text, sniff_format(text));
}

Pattern load_pattern(const std::string& path) { return parse_pattern(slurp(path)); }

json matrix_json(const RatMatrix& X) {
    json rows = json::array();
    for (int i = 0; i < X.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < X.cols(); ++j) row.push_back(to_string(X.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"n", X.rows()}, {"rows", std::move(rows)}};
}

json pattern_json(const Pattern& A) {
    json rows = json::array();
    for (int i = 0; i < A.rows(); ++i) {
        std::string row;
        for (int j = 0; j < A.cols(); ++j) row += A.at(i, j) ? '1' : '0';
        rows.push_back(row);
    }
    return rows;
}

std::vector<std::string> rationals_text(const std::vector<Rational>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(to_string(x));
    return out;
}

std::uint64_t oracle_limit(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("DIAGSUM_ORACLE_LIMIT")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw error("DIAGSUM_ORACLE_LIMIT is not a positive integer");
    }
    return kDefaultDiagonalLimit;
}

int cmd_check(const std::string& file, bool as_json) {
    RatMatrix X = load_matrix(file);
    if (!X.is_square()) throw error("matrix is not square");
    const bool ds = is_doubly_stochastic(X);
    if (!ds) {
        if (as_json)
            std::cout << json{{"doubly_stochastic", false}, {"rcds", false}}.dump() << "\n";
        else
            std::cout << "not doubly stochastic\n";
        return kExitNo;
    }
    ExtremeDiagonals ext = extreme_diagonal_sums(X);
    const bool rcds = ext.min_cert.value == ext.max_cert.value;
    if (as_json) {
        json out{{"doubly_stochastic", true}, {"rcds", rcds}};
        if (rcds) {
            out["sum"] = to_string(ext.min_cert.value);
        } else {
            out["min"] = to_string(ext.min_cert.value);
            out["max"] = to_string(ext.max_cert.value);
            out["width"] = to_string(ext.max_cert.value - ext.min_cert.value);
        }
        std::cout << out.dump() << "\n";
    } else if (rcds) {
        std::cout << "RCDS, sum = " << to_string(ext.min_cert.value) << "\n";
    } else {
        std::cout << "not RCDS, min = " << to_string(ext.min_cert.value)
                  << ", max = " << to_string(ext.max_cert.value)
                  << ", width = " << to_string(ext.max_cert.value - ext.min_cert.value) << "\n";
    }
    return rcds ? kExitYes : kExitNo;
}

int cmd_width(const std::string& file, bool as_json) {
    Rational w = diagonal_width(load_matrix(file));
    if (as_json)
        std::cout << json{{"width", to_string(w)}}.dump() << "\n";
    else
        std::cout << to_string(w) << "\n";
    return kExitYes;
}

int cmd_pattern(const std::string& file, bool as_json) {
    RcdsDecision d = decide_rcds_pattern(load_pattern(file));
    if (as_json) {
        json out{{"rcds_pattern", d.is_rcds_pattern},
                 {"u", rationals_text(d.potentials.u)},
                 {"v", rationals_text(d.potentials.v)}};
        if (d.is_rcds_pattern) {
            out["constant_sum"] = to_string(*d.constant_sum);
            out["realization"] = matrix_json(*d.realization);
        } else {
            json vi = json::array();
            for (auto [i, j] : d.violating_positions) vi.push_back(json::array({i, j}));
            out["violating_positions"] = std::move(vi);
        }
        std::cout << out.dump() << "\n";
        return d.is_rcds_pattern ? kExitYes : kExitNo;
    }
    std::cout << "u =";
    for (const auto& x : d.potentials.u) std::cout << ' ' << to_string(x);
    std::cout << "\nv =";
    for (const auto& x : d.potentials.v) std::cout << ' ' << to_string(x);
    std::cout << "\n";
    if (d.is_rcds_pattern) {
        std::cout << "RCDS pattern, constant sum = " << to_string(*d.constant_sum) << "\n"
                  << serialize_matrix(*d.realization, MatrixFormat::plain);
        return kExitYes;
    }
    std::cout << "not an RCDS pattern; non-positive cells:";
    for (auto [i, j] : d.violating_positions) std::cout << " (" << i << "," << j << ")";
    std::cout << "\n";
    return kExitNo;
}

ZigZagSpec read_zigzag_spec(const std::string& path) {
    json j;
    try {
        j = json::parse(slurp(path));
    } catch (const json::exception& e) {
        throw error(std::string("invalid zig-zag spec: ") + e.what());
    }
    ZigZagSpec spec;
    if (!j.contains("blocks") || !j.contains("constants"))
        throw error("zig-zag spec needs \"blocks\" and \"constants\"");
    for (const auto& b : j.at("blocks"))
        spec.block_dims.emplace_back(b.at(0).get<int>(), b.at(1).get<int>());
    for (const auto& c : j.at("constants"))
        spec.constants.push_back(parse_rational(c.get<std::string>()));
    spec.last_block_void = j.value("last_block_void", spec.block_dims.size() % 2 == 1);
    return spec;
}

int cmd_construct(const std::string& family, const std::vector<std::string>& args,
                  const std::vector<std::string>& pattern_files, bool as_json) {
    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw error("family '" + family + "' expects " + std::to_string(k) + " parameter(s)");
    };
    auto num = [&](std::size_t i) {
        try {
            return std::stoi(args.at(i));
        } catch (const std::exception&) {
            throw error("parameter '" + args.at(i) + "' is not an integer");
        }
    };

    std::optional<RatMatrix> X;
    if (family == "uniform") {
        want(1);
        X = uniform(num(0));
    } else if (family == "regular") {
        want(2);
        X = regular_rcds(load_pattern(args.at(0)), num(1));
    } else if (family == "tridiagonal") {
        want(1);
        X = tridiagonal_rcds(num(0));
    } else if (family == "star") {
        want(1);
        const int n = num(0);
        auto V = star_rcds(n);
        if (!V) {
            if (as_json)
                std::cout << json{{"feasible", false}, {"n", n}}.dump() << "\n";
            else
                std::cout << "infeasible for n >= 5\n";
            return kExitNo;
        }
        X = *V;
    } else if (family == "corner") {
        want(3);
        X = corner_block(num(0), num(1), num(2));
    } else if (family == "zigzag") {
        want(1);
        X = zigzag(read_zigzag_spec(args.at(0)));
    } else if (family == "block2x2") {
        want(5);
        if (pattern_files.empty()) {
            X = two_by_two_block(num(0), num(1), num(2), num(3), num(4));
        } else {
            if (pattern_files.size() != 4) throw error("--patterns expects four files");
            std::array<Pattern, 4> sub{load_pattern(pattern_files[0]), load_pattern(pattern_files[1]),
                                       load_pattern(pattern_files[2]), load_pattern(pattern_files[3])};
            X = two_by_two_block(num(0), num(1), num(2), num(3), num(4), sub);
        }
    } else if (family == "class1") {
        want(3);
        X = class1_rcds(num(0), num(1), num(2));
    } else if (family == "derangement") {
        want(1);
        X = derangement_rcds(num(0));
    } else {
        throw error("unknown family '" + family + "'");
    }

    if (as_json)
        std::cout << json{{"feasible", true}, {"matrix", matrix_json(*X)}}.dump() << "\n";
    else
        std::cout << serialize_matrix(*X, MatrixFormat::plain);
    return kExitYes;
}

int cmd_cps(const std::string& file, bool as_json) {
    Pattern A = load_pattern(file);
    auto [cps, gamma] = is_cps(A);
    PermanentReport rep = hat_matrix(A);
    if (as_json) {
        json minors = json::array();
        for (int i = 0; i < rep.n; ++i) {
            json row = json::array();
            for (int j = 0; j < rep.n; ++j) {
                const auto& m = rep.minor(i, j);
                row.push_back(m ? json(m->get_str()) : json(nullptr));
            }
            minors.push_back(std::move(row));
        }
        json out{{"permanent", rep.permanent.get_str()},
                 {"cps", cps},
                 {"minors", std::move(minors)}};
        if (gamma) out["gamma"] = gamma->get_str();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "per = " << rep.permanent.get_str() << "\n";
        for (int i = 0; i < rep.n; ++i) {
            for (int j = 0; j < rep.n; ++j) {
                const auto& m = rep.minor(i, j);
                std::cout << (j ? " " : "") << (m ? m->get_str() : "*");
            }
            std::cout << "\n";
        }
        if (cps)
            std::cout << "CPS, gamma = " << gamma->get_str() << "\n";
        else
            std::cout << "not CPS\n";
    }
    return cps ? kExitYes : kExitNo;
}

int cmd_permanent(const std::string& file, bool as_json) {
    Int per = permanent(load_pattern(file));
    if (as_json)
        std::cout << json{{"permanent", per.get_str()}}.dump() << "\n";
    else
        std::cout << per.get_str() << "\n";
    return kExitYes;
}

int cmd_search(int n, const std::string& density, int trials, std::uint64_t seed) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.density = parse_rational(density);
    cfg.trials = trials;
    cfg.seed = seed;
    for (const Discovery& d : discover(cfg)) {
        json rec{{"trial", d.trial},
                 {"pattern", pattern_json(d.pattern)},
                 {"matrix", matrix_json(d.matrix)},
                 {"sum", to_string(d.constant_sum)}};
        std::cout << rec.dump() << "\n";
    }
    return kExitYes;
}

int cmd_oracle(const std::string& file, std::optional<std::uint64_t> limit, bool as_json) {
    DiagonalStats st = brute_diagonal_stats(load_matrix(file), oracle_limit(limit));
    if (as_json) {
        std::cout << json{{"min", to_string(st.min)},
                          {"max", to_string(st.max)},
                          {"all_equal", st.all_equal},
                          {"count", st.count}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "min = " << to_string(st.min) << ", max = " << to_string(st.max)
                  << ", all_equal = " << (st.all_equal ? "yes" : "no") << ", count = " << st.count
                  << "\n";
    }
    return kExitYes;
}

int cmd_gray(bool as_json) {
    Pattern G = gray_graph_pattern();
    if (as_json)
        std::cout << json{{"n", 27}, {"pattern", pattern_json(G)}}.dump() << "\n";
    else
        std::cout << serialize_pattern(G);
    return kExitYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decisions and constructions for doubly stochastic matrices "
                 "with constant restricted diagonal sums"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string file;
    auto* check = app.add_subcommand("check", "doubly-stochastic / RCDS status of a matrix");
    check->add_option("matrixfile", file)->required();

    auto* width = app.add_subcommand("width", "diagonal width of a doubly stochastic matrix");
    width->add_option("matrixfile", file)->required();

    auto* pattern = app.add_subcommand("pattern", "decide whether a 0/1 pattern is an RCDS pattern");
    pattern->add_option("patternfile", file)->required();

    std::string family;
    std::vector<std::string> params, pattern_files;
    auto* construct = app.add_subcommand("construct", "build one of the known RCDS families");
    construct
        ->add_option("family", family,
                     "uniform|regular|tridiagonal|star|corner|zigzag|block2x2|class1|derangement")
        ->required();
    construct->add_option("params", params, "family parameters");
    construct->add_option("--patterns", pattern_files, "sub-pattern files for block2x2");

    auto* cps = app.add_subcommand("cps", "permanent, permanental minors and the CPS test");
    cps->add_option("patternfile", file)->required();

    auto* perm = app.add_subcommand("permanent", "count the support diagonals of a pattern");
    perm->add_option("patternfile", file)->required();

    int n = 0, trials = 0;
    std::string density;
    std::uint64_t seed = 0;
    auto* search = app.add_subcommand("search", "seeded random discovery of RCDS patterns");
    search->add_option("--n", n)->required();
    search->add_option("--density", density, "Bernoulli density, e.g. 1/2 or 0.55")->required();
    search->add_option("--trials", trials)->required();
    search->add_option("--seed", seed)->required();

    std::optional<std::uint64_t> limit;
    auto* oracle = app.add_subcommand("oracle", "brute-force diagonal statistics (small n)");
    oracle->add_option("matrixfile", file)->required();
    oracle->add_option("--limit", limit, "enumeration cap (default 10^6 or DIAGSUM_ORACLE_LIMIT)");

    app.add_subcommand("gray", "emit the embedded Gray-graph pattern");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitError;
    }

    try {
        if (check->parsed()) return cmd_check(file, as_json);
        if (width->parsed()) return cmd_width(file, as_json);
        if (pattern->parsed()) return cmd_pattern(file, as_json);
        if (construct->parsed()) return cmd_construct(family, params, pattern_files, as_json);
        if (cps->parsed()) return cmd_cps(file, as_json);
        if (perm->parsed()) return cmd_permanent(file, as_json);
        if (search->parsed()) return cmd_search(n, density, trials, seed);
        if (oracle->parsed()) return cmd_oracle(file, limit, as_json);
        return cmd_gray(as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
