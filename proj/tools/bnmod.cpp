// Command-line front end: computes the topological invariants of the
// moduli spaces for given (g, N, D, d) and runs the verification sweeps.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "bnmod/moduli.hpp"
#include "bnmod/verify.hpp"

namespace {

using bnmod::Int;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitConsistency = 3;

// Arbitrary-precision integers are emitted as JSON numbers when they fit
// in the 53-bit exactly-representable range, otherwise as decimal strings.
json json_int(const Int& v) {
    static const Int kSafe = (Int(1) << 53) - 1;
    if (v <= kSafe && v >= -kSafe) return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

struct Report {
    bnmod::ModuliParams params;
    long K;
    long dimension;
    Int euler;
    std::vector<Int> betti;
    std::optional<bnmod::HodgeTable> hodge;
    bnmod::SpectralData spectral;
    bool empty;
    bool hodge_skipped;
};

Report compute_report(const bnmod::ModuliParams& p, std::optional<long> K_opt,
                      bool with_hodge) {
    Report r;
    r.params = p;
    r.K = K_opt.value_or(p.default_K());
    r.dimension = bnmod::dimension(p);
    r.empty = r.dimension < 0;
    r.euler = bnmod::euler_closed(p);
    if (!r.empty && bnmod::euler_integral(p, r.K) != r.euler)
        throw bnmod::ConsistencyError(
            "Euler characteristic route disagreement: closed=" +
            r.euler.str() + " integral=" +
            bnmod::euler_integral(p, r.K).str());
    r.betti = bnmod::betti_table(p).b;
    r.spectral = bnmod::spectral_numerology(p);
    r.hodge_skipped = false;
    if (with_hodge && !r.empty) {
        r.hodge = bnmod::hodge_table(p, r.K);
    } else if (with_hodge) {
        r.hodge_skipped = true;
    }
    return r;
}

void render_table(const Report& r, std::ostream& os) {
    os << "moduli space parameters: g=" << r.params.g << " N=" << r.params.N
       << " D=" << r.params.D << " d=" << r.params.d << " (K=" << r.K
       << ")\n";
    if (r.empty) {
        os << "dimension: " << r.dimension << " (empty moduli space)\n";
        os << "euler characteristic: 0\n";
        return;
    }
    os << "dimension: " << r.dimension << "\n";
    os << "euler characteristic: " << r.euler << "\n";
    os << "betti numbers:";
    for (const auto& b : r.betti) os << " " << b;
    os << "\n";
    if (r.hodge) {
        os << "hodge numbers (rows p = 0.." << r.hodge->m << "):\n";
        for (long p = 0; p <= r.hodge->m; ++p) {
            os << " ";
            for (long q = 0; q <= r.hodge->m; ++q)
                os << " " << r.hodge->h[p][q];
            os << "\n";
        }
    }
    os << "spectral curve: delta=" << r.spectral.delta
       << " genus_Y=" << r.spectral.genus_Y << " dim_consistency="
       << (r.spectral.dim_consistency ? "true" : "false") << "\n";
}

void render_json(const Report& r, std::ostream& os) {
    json j;
    j["params"] = {{"g", r.params.g},
                   {"N", r.params.N},
                   {"D", r.params.D},
                   {"d", r.params.d},
                   {"K", r.K}};
    j["dimension"] = r.dimension;
    j["euler"] = json_int(r.euler);
    j["betti"] = json::array();
    for (const auto& b : r.betti) j["betti"].push_back(json_int(b));
    if (r.hodge) {
        json rows = json::array();
        for (long p = 0; p <= r.hodge->m; ++p) {
            json row = json::array();
            for (long q = 0; q <= r.hodge->m; ++q)
                row.push_back(json_int(r.hodge->h[p][q]));
            rows.push_back(row);
        }
        j["hodge"] = rows;
    }
    j["spectral"] = {{"delta", json_int(r.spectral.delta)},
                     {"genus_Y", json_int(r.spectral.genus_Y)},
                     {"dim_consistency", r.spectral.dim_consistency}};
    j["flags"] = {{"empty", r.empty}, {"hodge_skipped", r.hodge_skipped}};
    os << j.dump() << "\n";
}

void render_csv(const Report& r, std::ostream& os) {
    os << "r,b_r\n";
    for (std::size_t i = 0; i < r.betti.size(); ++i)
        os << i << "," << r.betti[i] << "\n";
    if (r.hodge) {
        os << "p,q,h\n";
        for (long p = 0; p <= r.hodge->m; ++p)
            for (long q = 0; q <= r.hodge->m; ++q)
                os << p << "," << q << "," << r.hodge->h[p][q] << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological invariants of Brill-Noether moduli spaces"};
    app.require_subcommand(1);

    // invariants
    long g = 1, N = 1, D = 0, d = 0;
    std::optional<long> K_opt;
    bool with_hodge = false;
    std::string format = "table";
    auto* inv = app.add_subcommand(
        "invariants", "Compute dimension, Euler characteristic, Betti "
                      "numbers and optionally Hodge numbers");
    inv->add_option("-g,--genus", g, "Genus of the curve (>= 1)")->required();
    inv->add_option("-N,--rank", N, "Rank of the background bundle (>= 1)")
        ->required();
    inv->add_option("-D,--deg-E", D, "Degree of the background bundle")
        ->required();
    inv->add_option("-d,--deg-L", d, "Degree of the line bundle")->required();
    inv->add_option("--K", K_opt, "Stabilization count override");
    inv->add_flag("--hodge", with_hodge, "Also compute the Hodge table");
    inv->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    // verify
    std::string suite = "all";
    bnmod::verify::GridBounds bounds;
    auto* ver = app.add_subcommand("verify", "Run the verification sweeps");
    ver->add_option("--suite", suite, "Suite to run")
        ->check(CLI::IsMember({"all", "euler", "betti", "hodge", "km",
                               "macdonald", "pushforward", "spectral"}));
    ver->add_option("--max-genus", bounds.max_genus, "Largest genus swept");
    ver->add_option("--max-rank", bounds.max_rank, "Largest rank swept");
    ver->add_option("--max-dim", bounds.max_dim, "Largest dimension swept");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }

    try {
        if (*inv) {
            if (g < 1 || N < 1) {
                std::cerr << "error: require genus >= 1 and rank >= 1\n";
                return kExitBadArguments;
            }
            const auto report =
                compute_report(bnmod::ModuliParams{g, N, D, d}, K_opt,
                               with_hodge);
            if (format == "json") render_json(report, std::cout);
            else if (format == "csv") render_csv(report, std::cout);
            else render_table(report, std::cout);
            return kExitOk;
        }
        // verify
        bool all_ok = true;
        for (const auto& res : bnmod::verify::run_suite(suite, bounds)) {
            std::cout << res.name << ": " << res.passed << " passed, "
                      << res.failed << " failed\n";
            if (!res.ok()) {
                std::cout << "  first failure: " << res.first_failure << "\n";
                all_ok = false;
            }
        }
        return all_ok ? kExitOk : kExitVerifyFailed;
    } catch (const bnmod::ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitConsistency;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }
}
