// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include "bipcm/audit.hpp"
#include "bipcm/cli.hpp"
#include "bipcm/colouring.hpp"
#include "bipcm/constructions.hpp"
#include "bipcm/matching.hpp"
#include "bipcm/search.hpp"

#include "oracles.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace bipcm;
namespace fs = std::filesystem;

namespace {

const std::string kAssets = BIPCM_ASSETS_DIR;
int g_failures = 0;

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int index, bool pass, const std::string& detail) {
    std::cout << "[" << index << "/8] " << (pass ? "PASS" : "FAIL") << " " << detail << "\n";
    if (!pass) ++g_failures;
}

int run_cli_quiet(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path tmp_root() {
    const fs::path dir = fs::current_path() / "acceptance_tmp";
    fs::create_directories(dir);
    return dir;
}

// Searched colourings shared between criteria 2/4 and the audit corpus.
struct Corpus {
    std::vector<std::pair<Colouring, int>> entries;  // (colouring, CM-freeness n)
    void add(const Colouring& col, int n) { entries.emplace_back(col, n); }
};

void criterion1() {
    Stopwatch sw;
    std::ostringstream detail;
    bool pass = true;

    for (int n = 1; n <= 4; ++n) {
        const ComputeROutcome r = compute_r(1, n, n + 2);
        if (!(r.resolved && r.r == n + 1)) pass = false;
        if (r.witness && !mono_cm_free(*r.witness, n + 1)) pass = false;
    }
    detail << "r_1(n+1)=n+1 for n<=4";

    const ComputeROutcome r2 = compute_r(2, 1, 4);
    if (!(r2.resolved && r2.r == 3 && r2.witness && mono_cm_free(*r2.witness, 2))) pass = false;
    detail << ", r_2(2)=3";

    Stopwatch arrow_watch;
    const ComputeROutcome r3 = compute_r(3, 1, 5);
    const double arrow_s = arrow_watch.seconds();
    if (!(r3.resolved && r3.r == 4 && r3.witness && r3.witness->n_left() == 3 &&
          mono_cm_free(*r3.witness, 2)))
        pass = false;
    if (arrow_s >= 600.0) pass = false;
    detail << ", r_3(2)=4 (K_{4,4} exhaustion " << arrow_s << "s)";

    report(1, pass, "exact tiny values: " + detail.str() + " [" +
                        std::to_string(sw.seconds()) + "s]");
}

void criterion2(Corpus& corpus, fs::path& fig1_file) {
    Stopwatch sw;
    bool pass = false;
    std::ostringstream detail;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const fs::path out = tmp_root() / ("fig1_seed" + std::to_string(seed) + ".bicol");
        const int code = run_cli_quiet({"search", "--mode", "figure1", "--seed",
                                        std::to_string(seed), "--out", out.string()});
        if (code != 0) continue;
        const Colouring found = read_colouring_file(out.string());
        const Figure1Check chk = verify_figure1_base(found);
        if (chk.pass) {
            pass = true;
            fig1_file = out;
            corpus.add(found, 1);  // incomplete, so the audit filter drops it
            detail << "seed " << seed << " verified, merge colours:";
            for (int m : chk.merge_colours) detail << ' ' << m;
            break;
        }
    }
    const double elapsed = sw.seconds();
    if (elapsed >= 600.0) pass = false;
    report(2, pass, "figure1 search: " + detail.str() + " [" + std::to_string(elapsed) + "s]");
}

void criterion3(Corpus& corpus) {
    Stopwatch sw;
    bool pass = true;
    const Colouring base = read_colouring_file(kAssets + "/figure1_base.bicol");
    for (int n = 1; n <= 6; ++n) {
        const Colouring out = thm15_construction(n, base);
        const int side = 6 * n + n / 2;
        if (out.n_left() != side || out.n_right() != side || out.colours() != 5 ||
            !out.complete())
            pass = false;
        for (int c = 1; c <= 5 && pass; ++c)
            for (const auto& comp : components(out, c))
                if (component_matching_number(out, comp) > n) pass = false;
        if (!mono_cm_free(out, n + 1)) pass = false;
        corpus.add(out, n);
    }
    const double elapsed = sw.seconds();
    if (elapsed >= 10.0) pass = false;
    report(3, pass, "6.5n construction for n in 1..6, covers <= n [" +
                        std::to_string(elapsed) + "s]");
}

void criterion4(Corpus& corpus) {
    Stopwatch sw;
    bool pass = true;
    std::ostringstream detail;

    for (int k = 1; k <= 3; ++k) {
        const Colouring base = latin_base(k);
        for (int n = 1; n <= 3; ++n) {
            BlowupWeights w;
            w.x_weights.assign(k, n);
            w.y_weights.assign(k, n);
            const Colouring blown = blow_up(base, w);
            if (blown.n_left() != k * n || !mono_cm_free(blown, n + 1)) pass = false;
            corpus.add(blown, n);  // sides are kn < kn+1, so the audit gate skips these
        }
    }
    detail << "latin blow-ups k<=3, n<=3 CM-free";

    auto star_search = [&](int side, int k) -> std::optional<Colouring> {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            SearchConfig cfg;
            cfg.mode = SearchMode::StarForest;
            cfg.N = cfg.M = side;
            cfg.k = k;
            cfg.seed = seed;
            const SearchOutcome out = anneal(cfg);
            if (out.success) return out.best;
        }
        return std::nullopt;
    };

    for (auto [side, k] : {std::pair{5, 4}, std::pair{6, 5}}) {
        const auto star = star_search(side, k);
        if (!star || !mono_cm_free(*star, 2)) {
            pass = false;
            continue;
        }
        corpus.add(*star, 1);
        detail << ", star K_{" << side << "," << side << "} k=" << k << " found";
        for (int n = 2; n <= 3; ++n) {
            BlowupWeights w;
            w.x_weights.assign(side, n);
            w.y_weights.assign(side, n);
            const Colouring blown = blow_up(*star, w);
            if (!mono_cm_free(blown, n + 1)) pass = false;
            corpus.add(blown, n);
        }
    }

    report(4, pass, "lower-bound corpus: " + detail.str() + " [" +
                        std::to_string(sw.seconds()) + "s]");
}

void criterion5(const Corpus& corpus) {
    Stopwatch sw;
    bool pass = true;
    int audited = 0, skipped = 0, violations = 0;

    std::vector<std::pair<Colouring, int>> entries = corpus.entries;
    entries.emplace_back(read_colouring_file(kAssets + "/star_k4_5x5.bicol"), 1);
    entries.emplace_back(read_colouring_file(kAssets + "/star_k5_6x6.bicol"), 1);

    for (const auto& [col, n] : entries) {
        const long long bound = static_cast<long long>(col.colours()) * n + 1;
        if (!col.complete() || col.n_left() < bound || col.n_right() < bound) {
            ++skipped;
            continue;
        }
        try {
            const SpecialReport rep = build_special_report(col, n);
            const CheckResult high = check_high_degree_claim(col, rep);
            const CheckResult degree = check_special_degree(col, rep);
            const CheckResult sides = check_special_sides(col, rep);
            const CountAudit count = audit_special_count(col, rep);
            violations += static_cast<int>(high.violations.size() + degree.violations.size() +
                                           sides.violations.size());
            if (!high.pass || !degree.pass || !sides.pass || !count.pass) pass = false;
            ++audited;
        } catch (const std::exception&) {
            pass = false;
        }
    }
    if (audited == 0) pass = false;
    report(5, pass,
           "audit property suite: " + std::to_string(audited) + " colourings audited, " +
               std::to_string(violations) + " violations, " + std::to_string(skipped) +
               " ineligible skipped [" + std::to_string(sw.seconds()) + "s]");
}

void criterion6() {
    Stopwatch sw;
    bool pass = true;
    std::mt19937 rng(986743);
    std::uniform_int_distribution<int> dim(1, 12);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    int mismatches = 0, checked = 0;
    for (int it = 0; it < 1000; ++it) {
        const Colouring c = oracle::random_colouring(rng, dim(rng), dim(rng), 1, density(rng));
        int engine = 0;
        for (const auto& comp : components(c, 1)) {
            const CoverCertificate cert = max_matching(c, comp);
            if (!certificate_self_checks(c, cert)) {
                pass = false;
                ++mismatches;
            }
            engine += static_cast<int>(cert.matching.size());
        }
        if (engine != oracle::max_matching_of_colour(c, 1)) {
            pass = false;
            ++mismatches;
        }
        ++checked;
    }
    report(6, pass,
           "matching oracle equivalence on " + std::to_string(checked) + " random graphs, " +
               std::to_string(mismatches) + " mismatches [" + std::to_string(sw.seconds()) +
               "s]");
}

void criterion7() {
    Stopwatch sw;
    bool pass = true;
    std::mt19937 rng(555001);
    std::uniform_int_distribution<int> dim(1, 5), kd(1, 3), wd(1, 3);
    int pairs = 0, mismatches = 0;
    for (int it = 0; it < 1000; ++it) {
        const int n = dim(rng), m = dim(rng), k = kd(rng);
        const Colouring base = oracle::random_colouring(rng, n, m, k, 0.35);
        BlowupWeights w;
        for (int i = 0; i < n; ++i) w.x_weights.push_back(wd(rng));
        for (int j = 0; j < m; ++j) w.y_weights.push_back(wd(rng));
        const Colouring blown = blow_up(base, w);
        ++pairs;

        std::vector<int> x_off(n + 1, 0);
        for (int i = 0; i < n; ++i) x_off[i + 1] = x_off[i] + w.x_weights[i];

        for (int colour = 1; colour <= k; ++colour) {
            for (const auto& comp : components(base, colour)) {
                std::vector<long long> weight;
                for (int x : comp.x_vertices) weight.push_back(w.x_weights[x]);
                for (int y : comp.y_vertices) weight.push_back(w.y_weights[y]);
                std::vector<std::pair<int, int>> edges;
                for (size_t xi = 0; xi < comp.x_vertices.size(); ++xi)
                    for (size_t yi = 0; yi < comp.y_vertices.size(); ++yi)
                        if (base.at(comp.x_vertices[xi], comp.y_vertices[yi]) == colour)
                            edges.emplace_back(static_cast<int>(xi),
                                               static_cast<int>(comp.x_vertices.size() + yi));
                const long long want = oracle::min_weighted_cover(edges, weight);

                const int gx = x_off[comp.x_vertices.front()];
                long long got = -1;
                for (const auto& big : components(blown, colour))
                    if (std::find(big.x_vertices.begin(), big.x_vertices.end(), gx) !=
                        big.x_vertices.end()) {
                        got = component_matching_number(blown, big);
                        break;
                    }
                if (got != want) {
                    pass = false;
                    ++mismatches;
                }
            }
        }
    }
    report(7, pass,
           "blow-up duality on " + std::to_string(pairs) + " random pairs, " +
               std::to_string(mismatches) + " mismatches [" + std::to_string(sw.seconds()) +
               "s]");
}

void criterion8(const fs::path& fig1_file) {
    Stopwatch sw;
    bool pass = true;
    std::ostringstream detail;

    auto rerun_identical = [&](const std::vector<std::string>& args_a,
                               const std::vector<std::string>& args_b, const fs::path& a,
                               const fs::path& b, const char* label) {
        if (run_cli_quiet(args_a) != 0 || run_cli_quiet(args_b) != 0 || slurp(a) != slurp(b)) {
            pass = false;
            detail << ' ' << label << ":MISMATCH";
        } else {
            detail << ' ' << label << ":ok";
        }
    };

    const fs::path star_a = tmp_root() / "repro_star_a.bicol";
    const fs::path star_b = tmp_root() / "repro_star_b.bicol";
    rerun_identical({"search", "--mode", "star-forest", "--N", "5", "--M", "5", "--k", "4",
                     "--seed", "3", "--out", star_a.string()},
                    {"search", "--mode", "star-forest", "--N", "5", "--M", "5", "--k", "4",
                     "--seed", "3", "--out", star_b.string()},
                    star_a, star_b, "star-search");

    if (!fig1_file.empty()) {
        // rerun the successful figure1 seed and compare with criterion 2's file
        const std::string seed_text =
            fig1_file.stem().string().substr(std::string("fig1_seed").size());
        const fs::path again = tmp_root() / "repro_fig1.bicol";
        rerun_identical({"search", "--mode", "figure1", "--seed", seed_text, "--out",
                         again.string()},
                        {"search", "--mode", "figure1", "--seed", seed_text, "--out",
                         again.string()},
                        fig1_file, again, "figure1-search");
    } else {
        pass = false;
    }

    const fs::path wit_a = tmp_root() / "repro_witness_a.bicol";
    const fs::path wit_b = tmp_root() / "repro_witness_b.bicol";
    rerun_identical({"compute-r", "--k", "3", "--n", "1", "--max-N", "4", "--witness-out",
                     wit_a.string()},
                    {"compute-r", "--k", "3", "--n", "1", "--max-N", "4", "--witness-out",
                     wit_b.string()},
                    wit_a, wit_b, "compute-r-witness");

    const fs::path latin = tmp_root() / "latin3.bicol";
    write_colouring_file(latin.string(), latin_base(3));
    const fs::path blow_a = tmp_root() / "repro_blow_a.bicol";
    const fs::path blow_b = tmp_root() / "repro_blow_b.bicol";
    rerun_identical({"blowup", latin.string(), "--uniform", "2", "--out", blow_a.string()},
                    {"blowup", latin.string(), "--uniform", "2", "--out", blow_b.string()},
                    blow_a, blow_b, "blowup");

    const fs::path thm_a = tmp_root() / "repro_thm15_a.bicol";
    const fs::path thm_b = tmp_root() / "repro_thm15_b.bicol";
    rerun_identical({"thm15", "--n", "2", "--base", kAssets + "/figure1_base.bicol", "--out",
                     thm_a.string()},
                    {"thm15", "--n", "2", "--base", kAssets + "/figure1_base.bicol", "--out",
                     thm_b.string()},
                    thm_a, thm_b, "thm15");

    report(8, pass, "reproducibility:" + detail.str() + " [" + std::to_string(sw.seconds()) +
                        "s]");
}

}  // namespace

int main() {
    std::cout << "bipcm acceptance suite\n";
    Corpus corpus;
    fs::path fig1_file;

    criterion1();
    criterion2(corpus, fig1_file);
    criterion3(corpus);
    criterion4(corpus);
    criterion5(corpus);
    criterion6();
    criterion7();
    criterion8(fig1_file);

    if (g_failures == 0) {
        std::cout << "all 8 criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
}
