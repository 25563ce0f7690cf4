#include "bipcm/cli.hpp"

#include "bipcm/colouring.hpp"
#include "bipcm/constructions.hpp"
#include "bipcm/matching.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace bipcm;
namespace fs = std::filesystem;

namespace {

const std::string kAssets = BIPCM_ASSETS_DIR;

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path tmp_dir() {
    const fs::path dir = fs::current_path() / "cli_test_tmp";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path write_latin3() {
    const fs::path p = tmp_dir() / "latin3.bicol";
    write_colouring_file(p.string(), latin_base(3));
    return p;
}

fs::path write_mono44() {
    const fs::path p = tmp_dir() / "mono44.bicol";
    Colouring c(4, 4, 1);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) c.set(x, y, 1);
    write_colouring_file(p.string(), c);
    return p;
}

}  // namespace

TEST_CASE("cli verify: exit codes and report") {
    const auto latin = write_latin3();
    const CliResult pass = run({"verify", latin.string(), "--target", "2"});
    CHECK(pass.code == 0);
    CHECK(pass.out.find("CM(2)-free: yes") != std::string::npos);
    CHECK(pass.out.find("colour 3: connected matching number 1") != std::string::npos);

    const auto mono = write_mono44();
    const CliResult fail = run({"verify", mono.string(), "--target", "2"});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("CM(2)-free: no") != std::string::npos);
}

TEST_CASE("cli verify: parse errors exit 2 with a line diagnostic") {
    const fs::path bad = tmp_dir() / "garbage.txt";
    std::ofstream(bad) << "this is not a colouring\n";
    const CliResult res = run({"verify", bad.string(), "--target", "2"});
    CHECK(res.code == 2);
    CHECK(res.err.find("line 1") != std::string::npos);
    const CliResult missing = run({"verify", (tmp_dir() / "nope.bicol").string(), "--target", "2"});
    CHECK(missing.code == 2);
}

TEST_CASE("cli audit: precondition exits 3, good input exits 0") {
    const auto latin = write_latin3();
    const CliResult gate = run({"audit", latin.string(), "--n", "1"});
    CHECK(gate.code == 3);
    CHECK(gate.err.find("kn+1") != std::string::npos);

    const CliResult good = run({"audit", kAssets + "/star_k4_5x5.bicol", "--n", "1"});
    CHECK(good.code == 0);
    CHECK(good.out.find("check special-count: pass") != std::string::npos);

    const auto mono = write_mono44();
    const CliResult cm = run({"audit", mono.string(), "--n", "1"});
    CHECK(cm.code == 3);
    CHECK(cm.err.find("witness matching") != std::string::npos);
}

TEST_CASE("cli search: star-forest success and reproducible files") {
    const fs::path out1 = tmp_dir() / "star1.bicol";
    const fs::path out2 = tmp_dir() / "star2.bicol";
    const std::vector<std::string> base_args{"search", "--mode", "star-forest", "--N", "3",
                                             "--M",    "3",      "--k",  "3",  "--seed", "7"};
    auto with_out = [&](const fs::path& p) {
        auto args = base_args;
        args.push_back("--out");
        args.push_back(p.string());
        return args;
    };
    const CliResult a = run(with_out(out1));
    CHECK(a.code == 0);
    const CliResult b = run(with_out(out2));
    CHECK(b.code == 0);
    CHECK(slurp(out1) == slurp(out2));
    const Colouring found = read_colouring_file(out1.string());
    CHECK(mono_cm_free(found, 2));
}

TEST_CASE("cli search: impossible target exits 1 but writes the best attempt") {
    const fs::path out = tmp_dir() / "impossible.bicol";
    const CliResult res =
        run({"search", "--mode", "cm-free", "--N", "4", "--M", "4", "--k", "3", "--n", "1",
             "--seed", "1", "--max-steps", "2000", "--restarts", "2", "--out", out.string()});
    CHECK(res.code == 1);
    CHECK(fs::exists(out));
}

TEST_CASE("cli search: flag validation") {
    const CliResult res = run({"search", "--mode", "nonsense", "--seed", "1", "--out", "x"});
    CHECK(res.code == 2);
    const CliResult fig = run({"search", "--mode", "figure1", "--N", "6", "--seed", "1",
                               "--out", (tmp_dir() / "f.bicol").string()});
    CHECK(fig.code == 2);
}

TEST_CASE("cli blowup: uniform blow-up verifies and round-trips") {
    const auto latin = write_latin3();
    const fs::path out = tmp_dir() / "latin3_x2.bicol";
    const CliResult res =
        run({"blowup", latin.string(), "--uniform", "2", "--out", out.string()});
    CHECK(res.code == 0);
    CHECK(res.out.find("CM(3)-free") != std::string::npos);
    const Colouring blown = read_colouring_file(out.string());
    CHECK(blown.n_left() == 6);
    CHECK(mono_cm_free(blown, 3));
}

TEST_CASE("cli blowup: weight list form and errors") {
    const auto latin = write_latin3();
    const fs::path out = tmp_dir() / "latin3_w.bicol";
    const CliResult ok = run({"blowup", latin.string(), "--weights-x", "1,2,1", "--weights-y",
                              "2,1,1", "--out", out.string()});
    CHECK(ok.code == 0);
    const Colouring blown = read_colouring_file(out.string());
    CHECK(blown.n_left() == 4);
    CHECK(blown.n_right() == 4);

    const CliResult mismatch = run({"blowup", latin.string(), "--weights-x", "1,2",
                                    "--weights-y", "1,1,1", "--out", out.string()});
    CHECK(mismatch.code == 2);
    const CliResult junk = run({"blowup", latin.string(), "--weights-x", "1,zap,1",
                                "--weights-y", "1,1,1", "--out", out.string()});
    CHECK(junk.code == 2);
}

TEST_CASE("cli thm15: builds from the shipped base") {
    const fs::path out = tmp_dir() / "thm15_n2.bicol";
    const CliResult res = run({"thm15", "--n", "2", "--base", kAssets + "/figure1_base.bicol",
                               "--out", out.string()});
    CHECK(res.code == 0);
    CHECK(res.out.find("K_{13,13}") != std::string::npos);
    const Colouring built = read_colouring_file(out.string());
    CHECK(built.n_left() == 13);
    CHECK(mono_cm_free(built, 3));

    const CliResult audited = run({"audit", out.string(), "--n", "2"});
    CHECK(audited.code == 0);
    CHECK(audited.out.find("check special-count: pass") != std::string::npos);

    const auto latin5 = tmp_dir() / "latin5.bicol";
    write_colouring_file(latin5.string(), latin_base(5));
    const CliResult bad =
        run({"thm15", "--n", "2", "--base", latin5.string(), "--out", out.string()});
    CHECK(bad.code == 2);
}

TEST_CASE("cli compute-r: resolution and budget") {
    const fs::path witness = tmp_dir() / "r2_witness.bicol";
    const CliResult res = run({"compute-r", "--k", "2", "--n", "1", "--max-N", "4",
                               "--witness-out", witness.string()});
    CHECK(res.code == 0);
    CHECK(res.out.find("r = 3") != std::string::npos);
    const Colouring w = read_colouring_file(witness.string());
    CHECK(w.n_left() == 2);
    CHECK(mono_cm_free(w, 2));

    const CliResult budget = run({"compute-r", "--k", "4", "--n", "2", "--max-N", "20"});
    CHECK(budget.code == 4);
    CHECK(budget.err.find("unresolved at N=5") != std::string::npos);
}

TEST_CASE("cli: unknown command exits 2") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}
