// End-to-end checks of the installed CLI binary (path injected at build time).

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

int run(const std::string& args) {
    const std::string cmd = std::string(PEANO_CLI_PATH) + " " + args;
    const int status = std::system(cmd.c_str());
    if (status < 0) return -1;
#ifdef _WIN32
    return status;
#else
    return WEXITSTATUS(status);
#endif
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

int main() {
    const fs::path dir = fs::temp_directory_path() / "peano_cli_tests";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string curve_csv = (dir / "curve.csv").string();
    const std::string cert_json = (dir / "cert.json").string();
    const std::string svg_a = (dir / "a.svg").string();
    const std::string svg_b = (dir / "b.svg").string();

    // end-to-end curve build with certificate
    int rc = run("curve --shape carpet --depth 2 --alpha 4 --levels 5 --out " + curve_csv +
                 " --cert " + cert_json + " --svg " + svg_a + " >/dev/null 2>&1");
    check(rc == 0, "curve command exits 0");
    check(fs::exists(curve_csv), "curve CSV written");
    check(fs::exists(cert_json), "certificate written");
    if (fs::exists(cert_json)) {
        const auto cert = nlohmann::json::parse(slurp(cert_json));
        check(cert["passed"] == true, "certificate passed");
        check(cert["coverage"] == 1.0, "coverage 1.0");
    }

    // verify accepts its own curve, rejects a halved modulus
    rc = run("verify --curve " + curve_csv + " --alpha 4 >/dev/null 2>&1");
    check(rc == 0, "verify passes with the build modulus");
    rc = run("verify --curve " + curve_csv + " --alpha 4 --holder-C 0.2 >/dev/null 2>&1");
    check(rc == 1, "verify fails with a smaller modulus");

    // usage errors exit 2
    rc = run("curve --shape carpet --depth 2 --alpha 0 >/dev/null 2>&1");
    check(rc == 2, "alpha = 0 is a usage error");
    rc = run("curve --depth 2 --alpha 4 >/dev/null 2>&1");
    check(rc == 2, "missing input source is a usage error");
    rc = run("definitely-not-a-command >/dev/null 2>&1");
    check(rc == 2, "unknown subcommand is a usage error");

    // sdim lands in the expected band
    const std::string sdim_json = (dir / "sdim.json").string();
    rc = run("sdim --shape interval --size 129 --levels 6 --out " + sdim_json +
             " >/dev/null 2>&1");
    check(rc == 0, "sdim exits 0");
    if (fs::exists(sdim_json)) {
        const auto rep = nlohmann::json::parse(slurp(sdim_json));
        const double sdim = rep["s_dim"];
        check(sdim > 0.85 && sdim < 1.15, "interval s_dim within 1.0 +- 0.15, got " +
                                              std::to_string(sdim));
    }

    // cover table has the declared header
    const std::string table_csv = (dir / "table.csv").string();
    rc = run("cover --shape interval --size 17 --levels 3 --out " + table_csv +
             " >/dev/null 2>&1");
    check(rc == 0, "cover exits 0");
    check(slurp(table_csv).rfind("n,epsilon,lower,upper,exact\n", 0) == 0,
          "table CSV header");

    // deterministic SVG: render twice, byte-identical
    rc = run("render --shape carpet --depth 2 --curve " + curve_csv + " --svg " + svg_b +
             " >/dev/null 2>&1");
    check(rc == 0, "render exits 0");
    check(!slurp(svg_a).empty() && slurp(svg_a) == slurp(svg_b),
          "curve --svg and render --svg agree byte-for-byte");

    // pipeline errors exit 1 with a JSON body on stderr
    const std::string blobs = (dir / "blobs.pgm").string();
    {
        std::ofstream out(blobs);
        out << "P2\n5 1\n255\n200 0 0 0 200\n";
    }
    const std::string errfile = (dir / "err.txt").string();
    rc = run("gen --bitmap " + blobs + " --out - >/dev/null 2>" + errfile);
    check(rc == 1, "disconnected bitmap is a pipeline error");
    const std::string err = slurp(errfile);
    check(err.find("Disconnected") != std::string::npos, "error body names the code");

    if (failures == 0) std::cout << "cli_tests: all checks passed\n";
    return failures == 0 ? 0 : 1;
}
