// End-to-end checks that drive the installed binary through a shell.
// Usage: test_cli <path-to-zdg>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        std::cerr << "popen failed for: " << command << "\n";
        std::exit(2);
    }
    RunResult r;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.output.append(buffer, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void expect(bool ok, const std::string& label, const RunResult& r) {
    if (ok) {
        std::cout << "ok: " << label << "\n";
    } else {
        ++failures;
        std::cout << "FAIL: " << label << " (exit " << r.exit_code << ")\n---\n"
                  << r.output << "---\n";
    }
}

void expect_exact(const RunResult& r, int code, const std::string& output,
                  const std::string& label) {
    expect(r.exit_code == code && r.output == output, label, r);
}

void expect_contains(const RunResult& r, int code, const std::string& needle,
                     const std::string& label) {
    expect(r.exit_code == code && r.output.find(needle) != std::string::npos, label, r);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-zdg>\n";
        return 2;
    }
    const std::string zdg = "\"" + std::string(argv[1]) + "\"";
    const std::string tmp = "/tmp/zdg_cli_" + std::to_string(getpid());

    // Single-engine and dual-engine query output.
    expect_exact(run(zdg + " degree 12 8 --method theorem"), 0, "3\n", "degree theorem");
    expect_exact(run(zdg + " degree 12 8 --method oracle"), 0, "3\n", "degree oracle");
    expect_exact(run(zdg + " degree 12 8"), 0, "theorem: 3\noracle: 3\nAGREE\n",
                 "degree defaults to both engines");
    expect_exact(run(zdg + " degree 12 8 --format json"), 0,
                 R"({"n":12,"a":8,"theorem":3,"oracle":3,"verdict":"agree"})" "\n",
                 "degree json");
    expect_exact(run(zdg + " neighbors 12 8 --method theorem"), 0, "{3,6,9}\n",
                 "neighbors theorem");
    expect_exact(run(zdg + " neighbors 12 8 --format json"), 0,
                 R"({"n":12,"a":8,"theorem":[3,6,9],"oracle":[3,6,9],"verdict":"agree"})" "\n",
                 "neighbors json");

    // Engine disagreement surfaces as exit 2, never silently.
    expect_exact(run(zdg + " center 6"), 2, "theorem: {2,3,4}\noracle: {3}\nDISAGREE\n",
                 "center star disagreement");
    expect_exact(run(zdg + " center 20"), 0,
                 "theorem: {4,8,10,12,16}\noracle: {4,8,10,12,16}\nAGREE\n", "center agreement");
    expect_contains(run(zdg + " center 6 --format json"), 2, R"("verdict":"disagree")",
                    "center disagreement in json");
    expect_exact(run(zdg + " cut-edges 8"), 0,
                 "theorem: {(2,4),(4,6)}\noracle: {(2,4),(4,6)}\nAGREE\n", "cut-edges both");
    expect_exact(run(zdg + " cut-edges 12 --method theorem"), 0, "{(2,6),(6,10)}\n",
                 "cut-edges theorem");

    // Distance: covered and uncovered theorem cases.
    expect_exact(run(zdg + " distance 12 2 3"), 0, "theorem: 3\noracle: 3\nAGREE\n",
                 "distance between prime divisors");
    expect_exact(run(zdg + " distance 12 4 9"), 0, "theorem: not-covered\noracle: 1\n",
                 "distance uncovered by the closed form");
    expect_exact(run(zdg + " distance 12 4 9 --format json"), 0,
                 R"({"n":12,"a":4,"b":9,"theorem":null,"oracle":1})" "\n",
                 "uncovered distance json");

    // Export formats, stdout and file.
    expect_exact(run(zdg + " export 8 --format dot"), 0,
                 "graph zdg_8 {\n  2 -- 4;\n  4 -- 6;\n}\n", "export dot");
    expect_exact(run(zdg + " export 7 --format dot"), 0, "graph zdg_7 {\n}\n",
                 "export dot empty graph");
    expect_exact(run(zdg + " export 4 --format dot"), 0, "graph zdg_4 {\n  2;\n}\n",
                 "export dot isolated vertex");
    expect_exact(run(zdg + " export 6 --format json"), 0,
                 R"({"n":6,"vertices":[2,3,4],"edges":[[2,3],[3,4]]})" "\n", "export json");
    expect_exact(run(zdg + " export 8 --format csv"), 0, "lo,hi\n2,4\n4,6\n", "export csv");
    {
        const std::string path = tmp + "_export.dot";
        const auto r = run(zdg + " export 8 --format dot --out " + path);
        expect(r.exit_code == 0 && r.output.empty() &&
                   slurp(path) == "graph zdg_8 {\n  2 -- 4;\n  4 -- 6;\n}\n",
               "export to file", r);
        std::remove(path.c_str());
    }

    // Info summaries.
    {
        const auto r = run(zdg + " info 12");
        expect(r.exit_code == 0 &&
                   r.output == "n: 12 = 2^2 * 3\nvertices: 7\nedges: 8\ndiameter: 3 (theorem)\n"
                               "center size (theorem): 3\ncenter size (oracle): 3\n",
               "info text", r);
    }
    expect_contains(run(zdg + " info 7"), 0, "vertices: 0 (empty graph)", "info empty graph");
    expect_contains(run(zdg + " info 7"), 0, "diameter: none", "info prime diameter");
    expect_exact(run(zdg + " info 12 --format json"), 0,
                 R"({"n":12,"factorization":"2^2 * 3","vertices":7,"edges":8,"diameter":3,)"
                 R"("diameter_source":"theorem","center_size_theorem":3,"center_size_oracle":3})"
                 "\n",
                 "info json");
    expect_contains(run("ZDG_ORACLE_MAX_N=10 " + zdg + " info 100"), 0,
                    "edges: n/a (above oracle cap)", "info above cap");

    // Usage and domain errors exit 1.
    expect(run(zdg + " degree 12 5 2>/dev/null").exit_code == 1, "non-vertex exits 1", {});
    expect(run(zdg + " info 1 2>/dev/null").exit_code == 1, "n=1 exits 1", {});
    expect(run(zdg + " info 0 2>/dev/null").exit_code == 1, "n=0 exits 1", {});
    expect(run(zdg + " degree 12 2>/dev/null").exit_code == 1, "missing argument exits 1", {});
    expect(run(zdg + " bogus 2>/dev/null").exit_code == 1, "unknown subcommand exits 1", {});
    expect(run(zdg + " export 8 --format xml 2>/dev/null").exit_code == 1,
           "unknown export format exits 1", {});
    expect(run(zdg + " export 8 2>/dev/null").exit_code == 1, "missing export format exits 1",
           {});
    expect(run(zdg + " export 8 --format dot --out /nonexistent-dir/x.dot 2>/dev/null")
                   .exit_code == 1,
           "unwritable path exits 1", {});
    expect(run(zdg + " verify --min 10 --max 5 2>/dev/null").exit_code == 1,
           "inverted range exits 1", {});
    expect(run(zdg + " verify --min 2 --max 50 --check bogus 2>/dev/null").exit_code == 1,
           "unknown check exits 1", {});
    expect(run(zdg + " --help").exit_code == 0, "help exits 0", {});

    // Oracle cap: env var, flag precedence, resource exit 3.
    expect(run("ZDG_ORACLE_MAX_N=10 " + zdg + " export 100 --format dot 2>/dev/null")
                   .exit_code == 3,
           "cap from env exits 3", {});
    expect_exact(run("ZDG_ORACLE_MAX_N=10 " + zdg + " export 8 --format csv"), 0,
                 "lo,hi\n2,4\n4,6\n", "small n unaffected by cap");
    expect(run("ZDG_ORACLE_MAX_N=10 " + zdg + " export 100 --format dot --oracle-cap 1000")
                   .exit_code == 0,
           "flag overrides env", {});
    expect_exact(run("ZDG_ORACLE_MAX_N=10 " + zdg + " degree 100 98"), 0, "1\n",
                 "default method falls back to theorem above cap");
    expect(run("ZDG_ORACLE_MAX_N=10 " + zdg + " degree 100 98 --method oracle 2>/dev/null")
                   .exit_code == 3,
           "explicit oracle above cap exits 3", {});

    // Verification harness.  The cut-edges check has exactly one disagreement
    // below 5001: Gamma(Z_9) is the single edge (3,6), a bridge the closed
    // form misses because no vertex of an odd modulus has gcd 2.
    expect_exact(run(zdg + " verify --min 2 --max 60 --check cut-edges"), 2,
                 R"({"range":[2,60],"checks":[{"check":"cut-edges","agree":58,)"
                 R"("disagree":1,"skipped":0,"discrepancies":[{"n":9,)"
                 R"("theorem":"{}","oracle":"{(3,6)}"}]}]})"
                 "\n",
                 "verify cut-edges reports the n=9 bridge and exits 2");
    expect_exact(run(zdg + " verify --min 10 --max 60 --check cut-edges"), 0,
                 R"({"range":[10,60],"checks":[{"check":"cut-edges","agree":51,)"
                 R"("disagree":0,"skipped":0,"discrepancies":[]}]})"
                 "\n",
                 "verify cut-edges clean on [10,60]");
    expect_contains(run(zdg + " verify --min 2 --max 60 --check center"), 2,
                    R"({"n":6,"theorem":"{2,3,4}","oracle":"{3}"})",
                    "verify center reports discrepancies and exits 2");
    {
        const std::string r1 = tmp + "_r1.json";
        const std::string r2 = tmp + "_r2.json";
        const auto a =
            run(zdg + " verify --min 2 --max 200 --jobs 1 --report " + r1);
        const auto b =
            run(zdg + " verify --min 2 --max 200 --jobs 7 --report " + r2);
        expect(a.exit_code == 2 && b.exit_code == 2, "verify full suite exits 2 on range", a);
        expect_contains(a, 2, "center: ", "verify prints per-check summary with --report");
        const std::string f1 = slurp(r1);
        const std::string f2 = slurp(r2);
        expect(!f1.empty() && f1 == f2, "reports byte-identical across thread counts", a);
        expect(f1.find("\"check\":\"prime-distance\"") != std::string::npos,
               "report includes every check", a);
        std::remove(r1.c_str());
        std::remove(r2.c_str());
    }

    if (failures == 0) {
        std::cout << "all cli checks passed\n";
        return 0;
    }
    std::cout << failures << " cli check(s) failed\n";
    return 1;
}
