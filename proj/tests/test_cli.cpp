// Integration checks for the command-line surface: exit codes, report
// determinism, and the documented output fields. Takes the path to the built
// binary as argv[1] and runs in a scratch directory.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int failures = 0;

#define CHECK_MSG(cond, msg)                                              \
    do {                                                                  \
        if (!(cond)) {                                                    \
            ++failures;                                                   \
            std::cerr << "FAIL " << __LINE__ << ": " << (msg) << "\n";    \
        }                                                                 \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    const std::string out_file = "cli_out.tmp";
    const int rc = std::system((cmd + " > " + out_file + " 2> cli_err.tmp").c_str());
    std::ifstream in(out_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

std::string strip_timestamp(const std::string& report) {
    return std::regex_replace(report, std::regex("\"timestamp\": \"[^\"]*\""),
                              "\"timestamp\": \"\"");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-wiso-binary>\n";
        return 2;
    }
    const std::string wiso = fs::absolute(argv[1]).string();
    const fs::path dir = fs::temp_directory_path() / "wiso_cli_check";
    fs::create_directories(dir);
    fs::current_path(dir);

    // fixtures: the fig 1 / fig 2 triangles and a broken matrix
    write_file("f1x.json", R"({"labels":["a","b","c"],
        "distances":[[0,5,6],[5,0,6],[6,6,0]]})");
    write_file("f1y.json", R"({"labels":["d","e","f"],
        "distances":[[0,6,5],[6,0,5],[5,5,0]]})");
    write_file("f2x.json", R"({"labels":["x1","x2","x3"],
        "distances":[[0,3,4],[3,0,5],[4,5,0]]})");
    write_file("f2y.json", R"({"labels":["y1","y2","y3"],
        "distances":[[0,3,4],[3,0,4],[4,4,0]]})");
    write_file("f2z.json", R"({"labels":["z1","z2","z3"],
        "distances":[[0,3,4],[3,0,6],[4,6,0]]})");
    write_file("bad.json", R"({"labels":["a","b","c"],
        "distances":[[0,1,3],[1,0,1],[3,1,0]]})");
    write_file("notsquare.json", R"({"labels":["a","b"],
        "distances":[[0,1,2],[1,0,2]]})");
    write_file("s521x.csv", "x1,x2,x3,x4\n0,7,12,8\n7,0,10,11\n12,10,0,9\n8,11,9,0\n");
    write_file("s521y.csv", "y1,y2,y3,y4\n0,7,12,8\n7,0,10,9\n12,10,0,11\n8,9,11,0\n");

    // exit-code contract
    CHECK_MSG(run(wiso + " validate f1x.json").exit_code == 0, "valid file exits 0");
    {
        const auto r = run(wiso + " validate bad.json");
        CHECK_MSG(r.exit_code == 2, "triangle violation exits 2");
        const json rep = json::parse(r.out);
        CHECK_MSG(rep["result"]["error"] == "TriangleViolation", "error name in report");
        CHECK_MSG(rep["result"]["witness"].size() == 3, "witness triple present");
    }
    CHECK_MSG(run(wiso + " validate notsquare.json").exit_code == 2, "shape error exits 2");
    CHECK_MSG(run(wiso + " gh f1x.json f1y.json --gh-cap 2").exit_code == 3,
              "cap exceeded exits 3");

    // compare: fig 1 is false under every method, and methods agree
    for (const std::string m : {"canonical", "brute", "curvature"}) {
        const auto r = run(wiso + " compare f1x.json f1y.json --method " + m);
        CHECK_MSG(r.exit_code == 0, "compare runs");
        const json rep = json::parse(r.out);
        CHECK_MSG(rep["result"]["weakly_isometric"] == false, "fig1 verdict false (" + m + ")");
        CHECK_MSG(rep["result"]["agreement"] == true, "methods agree");
    }

    // compare with witness: (3,4,5) vs (9,16,25)
    write_file("sq.json", R"({"labels":["a","b","c"],
        "distances":[[0,9,16],[9,0,25],[16,25,0]]})");
    {
        const auto r = run(wiso + " compare f2x.json sq.json");
        const json rep = json::parse(r.out);
        CHECK_MSG(rep["result"]["weakly_isometric"] == true, "squared copy equivalent");
        const json table = rep["result"]["witness"]["psi_table"];
        CHECK_MSG(table == json::parse("[[3,9],[4,16],[5,25]]"), "psi table 3->9 4->16 5->25");
    }
    {
        const auto r = run(wiso + " compare f2x.json f2x.json");
        CHECK_MSG(json::parse(r.out)["result"]["weakly_isometric"] == true, "identity compare");
    }

    // dhat values and the convention flag
    {
        const json rep = json::parse(run(wiso + " dhat f2x.json f2y.json").out);
        CHECK_MSG(rep["result"]["value"] == 0.25, "dhat(X,Y) = 0.25");
        CHECK_MSG(rep["conventions"]["distortion_factor"] == 0.5, "GH convention flagged");
    }
    {
        const json rep =
            json::parse(run(wiso + " dhat f2x.json f2y.json --distortion-convention").out);
        CHECK_MSG(rep["result"]["value"] == 0.5, "distortion convention doubles the value");
        CHECK_MSG(rep["conventions"]["distortion_factor"] == 1.0, "convention flag recorded");
    }
    {
        const json rep = json::parse(run(wiso + " dhat f2x.json f2z.json").out);
        CHECK_MSG(rep["result"]["value"] == 0.0, "dhat(X,Z) = 0");
    }

    // gh of the same file twice
    {
        const json rep = json::parse(run(wiso + " gh f2x.json f2x.json").out);
        CHECK_MSG(rep["result"]["distance"] == 0.0, "gh(X,X) = 0");
    }

    // persistence: worked barcode, raw format, canonicalize flag
    {
        const auto r = run(wiso + " persistence s521x.csv --raw");
        CHECK_MSG(r.out == "0 0 7\n0 0 8\n0 0 9\n0 0 inf\n1 10 11\n", "raw barcode records");
    }
    {
        const json rep = json::parse(run(wiso + " persistence s521x.csv").out);
        const json bars = rep["result"]["bars"];
        CHECK_MSG(bars.back() == "1 10 11", "dim-1 record `1 10 11`");
    }
    {
        write_file("single.json", R"({"labels":["p"],"distances":[[0]]})");
        const auto r = run(wiso + " persistence single.json --raw");
        CHECK_MSG(r.out == "0 0 inf\n", "singleton barcode `0 0 inf`");
    }
    {
        const auto r = run(wiso + " persistence f2x.json --canonicalize --raw");
        CHECK_MSG(r.out == "0 0 4\n0 0 5\n0 0 inf\n", "canonicalized barcode is integer");
    }

    // curvature command
    {
        const json rep = json::parse(run(wiso + " curvature f2x.json --m 2").out);
        CHECK_MSG(rep["result"]["count"] == 4, "K_2 has 4 canonical forms");
    }
    {
        const json rep = json::parse(run(wiso + " curvature f2x.json --m 2 --reduced").out);
        CHECK_MSG(rep["result"]["count"] == 3, "reduced K_2 has 3");
    }
    CHECK_MSG(run(wiso + " curvature f2x.json --m 4 --reduced").exit_code == 2,
              "m > n with --reduced exits 2");

    // dtilde and bottleneck over spaces and barcode files
    {
        const json rep = json::parse(run(wiso + " dtilde s521x.csv s521y.csv --dim 1").out);
        CHECK_MSG(rep["result"]["value"] == 0.5, "dtilde dim 1 = 0.5");
    }
    {
        const json rep = json::parse(run(wiso + " dtilde s521x.csv s521x.csv --dim 1").out);
        CHECK_MSG(rep["result"]["value"] == 0.0, "dtilde of identical files");
    }
    {
        const int rc =
            std::system((wiso + " persistence s521x.csv --raw > bx.barcode").c_str());
        CHECK_MSG(WEXITSTATUS(rc) == 0, "barcode export");
        const json rep = json::parse(run(wiso + " bottleneck bx.barcode s521y.csv --dim 1").out);
        CHECK_MSG(rep["result"]["value"] == 0.5, "bottleneck accepts barcode files");
    }

    // stability report
    {
        const json rep = json::parse(run(wiso + " check-stability s521x.csv s521y.csv").out);
        CHECK_MSG(rep["result"]["all_within_bound"] == true, "stability inequality holds");
        CHECK_MSG(rep["result"]["dims"][1]["dtilde"] == 0.5, "binding dim value");
    }

    // gen-random determinism and the byte-identical report contract
    {
        const auto r1 = run(wiso + " gen-random --n 5 --seed 9 --kind integer --out g1.json");
        const auto r2 = run(wiso + " gen-random --n 5 --seed 9 --kind integer --out g2.json");
        std::ifstream a("g1.json"), b("g2.json");
        std::ostringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        CHECK_MSG(sa.str() == sb.str(), "same seed, identical files");
        const json ra = json::parse(r1.out), rb = json::parse(r2.out);
        CHECK_MSG(ra["result"]["digest"] == rb["result"]["digest"], "same digest");
    }
    {
        const auto r1 = run(wiso + " dhat f2x.json f2y.json");
        const auto r2 = run(wiso + " dhat f2x.json f2y.json");
        CHECK_MSG(strip_timestamp(r1.out) == strip_timestamp(r2.out),
                  "reports are byte-identical modulo the timestamp");
    }

    // csv output round-trips through validate
    {
        run(wiso + " gen-random --n 3 --seed 1 --kind uniform --out u.csv --csv");
        CHECK_MSG(run(wiso + " validate u.csv").exit_code == 0, "csv output validates");
    }

    if (failures == 0) {
        std::cout << "cli checks passed\n";
        return 0;
    }
    std::cerr << failures << " cli check(s) failed\n";
    return 1;
}
