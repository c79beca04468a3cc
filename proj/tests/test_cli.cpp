#include "dorder/cli.hpp"

#include "doctest.h"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dorder;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / "dorder_cli_test";
        fs::create_directories(path);
    }
    std::string file(const std::string& name, const std::string& content) const {
        fs::path p = path / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }
};

struct RunResult {
    int exit;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const char* kParabola =
    "generators: u, t\nbase_ring: Z\nvars: X1, X2\npoly: X2 - X1^2\n";
const char* kDiagonal =
    "generators: u, t\nbase_ring: Z\nvars: X1, X2\npoly: X2 - X1\n";
const char* kAlpha =
    "generators: u, t\nbase_ring: Z\ncoords: t, (t^3 + 1)/(t)\n";
const char* kRefuteAlpha =
    "generators: u, t\nbase_ring: Z\ncoords: t, (u*t + 1)/(u)\n";

} // namespace

TEST_CASE("search run: report, certificate, exhaustion exit codes") {
    TempDir dir;
    std::string parab = dir.file("parab.poly", kParabola);
    std::string diag = dir.file("diag.poly", kDiagonal);
    std::string alpha = dir.file("alpha.pt", kAlpha);
    std::string refute = dir.file("refute.pt", kRefuteAlpha);
    std::string diag_alpha =
        dir.file("diag_alpha.pt", "generators: u, t\nbase_ring: Z\ncoords: t, t\n");
    std::string square = dir.file(
        "square.poly",
        "generators: u, t\nbase_ring: Z\nvars: X1, X2\npoly: X2^2 - 2*X1*X2 + X1^2\n");

    RunResult report = run({"search", "run", "--alpha", alpha, "--corpus", parab,
                            "--r", "1", "--q", "1,1", "--lambda", "1"});
    CHECK(report.exit == kOk);
    CHECK(report.out.find("outcome: report") != std::string::npos);
    CHECK(report.out.find("index: 2") != std::string::npos);

    RunResult cert = run({"search", "run", "--alpha", refute, "--corpus", diag,
                          "--r", "1"});
    CHECK(cert.exit == kCertificate);
    CHECK(cert.out.find("outcome: certificate") != std::string::npos);
    CHECK(cert.out.find("check_value: 0") != std::string::npos);

    RunResult exhausted = run({"search", "run", "--alpha", diag_alpha, "--corpus",
                               square, "--r", "1"});
    CHECK(exhausted.exit == kExhaustion);
    CHECK(exhausted.out.find("outcome: exhaustion") != std::string::npos);
}

TEST_CASE("byte-identical reports for identical inputs and seed") {
    TempDir dir;
    std::string parab = dir.file("parab.poly", kParabola);
    std::string alpha = dir.file("alpha.pt", kAlpha);
    std::vector<std::string> args{"search", "run", "--alpha", alpha, "--corpus",
                                  parab, "--r", "1", "--seed", "9"};
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit == b.exit);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

TEST_CASE("machine format is stable JSON") {
    TempDir dir;
    std::string parab = dir.file("parab.poly", kParabola);
    RunResult r = run({"--format", "machine", "search", "plan", "--corpus", parab,
                       "--r", "1", "--q", "1,1"});
    CHECK(r.exit == kOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "search plan");
    CHECK(j["count"] == 5);
    CHECK(j["lambda"] == "1/15");
    CHECK(j["exit"] == 0);
}

TEST_CASE("spec check exit codes and diagnostics") {
    TempDir dir;
    std::string parab = dir.file("parab.poly", kParabola);
    std::string alpha = dir.file("alpha.pt", kAlpha);
    std::string good = dir.file("good.pt",
                                "generators: u, t\nbase_ring: Z\ncoords: t, u*t\n");

    CHECK(run({"spec", "check", "--point", good, "--corpus", parab, "--mode",
               "transcendental"})
              .exit == kOk);
    CHECK(run({"spec", "check", "--point", alpha, "--corpus", parab, "--mode",
               "arithmetical"})
              .exit == kFail);

    // Misspelled generator in coords: parse diagnostic naming the token.
    std::string bad = dir.file("bad.pt",
                               "generators: u, t\nbase_ring: Z\ncoords: t, w*t\n");
    RunResult r = run({"spec", "check", "--point", bad, "--corpus", parab, "--mode",
                       "discrete"});
    CHECK(r.exit == kUsage);
    CHECK(r.err.find("'w'") != std::string::npos);
    CHECK(r.err.find("line 3") != std::string::npos);

    // Mismatched contexts between files.
    std::string other = dir.file("other.pt",
                                 "generators: v\nbase_ring: Z\ncoords: v, v\n");
    CHECK(run({"spec", "check", "--point", other, "--corpus", parab, "--mode",
               "discrete"})
              .exit == kUsage);
}

TEST_CASE("order and clearance commands") {
    TempDir dir;
    RunResult cmp = run({"order", "compare", "--generators", "u, t", "--x", "u^100",
                         "--y", "t"});
    CHECK(cmp.exit == kOk);
    CHECK(cmp.out.find("result: lt") != std::string::npos);

    RunResult cls = run({"order", "classify", "--generators", "u, t", "--x",
                         "(t + 1)/(t)"});
    CHECK(cls.exit == kOk);
    CHECK(cls.out.find("magnitude: finite") != std::string::npos);

    std::string refute = dir.file("refute.pt", kRefuteAlpha);
    RunResult single = run({"spec", "clearance", "--point", refute, "--a", "1,-1"});
    CHECK(single.exit == kFail);
    CHECK(single.out.find("magnitude: infinitesimal") != std::string::npos);

    std::string good = dir.file("good.pt",
                                "generators: u, t\nbase_ring: Z\ncoords: t, u*t\n");
    CHECK(run({"spec", "clearance", "--point", good, "--bound", "3"}).exit == kOk);
}

TEST_CASE("verify suite edge cases") {
    RunResult vacuous = run({"verify", "suite", "--trials", "0"});
    CHECK(vacuous.exit == kOk);
    CHECK(vacuous.out.find("warning") != std::string::npos);

    RunResult mutated =
        run({"verify", "suite", "--trials", "5", "--seed", "2", "--mutate-compare"});
    CHECK(mutated.exit == kFail);
    CHECK(mutated.out.find("family: total-order") != std::string::npos);
    CHECK(mutated.out.find("verdict: fail") != std::string::npos);
}

TEST_CASE("golden report bodies") {
    RunResult cls = run({"order", "classify", "--generators", "u, t", "--x",
                         "(t + 1)/(t)"});
    CHECK(cls.out ==
          "command: order classify\n"
          "context:\n"
          "  generators: u, t\n"
          "  base_ring: Z\n"
          "x: (t + 1)/(t)\n"
          "sign: 1\n"
          "magnitude: finite\n"
          "exit: 0\n");

    TempDir dir;
    std::string parab = dir.file("parab.poly", kParabola);
    RunResult plan = run({"search", "plan", "--corpus", parab, "--r", "1", "--q",
                          "1,1"});
    CHECK(plan.out ==
          "command: search plan\n"
          "context:\n"
          "  generators: u, t\n"
          "  base_ring: Z\n"
          "  vars: X1, X2\n"
          "r: 1\n"
          "q: [\"1\",\"1\"]\n"
          "q_sampled: false\n"
          "count: 5\n"
          "lambda: 1/15\n"
          "exit: 0\n");
}

TEST_CASE("usage errors") {
    CHECK(run({"search", "run"}).exit == kUsage);
    CHECK(run({"nope"}).exit == kUsage);
    CHECK(run({}).exit == kUsage);
    TempDir dir;
    std::string parab = dir.file("parab.poly", kParabola);
    CHECK(run({"search", "run", "--alpha", "/nonexistent", "--corpus", parab, "--r",
               "1"})
              .exit == kUsage);
    // Direction outside U_F is a precondition violation.
    std::string alpha = dir.file("alpha.pt", kAlpha);
    CHECK(run({"search", "run", "--alpha", alpha, "--corpus", parab, "--r", "1",
               "--q", "0,1"})
              .exit == kUsage);
}

TEST_CASE("nabla commands") {
    TempDir dir;
    std::string parab = dir.file("parab.poly", kParabola);
    RunResult expand = run({"nabla", "expand", "--poly", parab});
    CHECK(expand.exit == kOk);
    CHECK(expand.out.find("G: T2 - 2*X1*T1") != std::string::npos);
    CHECK(expand.out.find("linear_rep") != std::string::npos);

    RunResult good_dir = run({"nabla", "check-direction", "--polys", parab, "--q",
                              "1,1"});
    CHECK(good_dir.exit == kOk);
    CHECK(good_dir.out.find("verdict: pass") != std::string::npos);

    RunResult bad_dir = run({"nabla", "check-direction", "--polys", parab, "--q",
                             "0,1"});
    CHECK(bad_dir.exit == kFail);
}
