// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include <doctest.h>

#include "csgeom/cli.hpp"
#include "csgeom/report_io.hpp"
#include "csgeom/verify.hpp"

using namespace csgeom;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dist prints pi/4 for the half-turn pair") {
    const CliResult r = run_cli({"dist", "--model", "cp:n=1,m=1", "--from", "0", "--to", "1",
                                 "--kind", "cayley"});
    CHECK(r.code == 0);
    CHECK(std::abs(std::stod(r.out) - std::numbers::pi / 4) < 1e-14);
}

TEST_CASE("dist understands every kind and validates the model") {
    for (const char* kind : {"cayley", "study", "wick", "bargmann", "diastasis"}) {
        const CliResult r = run_cli({"dist", "--model", "cp:n=1,m=1", "--from", "0.2+0.1i",
                                     "--to", "0.5", "--kind", kind});
        CHECK(r.code == 0);
    }
    const CliResult pseudo = run_cli({"dist", "--model", "disc:twok=2", "--from", "0", "--to",
                                      "0.5", "--kind", "pseudo"});
    CHECK(pseudo.code == 0);
    CHECK(std::abs(std::stod(pseudo.out) - std::acosh(1.0 / 0.75)) < 1e-14);

    CHECK(run_cli({"dist", "--model", "disc:twok=2", "--from", "0", "--to", "0.5", "--kind",
                   "cayley"}).code == 2);
    CHECK(run_cli({"dist", "--model", "cp:n=1,m=1", "--from", "0", "--to", "1", "--kind",
                   "nope"}).code == 2);
}

TEST_CASE("usage errors exit with 2 and name the offending token") {
    const CliResult bounds = run_cli({"verify", "cauchy", "--model", "gr:k=4,n=4"});
    CHECK(bounds.code == 2);
    CHECK(bounds.err.find("0 < k < n") != std::string::npos);

    const CliResult unknown = run_cli({"verify", "frobnicate", "--model", "cp:n=1,m=1"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("frobnicate") != std::string::npos);

    const CliResult badtoken = run_cli({"verify", "cauchy", "--model", "cp:q=1,m=1"});
    CHECK(badtoken.code == 2);
    CHECK(badtoken.err.find("n=<int>") != std::string::npos);

    CHECK(run_cli({"bogus-verb"}).code == 2);
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("verify cauchy emits both identities and exit code 0") {
    const CliResult r = run_cli({"verify", "cauchy", "--model", "cp:n=1,m=2", "--trials", "200",
                                 "--seed", "42"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"check\":\"cauchy\"") != std::string::npos);
    CHECK(r.out.find("\"check\":\"cauchy_angle\"") != std::string::npos);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("identical command lines produce byte-identical reports") {
    const std::vector<std::string> cmd = {"verify", "diastasis", "--model", "disc:twok=2",
                                          "--trials", "300", "--seed", "9"};
    const CliResult a = run_cli(cmd);
    const CliResult b = run_cli(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    std::vector<std::string> threaded = cmd;
    threaded.push_back("--threads");
    threaded.push_back("3");
    CHECK(run_cli(threaded).out == a.out);
}

TEST_CASE("seven verb exit code reflects all_equal") {
    const CliResult equal = run_cli({"seven", "--model", "cp:n=1,m=1"});
    CHECK(equal.code == 0);
    CHECK(equal.out.find("\"all_equal\":true") != std::string::npos);

    const CliResult diverges = run_cli({"seven", "--model", "cp:n=1,m=2"});
    CHECK(diverges.code == 1);
    CHECK(diverges.out.find("\"n2_sections\":3") != std::string::npos);
    CHECK(diverges.out.find("\"n6_euler_char\":2") != std::string::npos);
    CHECK(diverges.out.find("\"all_equal\":false") != std::string::npos);

    const CliResult again = run_cli({"seven", "--model", "cp:n=1,m=2"});
    CHECK(again.out == diverges.out);  // deterministic
}

TEST_CASE("csv output carries the documented header") {
    const CliResult r = run_cli({"verify", "bargmann", "--dim", "4", "--trials", "100",
                                 "--seed", "5", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("check,model,trials,seed,tolerance,max_abs_error,pass,witnesses", 0) == 0);

    const CliResult seven_csv = run_cli({"seven", "--model", "cp:n=2,m=1", "--format", "csv"});
    CHECK(seven_csv.code == 0);
    CHECK(seven_csv.out.rfind(seven_report_csv_header(), 0) == 0);
}

TEST_CASE("probe reports kernel data at explicit points") {
    const CliResult r = run_cli({"probe", "--model", "cp:n=1,m=1", "--z1", "0", "--z2", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"overlap_abs\":0.70710678118654") != std::string::npos);
    CHECK(r.out.find("\"polar\":false") != std::string::npos);

    const CliResult gr = run_cli({"probe", "--model", "gr:k=2,n=4", "--z1", "0,0;0,0", "--z2",
                                  "1,0;0,1"});
    CHECK(gr.code == 0);

    const CliResult disc = run_cli({"probe", "--model", "disc:twok=2", "--z1", "0", "--z2",
                                    "0.5"});
    CHECK(disc.code == 0);
    CHECK(disc.out.find("\"pseudo_distance\":") != std::string::npos);
}

TEST_CASE("morse verb reports the critical point count") {
    const CliResult r = run_cli({"morse", "--model", "cp:n=2,m=1", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"count\":3") != std::string::npos);
    const CliResult custom = run_cli({"morse", "--model", "cp:n=1,m=1", "--hdiag", "0.5,4.5"});
    CHECK(custom.code == 0);
    CHECK(custom.out.find("\"count\":2") != std::string::npos);
}

TEST_CASE("verify --list names every check") {
    const CliResult r = run_cli({"verify", "--list"});
    CHECK(r.code == 0);
    for (const char* name : {"cauchy", "diastasis", "homogeneity", "geodesic", "anandan",
                             "bargmann", "injectivity"})
        CHECK(r.out.find(name) != std::string::npos);
}

TEST_CASE("CSGEOM_SEED provides the default seed") {
    ::setenv("CSGEOM_SEED", "42", 1);
    const CliResult env_seeded = run_cli({"verify", "cauchy", "--model", "cp:n=1,m=1",
                                          "--trials", "100"});
    ::unsetenv("CSGEOM_SEED");
    const CliResult flag_seeded = run_cli({"verify", "cauchy", "--model", "cp:n=1,m=1",
                                           "--trials", "100", "--seed", "42"});
    CHECK(env_seeded.out == flag_seeded.out);

    ::setenv("CSGEOM_SEED", "not-a-number", 1);
    const CliResult bad = run_cli({"verify", "cauchy", "--model", "cp:n=1,m=1"});
    ::unsetenv("CSGEOM_SEED");
    CHECK(bad.code == 2);
}

TEST_CASE("report serialization is stable") {
    verify::CheckReport r;
    r.check = "cauchy";
    r.model = "cp:n=1,m=1";
    r.trials = 10;
    r.seed = 3;
    r.tolerance = 1e-10;
    r.max_abs_error = 0.5;
    r.pass = false;
    r.witnesses = {"trial=4 err=0.5"};
    CHECK(to_json(r) ==
          "{\"check\":\"cauchy\",\"model\":\"cp:n=1,m=1\",\"trials\":10,\"seed\":3,"
          "\"tolerance\":1e-10,\"max_abs_error\":0.5,\"pass\":false,"
          "\"witnesses\":[\"trial=4 err=0.5\"]}");
    CHECK(to_csv_row(r) ==
          "cauchy,cp:n=1,m=1,10,3,1e-10,0.5,false,\"trial=4 err=0.5\"");
}
