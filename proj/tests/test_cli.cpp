#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "isodual/cli.hpp"

using isodual::run_cli;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = run_cli(std::move(args), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("exists reports the verdict and exit code") {
    CliResult no = cli({"exists", "--q", "3", "--n", "8"});
    CHECK(no.code == 1);
    CHECK(no.out ==
          "no: nu2(n) = 3 is not strictly between 0 and 2*nu2(q-1) = 2\n");

    CliResult yes = cli({"exists", "--q", "5", "--n", "8"});
    CHECK(yes.code == 0);
    CHECK(yes.out == "yes: 0 < nu2(n) = 3 < 2*nu2(q-1) = 4\nu=1 t=2\n");

    CliResult js = cli({"exists", "--q", "5", "--n", "8", "--json"});
    CHECK(js.code == 0);
    CHECK(js.out ==
          R"({"q":5,"n":8,"exists":true,"v":3,"w":2,"n_odd":1,"u":1,"t":2,)"
          R"("reason":"0 < nu2(n) = 3 < 2*nu2(q-1) = 4"})"
          "\n");
}

TEST_CASE("construct emits the descriptor") {
    CliResult r = cli({"construct", "--q", "5", "--n", "8",
                       "--pin-theta", "theta^2=2", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          R"({"q":5,"n":8,"P":[0,1,4,5],"check_poly":[2,0,2,0,1],)"
          R"("gen_poly":[2,0,3,0,1],"dual_check_poly":[3,0,4,0,1],)"
          R"("certificate":{"s":1,"t":2},"pin":"theta^2=2"})"
          "\n");

    // Byte-identical across runs.
    CliResult again = cli({"construct", "--q", "5", "--n", "8",
                           "--pin-theta", "theta^2=2", "--json"});
    CHECK(again.out == r.out);

    CliResult text = cli({"construct", "--q", "5", "--n", "8", "--pin-theta", "theta^2=2"});
    CHECK(text.code == 0);
    CHECK(text.out.find("check:      X^4 + 2X^2 + 2\n") != std::string::npos);
    CHECK(text.out.find("generator:  X^4 - 2X^2 + 2\n") != std::string::npos);
    CHECK(text.out.find("dual check: X^4 - X^2 - 2\n") != std::string::npos);
    CHECK(text.out.find("certificate: s=1 t=2\n") != std::string::npos);

    CliResult none = cli({"construct", "--q", "3", "--n", "8"});
    CHECK(none.code == 1);
    CHECK(none.err.find("NoSplitting") != std::string::npos);
}

TEST_CASE("cosets and factor output") {
    CliResult c = cli({"cosets", "--q", "3", "--n", "10"});
    CHECK(c.code == 0);
    CHECK(c.out == "q=3 n=10 cosets=4\n{0}\n{1, 3, 7, 9}\n{2, 4, 6, 8}\n{5}\n");

    CliResult f = cli({"factor", "--q", "3", "--n", "10"});
    CHECK(f.code == 0);
    CHECK(f.out ==
          "X^10 - 1 over GF(3): 4 irreducible factors\n"
          "{0}: X - 1\n"
          "{1, 3, 7, 9}: X^4 - X^3 + X^2 - X + 1\n"
          "{2, 4, 6, 8}: X^4 + X^3 + X^2 + X + 1\n"
          "{5}: X + 1\n"
          "alternating pairs under i -> i + 5:\n"
          "{0} <-> {5}\n"
          "{1, 3, 7, 9} <-> {2, 4, 6, 8}\n");

    // nu2(n) != 1 suppresses the pairing block.
    CliResult f8 = cli({"factor", "--q", "5", "--n", "8"});
    CHECK(f8.code == 0);
    CHECK(f8.out.find("alternating") == std::string::npos);
}

TEST_CASE("enumerate lists splittings") {
    CliResult r = cli({"enumerate", "--q", "3", "--n", "10"});
    CHECK(r.code == 0);
    CHECK(r.out == "q=3 n=10 s=1 t=5\ncount: 4\n{0, 1, 3, 7, 9}\n{1, 3, 5, 7, 9}\n"
                   "{0, 2, 4, 6, 8}\n{2, 4, 5, 6, 8}\n");

    CliResult capped = cli({"enumerate", "--q", "3", "--n", "10", "--enum-bound", "2"});
    CHECK(capped.out.find("count: 2\n") != std::string::npos);

    // u = 1 shifts by 10 = 0, the identity, which splits nothing.
    CliResult shifted = cli({"enumerate", "--q", "3", "--n", "10", "--u", "1"});
    CHECK(shifted.code == 1);
    CHECK(shifted.out.find("count: 0\n") != std::string::npos);

    CliResult missing = cli({"enumerate", "--q", "3", "--n", "8"});
    CHECK(missing.code == 1);
}

TEST_CASE("verify round trip and tampering") {
    CliResult made = cli({"construct", "--q", "5", "--n", "8",
                          "--pin-theta", "theta^2=2", "--json"});
    REQUIRE(made.code == 0);
    {
        std::ofstream f("cli_test_desc.json");
        f << made.out;
    }
    CliResult ok = cli({"verify", "cli_test_desc.json"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("verification passed") != std::string::npos);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    CliResult okj = cli({"verify", "cli_test_desc.json", "--json"});
    CHECK(okj.code == 0);
    CHECK(okj.out.find(R"("failures":[]})") != std::string::npos);

    std::string tampered = made.out;
    std::size_t pos = tampered.find(R"("gen_poly":[2,0,3,0,1])");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 22, R"("gen_poly":[2,0,2,0,1])");
    {
        std::ofstream f("cli_test_tampered.json");
        f << tampered;
    }
    CliResult bad = cli({"verify", "cli_test_tampered.json"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("verification failed") != std::string::npos);

    {
        std::ofstream f("cli_test_broken.json");
        f << "{not json";
    }
    CHECK(cli({"verify", "cli_test_broken.json"}).code == 2);

    {
        std::ofstream f("cli_test_incomplete.json");
        f << R"({"q":5,"n":8})";
    }
    CHECK(cli({"verify", "cli_test_incomplete.json"}).code == 2);

    CHECK(cli({"verify", "cli_test_nonexistent_file.json"}).code == 2);
}

TEST_CASE("verify grid") {
    CliResult r = cli({"verify", "--grid", "--max-n", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("grid passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    CliResult js = cli({"verify", "--grid", "--max-n", "10", "--json"});
    CHECK(js.code == 0);
    CHECK(js.out.find(R"({"claim":"splitting existence equivalence q=3",)") == 0);
}

TEST_CASE("mds subcommand") {
    CliResult r = cli({"mds", "--q", "5", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          R"({"descriptor":{"q":5,"n":6,"P":[0,1,5],"check_poly":[4,2,3,1],)"
          R"("gen_poly":[1,2,2,1],"dual_check_poly":[1,2,2,1],)"
          R"("certificate":{"s":1,"t":3}},"ell":1,"design_distance":4})"
          "\n");

    CliResult meas = cli({"mds", "--q", "5", "--distance"});
    CHECK(meas.code == 0);
    CHECK(meas.out.find("[6, 3, 4] MDS iso-self-dual cyclic code over GF(5)\n") == 0);
    CHECK(meas.out.find("measured distance: 4\n") != std::string::npos);

    CHECK(cli({"mds", "--q", "7"}).code == 2);
    CHECK(cli({"mds", "--q", "12"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"exists", "--q", "5"}).code == 2);
    CHECK(cli({"exists", "--q", "5", "--n", "8", "--wat"}).code == 2);
    CHECK(cli({"exists", "--q", "6", "--n", "5"}).code == 2);
    CHECK(cli({"exists", "--q", "3", "--n", "6"}).code == 2);
    CHECK(cli({"construct", "--q", "5", "--n", "8", "--pin-theta", "nope"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"exists", "--help"}).code == 0);
}

} // TEST_SUITE
