#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <a2skein/invariants.hpp>
#include <a2skein/webio.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

using namespace a2skein;

namespace {

// Runs the installed CLI binary and captures stdout + exit code.
std::pair<int, std::string> run_cli(const std::string& args) {
    std::string cmd = std::string(A2SKEIN_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (fgets(buf.data(), static_cast<int>(buf.size()), p)) out += buf.data();
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("jones subcommand matches the library") {
    auto [code, out] = run_cli("jones --orientation parallel --m 1 --s 1 --t 1");
    CHECK(code == 0);
    ColoredLinkSpec sp{LinkOrientation::parallel, 1, 1, 1};
    CHECK(out == jones_torus(sp).as_laurent().to_string() + "\n");
}

TEST_CASE("deterministic output") {
    auto a = run_cli("tail --orientation antiparallel --m 1 --order 10");
    auto b = run_cli("tail --orientation antiparallel --m 1 --order 10");
    CHECK(a.first == 0);
    CHECK(a == b);
}

TEST_CASE("machine format parses back losslessly") {
    auto [code, out] = run_cli("jones --format machine --orientation antiparallel --m 2 --s 2 --t 1");
    REQUIRE(code == 0);
    auto j = nlohmann::json::parse(out);
    QLaurent parsed;
    for (auto& term : j["terms"]) parsed.add_term(term[0].get<int>(), term[1].get<long long>());
    ColoredLinkSpec sp{LinkOrientation::antiparallel, 2, 2, 1};
    CHECK(parsed == jones_torus(sp).as_laurent());
}

TEST_CASE("twist subcommand renders both bases") {
    auto [ck, outk] = run_cli("twist --orientation parallel --s 2 --t 2 --m 1 --basis k");
    auto [cl, outl] = run_cli("twist --orientation parallel --s 2 --t 2 --m 1 --basis l");
    CHECK(ck == 0);
    CHECK(cl == 0);
    CHECK(outk != outl);
    auto [cm, outm] = run_cli("twist --orientation antiparallel --s 1 --t 1 --m 2 --format machine");
    REQUIRE(cm == 0);
    auto j = nlohmann::json::parse(outm);
    CHECK(j["entries"].size() == antiparallel_multi(1, 1, 2).entries.size());
}

TEST_CASE("unknown flags are usage errors") {
    auto [code, out] = run_cli("jones --orientation parallel --m 1 --s 1 --t 1 --bogus 3");
    CHECK(code == 2);
    auto [code2, out2] = run_cli("frobnicate");
    CHECK(code2 == 2);
    auto [code3, out3] = run_cli("");
    CHECK(code3 == 2);
}

TEST_CASE("reduce consumes the web format") {
    // a clasped circle of color (2,0): scalar [3][4]/[2]
    const char* path = "cli_test_web.txt";
    {
        std::ofstream f(path);
        f << "vertices:\n  c0 clasp 2 0\nedges:\n  e0 c0 c0_x\n";
    }
    auto bad = run_cli(std::string("reduce --input ") + path);
    CHECK(bad.first == 1); // unknown endpoint: computation/parse error
    {
        std::ofstream f(path);
        f << "# clasped unknot of color (2,0)\n";
        f << "vertices:\n  c0 clasp 2 0\n";
        f << "edges:\n  e0 c0 c0\n  e1 c0 c0\n";
        // slots 0,1 are inputs; slot 2 is the inner output, slot 3 the outer
        f << "rotation:\n  c0: e0.h e1.h e1.t e0.t\n";
    }
    auto [code, out] = run_cli(std::string("reduce --input ") + path);
    CHECK(code == 0);
    CHECK(out == (QRational(quantum_int(3) * quantum_int(4)) / QRational(quantum_int(2))).to_string() + "\n");
    {
        std::ofstream f(path);
        f << "boundary: p0:+ p1:+ p2:- p3:-\n";
        f << "bottom: 2\n";
        f << "vertices:\n  c0 clasp 2 0\n";
        f << "edges:\n  e0 p0 c0\n  e1 p1 c0\n  e2 c0 p2\n  e3 c0 p3\n";
        f << "rotation:\n  c0: e0 e1 e2 e3\n";
    }
    auto [code2, out2] = run_cli(std::string("reduce --input ") + path);
    CHECK(code2 == 0);
    CHECK(out2.find("coefficient") != std::string::npos);
    std::remove(path);
}

TEST_CASE("reduce evaluates closed diagrams") {
    const char* path = "cli_test_closed.txt";
    {
        std::ofstream f(path);
        f << "circles: 1\n";
    }
    auto [code, out] = run_cli(std::string("reduce --input ") + path);
    CHECK(code == 0);
    CHECK(out == quantum_int(3).to_string() + "\n");
    std::remove(path);
}

TEST_CASE("verify subcommand runs a cheap suite") {
    auto [code, out] = run_cli("verify --suite qcomb");
    CHECK(code == 0);
    CHECK(out.find("all suites passed") != std::string::npos);
}
