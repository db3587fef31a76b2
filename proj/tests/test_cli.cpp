#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "nilcommute/io.hpp"

using namespace nilcommute;
using nlohmann::json;

namespace {

std::string g_cli;
std::string g_tmpdir;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

// runs the binary through the shell, capturing stdout, stderr and the exit
// code; `env` is prepended verbatim (e.g. "NILCOMMUTE_THREADS=4")
RunResult run(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const std::string errfile = g_tmpdir + "/stderr." + std::to_string(counter++);
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += g_cli + " " + args + " 2>" + errfile;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t nread;
    while ((nread = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, nread);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(errfile);
    return r;
}

Certificate parse_cert(const std::string& text) {
    return certificate_of_json(json::parse(text));
}

const json& ev(const Certificate& c, const std::string& label) {
    for (const auto& [k, v] : c.evidence)
        if (k == label) return v;
    throw std::runtime_error("missing evidence: " + label);
}

std::string tmpfile(const std::string& name) { return g_tmpdir + "/" + name; }

}  // namespace

TEST_CASE("golden outputs are byte-stable") {
    const std::string dir = NILCOMMUTE_GOLDEN_DIR;
    struct Golden {
        const char* args;
        const char* file;
    };
    for (const Golden& g : {Golden{"dims --n 4", "dims_n4.json"},
                            Golden{"prop321 --fiber 2", "prop321_fiber2.json"},
                            Golden{"prop321 --fiber 3", "prop321_fiber3.json"},
                            Golden{"centralizer --type 3,2,1 --field fp:7",
                                   "centralizer_321_fp7.json"}}) {
        CAPTURE(g.args);
        RunResult r = run(g.args);
        REQUIRE(r.code == 0);
        std::string expect = slurp(dir + "/" + g.file);
        REQUIRE_FALSE(expect.empty());
        REQUIRE(r.out == expect);
    }
}

TEST_CASE("certificate-producing commands pass") {
    RunResult g4 = run("gerstenhaber --n 4");
    REQUIRE(g4.code == 0);
    Certificate c = parse_cert(g4.out);
    CHECK(c.verdict == Verdict::Pass);
    CHECK(ev(c, "algebra_dim") == 5);
    CHECK(ev(c, "expected_dim") == 5);

    RunResult bs = run("basili --type 3,2,1");
    REQUIRE(bs.code == 0);
    Certificate cb = parse_cert(bs.out);
    CHECK(cb.verdict == Verdict::Pass);
    CHECK(ev(cb, "kernel_intersection_dim") == 1);
    CHECK(ev(cb, "algebra_dim") == 6);

    RunResult n2 = run("n2red --field fp:101 --seed 1 --trials 100");
    REQUIRE(n2.code == 0);
    Certificate cn = parse_cert(n2.out);
    CHECK(cn.verdict == Verdict::Pass);
    CHECK(ev(cn, "shaped_dimension") == 16);
    CHECK(ev(cn, "regular_closure_dimension") == 16);
    CHECK(ev(cn, "samples_on_locus") == 100);

    RunResult cv = run("curve-verify --type 2,2 --field fp:101 --trials 10 --seed 3");
    REQUIRE(cv.code == 0);
    CHECK(parse_cert(cv.out).verdict == Verdict::Pass);

    RunResult sq = run("squarezero --l 3 --m 2 --field fp:101 --seed 4");
    REQUIRE(sq.code == 0);
    CHECK(parse_cert(sq.out).verdict == Verdict::Pass);

    RunResult sqm1 = run("squarezero --l 4 --m 1 --field q --seed 5");
    REQUIRE(sqm1.code == 0);
    CHECK(parse_cert(sqm1.out).verdict == Verdict::Pass);

    RunResult p1 = run("prop1nonzero --k 2 --n 5 --s 3/2 --t -5/7 --trials 10 --seed 6");
    REQUIRE(p1.code == 0);
    Certificate cp = parse_cert(p1.out);
    CHECK(cp.verdict == Verdict::Pass);
    CHECK(ev(cp, "lambda_samples_valid") == 10);

    RunResult sr = run("sample-r1 --n 6 --d 3 --field fp:101 --seed 7");
    REQUIRE(sr.code == 0);
    Certificate cs = parse_cert(sr.out);
    CHECK(cs.verdict == Verdict::Pass);
    CHECK(ev(cs, "first_member_1_regular") == true);
}

TEST_CASE("prop321 cases resolve their field defaults") {
    RunResult gen = run("prop321 --case generic --beta 1");
    REQUIRE(gen.code == 0);
    Certificate c = parse_cert(gen.out);
    CHECK(c.verdict == Verdict::Pass);
    CHECK(ev(c, "omega") == "2/3");
    CHECK(ev(c, "x1_one_regular") == true);

    RunResult c2 = run("prop321 --case char2 --beta 1");
    REQUIRE(c2.code == 0);
    Certificate cc2 = parse_cert(c2.out);
    CHECK(cc2.verdict == Verdict::Pass);
    CHECK(cc2.field == FieldSpec::prime_field(2));

    RunResult c3 = run("prop321 --case char3 --beta 2");
    REQUIRE(c3.code == 0);
    CHECK(parse_cert(c3.out).field == FieldSpec::prime_field(3));

    RunResult f7 = run("prop321 --case generic --field fp:7 --omega 3");
    REQUIRE(f7.code == 0);
    CHECK(parse_cert(f7.out).verdict == Verdict::Pass);

    RunResult badw = run("prop321 --case generic --omega 1");
    CHECK(badw.code == 2);
    CHECK(badw.err.find("error: OmegaNotRoot:") != std::string::npos);
}

TEST_CASE("tuples flow between subcommands through files") {
    const std::string tup = tmpfile("gerstenhaber5.json");
    RunResult g5 = run("gerstenhaber --n 5 --field fp:101 --emit-tuple " + tup);
    REQUIRE(g5.code == 0);

    RunResult ad = run("algebra-dim --in " + tup);
    REQUIRE(ad.code == 0);
    Certificate c = parse_cert(ad.out);
    CHECK(c.verdict == Verdict::Pass);
    CHECK(ev(c, "algebra_dim") == 6);
    CHECK(ev(c, "n") == 5);

    RunResult cr = run("certify-reducible --in " + tup);
    REQUIRE(cr.code == 0);
    Certificate cc = parse_cert(cr.out);
    CHECK(cc.verdict == Verdict::Pass);
    CHECK(ev(cc, "conclusion") == "dimension obstruction consistent with reducibility");

    // a 1-regular tuple has no dimension obstruction
    const std::string r1 = tmpfile("r1.json");
    REQUIRE(run("sample-r1 --n 5 --d 2 --field fp:101 --seed 11 --emit-tuple " + r1).code == 0);
    RunResult inc = run("certify-reducible --in " + r1);
    REQUIRE(inc.code == 0);
    CHECK(parse_cert(inc.out).verdict == Verdict::Inconclusive);

    // transpose is an involution on the serialized bytes
    const std::string t1 = tmpfile("transposed1.json");
    const std::string t2 = tmpfile("transposed2.json");
    REQUIRE(run("transform --in " + tup + " --kind transpose --emit-tuple " + t1).code == 0);
    REQUIRE(run("transform --in " + t1 + " --kind transpose --emit-tuple " + t2).code == 0);
    CHECK(slurp(t2) == slurp(tup));
    CHECK(slurp(t1) != slurp(tup));

    RunResult conj = run("transform --in " + tup + " --kind conjugate --seed 13");
    REQUIRE(conj.code == 0);
    CHECK(parse_cert(conj.out).verdict == Verdict::Pass);
}

TEST_CASE("--out moves the certificate into a file") {
    const std::string outfile = tmpfile("cert.json");
    RunResult direct = run("centralizer --type 4,2");
    REQUIRE(direct.code == 0);
    RunResult filed = run("centralizer --type 4,2 --out " + outfile);
    REQUIRE(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(outfile) == direct.out);
}

TEST_CASE("identical invocations produce identical bytes") {
    for (const char* args : {"gerstenhaber --n 6 --field fp:7",
                             "n2red --field fp:101 --seed 5 --trials 20",
                             "squarezero --l 2 --m 3 --field q --seed 8",
                             "sample-r1 --n 7 --d 2 --field q --seed 9"}) {
        CAPTURE(args);
        RunResult a = run(args);
        RunResult b = run(args);
        REQUIRE(a.code == 0);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
    // thread count must not leak into results
    RunResult st = run("n2red --field fp:101 --seed 5 --trials 40");
    RunResult mt = run("n2red --field fp:101 --seed 5 --trials 40", "NILCOMMUTE_THREADS=4");
    CHECK(st.out == mt.out);
}

TEST_CASE("usage and validation errors exit with code 2") {
    CHECK(run("no-such-command").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("gerstenhaber --help").code == 0);
    CHECK(run("gerstenhaber").code == 2);  // missing --n

    RunResult small = run("gerstenhaber --n 3");
    CHECK(small.code == 2);
    CHECK(small.err.find("error: BadSize:") != std::string::npos);

    RunResult notprime = run("centralizer --type 2,1 --field fp:4");
    CHECK(notprime.code == 2);
    CHECK(notprime.err.find("error: NotPrime:") != std::string::npos);

    RunResult badfield = run("centralizer --type 2,1 --field gf:9");
    CHECK(badfield.code == 2);
    CHECK(badfield.err.find("error: SchemaError:") != std::string::npos);

    RunResult badpart = run("centralizer --type 2,x");
    CHECK(badpart.code == 2);
    CHECK(badpart.err.find("error: BadPartition:") != std::string::npos);

    CHECK(run("prop321 --case generic --fiber 2").code == 2);
    CHECK(run("prop321").code == 2);
    CHECK(run("squarezero --l 2").code == 2);            // --l needs --m
    CHECK(run("squarezero").code == 2);                  // no source of blocks
    CHECK(run("transform --in nowhere.json --kind transpose").code == 2);

    // a non-commuting tuple is rejected with its own error type
    const std::string bad = tmpfile("noncommuting.json");
    {
        std::ofstream f(bad);
        f << R"({"field":{"kind":"q"},"n":2,"mats":[[["0","1"],["0","0"]],[["0","0"],["1","0"]]]})";
    }
    RunResult nc = run("algebra-dim --in " + bad);
    CHECK(nc.code == 2);
    CHECK(nc.err.find("error: NotCommuting:") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <nilcommute binary> [doctest args]\n", argv[0]);
        return 2;
    }
    g_cli = argv[1];
    char tmpl[] = "/tmp/nilcommute_cli.XXXXXX";
    char* dir = mkdtemp(tmpl);
    if (dir == nullptr) {
        std::perror("mkdtemp");
        return 2;
    }
    g_tmpdir = dir;
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    return ctx.run();
}
