// Integration checks for the ranklab binary: spawns the real executable and
// verifies outputs, formats and the exit-code contract
// (0 ok, 1 usage/IO/singular, 2 selftest verification failure,
//  3 inconsistent system).

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "ranklab/io.hpp"
#include "ranklab/solvers.hpp"

using namespace ranklab;

namespace {

std::string g_bin;
int g_failures = 0;
int g_checks = 0;

void expect(bool ok, const std::string& what) {
    ++g_checks;
    if (!ok) {
        ++g_failures;
        std::cerr << "FAIL: " << what << '\n';
    }
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    std::string cmd = g_bin + " " + args + " > cli_out.txt 2> cli_err.txt";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return RunResult{code, slurp("cli_out.txt"), slurp("cli_err.txt")};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

// Pulls the named section ("C", "U", "body", ...) out of factor/echelon
// output: the section tag line followed by one matrix in the text format.
Mat parse_section(const std::string& text, const std::string& tag) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line == tag) return read_matrix(in);
    throw Error("section '" + tag + "' not found");
}

void test_factor_identity() {
    PrimeField f(5);
    write_matrix_file("id.mat", Mat::identity(f, 4).view());
    RunResult r = run("factor --in id.mat --algo cup");
    expect(r.code == 0, "identity factor exits 0");
    expect(r.out.find("rank 4") != std::string::npos, "identity has full rank");
    expect(r.out.find("profile 0 1 2 3") != std::string::npos,
           "identity profile is 0..n-1");
    expect(parse_section(r.out, "body") == Mat::identity(f, 4),
           "identity body unchanged");
}

void test_factor_roundtrip() {
    PrimeField f(7);
    Mat a = random_rank_matrix(6, 5, 3, 99, f);
    write_matrix_file("a.mat", a.view());

    RunResult r = run("factor --in a.mat --algo cup --expand --count-ops");
    expect(r.code == 0, "factor exits 0");
    expect(r.out.find("rank 3") != std::string::npos, "factor reports rank 3");
    Mat c = parse_section(r.out, "C");
    Mat u = parse_section(r.out, "U");
    // Recover P from the "perm" line.
    std::vector<std::uint32_t> sigma;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("perm", 0) == 0) {
            std::istringstream ls(line.substr(4));
            std::uint32_t v;
            while (ls >> v) sigma.push_back(v);
        }
    }
    expect(sigma.size() == 5, "perm line has order n");
    Mat rec = naive_mm(c.view(), u.view());
    perm_apply_cols(rec.view(), Perm(sigma), true);
    expect(rec == a, "offline C*U*P multiply reproduces the input");
    expect(r.out.find("ops mul=") != std::string::npos, "--count-ops prints totals");

    RunResult rp = run("factor --in a.mat --algo ple --expand");
    expect(rp.code == 0, "ple factor exits 0");
    Mat l = parse_section(rp.out, "L");
    Mat e = parse_section(rp.out, "E");
    std::vector<std::uint32_t> sig2;
    std::istringstream in2(rp.out);
    while (std::getline(in2, line)) {
        if (line.rfind("perm", 0) == 0) {
            std::istringstream ls(line.substr(4));
            std::uint32_t v;
            while (ls >> v) sig2.push_back(v);
        }
    }
    Mat rec2 = naive_mm(l.view(), e.view());
    perm_apply_rows(rec2.view(), Perm(sig2), false);
    expect(rec2 == a, "offline P*L*E multiply reproduces the input");
}

void test_diagnostics() {
    write_file("bad.mat", "x 3 7\n");
    RunResult r = run("factor --in bad.mat --algo cup");
    expect(r.code == 1, "malformed header exits 1");
    expect(r.err.find("line 1") != std::string::npos, "diagnostic names line 1");

    write_file("bad2.mat", "1 2 7\n3 9\n");
    RunResult r2 = run("factor --in bad2.mat --algo cup");
    expect(r2.code == 1, "out-of-range entry exits 1");
    expect(r2.err.find("line 2") != std::string::npos, "diagnostic names line 2");

    RunResult r3 = run("factor --in does_not_exist.mat --algo cup");
    expect(r3.code == 1, "missing file exits 1");

    RunResult r4 = run("bench --algo nosuch --n 8");
    expect(r4.code == 1, "unknown bench algorithm exits 1");
}

void test_solve_and_inverse() {
    PrimeField f(5);
    Mat a = random_nonsingular_matrix(4, 7, f);
    Mat x0 = random_matrix(4, 1, 8, f);
    Mat b = naive_mm(a.view(), x0.view());
    write_matrix_file("A.mat", a.view());
    write_matrix_file("b.mat", b.view());
    RunResult r = run("solve --in A.mat --rhs b.mat");
    expect(r.code == 0, "consistent solve exits 0");
    {
        std::istringstream in(r.out);
        Mat x = read_matrix(in);
        expect(naive_mm(a.view(), x.view()) == b, "printed x satisfies A*x=b");
    }

    // Rank-1 system with an unreachable right-hand side.
    Mat a2 = tst::mat(f, {{2, 4}, {1, 2}});
    Mat b2 = tst::mat(f, {{1}, {1}});
    write_matrix_file("A2.mat", a2.view());
    write_matrix_file("b2.mat", b2.view());
    RunResult r2 = run("solve --in A2.mat --rhs b2.mat");
    expect(r2.code == 3, "inconsistent system exits 3");
    expect(r2.out.find("INCONSISTENT") != std::string::npos, "prints INCONSISTENT");

    Mat i3 = Mat::identity(f, 3);
    write_matrix_file("I.mat", i3.view());
    RunResult r3 = run("inverse --in I.mat");
    expect(r3.code == 0, "inverse of identity exits 0");
    expect(r3.out == "3 3 5\n1 0 0\n0 1 0\n0 0 1\n", "identity inverts to identity");

    write_matrix_file("S.mat", a2.view());
    RunResult r4 = run("inverse --in S.mat");
    expect(r4.code == 1, "singular inverse exits 1");
    expect(r4.err.find("SINGULAR") != std::string::npos, "prints SINGULAR");
}

void test_echelon() {
    PrimeField f(7);
    Mat a = random_nonsingular_matrix(5, 21, f);
    write_matrix_file("E.mat", a.view());
    RunResult r = run("echelon --in E.mat --reduced");
    expect(r.code == 0, "echelon exits 0");
    Mat red = parse_section(r.out, "R");
    expect(red == Mat::identity(f, 5), "reduced form of nonsingular input is I");

    RunResult r2 = run("echelon --in E.mat");
    Mat ech = parse_section(r2.out, "E");
    NaiveGaussResult oracle = naive_gauss(a.view());
    expect(ech.rows() == 5 && ech.cols() == 5, "echelon output shape");
    expect(naive_gauss(ech.view()).rank == oracle.rank, "echelon preserves rank");
}

void test_bench_determinism() {
    RunResult r1 = run("bench --algo cup --m 24 --n 30 --r 10 --field 7 --seed 5");
    RunResult r2 = run("bench --algo cup --m 24 --n 30 --r 10 --field 7 --seed 5");
    expect(r1.code == 0, "bench exits 0");
    expect(r1.out == r2.out, "identical seed+args give byte-identical reports");
    expect(r1.out.find("algo=cup") != std::string::npos &&
               r1.out.find("ratio=") != std::string::npos &&
               r1.out.find("ops_arith=") != std::string::npos,
           "flat key=value fields present");

    RunResult r3 = run("bench --algo trsm --n 64 --json --trials 2");
    expect(r3.code == 0, "json bench exits 0");
    expect(r3.out.find("{\"algo\":\"trsm\"") != std::string::npos,
           "json object emitted");
    expect(r3.out.find("\"seed\":") != std::string::npos, "json carries the seed");

    // The seed default comes from RANKLAB_SEED when set.
    std::string cmd = "RANKLAB_SEED=123 " + g_bin +
                      " bench --algo mm --n 8 > cli_out.txt 2> cli_err.txt";
    int status = std::system(cmd.c_str());
    expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, "env-seeded bench runs");
    expect(slurp("cli_out.txt").find("seed=123") != std::string::npos,
           "RANKLAB_SEED is the default seed");
}

void test_selftest() {
    RunResult r = run("selftest --quick --max-dim 2 --fields 2,3");
    expect(r.code == 0, "quick selftest passes");
    expect(r.out.find("all checks passed") != std::string::npos, "selftest summary");

    RunResult r2 = run("selftest --quick --fields 9");
    expect(r2.code == 1, "composite field list is a usage error");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_runner <path-to-ranklab>\n";
        return 2;
    }
    char resolved[4096];
    if (!realpath(argv[1], resolved)) {
        std::cerr << "cannot resolve " << argv[1] << '\n';
        return 2;
    }
    g_bin = resolved;
    if (std::system("mkdir -p cli_tmp") != 0) {
        std::cerr << "cannot create scratch dir\n";
        return 2;
    }
    if (chdir("cli_tmp") != 0) {
        std::cerr << "cannot enter scratch dir\n";
        return 2;
    }
    test_factor_identity();
    test_factor_roundtrip();
    test_diagnostics();
    test_solve_and_inverse();
    test_echelon();
    test_bench_determinism();
    test_selftest();
    std::printf("cli_runner: %d checks, %d failures\n", g_checks, g_failures);
    return g_failures == 0 ? 0 : 1;
}
