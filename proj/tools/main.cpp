// ranklab: exact dense linear algebra over word-size prime fields.
//
// Subcommands: factor, echelon, solve, inverse, bench, selftest.
// Exit codes: 0 success; 1 usage, IO or singular-matrix errors;
// 2 selftest verification failure; 3 inconsistent linear system.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ranklab/bench.hpp"
#include "ranklab/io.hpp"
#include "ranklab/selfcheck.hpp"
#include "ranklab/solvers.hpp"

using namespace ranklab;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("RANKLAB_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 1;
}

void write_profile_header(std::ostream& out, const std::string& algo,
                          std::size_t rank, const std::vector<std::uint32_t>& profile,
                          const Perm& perm) {
    out << "algo " << algo << '\n';
    out << "rank " << rank << '\n';
    out << "profile";
    for (auto v : profile) out << ' ' << v;
    out << '\n';
    out << "perm";
    for (std::size_t i = 0; i < perm.order(); ++i) out << ' ' << perm[i];
    out << '\n';
}

struct OutSink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw Error("cannot open " + path + " for writing");
        os = &file;
    }
    std::ostream& out() { return *os; }
};

void print_ops(const OpCounter& c) {
    std::cout << "ops mul=" << c.n_mul << " addsub=" << c.n_addsub
              << " divinv=" << c.n_divinv << " ztest=" << c.n_ztest
              << " arith=" << c.arith_total() << " total=" << c.full_total() << '\n';
}

int cmd_factor(const std::string& in_path, const std::string& algo, bool expand,
               bool count_ops, const std::string& out_path) {
    Mat a = read_matrix_file(in_path);
    OutSink sink;
    sink.open(out_path);
    OpCounter ctr;
    if (algo == "cup") {
        PackedCup pc = cup(a.view(), ctr);
        write_profile_header(sink.out(), algo, pc.rank, pc.row_profile, pc.col_perm);
        if (expand) {
            CupFactors fx = expand_cup(a.view(), pc);
            sink.out() << "C\n";
            write_matrix(sink.out(), fx.c.view());
            sink.out() << "U\n";
            write_matrix(sink.out(), fx.u.view());
        } else {
            sink.out() << "body\n";
            write_matrix(sink.out(), a.view());
        }
    } else if (algo == "ple") {
        PackedPle pp = ple(a.view(), ctr);
        write_profile_header(sink.out(), algo, pp.rank, pp.col_profile, pp.row_perm);
        if (expand) {
            PleFactors fx = expand_ple(a.view(), pp);
            sink.out() << "L\n";
            write_matrix(sink.out(), fx.l.view());
            sink.out() << "E\n";
            write_matrix(sink.out(), fx.e.view());
        } else {
            sink.out() << "body\n";
            write_matrix(sink.out(), a.view());
        }
    } else {
        throw Error("unknown --algo '" + algo + "' (expected cup or ple)");
    }
    if (count_ops) print_ops(ctr);
    return 0;
}

int cmd_echelon(const std::string& in_path, bool reduced,
                const std::string& out_path) {
    Mat a = read_matrix_file(in_path);
    OutSink sink;
    sink.open(out_path);
    OpCounter ctr;
    if (reduced) {
        ReducedEchelonTransform t = red_col_ech_trans(a.view(), ctr);
        write_profile_header(sink.out(), "redcolech", t.rank, t.row_profile,
                             t.col_perm);
        sink.out() << "R\n";
        Mat r = reduced_form(a.view(), t);
        write_matrix(sink.out(), r.view());
    } else {
        EchelonTransform t = col_ech_trans(a.view(), ctr);
        write_profile_header(sink.out(), "colech", t.rank, t.row_profile, t.col_perm);
        sink.out() << "E\n";
        Mat e = echelon_form(a.view(), t);
        write_matrix(sink.out(), e.view());
    }
    return 0;
}

int cmd_solve(const std::string& in_path, const std::string& rhs_path,
              const std::string& out_path) {
    Mat a = read_matrix_file(in_path);
    Mat b = read_matrix_file(rhs_path);
    if (a.field() != b.field())
        throw Error("matrix and right-hand side use different moduli");
    OpCounter ctr;
    SolveResult res = solve(a.view(), b.view(), ctr);
    if (!res.consistent) {
        std::cout << "INCONSISTENT row " << res.witness_row << '\n';
        return 3;
    }
    OutSink sink;
    sink.open(out_path);
    write_matrix(sink.out(), res.x->view());
    return 0;
}

int cmd_inverse(const std::string& in_path, const std::string& out_path) {
    Mat a = read_matrix_file(in_path);
    OpCounter ctr;
    try {
        invert_in_place(a.view(), ctr);
    } catch (const SingularMatrix&) {
        std::cerr << "SINGULAR\n";
        return 1;
    }
    OutSink sink;
    sink.open(out_path);
    write_matrix(sink.out(), a.view());
    return 0;
}

int cmd_bench(const std::string& algo, std::size_t m, std::size_t n, std::size_t r,
              std::uint64_t p, std::uint64_t seed, std::size_t trials, bool json,
              const std::string& placement, std::size_t threshold) {
    PrimeField f(p);
    if (m == 0) m = n;
    if (r == 0 || r > std::min(m, n)) r = std::min(m, n);
    RankPlacement place =
        placement == "spread" ? RankPlacement::Spread : RankPlacement::Generic;

    for (std::size_t t = 0; t < trials; ++t) {
        std::uint64_t s = seed + t;
        BenchReport rep;
        rep.algo = algo;
        rep.m = m;
        rep.n = n;
        rep.r = r;
        rep.p = f.modulus();
        rep.seed = s;
        OpCounter ctr;
        auto t0 = std::chrono::steady_clock::now();

        if (algo == "cup" || algo == "ple") {
            Mat a = (m == n && r == n) ? random_nonsingular_matrix(n, s, f)
                                       : random_rank_matrix(m, n, r, s, f, place);
            if (algo == "cup") {
                PackedCup pc = cup(a.view(), ctr);
                rep.r = pc.rank;
            } else {
                PackedPle pp = ple(a.view(), ctr);
                rep.r = pp.rank;
            }
        } else if (algo == "mm") {
            Mat a = random_matrix(n, n, s, f);
            Mat b = random_matrix(n, n, s + 0x9E37, f);
            Mat c(f, n, n);
            mm(a.view(), b.view(), c.view(), f.one(), 0, ctr);
            rep.m = rep.r = n;
        } else if (algo == "trsm") {
            Mat t0m = random_triangular_matrix(n, UpLo::Upper, s, f);
            Mat b = random_matrix(n, n, s + 0x9E37, f);
            trsm(Side::Right, UpLo::Upper, Diag::NonUnit, t0m.view(), b.view(), ctr,
                 threshold);
            rep.m = rep.r = n;
        } else if (algo == "trtri") {
            Mat t0m = random_triangular_matrix(n, UpLo::Upper, s, f);
            trtri(UpLo::Upper, Diag::NonUnit, t0m.view(), ctr);
            rep.m = rep.r = n;
        } else if (algo == "trulm" || algo == "trlum") {
            Mat a = random_matrix(n, n, s, f);
            if (algo == "trulm")
                trulm(a.view(), DiagOwner::UpperOwnsDiag, ctr);
            else
                trlum(a.view(), DiagOwner::UpperOwnsDiag, ctr);
            rep.m = rep.r = n;
        } else if (algo == "colech") {
            Mat a = random_nonsingular_matrix(n, s, f);
            col_ech_trans(a.view(), ctr);
            rep.m = rep.r = n;
        } else if (algo == "redcolech") {
            Mat a = random_nonsingular_matrix(n, s, f);
            red_col_ech_trans(a.view(), ctr);
            rep.m = rep.r = n;
        } else if (algo == "gaussjordan") {
            Mat a = random_nonsingular_matrix(n, s, f);
            gauss_jordan(a.view(), 0, 0, n, ctr);
            rep.m = rep.r = n;
        } else if (algo == "inplacemm") {
            Mat a = random_nonsingular_matrix(n, s, f);
            Mat b = random_matrix(n, n, s + 0x9E37, f);
            in_place_mm(a.view(), b.view(), ctr);
            rep.m = rep.r = n;
        } else {
            throw Error("unknown --algo '" + algo + "'");
        }

        auto t1 = std::chrono::steady_clock::now();
        rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rep.ops = ctr;
        rep.predicted = predicted_arith(algo, rep.m, n, rep.r);
        rep.ratio = rep.predicted > 0 ? double(ctr.arith_total()) / rep.predicted : 0;
        std::cout << (json ? format_report_json(rep) : format_report_kv(rep)) << '\n';
        // Wall time varies run to run, so it stays off the deterministic
        // stream.
        std::cerr << "wall_ms=" << rep.wall_ms << '\n';
    }
    return 0;
}

int cmd_selftest(std::size_t max_dim, const std::vector<std::uint64_t>& fields,
                 std::uint64_t seed, bool quick) {
    SelftestConfig cfg;
    cfg.max_dim = max_dim;
    cfg.seed = seed;
    if (!fields.empty()) {
        cfg.fields.clear();
        for (auto p : fields) cfg.fields.push_back(static_cast<std::uint32_t>(p));
    }
    if (quick) {
        cfg.run_constants = false;
        cfg.random_trials = 60;
    }
    for (auto p : cfg.fields) PrimeField check(p); // validate early

    auto failures = run_selftest(cfg, [](const std::string& line) {
        std::cout << "selftest: " << line << '\n';
    });
    if (failures.empty()) {
        std::cout << "selftest: all checks passed\n";
        return 0;
    }
    int idx = 0;
    for (const auto& fail : failures) {
        std::cout << "selftest FAILURE [" << fail.check << "]: " << fail.detail << '\n';
        if (fail.counterexample) {
            std::string path = "selftest_fail_" + std::to_string(idx) + ".mat";
            write_matrix_file(path, fail.counterexample->view());
            std::cout << "  counterexample written to " << path << '\n';
            std::cout << "  repro: ranklab factor --in " << path
                      << " --algo cup --expand\n";
            ++idx;
        }
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dense linear algebra over GF(p) with operation counting"};
    app.require_subcommand(1);

    std::string in_path, rhs_path, out_path, algo = "cup", placement = "generic";
    bool expand = false, count_ops = false, reduced = false, json = false,
         quick = false;
    std::size_t m = 0, n = 0, r = 0, trials = 1, max_dim = 3, threshold = 1;
    std::uint64_t p = 65521, seed = default_seed();
    std::vector<std::uint64_t> fields;

    auto* fac = app.add_subcommand("factor", "cup/ple factorization of a matrix file");
    fac->add_option("--in", in_path, "input matrix file")->required();
    fac->add_option("--algo", algo, "cup or ple")->default_val("cup");
    fac->add_flag("--expand", expand, "write explicit factors instead of the packed body");
    fac->add_flag("--count-ops", count_ops, "print field-operation totals");
    fac->add_option("--out", out_path, "output file (default stdout)");

    auto* ech = app.add_subcommand("echelon", "column echelon form of a matrix file");
    ech->add_option("--in", in_path, "input matrix file")->required();
    ech->add_flag("--reduced", reduced, "reduced column echelon form");
    ech->add_option("--out", out_path, "output file (default stdout)");

    auto* slv = app.add_subcommand("solve", "solve A*x = b");
    slv->add_option("--in", in_path, "matrix A file")->required();
    slv->add_option("--rhs", rhs_path, "right-hand side file (m x 1)")->required();
    slv->add_option("--out", out_path, "output file (default stdout)");

    auto* inv = app.add_subcommand("inverse", "invert a nonsingular matrix file");
    inv->add_option("--in", in_path, "input matrix file")->required();
    inv->add_option("--out", out_path, "output file (default stdout)");

    auto* ben = app.add_subcommand("bench", "operation-count benchmark");
    ben->add_option("--algo", algo, "cup ple mm trsm trtri trulm trlum colech "
                                    "redcolech gaussjordan inplacemm")
        ->required();
    ben->add_option("--m", m, "rows (defaults to n)");
    ben->add_option("--n", n, "columns / dimension")->required();
    ben->add_option("--r", r, "target rank (defaults to min(m,n))");
    ben->add_option("--field", p, "prime modulus")->default_val(65521);
    ben->add_option("--seed", seed, "generator seed (default RANKLAB_SEED or 1)");
    ben->add_option("--trials", trials, "sequential trials, seed+t each")
        ->default_val(1);
    ben->add_flag("--json", json, "one JSON object per trial");
    ben->add_option("--placement", placement, "generic or spread pivot placement")
        ->check(CLI::IsMember({"generic", "spread"}))
        ->default_val("generic");
    ben->add_option("--threshold", threshold, "recursion crossover (trsm)")
        ->default_val(1);

    auto* st = app.add_subcommand("selftest", "exhaustive sweeps, reconstruction, "
                                              "allocation audit, constant checks");
    st->add_option("--max-dim", max_dim, "exhaustive sweep dimension cap")
        ->default_val(3);
    st->add_option("--fields", fields, "moduli for the exhaustive sweeps")
        ->delimiter(',');
    st->add_option("--seed", seed, "generator seed");
    st->add_flag("--quick", quick, "skip the n=256 constant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors are exit 1; --help is 0
    }

    try {
        if (fac->parsed()) return cmd_factor(in_path, algo, expand, count_ops, out_path);
        if (ech->parsed()) return cmd_echelon(in_path, reduced, out_path);
        if (slv->parsed()) return cmd_solve(in_path, rhs_path, out_path);
        if (inv->parsed()) return cmd_inverse(in_path, out_path);
        if (ben->parsed())
            return cmd_bench(algo, m, n, r, p, seed, trials, json, placement,
                             threshold);
        if (st->parsed()) return cmd_selftest(max_dim, fields, seed, quick);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
