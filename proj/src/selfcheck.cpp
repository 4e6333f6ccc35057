#include "ranklab/selfcheck.hpp"

#include <cmath>

#include "ranklab/bench.hpp"

namespace ranklab {

namespace {

Mat apply_cols_copy(const Mat& a, const Perm& p, bool inverse) {
    Mat m = a;
    perm_apply_cols(m.view(), p, inverse);
    return m;
}

Mat apply_rows_copy(const Mat& a, const Perm& p, bool inverse) {
    Mat m = a;
    perm_apply_rows(m.view(), p, inverse);
    return m;
}

bool check_cup(const Mat& a, const NaiveGaussResult& oracle, std::string* why) {
    Mat body = a;
    OpCounter ctr;
    PackedCup pc = cup(body.view(), ctr);
    if (pc.rank != oracle.rank) {
        *why = "cup rank " + std::to_string(pc.rank) + " != oracle " +
               std::to_string(oracle.rank);
        return false;
    }
    if (pc.row_profile != oracle.row_profile) {
        *why = "cup row rank profile differs from oracle";
        return false;
    }
    CupFactors fx = expand_cup(body.view(), pc);
    Mat rec = naive_mm(fx.c.view(), fx.u.view());
    perm_apply_cols(rec.view(), pc.col_perm, true); // rec <- C*U*P
    if (rec != a) {
        *why = "cup reconstruction C*U*P differs from input";
        return false;
    }
    // Echelon structure of the expanded C: zeros above each pivot.
    for (std::size_t j = 0; j < pc.rank; ++j) {
        for (std::size_t i = 0; i < pc.row_profile[j]; ++i)
            if (fx.c(i, j) != 0) {
                *why = "expanded C has a nonzero above a pivot";
                return false;
            }
        if (fx.c(pc.row_profile[j], j) == 0) {
            *why = "expanded C has a zero pivot";
            return false;
        }
    }
    return true;
}

bool check_ple(const Mat& a, const NaiveGaussResult&, std::string* why) {
    Mat body = a;
    OpCounter ctr;
    PackedPle pp = ple(body.view(), ctr);
    PleFactors fx = expand_ple(body.view(), pp);
    Mat rec = naive_mm(fx.l.view(), fx.e.view());
    perm_apply_rows(rec.view(), pp.row_perm, false); // rec <- P*L*E
    if (rec != a) {
        *why = "ple reconstruction P*L*E differs from input";
        return false;
    }
    // Mirror check against cup of the transpose.
    Mat at(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) at(j, i) = a(i, j);
    OpCounter ctr2;
    Mat at_body = at;
    PackedCup pc = cup(at_body.view(), ctr2);
    if (pc.rank != pp.rank || pc.row_profile != pp.col_profile) {
        *why = "ple profile does not mirror cup of the transpose";
        return false;
    }
    return true;
}

bool check_echelon(const Mat& a, std::string* why) {
    Mat body = a;
    OpCounter ctr;
    EchelonTransform t = col_ech_trans(body.view(), ctr);
    Mat c = echelon_form(body.view(), t);
    Mat x = ech_transform_matrix(body.view(), t);
    Mat apt = apply_cols_copy(a, t.col_perm, false); // A*P^T
    if (naive_mm(apt.view(), x.view()) != c) {
        *why = "col_ech_trans: A*P^T*X != C";
        return false;
    }
    for (std::size_t j = 0; j < t.rank; ++j) {
        for (std::size_t i = 0; i < t.row_profile[j]; ++i)
            if (c(i, j) != 0) {
                *why = "echelon form has nonzero above pivot";
                return false;
            }
        if (c(t.row_profile[j], j) == 0) {
            *why = "echelon form pivot is zero";
            return false;
        }
    }
    return true;
}

bool check_reduced(const Mat& a, const NaiveGaussResult& oracle, std::string* why) {
    Mat body = a;
    OpCounter ctr;
    ReducedEchelonTransform t = red_col_ech_trans(body.view(), ctr);
    Mat r = reduced_form(body.view(), t);
    Mat x = red_transform_matrix(body.view(), t);
    Mat apt = apply_cols_copy(a, t.col_perm, false);
    if (naive_mm(apt.view(), x.view()) != r) {
        *why = "red_col_ech_trans: A*P^T*X != R";
        return false;
    }
    if (r != oracle.reduced) {
        *why = "reduced form differs from naive oracle (not canonical)";
        return false;
    }
    for (std::size_t j = 0; j < t.rank; ++j) {
        if (r(t.row_profile[j], j) != a.field().one()) {
            *why = "reduced form pivot is not 1";
            return false;
        }
    }
    return true;
}

bool check_bundles(const Mat& a, std::string* why) {
    Mat body = a;
    OpCounter ctr;
    PackedCup pc = cup(body.view(), ctr);
    Mat apt = apply_cols_copy(a, pc.col_perm, false); // A*P^T

    {
        auto b = std::get<LspBundle>(convert(body.view(), pc, BundleKind::LSP, ctr));
        Mat rec = naive_mm(b.l_prime.view(), b.s.view());
        perm_apply_cols(rec.view(), b.p, true); // L'*S*P
        if (rec != a) {
            *why = "LSP bundle: L'*S*P != A";
            return false;
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            bool is_piv = false;
            for (auto v : pc.row_profile) is_piv |= (v == i);
            bool nonzero = false;
            for (std::size_t j = 0; j < a.cols(); ++j) nonzero |= (b.s(i, j) != 0);
            if (nonzero != is_piv && nonzero) {
                *why = "LSP bundle: S has a nonzero non-profile row";
                return false;
            }
        }
    }
    {
        auto b = std::get<LqupBundle>(convert(body.view(), pc, BundleKind::LQUP, ctr));
        Mat qu = apply_rows_copy(b.u_prime, b.q, false); // Q*U'
        Mat rec = naive_mm(b.l_prime.view(), qu.view());
        perm_apply_cols(rec.view(), b.p, true);
        if (rec != a) {
            *why = "LQUP bundle: L'*Q*U'*P != A";
            return false;
        }
    }
    {
        auto b = std::get<QlupBundle>(convert(body.view(), pc, BundleKind::QLUP, ctr));
        Mat lu = naive_mm(b.l2.view(), b.u2.view());
        perm_apply_rows(lu.view(), b.q, false); // Q*L''*U''
        if (lu != apt) {
            *why = "QLUP bundle: Q*L''*U'' != A*P^T";
            return false;
        }
    }
    {
        auto b = std::get<TuringBundle>(convert(body.view(), pc, BundleKind::Turing, ctr));
        Mat ld = naive_mm(b.r.view(), b.lbar.view());
        for (std::size_t i = 0; i < ld.rows(); ++i)
            for (std::size_t j = 0; j < ld.cols(); ++j)
                ld(i, j) = static_cast<Elem>(std::uint64_t(ld(i, j)) * b.dbar[j] %
                                             a.field().modulus());
        Mat rec = naive_mm(ld.view(), b.ubar.view());
        if (rec != apt) {
            *why = "Turing bundle: R*Lbar*Dbar*Ubar != A*P^T";
            return false;
        }
    }
    return true;
}

} // namespace

bool verify_matrix(const Mat& a, std::string* why) {
    NaiveGaussResult oracle = naive_gauss(a.view());
    return check_cup(a, oracle, why) && check_ple(a, oracle, why) &&
           check_echelon(a, why) && check_reduced(a, oracle, why) &&
           check_bundles(a, why);
}

namespace {

void enumerate_or_sample(const PrimeField& f, std::size_t m, std::size_t n,
                         std::uint64_t cap, std::uint64_t seed,
                         const std::function<bool(const Mat&)>& visit) {
    const std::uint32_t p = f.modulus();
    std::size_t cells = m * n;
    double total = std::pow(double(p), double(cells));
    if (total <= double(cap)) {
        Mat a(f, m, n);
        std::vector<Elem> digits(cells, 0);
        while (true) {
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) a(i, j) = digits[i * n + j];
            if (!visit(a)) return;
            std::size_t d = 0;
            while (d < cells) {
                if (++digits[d] < p) break;
                digits[d] = 0;
                ++d;
            }
            if (d == cells) break;
        }
    } else {
        SplitMix64 rng(seed);
        for (std::size_t t = 0; t < 1000; ++t) {
            Mat a(f, m, n);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) a(i, j) = f.reduce(rng.next());
            if (!visit(a)) return;
        }
    }
}

} // namespace

std::vector<CheckFailure> run_selftest(
    const SelftestConfig& cfg, const std::function<void(const std::string&)>& log) {
    std::vector<CheckFailure> failures;

    // Exhaustive (or sampled) small-shape sweeps per field.
    for (auto pv : cfg.fields) {
        PrimeField f(pv);
        std::uint64_t swept = 0;
        bool stop = false;
        for (std::size_t m = 1; m <= cfg.max_dim && !stop; ++m) {
            for (std::size_t n = 1; n <= cfg.max_dim && !stop; ++n) {
                enumerate_or_sample(f, m, n, cfg.exhaustive_cap, cfg.seed,
                                    [&](const Mat& a) {
                                        ++swept;
                                        std::string why;
                                        if (!verify_matrix(a, &why)) {
                                            failures.push_back(
                                                {"sweep_gf" + std::to_string(pv), why, a});
                                            stop = true;
                                            return false;
                                        }
                                        return true;
                                    });
            }
        }
        log("sweep GF(" + std::to_string(pv) + "): " + std::to_string(swept) +
            " matrices");
    }

    // Seeded random reconstruction suite across shapes, fields and ranks.
    {
        const std::uint32_t primes[] = {2, 3, 5, 7, 65521};
        SplitMix64 rng(cfg.seed ^ 0x5eedf00dull);
        std::size_t done = 0;
        for (std::size_t t = 0; t < cfg.random_trials; ++t) {
            PrimeField f(primes[rng.below(5)]);
            std::size_t m = 1 + rng.below(12), n = 1 + rng.below(12);
            std::size_t r = rng.below(std::min(m, n) + 1);
            Mat a = random_rank_matrix(m, n, r, rng.next(), f);
            std::string why;
            if (!verify_matrix(a, &why)) {
                failures.push_back({"random_reconstruction", why, a});
                break;
            }
            ++done;
        }
        log("random reconstruction: " + std::to_string(done) + " trials");
    }

    // Allocation audit: the in-place set must stay within the budget; the
    // reduced-row-echelon comparison algorithm must grow.
    {
        PrimeField f(65521);
        std::uint64_t prev_gj = 0;
        bool gj_grows = true;
        for (std::size_t n : cfg.alloc_dims) {
            Mat nonsing = random_nonsingular_matrix(n, cfg.seed + n, f);
            Mat rect = random_rank_matrix(n, n, n / 2, cfg.seed + n, f);
            Mat tri = random_triangular_matrix(n, UpLo::Upper, cfg.seed + n, f);
            Mat rhs = random_matrix(n, 8, cfg.seed + 2 * n, f);

            std::vector<std::pair<std::string, std::uint64_t>> results;
            auto audit = [&](const char* name, auto&& fn) {
                OpCounter ctr;
                reset_elem_alloc_count();
                fn(ctr);
                results.emplace_back(name, elem_alloc_count());
            };
            {
                Mat a = rect;
                audit("cup", [&](OpCounter& c) { cup(a.view(), c); });
            }
            {
                Mat a = rect;
                audit("ple", [&](OpCounter& c) { ple(a.view(), c); });
            }
            {
                Mat a = rect;
                audit("col_ech_trans", [&](OpCounter& c) { col_ech_trans(a.view(), c); });
            }
            {
                Mat a = rect;
                audit("red_col_ech_trans",
                      [&](OpCounter& c) { red_col_ech_trans(a.view(), c); });
            }
            {
                Mat b = rhs;
                audit("trsm", [&](OpCounter& c) {
                    trsm(Side::Left, UpLo::Upper, Diag::NonUnit, tri.view(), b.view(), c);
                });
            }
            {
                Mat b = rhs;
                audit("trmm", [&](OpCounter& c) {
                    trmm(Side::Left, UpLo::Upper, Diag::NonUnit, tri.view(), b.view(), c);
                });
            }
            {
                Mat t = tri;
                audit("trtri", [&](OpCounter& c) {
                    trtri(UpLo::Upper, Diag::NonUnit, t.view(), c);
                });
            }
            {
                Mat a = nonsing;
                audit("trulm",
                      [&](OpCounter& c) { trulm(a.view(), DiagOwner::UpperOwnsDiag, c); });
            }
            {
                Mat a = nonsing;
                audit("trlum",
                      [&](OpCounter& c) { trlum(a.view(), DiagOwner::UpperOwnsDiag, c); });
            }
            {
                Mat a = nonsing;
                Mat b = rhs;
                audit("in_place_mm",
                      [&](OpCounter& c) { in_place_mm(a.view(), b.view(), c); });
            }
            for (auto& [name, count] : results) {
                if (count > cfg.alloc_budget) {
                    failures.push_back(
                        {"alloc_audit", name + std::string(" allocated ") +
                                            std::to_string(count) + " elements at n=" +
                                            std::to_string(n),
                         std::nullopt});
                }
            }
            {
                Mat a = nonsing;
                OpCounter c;
                reset_elem_alloc_count();
                gauss_jordan(a.view(), 0, 0, n, c);
                std::uint64_t got = elem_alloc_count();
                if (got <= prev_gj) gj_grows = false;
                if (n >= 32 && got <= n) gj_grows = false;
                prev_gj = got;
            }
        }
        if (!gj_grows)
            failures.push_back({"alloc_audit",
                                "gauss_jordan allocations did not grow with n",
                                std::nullopt});
        log("allocation audit: in-place set and gauss_jordan contrast");
    }

    // Leading-constant checks at const_n.
    if (cfg.run_constants) {
        PrimeField f(65521);
        std::size_t n = cfg.const_n;
        auto check_ratio = [&](const std::string& algo, std::uint64_t arith) {
            double model = predicted_arith(algo, n, n, n);
            double ratio = double(arith) / model;
            if (ratio < 1.0 - cfg.const_tol || ratio > 1.0 + cfg.const_tol)
                failures.push_back({"constants", algo + " ratio " + std::to_string(ratio),
                                    std::nullopt});
            return ratio;
        };
        {
            Mat a = random_matrix(n, n, cfg.seed + 1, f);
            Mat b = random_matrix(n, n, cfg.seed + 2, f);
            Mat c(f, n, n);
            OpCounter ctr;
            mm(a.view(), b.view(), c.view(), f.one(), 0, ctr);
            check_ratio("mm", ctr.arith_total());
        }
        {
            Mat t = random_triangular_matrix(n, UpLo::Upper, cfg.seed + 3, f);
            Mat b = random_matrix(n, n, cfg.seed + 4, f);
            OpCounter ctr;
            trsm(Side::Right, UpLo::Upper, Diag::NonUnit, t.view(), b.view(), ctr);
            check_ratio("trsm", ctr.arith_total());
        }
        {
            Mat t = random_triangular_matrix(n, UpLo::Upper, cfg.seed + 5, f);
            OpCounter ctr;
            trtri(UpLo::Upper, Diag::NonUnit, t.view(), ctr);
            check_ratio("trtri", ctr.arith_total());
        }
        {
            Mat a = random_matrix(n, n, cfg.seed + 6, f);
            OpCounter ctr;
            trulm(a.view(), DiagOwner::UpperOwnsDiag, ctr);
            check_ratio("trulm", ctr.arith_total());
        }
        {
            Mat a = random_matrix(n, n, cfg.seed + 7, f);
            OpCounter ctr;
            trlum(a.view(), DiagOwner::UpperOwnsDiag, ctr);
            check_ratio("trlum", ctr.arith_total());
        }
        {
            Mat a = random_nonsingular_matrix(n, cfg.seed + 8, f);
            OpCounter ctr;
            cup(a.view(), ctr);
            check_ratio("cup", ctr.arith_total());
        }
        {
            Mat a = random_nonsingular_matrix(n, cfg.seed + 9, f);
            OpCounter ctr;
            col_ech_trans(a.view(), ctr);
            check_ratio("colech", ctr.arith_total());
        }
        {
            Mat a = random_nonsingular_matrix(n, cfg.seed + 10, f);
            OpCounter ctr;
            red_col_ech_trans(a.view(), ctr);
            check_ratio("redcolech", ctr.arith_total());
        }
        {
            Mat a = random_nonsingular_matrix(n, cfg.seed + 11, f);
            OpCounter ctr;
            gauss_jordan(a.view(), 0, 0, n, ctr);
            check_ratio("gaussjordan", ctr.arith_total());
        }
        log("leading constants at n=" + std::to_string(n));
    }

    return failures;
}

} // namespace ranklab
