#include "ranklab/bench.hpp"

#include <cstdio>

#include "ranklab/errors.hpp"

namespace ranklab {

double predicted_arith(const std::string& algo, std::size_t m, std::size_t n,
                       std::size_t r) {
    double dm = double(m), dn = double(n), dr = double(r);
    if (algo == "cup" || algo == "ple")
        return 2.0 * dm * dn * dr - (dm + dn) * dr * dr + (2.0 / 3.0) * dr * dr * dr;
    if (algo == "mm") return 2.0 * dn * dn * dn;
    if (algo == "trsm") return dn * dn * dn;
    if (algo == "trtri") return dn * dn * dn / 3.0;
    if (algo == "trulm" || algo == "trlum") return (2.0 / 3.0) * dn * dn * dn;
    if (algo == "colech") return dn * dn * dn;
    if (algo == "redcolech") return 2.0 * dn * dn * dn;
    if (algo == "gaussjordan") return 2.0 * dn * dn * dn;
    if (algo == "inplacemm") return (10.0 / 3.0) * dn * dn * dn;
    throw Error("no cost model for algorithm '" + algo + "'");
}

std::string format_report_kv(const BenchReport& r) {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "algo=%s m=%zu n=%zu r=%zu p=%u seed=%llu ops_arith=%llu "
                  "ops_ztest=%llu ops_mul=%llu ops_addsub=%llu ops_divinv=%llu "
                  "predicted=%.0f ratio=%.4f",
                  r.algo.c_str(), r.m, r.n, r.r, r.p,
                  (unsigned long long)r.seed, (unsigned long long)r.ops.arith_total(),
                  (unsigned long long)r.ops.n_ztest, (unsigned long long)r.ops.n_mul,
                  (unsigned long long)r.ops.n_addsub,
                  (unsigned long long)r.ops.n_divinv, r.predicted, r.ratio);
    return buf;
}

std::string format_report_json(const BenchReport& r) {
    char buf[512];
    std::snprintf(
        buf, sizeof buf,
        "{\"algo\":\"%s\",\"m\":%zu,\"n\":%zu,\"r\":%zu,\"p\":%u,\"seed\":%llu,"
        "\"ops_arith\":%llu,\"ops_ztest\":%llu,\"ops_mul\":%llu,\"ops_addsub\":%llu,"
        "\"ops_divinv\":%llu,\"predicted\":%.0f,\"ratio\":%.4f}",
        r.algo.c_str(), r.m, r.n, r.r, r.p, (unsigned long long)r.seed,
        (unsigned long long)r.ops.arith_total(), (unsigned long long)r.ops.n_ztest,
        (unsigned long long)r.ops.n_mul, (unsigned long long)r.ops.n_addsub,
        (unsigned long long)r.ops.n_divinv, r.predicted, r.ratio);
    return buf;
}

} // namespace ranklab
