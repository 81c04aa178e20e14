/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SDBLS_BENCH_HPP_
#define SDBLS_BENCH_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sdbls {

struct BenchRow {
    std::string operation;
    std::int64_t parameter = 0;
    double mean_seconds = 0.0;
    std::optional<std::int64_t> bytes;
};

struct BenchReport {
    std::vector<BenchRow> rows;  // sorted by (operation, parameter)
    std::string environment;

    void sort_rows();
    std::string to_csv() const;  // header: operation,parameter,mean_seconds,bytes
    nlohmann::ordered_json to_json() const;
};

// Issue and verify timings at geometric claim counts 1..max_claims. Rows:
// "issue" and "verify" with parameter = claim count, mean_seconds = batch
// time. Single-threaded.
BenchReport bench_issue_verify(int max_claims, int reps);

// One verification plus a revocation check against lists of the given
// sizes. Rows "verify_scan" and "verify_indexed" (parameter = list size,
// bytes = on-disk list size), plus "scan_linear_r2" carrying the linear-fit
// R^2 of the scan rows in mean_seconds.
BenchReport bench_revocation_scan(std::span<const int> list_sizes, int reps);

// Share creation and reconstruction per (t, n) config. Rows "deal[t=T]" and
// "reconstruct[t=T]" with parameter = n.
BenchReport bench_pvss(std::span<const std::pair<int, int>> configs, int reps);

// Serialized byte counts of the raw cryptographic material, measured from
// real objects: signed-claim core (h + r + sigma), one-time-proof core
// (h + r + sigma' + pk_t + sigma_t + t, built with a 2-byte session string),
// and a revocation entry.
BenchReport measure_sizes();

}  // namespace sdbls

#endif
