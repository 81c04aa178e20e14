/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sdbls/revocation.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "sdbls/encoding.hpp"

namespace sdbls {

namespace {

std::string point_key(const G2Point& p) {
    auto b = p.to_bytes();
    return std::string(b.begin(), b.end());
}

}  // namespace

RevocationList::Publish RevocationList::publish(const Scalar& rev) {
    if (rev.is_zero()) throw std::invalid_argument("revocation: zero key");
    if (std::find(entries_.begin(), entries_.end(), rev) != entries_.end())
        return Publish::duplicate;
    entries_.push_back(rev);
    return Publish::appended;
}

bool is_revoked_scan(const G2Point& r, const RevocationList& list) {
    const G2Point g2 = G2Point::generator();
    for (const auto& rev : list.entries()) {
        if (g_mul(rev, g2) == r) return true;
    }
    return false;
}

bool RevocationIndex::contains(const G2Point& r) const {
    return points.count(point_key(r)) != 0;
}

RevocationIndex build_index(const RevocationList& list) {
    RevocationIndex index;
    const G2Point g2 = G2Point::generator();
    index.points.reserve(list.size());
    for (const auto& rev : list.entries()) index.points.insert(point_key(g_mul(rev, g2)));
    index.source_length = list.size();
    return index;
}

bool is_revoked_indexed(const G2Point& r, const RevocationIndex& index) {
    return index.contains(r);
}

void ensure_fresh(const RevocationIndex& index, const RevocationList& list) {
    if (index.source_length < list.size())
        throw StaleIndex("revocation index covers " + std::to_string(index.source_length) +
                         " of " + std::to_string(list.size()) + " entries");
}

void save_revocation_list(std::ostream& out, const RevocationList& list) {
    for (const auto& rev : list.entries()) out << base64url_encode(rev.to_bytes()) << '\n';
}

RevocationList load_revocation_list(std::istream& in) {
    RevocationList list;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        list.publish(Scalar::from_bytes(base64url_decode(line)));
    }
    return list;
}

}  // namespace sdbls
