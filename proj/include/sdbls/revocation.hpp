/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SDBLS_REVOCATION_HPP_
#define SDBLS_REVOCATION_HPP_

#include <iosfwd>
#include <unordered_set>
#include <vector>

#include "sdbls/group.hpp"

// Public revocation lists. An entry is a bare revealed rev scalar -- no
// digest, no claim content, no holder identifiers -- so lists can be
// distributed openly. A claim is revoked iff its embedded r equals
// rev * G2 for some published rev. The check is only meaningful after the
// claim's signature verified: a forged r fails verification outright.
namespace sdbls {

class RevocationList {
public:
    enum class Publish { appended, duplicate };

    // Appends iff not already present; zero scalars are rejected
    // (std::invalid_argument).
    Publish publish(const Scalar& rev);

    const std::vector<Scalar>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<Scalar> entries_;  // append-only, distinct
};

// One G2 multiplication per entry; linear in list length.
bool is_revoked_scan(const G2Point& r, const RevocationList& list);

// Precomputed rev*G2 keys for O(1) membership checks. Immutable once built.
struct RevocationIndex {
    std::unordered_set<std::string> points;  // serialized G2 keys
    std::size_t source_length = 0;

    bool contains(const G2Point& r) const;
};

RevocationIndex build_index(const RevocationList& list);

bool is_revoked_indexed(const G2Point& r, const RevocationIndex& index);

// Throws StaleIndex when the index covers fewer entries than the list.
void ensure_fresh(const RevocationIndex& index, const RevocationList& list);

// File format: one base64url 32-byte scalar per line.
void save_revocation_list(std::ostream& out, const RevocationList& list);
RevocationList load_revocation_list(std::istream& in);

}  // namespace sdbls

#endif
