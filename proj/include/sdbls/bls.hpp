/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SDBLS_BLS_HPP_
#define SDBLS_BLS_HPP_

#include <span>

#include "sdbls/group.hpp"

// BLS signatures with public keys in G2 and signatures in G1, plus the
// homomorphic aggregation this toolkit is built on: signatures over the same
// message verify under the sum of the signing keys.
namespace sdbls {

struct KeyPair {
    Scalar sk;
    G2Point pk;  // sk * G2

    void zeroize_secret() { sk.zeroize(); }
};

KeyPair keygen(Rng& rng);

// sigma = sk * hash_to_g1(kDomainTag, msg). Throws std::invalid_argument on
// a zero key.
G1Point sign(const Scalar& sk, ByteSpan msg);

// True iff e(pk, H(msg)) == e(G2, sigma).
bool verify(const G2Point& pk, ByteSpan msg, const G1Point& sigma);

// Group sums. Both throw std::invalid_argument on an empty list.
G1Point aggregate_sigs(std::span<const G1Point> sigs);
G2Point aggregate_pks(std::span<const G2Point> pks);

}  // namespace sdbls

#endif
