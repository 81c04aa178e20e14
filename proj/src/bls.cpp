/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sdbls/bls.hpp"

#include <stdexcept>

namespace sdbls {

KeyPair keygen(Rng& rng) {
    KeyPair kp;
    kp.sk = Scalar::random(rng);
    kp.pk = g_mul(kp.sk, G2Point::generator());
    return kp;
}

G1Point sign(const Scalar& sk, ByteSpan msg) {
    if (sk.is_zero()) throw std::invalid_argument("sign: zero secret key");
    return g_mul(sk, hash_to_g1(kDomainTag, msg));
}

bool verify(const G2Point& pk, ByteSpan msg, const G1Point& sigma) {
    G1Point u = hash_to_g1(kDomainTag, msg);
    return pairing(pk, u) == pairing(G2Point::generator(), sigma);
}

G1Point aggregate_sigs(std::span<const G1Point> sigs) {
    if (sigs.empty()) throw std::invalid_argument("aggregate_sigs: empty list");
    G1Point acc;
    for (const auto& s : sigs) acc = acc + s;
    return acc;
}

G2Point aggregate_pks(std::span<const G2Point> pks) {
    if (pks.empty()) throw std::invalid_argument("aggregate_pks: empty list");
    G2Point acc;
    for (const auto& p : pks) acc = acc + p;
    return acc;
}

}  // namespace sdbls
