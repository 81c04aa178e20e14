/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SDBLS_PVSS_HPP_
#define SDBLS_PVSS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "sdbls/group.hpp"

// Publicly verifiable secret sharing of a revocation scalar among n
// participants with threshold t. Feldman commitments in G2 make revealed
// scalar shares publicly checkable; pairing-verified exponent shares
// Y_i = p(i) * y_i make the distribution itself publicly verifiable; the
// scalars travel encrypted under per-participant Diffie-Hellman keys. The
// one receiver-side check is that a decrypted share matches its public
// commitments -- a mismatch is a complaint, not a silent failure.
namespace sdbls {

// Participant key for share delivery and exponent-share verification.
struct IssuerDhKeys {
    Scalar x;   // secret
    G1Point y;  // x * G1, published
};

IssuerDhKeys make_issuer_dh_keys(Rng& rng);

struct ShareEntry {
    std::uint32_t index;      // 1..n
    G1Point exponent_share;   // Y_i = p(i) * y_i
    G1Point ephemeral;        // E_i = k_i * G1
    Bytes ciphertext;         // 32-byte encrypted share || 16-byte tag
};

struct DealerBundle {
    std::uint32_t n = 0;
    std::uint32_t t = 0;
    std::vector<G2Point> commitments;  // C_j = a_j * G2; C_0 is the secret's public key
    std::vector<ShareEntry> shares;

    // X_i = sum_j i^j * C_j, the public key of share i.
    G2Point commitment_eval(std::uint32_t index) const;

    // Binds possession proofs to this exact bundle.
    std::array<std::uint8_t, 32> digest() const;
};

// Dealer-side record of the polynomial and plaintext shares. Exists for
// audit and tests only; protocol code must drop it once the bundle is out.
struct DealTranscript {
    std::vector<Scalar> coefficients;  // a_0 .. a_{t-1}, a_0 = secret
    std::vector<Scalar> shares;        // p(1) .. p(n)
};

struct Deal {
    DealerBundle bundle;
    DealTranscript transcript;
};

// Shares `secret` with polynomial degree t-1 over the scalar field, one
// encrypted share per participant key. Requires 1 < t <= n, distinct keys.
Deal deal(const Scalar& secret, std::uint32_t t, std::uint32_t n,
          std::span<const G1Point> issuer_pks, Rng& rng);

// Anyone can run this: checks e(X_i, y_i) == e(G2, Y_i) for every entry,
// plus structural sanity. No secrets involved.
bool verify_deal(const DealerBundle& bundle, std::span<const G1Point> issuer_pks);

// Decrypts the share at `index`, then checks it against both the commitment
// evaluation X_i and the exponent share Y_i. Tag or consistency failure
// throws DealerMisbehavior carrying the index.
Scalar accept_share(const IssuerDhKeys& issuer, std::uint32_t index,
                    const DealerBundle& bundle);

// Schnorr proof of knowledge of s_i for X_i = s_i * G2, challenge bound to
// the bundle digest and index.
struct SharePossessionProof {
    std::uint32_t index;
    G2Point commitment;
    Scalar response;
};

SharePossessionProof prove_share_possession(const Scalar& share, std::uint32_t index,
                                            const DealerBundle& bundle);
bool verify_share_possession(const SharePossessionProof& proof, const DealerBundle& bundle);

struct RevealedShare {
    std::uint32_t index;
    Scalar s;
};

struct Reconstruction {
    Scalar secret;
    std::vector<std::uint32_t> cheaters;  // shares that failed their commitment check
};

// Lagrange interpolation at zero over the first t valid shares. Invalid
// shares are rejected and reported, never silently skipped; fewer than t
// valid shares throws InsufficientShares. The result always satisfies
// secret * G2 == C_0.
Reconstruction reconstruct(std::span<const RevealedShare> shares, const DealerBundle& bundle);

}  // namespace sdbls

#endif
