/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sdbls/credential.hpp"

#include <sodium.h>

#include <stdexcept>

#include "sdbls/encoding.hpp"

namespace sdbls {

namespace {

void push_field(Bytes& out, ByteSpan raw, bool first = false) {
    if (!first) out.push_back(':');
    std::string enc = base64url_encode(raw);
    append(out, as_bytes(enc));
}

}  // namespace

Bytes frame(std::string_view m, const Nonce& nonce, const G2Point& r) {
    Bytes out;
    push_field(out, as_bytes(m), true);
    push_field(out, nonce);
    push_field(out, r.to_bytes());
    return out;
}

Bytes frame2(const Digest& h, const G2Point& r) {
    Bytes out;
    push_field(out, h, true);
    push_field(out, r.to_bytes());
    return out;
}

Digest claim_digest(ByteSpan framed, DigestKind kind) {
    if (kind == DigestKind::sha256) return sha256(framed);

    // Argon2id over the framing; the salt is derived from the framing itself
    // so verifiers can recompute the digest from disclosed fields alone.
    if (sodium_init() < 0) throw std::runtime_error("sodium_init failed");
    auto salt_src = sha256(framed);
    static_assert(crypto_pwhash_SALTBYTES == 16);
    Digest out;
    if (crypto_pwhash(out.data(), out.size(),
                      reinterpret_cast<const char*>(framed.data()), framed.size(),
                      salt_src.data(), 2 /*opslimit*/, 16 * 1024 * 1024 /*memlimit*/,
                      crypto_pwhash_ALG_ARGON2ID13) != 0)
        throw std::runtime_error("argon2id digest failed");
    return out;
}

IssueBatch issue_claims(IssuerIdentity& issuer, std::span<const std::string> claims, Rng& rng,
                        DigestKind kind) {
    if (claims.empty()) throw std::invalid_argument("issue_claims: no claims");
    IssueBatch batch;
    batch.claims.reserve(claims.size());
    for (const auto& m : claims) {
        if (m.empty()) throw std::invalid_argument("issue_claims: empty claim string");
        Scalar rev = Scalar::random(rng);  // fresh per claim, never reused
        G2Point r = g_mul(rev, G2Point::generator());
        Nonce nonce = rng.array<kNonceBytes>();
        Digest h = claim_digest(frame(m, nonce, r), kind);
        Bytes signed_msg = frame2(h, r);
        G1Point sigma = sign(issuer.keys.sk, signed_msg) + sign(rev, signed_msg);
        batch.claims.push_back(SignedClaim{h, r, sigma, m, nonce});
        batch.records.push_back(RevocationRecord{h, rev});
        issuer.registry.push_back(RevocationRecord{h, rev});
    }
    return batch;
}

SignedClaim issue_with_external_revocation(const IssuerIdentity& issuer, std::string_view m,
                                           const G2Point& r, const G1Point& sigma_rev,
                                           const Nonce& nonce, DigestKind kind) {
    if (m.empty()) throw std::invalid_argument("issue: empty claim string");
    Digest h = claim_digest(frame(m, nonce, r), kind);
    Bytes signed_msg = frame2(h, r);
    // The dealer's contribution must verify under r before aggregation;
    // anything else means the dealer is signing with a key other than the
    // one embedded in the claim.
    if (!verify(r, signed_msg, sigma_rev))
        throw DealerMisbehavior(0, "external revocation signature does not verify under r");
    G1Point sigma = sign(issuer.keys.sk, signed_msg) + sigma_rev;
    return SignedClaim{h, r, sigma, std::string(m), nonce};
}

}  // namespace sdbls
