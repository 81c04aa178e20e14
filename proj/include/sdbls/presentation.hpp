/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SDBLS_PRESENTATION_HPP_
#define SDBLS_PRESENTATION_HPP_

#include <functional>
#include <optional>
#include <string>

#include "sdbls/credential.hpp"

// Holder-side proofs and verifier-side checks. A basic proof is the bare
// {h, r, sigma} projection and is replayable by design. A one-time proof
// folds a fresh session key into the signature and binds the session string,
// so neither replay nor field tampering survives verification.
namespace sdbls {

struct Disclosure {
    std::string m;
    Nonce nonce;
};

struct BasicProof {
    Digest h;
    G2Point r;
    G1Point sigma;
    std::optional<Disclosure> disclosed;
};

struct OneTimeProof {
    Digest h;
    G2Point r;
    G1Point sigma_prime;  // sigma + sign(sk_t, frame2(h, r))
    std::string t;        // session string, JSON {"aud", "iat"}
    G2Point pk_t;         // fresh per presentation
    G1Point sigma_t;      // sign(sk_t, frame3(h, r, sigma_prime, t, pk_t))
    std::optional<Disclosure> disclosed;
};

struct SessionPolicy {
    std::string expected_audience;
    std::int64_t max_age_seconds = 300;
    std::function<std::int64_t()> now;  // unix seconds; defaults to system clock

    std::int64_t current_time() const;
};

enum class OneTimeVerdict { accepted, rejected_policy, rejected_signature };

// base64url fields joined with ':' in the order h, r, sigma_prime, t, pk_t.
Bytes frame3(const Digest& h, const G2Point& r, const G1Point& sigma_prime,
             std::string_view t, const G2Point& pk_t);

std::string make_session_string(std::string_view audience, std::int64_t issued_at);

struct SessionInfo {
    std::string audience;
    std::int64_t issued_at;
};
std::optional<SessionInfo> parse_session_string(std::string_view t);

BasicProof make_basic_proof(const SignedClaim& claim, bool disclose);

// Fresh session key per call; the secret half is zeroized before returning,
// so a proof cannot be re-bound to another session. Throws
// std::invalid_argument on an empty session string.
OneTimeProof make_one_time_proof(const SignedClaim& claim, std::string_view t, Rng& rng,
                                 bool disclose);

// True iff sigma verifies under issuer_pk + r, and, when disclosed, h
// matches the recomputed claim digest.
bool verify_basic(const G2Point& issuer_pk, const BasicProof& proof,
                  DigestKind kind = DigestKind::sha256);

// Policy check on t, then sigma_t under pk_t over frame3, then sigma_prime
// under issuer_pk + r + pk_t, then the optional disclosure digest. Policy
// violations are reported distinctly from cryptographic failures.
OneTimeVerdict verify_one_time(const G2Point& issuer_pk, const OneTimeProof& proof,
                               const SessionPolicy& policy,
                               DigestKind kind = DigestKind::sha256);

}  // namespace sdbls

#endif
