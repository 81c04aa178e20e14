/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sdbls/presentation.hpp"

#include <chrono>
#include <stdexcept>

#include <json.hpp>

#include "sdbls/encoding.hpp"

namespace sdbls {

namespace {

void push_field(Bytes& out, ByteSpan raw, bool first = false) {
    if (!first) out.push_back(':');
    std::string enc = base64url_encode(raw);
    append(out, as_bytes(enc));
}

}  // namespace

std::int64_t SessionPolicy::current_time() const {
    if (now) return now();
    return std::chrono::duration_cast<std::chrono::seconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

Bytes frame3(const Digest& h, const G2Point& r, const G1Point& sigma_prime,
             std::string_view t, const G2Point& pk_t) {
    Bytes out;
    push_field(out, h, true);
    push_field(out, r.to_bytes());
    push_field(out, sigma_prime.to_bytes());
    push_field(out, as_bytes(t));
    push_field(out, pk_t.to_bytes());
    return out;
}

std::string make_session_string(std::string_view audience, std::int64_t issued_at) {
    nlohmann::ordered_json j;
    j["aud"] = audience;
    j["iat"] = issued_at;
    return j.dump();
}

std::optional<SessionInfo> parse_session_string(std::string_view t) {
    auto j = nlohmann::json::parse(t, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (!j.contains("aud") || !j["aud"].is_string()) return std::nullopt;
    if (!j.contains("iat") || !j["iat"].is_number_integer()) return std::nullopt;
    return SessionInfo{j["aud"].get<std::string>(), j["iat"].get<std::int64_t>()};
}

BasicProof make_basic_proof(const SignedClaim& claim, bool disclose) {
    BasicProof proof{claim.h, claim.r, claim.sigma, std::nullopt};
    if (disclose) proof.disclosed = Disclosure{claim.m, claim.nonce};
    return proof;
}

OneTimeProof make_one_time_proof(const SignedClaim& claim, std::string_view t, Rng& rng,
                                 bool disclose) {
    if (t.empty()) throw std::invalid_argument("one-time proof: empty session string");
    KeyPair session = keygen(rng);
    Bytes signed_msg = frame2(claim.h, claim.r);
    G1Point sigma_prime = claim.sigma + sign(session.sk, signed_msg);
    G1Point sigma_t =
        sign(session.sk, frame3(claim.h, claim.r, sigma_prime, t, session.pk));
    session.zeroize_secret();  // a proof is single-use by construction
    OneTimeProof proof{claim.h,    claim.r,   sigma_prime, std::string(t),
                       session.pk, sigma_t, std::nullopt};
    if (disclose) proof.disclosed = Disclosure{claim.m, claim.nonce};
    return proof;
}

bool verify_basic(const G2Point& issuer_pk, const BasicProof& proof, DigestKind kind) {
    const G2Point pks[] = {issuer_pk, proof.r};
    if (!verify(aggregate_pks(pks), frame2(proof.h, proof.r), proof.sigma)) return false;
    if (proof.disclosed) {
        Digest expect =
            claim_digest(frame(proof.disclosed->m, proof.disclosed->nonce, proof.r), kind);
        if (expect != proof.h) return false;
    }
    return true;
}

OneTimeVerdict verify_one_time(const G2Point& issuer_pk, const OneTimeProof& proof,
                               const SessionPolicy& policy, DigestKind kind) {
    auto session = parse_session_string(proof.t);
    if (!session) return OneTimeVerdict::rejected_policy;
    if (session->audience != policy.expected_audience) return OneTimeVerdict::rejected_policy;
    std::int64_t age = policy.current_time() - session->issued_at;
    if (age < 0 || age > policy.max_age_seconds) return OneTimeVerdict::rejected_policy;

    // Session signature binds every presentation field to pk_t.
    if (!verify(proof.pk_t, frame3(proof.h, proof.r, proof.sigma_prime, proof.t, proof.pk_t),
                proof.sigma_t))
        return OneTimeVerdict::rejected_signature;

    const G2Point pks[] = {issuer_pk, proof.r, proof.pk_t};
    if (!verify(aggregate_pks(pks), frame2(proof.h, proof.r), proof.sigma_prime))
        return OneTimeVerdict::rejected_signature;

    if (proof.disclosed) {
        Digest expect =
            claim_digest(frame(proof.disclosed->m, proof.disclosed->nonce, proof.r), kind);
        if (expect != proof.h) return OneTimeVerdict::rejected_signature;
    }
    return OneTimeVerdict::accepted;
}

}  // namespace sdbls
