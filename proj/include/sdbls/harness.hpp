/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SDBLS_HARNESS_HPP_
#define SDBLS_HARNESS_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdbls/presentation.hpp"
#include "sdbls/pvss.hpp"
#include "sdbls/revocation.hpp"

// Deterministic in-process simulation of the five protocol roles: credential
// issuer, revocation dealer, n revocation issuers, holder, verifier. Actors
// exchange typed messages over an in-memory bus; a single seeded RNG and a
// logical clock make transcripts byte-for-byte reproducible. The credential
// issuer never sees a revocation secret and the dealer never sees claim
// content -- the message flow enforces both, and tests inspect the
// transcript to confirm it.
namespace sdbls::harness {

enum class MessageKind {
    revocation_request,
    revocation_key_offer,
    digest_submit,
    revocation_signature,
    deal_bundle,
    share_accept,
    share_complaint,
    revocation_vote,
    share_reveal,
    list_update,
    presentation_submit,
    verdict_report,
    claim_delivery,
};

std::string_view to_string(MessageKind kind);

struct ActorMessage {
    std::string from;
    std::string to;
    MessageKind kind;
    nlohmann::ordered_json payload;
    std::uint64_t seq;  // strictly increasing per sender
};

struct QuorumConfig {
    std::uint32_t n = 0;
    std::uint32_t t = 0;
    std::uint32_t vote_quorum = 0;  // t <= vote_quorum <= n

    void validate() const;
};

struct IssuanceFault {
    std::size_t claim_index;
    std::uint32_t victim_index;  // participant receiving a mismatched ciphertext
};

enum class Verdict { accepted, rejected_signature, rejected_policy, revoked };

std::string_view to_string(Verdict v);

struct CeremonyRecord {
    QuorumConfig config;
    std::uint64_t seed = 0;
    DigestKind digest_kind = DigestKind::sha256;

    KeyPair issuer_keys;
    std::vector<IssuerDhKeys> participant_keys;          // n revocation issuers
    std::vector<std::optional<SignedClaim>> claims;      // nullopt = aborted
    std::vector<DealerBundle> bundles;                   // public board, per claim
    std::vector<std::vector<Scalar>> accepted_shares;    // [claim][participant]
    std::vector<std::string> aborted;                    // abort reasons per claim (empty = ok)

    RevocationList public_list;
    std::vector<ActorMessage> log;

    Rng rng{0};
    std::int64_t logical_clock = 1700000000;
    std::map<std::string, std::uint64_t> seq_counters;
    std::set<std::string> seen_session_sigs;             // verifier replay cache
    std::optional<OneTimeProof> last_presentation;
    std::string last_presentation_audience;

    std::uint64_t next_seq(const std::string& sender);
    void post(std::string from, std::string to, MessageKind kind,
              nlohmann::ordered_json payload);
};

// Runs the full threshold-issuance ceremony for every claim: the dealer
// creates rev and r, shares rev to all n participants (each verifies the
// deal and accepts its share), and only then releases the revocation
// signature for aggregation. Any complaint aborts that claim. The optional
// fault makes the dealer encrypt a wrong share for one participant.
CeremonyRecord run_issuance_ceremony(const QuorumConfig& config,
                                     std::span<const std::string> claims,
                                     std::uint64_t seed,
                                     std::optional<IssuanceFault> fault = std::nullopt,
                                     DigestKind digest_kind = DigestKind::sha256);

enum class RevocationStatus { revoked, refused_below_quorum, failed_insufficient_shares };

struct RevocationOutcome {
    RevocationStatus status;
    std::vector<std::uint32_t> cheaters;
};

struct RevealFault {
    std::uint32_t corrupt_index;  // this voter reveals a corrupted share
};

// Votes, then (at quorum) possession proofs, reveals, reconstruction, and a
// list update. Below quorum nothing is revealed and the list is unchanged.
RevocationOutcome request_revocation(CeremonyRecord& record, std::size_t claim_index,
                                     const std::set<std::uint32_t>& voting_issuers,
                                     std::optional<RevealFault> fault = std::nullopt);

enum class ProofMode { basic, one_time };

struct SessionSpec {
    ProofMode mode = ProofMode::one_time;
    std::string audience = "verifier";
    std::int64_t max_age_seconds = 300;
    // Simulated delay between proof construction and verification.
    std::int64_t staleness_seconds = 0;
    bool disclose = true;
};

// Holder builds the proof, verifier checks signature then revocation status
// against its current list snapshot.
Verdict run_presentation_session(CeremonyRecord& record, std::size_t claim_index,
                                 const SessionSpec& spec);

// Re-submits the last one-time proof byte-for-byte; the verifier's replay
// cache rejects it.
Verdict resubmit_last_presentation(CeremonyRecord& record);

// Deterministic JSON transcript: config, message log, final actor states.
std::string export_transcript(const CeremonyRecord& record);

}  // namespace sdbls::harness

#endif
