/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SDBLS_CREDENTIAL_HPP_
#define SDBLS_CREDENTIAL_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "sdbls/bls.hpp"

// Issuer-side creation of signed claims. Each claim carries its own
// revocation public key r = rev * G2; the claim signature is the issuer's
// signature plus the revocation key's signature over the same framing, so a
// verifier checks it against the aggregate key (issuer pk + r).
namespace sdbls {

inline constexpr std::size_t kDigestBytes = 32;
inline constexpr std::size_t kNonceBytes = 16;

using Digest = std::array<std::uint8_t, kDigestBytes>;
using Nonce = std::array<std::uint8_t, kNonceBytes>;

// Digest used for claim hashes. memory_hard trades issuance/verification
// time for resistance to brute-forcing low-entropy claim strings (Argon2id).
enum class DigestKind { sha256, memory_hard };

struct SignedClaim {
    Digest h;       // digest of frame(m, nonce, r)
    G2Point r;      // revocation public key
    G1Point sigma;  // issuer signature + revocation signature over frame2(h, r)
    std::string m;
    Nonce nonce;
};

struct RevocationRecord {
    Digest h;
    Scalar rev;  // secret revocation key; rev * G2 == the claim's r
};

struct IssuerIdentity {
    KeyPair keys;
    std::vector<RevocationRecord> registry;  // append-only
};

// base64url(m) : base64url(nonce) : base64url(r). Field-wise encoding keeps
// the ':' separator unambiguous for any claim content.
Bytes frame(std::string_view m, const Nonce& nonce, const G2Point& r);

// base64url(h) : base64url(r) -- the message every key signs.
Bytes frame2(const Digest& h, const G2Point& r);

Digest claim_digest(ByteSpan framed, DigestKind kind = DigestKind::sha256);

struct IssueBatch {
    std::vector<SignedClaim> claims;
    std::vector<RevocationRecord> records;
};

// Per claim: fresh rev and nonce, h = digest(frame(m, nonce, r)),
// sigma = sign(issuer, frame2) + sign(rev, frame2). The issuer registry is
// extended with one {h, rev} record per claim. Throws std::invalid_argument
// on an empty claim list or an empty claim string.
IssueBatch issue_claims(IssuerIdentity& issuer, std::span<const std::string> claims,
                        Rng& rng, DigestKind kind = DigestKind::sha256);

// Threshold-issuance variant: the revocation key lives with an external
// dealer, which supplies r and sigma_rev = sign(rev, frame2(h, r)). The
// dealer contribution is verified before aggregation; failure throws
// DealerMisbehavior. The issuer never learns rev and its registry is NOT
// extended.
SignedClaim issue_with_external_revocation(const IssuerIdentity& issuer, std::string_view m,
                                           const G2Point& r, const G1Point& sigma_rev,
                                           const Nonce& nonce,
                                           DigestKind kind = DigestKind::sha256);

}  // namespace sdbls

#endif
