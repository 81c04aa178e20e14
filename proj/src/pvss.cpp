/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sdbls/pvss.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstring>
#include <memory>
#include <set>
#include <stdexcept>

#include "sdbls/encoding.hpp"

namespace sdbls {

namespace {

constexpr std::string_view kShareKeyLabel = "sdbls/pvss/share-key/v1";
constexpr std::string_view kPossessionLabel = "sdbls/pvss/possession/v1";
constexpr std::size_t kShareCiphertextBytes = kScalarBytes + 16;  // stream || tag

std::array<std::uint8_t, 32> share_key(const G1Point& dh_point) {
    Bytes input = to_bytes(kShareKeyLabel);
    append(input, dh_point.to_bytes());
    return sha256(input);
}

struct CipherCtxFree {
    void operator()(EVP_CIPHER_CTX* c) const { EVP_CIPHER_CTX_free(c); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxFree>;

// ChaCha20-Poly1305 with an all-zero nonce: every share key is derived from
// a fresh ephemeral DH point, so keys are never reused across messages.
Bytes aead_encrypt(const std::array<std::uint8_t, 32>& key, ByteSpan plain) {
    CipherCtx ctx(EVP_CIPHER_CTX_new());
    std::array<std::uint8_t, 12> nonce{};
    Bytes out(plain.size() + 16);
    int len = 0;
    if (EVP_EncryptInit_ex(ctx.get(), EVP_chacha20_poly1305(), nullptr, key.data(),
                           nonce.data()) != 1 ||
        EVP_EncryptUpdate(ctx.get(), out.data(), &len, plain.data(),
                          static_cast<int>(plain.size())) != 1)
        throw std::runtime_error("share encryption failed");
    int fin = 0;
    if (EVP_EncryptFinal_ex(ctx.get(), out.data() + len, &fin) != 1 ||
        EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_AEAD_GET_TAG, 16,
                            out.data() + plain.size()) != 1)
        throw std::runtime_error("share encryption failed");
    return out;
}

// Returns the plaintext or nullopt on tag failure.
std::optional<Bytes> aead_decrypt(const std::array<std::uint8_t, 32>& key, ByteSpan ct) {
    if (ct.size() < 16) return std::nullopt;
    CipherCtx ctx(EVP_CIPHER_CTX_new());
    std::array<std::uint8_t, 12> nonce{};
    std::size_t body = ct.size() - 16;
    Bytes out(body);
    Bytes tag(ct.begin() + body, ct.end());
    int len = 0;
    if (EVP_DecryptInit_ex(ctx.get(), EVP_chacha20_poly1305(), nullptr, key.data(),
                           nonce.data()) != 1 ||
        EVP_DecryptUpdate(ctx.get(), out.data(), &len, ct.data(), static_cast<int>(body)) != 1 ||
        EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_AEAD_SET_TAG, 16, tag.data()) != 1)
        throw std::runtime_error("share decryption failed");
    int fin = 0;
    if (EVP_DecryptFinal_ex(ctx.get(), out.data() + len, &fin) != 1) return std::nullopt;
    return out;
}

Scalar hash_to_scalar(ByteSpan input) {
    Bytes one(input.begin(), input.end());
    one.push_back(0x01);
    Bytes two(input.begin(), input.end());
    two.push_back(0x02);
    auto h1 = sha256(one);
    auto h2 = sha256(two);
    Bytes wide(h1.begin(), h1.end());
    wide.insert(wide.end(), h2.begin(), h2.begin() + 16);
    return Scalar::reduce_wide(wide);  // 48 bytes
}

void append_u32(Bytes& out, std::uint32_t v) {
    for (int i = 3; i >= 0; i--) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

Bytes possession_transcript(std::uint32_t index, const DealerBundle& bundle,
                            const G2Point& statement, const G2Point& commitment) {
    Bytes t = to_bytes(kPossessionLabel);
    append(t, bundle.digest());
    append_u32(t, index);
    append(t, statement.to_bytes());
    append(t, commitment.to_bytes());
    return t;
}

}  // namespace

IssuerDhKeys make_issuer_dh_keys(Rng& rng) {
    IssuerDhKeys keys;
    keys.x = Scalar::random(rng);
    keys.y = g_mul(keys.x, G1Point::generator());
    return keys;
}

G2Point DealerBundle::commitment_eval(std::uint32_t index) const {
    // Horner over X_i = sum_j index^j * C_j.
    Scalar i = Scalar::from_u64(index);
    G2Point acc = commitments.back();
    for (std::size_t j = commitments.size() - 1; j-- > 0;)
        acc = g_mul(i, acc) + commitments[j];
    return acc;
}

std::array<std::uint8_t, 32> DealerBundle::digest() const {
    Bytes buf = to_bytes("SDBLS-BUNDLE");
    append_u32(buf, n);
    append_u32(buf, t);
    for (const auto& c : commitments) append(buf, c.to_bytes());
    for (const auto& s : shares) {
        append_u32(buf, s.index);
        append(buf, s.exponent_share.to_bytes());
        append(buf, s.ephemeral.to_bytes());
        append(buf, s.ciphertext);
    }
    return sha256(buf);
}

Deal deal(const Scalar& secret, std::uint32_t t, std::uint32_t n,
          std::span<const G1Point> issuer_pks, Rng& rng) {
    if (t <= 1 || t > n) throw std::invalid_argument("deal: need 1 < t <= n");
    if (issuer_pks.size() != n) throw std::invalid_argument("deal: need one key per participant");
    if (secret.is_zero()) throw std::invalid_argument("deal: zero secret");
    for (std::size_t i = 0; i < issuer_pks.size(); i++)
        for (std::size_t j = i + 1; j < issuer_pks.size(); j++)
            if (issuer_pks[i] == issuer_pks[j])
                throw std::invalid_argument("deal: duplicate participant keys");

    Deal out;
    out.bundle.n = n;
    out.bundle.t = t;

    // p(x) = secret + a_1 x + ... + a_{t-1} x^{t-1}
    out.transcript.coefficients.push_back(secret);
    for (std::uint32_t j = 1; j < t; j++)
        out.transcript.coefficients.push_back(Scalar::random(rng));
    for (const auto& a : out.transcript.coefficients)
        out.bundle.commitments.push_back(g_mul(a, G2Point::generator()));

    for (std::uint32_t i = 1; i <= n; i++) {
        // Horner evaluation of p(i).
        Scalar x = Scalar::from_u64(i);
        Scalar s = out.transcript.coefficients.back();
        for (std::size_t j = out.transcript.coefficients.size() - 1; j-- > 0;)
            s = s * x + out.transcript.coefficients[j];
        out.transcript.shares.push_back(s);

        const G1Point& y = issuer_pks[i - 1];
        Scalar k = Scalar::random(rng);
        ShareEntry entry;
        entry.index = i;
        entry.exponent_share = g_mul(s, y);
        entry.ephemeral = g_mul(k, G1Point::generator());
        entry.ciphertext = aead_encrypt(share_key(g_mul(k, y)), s.to_bytes());
        out.bundle.shares.push_back(std::move(entry));
    }
    return out;
}

bool verify_deal(const DealerBundle& bundle, std::span<const G1Point> issuer_pks) {
    if (bundle.t <= 1 || bundle.t > bundle.n) return false;
    if (bundle.commitments.size() != bundle.t) return false;
    if (bundle.shares.size() != bundle.n) return false;
    if (issuer_pks.size() != bundle.n) return false;

    std::set<std::uint32_t> seen;
    for (const auto& entry : bundle.shares) {
        if (entry.index < 1 || entry.index > bundle.n) return false;
        if (!seen.insert(entry.index).second) return false;
        if (entry.ciphertext.size() != kShareCiphertextBytes) return false;
    }

    const G2Point g2 = G2Point::generator();
    for (const auto& entry : bundle.shares) {
        const G1Point& y = issuer_pks[entry.index - 1];
        G2Point x_i = bundle.commitment_eval(entry.index);
        // e(X_i, y_i) == e(G2, Y_i) iff Y_i = p(i) * y_i.
        if (!(pairing(x_i, y) == pairing(g2, entry.exponent_share))) return false;
    }
    return true;
}

Scalar accept_share(const IssuerDhKeys& issuer, std::uint32_t index,
                    const DealerBundle& bundle) {
    auto it = std::find_if(bundle.shares.begin(), bundle.shares.end(),
                           [&](const ShareEntry& e) { return e.index == index; });
    if (it == bundle.shares.end())
        throw std::invalid_argument("accept_share: no entry for index");

    auto plain = aead_decrypt(share_key(g_mul(issuer.x, it->ephemeral)), it->ciphertext);
    if (!plain)
        throw DealerMisbehavior(index, "share ciphertext failed authentication");

    Scalar s;
    try {
        s = Scalar::from_bytes(*plain);
    } catch (const DecodeError&) {
        throw DealerMisbehavior(index, "share plaintext is not a valid scalar");
    }
    if (!(g_mul(s, G2Point::generator()) == bundle.commitment_eval(index)))
        throw DealerMisbehavior(index, "decrypted share contradicts the commitments");
    if (!(g_mul(s, issuer.y) == it->exponent_share))
        throw DealerMisbehavior(index, "decrypted share contradicts the exponent share");
    return s;
}

SharePossessionProof prove_share_possession(const Scalar& share, std::uint32_t index,
                                            const DealerBundle& bundle) {
    G2Point statement = bundle.commitment_eval(index);
    // Deterministic commitment nonce bound to the witness and statement.
    Bytes seed = to_bytes("sdbls/pvss/nonce/v1");
    append(seed, share.to_bytes());
    append(seed, bundle.digest());
    append_u32(seed, index);
    Scalar k = hash_to_scalar(seed);
    if (k.is_zero()) k = Scalar::from_u64(1);

    G2Point commitment = g_mul(k, G2Point::generator());
    Scalar c = hash_to_scalar(possession_transcript(index, bundle, statement, commitment));
    return SharePossessionProof{index, commitment, k + c * share};
}

bool verify_share_possession(const SharePossessionProof& proof, const DealerBundle& bundle) {
    if (proof.index < 1 || proof.index > bundle.n) return false;
    G2Point statement = bundle.commitment_eval(proof.index);
    Scalar c = hash_to_scalar(
        possession_transcript(proof.index, bundle, statement, proof.commitment));
    // z*G2 == A + c*X_i
    return g_mul(proof.response, G2Point::generator()) ==
           proof.commitment + g_mul(c, statement);
}

Reconstruction reconstruct(std::span<const RevealedShare> shares, const DealerBundle& bundle) {
    Reconstruction result;
    std::vector<RevealedShare> valid;
    std::set<std::uint32_t> seen;
    const G2Point g2 = G2Point::generator();
    for (const auto& share : shares) {
        if (share.index < 1 || share.index > bundle.n)
            throw std::invalid_argument("reconstruct: share index out of range");
        if (!seen.insert(share.index).second)
            throw std::invalid_argument("reconstruct: duplicate share index");
        if (g_mul(share.s, g2) == bundle.commitment_eval(share.index))
            valid.push_back(share);
        else
            result.cheaters.push_back(share.index);
    }
    if (valid.size() < bundle.t)
        throw InsufficientShares(result.cheaters,
                                 "reconstruct: " + std::to_string(valid.size()) + " valid of " +
                                     std::to_string(bundle.t) + " required");
    valid.resize(bundle.t);

    // Lagrange at zero over the chosen index subset.
    Scalar secret;
    for (std::size_t i = 0; i < valid.size(); i++) {
        Scalar xi = Scalar::from_u64(valid[i].index);
        Scalar num = Scalar::from_u64(1), den = Scalar::from_u64(1);
        for (std::size_t j = 0; j < valid.size(); j++) {
            if (j == i) continue;
            Scalar xj = Scalar::from_u64(valid[j].index);
            num = num * xj;
            den = den * (xj - xi);
        }
        secret = secret + valid[i].s * num * den.inverse();
    }

    if (!(g_mul(secret, g2) == bundle.commitments.front()))
        throw std::logic_error("reconstruct: result contradicts C_0");
    result.secret = secret;
    return result;
}

}  // namespace sdbls
