/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SDBLS_GROUP_HPP_
#define SDBLS_GROUP_HPP_

#include <array>
#include <cstdint>
#include <string_view>

#include "sdbls/bytes.hpp"
#include "sdbls/errors.hpp"
#include "sdbls/rng.hpp"

// Group and field arithmetic over BLS12-381: scalars mod the group order n,
// G1 (the base curve), G2 (the twist), GT (n-th roots of unity in Fp12) and
// the pairing between them. Backed by a vendored pairing library; nothing
// above this header sees backend types, and this header pins the canonical
// encodings: 32-byte big-endian scalars, 48/96-byte compressed points with
// the sign-bit-in-high-bits convention, subgroup checks on every decode.
namespace sdbls {

inline constexpr std::size_t kScalarBytes = 32;
inline constexpr std::size_t kG1Bytes = 48;
inline constexpr std::size_t kG2Bytes = 96;

// Artifact-wide domain separation tag for hashing messages to G1.
inline constexpr std::string_view kDomainTag = "SDBLS-V01";

class Scalar {
public:
    Scalar() = default;  // zero

    static Scalar from_u64(std::uint64_t v);
    // Uniform in [1, n): zero draws are resampled.
    static Scalar random(Rng& rng);
    // 32 bytes big-endian; values >= n are rejected (out_of_range).
    static Scalar from_bytes(ByteSpan in);
    // Wide reduction mod n of up to 64 input bytes (big-endian).
    static Scalar reduce_wide(ByteSpan in);

    std::array<std::uint8_t, kScalarBytes> to_bytes() const { return be_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar negate() const;
    // Multiplicative inverse; throws std::invalid_argument on zero.
    Scalar inverse() const;

    bool is_zero() const;
    bool operator==(const Scalar& o) const { return be_ == o.be_; }

    // Best-effort erase of the secret bytes.
    void zeroize();

private:
    // Canonical big-endian representation, always < n.
    std::array<std::uint8_t, kScalarBytes> be_{};
};

class G1Point {
public:
    G1Point();  // identity

    static G1Point generator();
    // 48-byte compressed encoding. Distinct failures: wrong_length,
    // non_canonical, off_curve, wrong_subgroup.
    static G1Point from_bytes(ByteSpan in);

    std::array<std::uint8_t, kG1Bytes> to_bytes() const;

    G1Point operator+(const G1Point& o) const;
    G1Point operator-() const;
    bool is_identity() const;
    bool operator==(const G1Point& o) const;

private:
    friend G1Point g_mul(const Scalar&, const G1Point&);
    friend G1Point hash_to_g1(std::string_view, ByteSpan);
    friend GtElement pairing(const class G2Point&, const G1Point&);
    alignas(8) std::array<std::uint8_t, 144> repr_{};  // backend projective point
};

class G2Point {
public:
    G2Point();  // identity

    static G2Point generator();
    static G2Point from_bytes(ByteSpan in);  // 96-byte compressed

    std::array<std::uint8_t, kG2Bytes> to_bytes() const;

    G2Point operator+(const G2Point& o) const;
    G2Point operator-() const;
    bool is_identity() const;
    bool operator==(const G2Point& o) const;

private:
    friend G2Point g_mul(const Scalar&, const G2Point&);
    friend GtElement pairing(const G2Point&, const G1Point&);
    alignas(8) std::array<std::uint8_t, 288> repr_{};
};

class GtElement {
public:
    GtElement();  // multiplicative identity

    static GtElement one();

    GtElement operator*(const GtElement& o) const;
    GtElement pow(const Scalar& e) const;
    bool is_one() const;
    bool operator==(const GtElement& o) const;

private:
    friend GtElement pairing(const G2Point&, const G1Point&);
    alignas(8) std::array<std::uint8_t, 576> repr_{};
};

G1Point g_add(const G1Point& a, const G1Point& b);
G2Point g_add(const G2Point& a, const G2Point& b);
G1Point g_mul(const Scalar& s, const G1Point& p);
G2Point g_mul(const Scalar& s, const G2Point& p);

// Miller pairing e: G2 x G1 -> GT (bilinear, non-degenerate).
GtElement pairing(const G2Point& q, const G1Point& p);

// RFC 9380 suite BLS12381G1_XMD:SHA-256_SSWU_RO, output in the prime-order
// subgroup. domain_tag must be non-empty.
G1Point hash_to_g1(std::string_view domain_tag, ByteSpan msg);

Bytes serialize(const Scalar& s);
Bytes serialize(const G1Point& p);
Bytes serialize(const G2Point& p);

}  // namespace sdbls

#endif
