/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sdbls/group.hpp"

#include <blst.h>
#include <sodium.h>

#include <cstring>
#include <stdexcept>

namespace sdbls {

// The public types hide the backend behind fixed-size storage.
static_assert(sizeof(blst_p1) == 144);
static_assert(sizeof(blst_p2) == 288);
static_assert(sizeof(blst_fp12) == 576);
static_assert(alignof(blst_p1) <= 8 && alignof(blst_p2) <= 8 && alignof(blst_fp12) <= 8);

namespace {

blst_p1* as_p1(std::array<std::uint8_t, 144>& a) { return reinterpret_cast<blst_p1*>(a.data()); }
const blst_p1* as_p1(const std::array<std::uint8_t, 144>& a) {
    return reinterpret_cast<const blst_p1*>(a.data());
}
blst_p2* as_p2(std::array<std::uint8_t, 288>& a) { return reinterpret_cast<blst_p2*>(a.data()); }
const blst_p2* as_p2(const std::array<std::uint8_t, 288>& a) {
    return reinterpret_cast<const blst_p2*>(a.data());
}
blst_fp12* as_fp12(std::array<std::uint8_t, 576>& a) {
    return reinterpret_cast<blst_fp12*>(a.data());
}
const blst_fp12* as_fp12(const std::array<std::uint8_t, 576>& a) {
    return reinterpret_cast<const blst_fp12*>(a.data());
}

blst_scalar to_blst(const std::array<std::uint8_t, kScalarBytes>& be) {
    blst_scalar s;
    blst_scalar_from_bendian(&s, be.data());
    return s;
}

blst_fr to_fr(const std::array<std::uint8_t, kScalarBytes>& be) {
    blst_scalar s = to_blst(be);
    blst_fr f;
    blst_fr_from_scalar(&f, &s);
    return f;
}

std::array<std::uint8_t, kScalarBytes> from_fr(const blst_fr& f) {
    blst_scalar s;
    blst_scalar_from_fr(&s, &f);
    std::array<std::uint8_t, kScalarBytes> be;
    blst_bendian_from_scalar(be.data(), &s);
    return be;
}

std::array<std::uint8_t, kScalarBytes> scalar_bytes(const Scalar& s) { return s.to_bytes(); }

}  // namespace

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::from_u64(std::uint64_t v) {
    Scalar out;
    for (int i = 0; i < 8; i++)
        out.be_[kScalarBytes - 1 - i] = static_cast<std::uint8_t>(v >> (8 * i));
    return out;
}

Scalar Scalar::random(Rng& rng) {
    Scalar out;
    do {
        // 48 bytes give a negligible reduction bias.
        auto wide = rng.array<48>();
        out = reduce_wide(wide);
    } while (out.is_zero());
    return out;
}

Scalar Scalar::from_bytes(ByteSpan in) {
    if (in.size() != kScalarBytes)
        throw DecodeError(DecodeErrc::wrong_length, "scalar: expected 32 bytes");
    blst_scalar s;
    blst_scalar_from_bendian(&s, in.data());
    if (!blst_scalar_fr_check(&s))
        throw DecodeError(DecodeErrc::out_of_range, "scalar: value not below group order");
    Scalar out;
    std::memcpy(out.be_.data(), in.data(), kScalarBytes);
    return out;
}

Scalar Scalar::reduce_wide(ByteSpan in) {
    if (in.empty() || in.size() > 64)
        throw std::invalid_argument("reduce_wide: need 1..64 bytes");
    blst_scalar s;
    blst_scalar_from_be_bytes(&s, in.data(), in.size());
    Scalar out;
    blst_bendian_from_scalar(out.be_.data(), &s);
    return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
    blst_fr a = to_fr(be_), b = to_fr(o.be_);
    blst_fr_add(&a, &a, &b);
    Scalar out;
    out.be_ = from_fr(a);
    return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
    blst_fr a = to_fr(be_), b = to_fr(o.be_);
    blst_fr_sub(&a, &a, &b);
    Scalar out;
    out.be_ = from_fr(a);
    return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
    blst_fr a = to_fr(be_), b = to_fr(o.be_);
    blst_fr_mul(&a, &a, &b);
    Scalar out;
    out.be_ = from_fr(a);
    return out;
}

Scalar Scalar::negate() const { return Scalar{} - *this; }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("scalar: zero has no inverse");
    blst_fr a = to_fr(be_);
    blst_fr_inverse(&a, &a);
    Scalar out;
    out.be_ = from_fr(a);
    return out;
}

bool Scalar::is_zero() const {
    for (auto b : be_)
        if (b != 0) return false;
    return true;
}

void Scalar::zeroize() { sodium_memzero(be_.data(), be_.size()); }

// ---------------------------------------------------------------------------
// G1

G1Point::G1Point() { std::memset(repr_.data(), 0, repr_.size()); }

G1Point G1Point::generator() {
    G1Point out;
    std::memcpy(out.repr_.data(), blst_p1_generator(), sizeof(blst_p1));
    return out;
}

G1Point G1Point::from_bytes(ByteSpan in) {
    if (in.size() != kG1Bytes)
        throw DecodeError(DecodeErrc::wrong_length, "g1: expected 48 bytes");
    blst_p1_affine aff;
    switch (blst_p1_uncompress(&aff, in.data())) {
        case BLST_SUCCESS:
            break;
        case BLST_POINT_NOT_ON_CURVE:
            throw DecodeError(DecodeErrc::off_curve, "g1: point not on curve");
        default:
            throw DecodeError(DecodeErrc::non_canonical, "g1: non-canonical encoding");
    }
    if (!blst_p1_affine_in_g1(&aff))
        throw DecodeError(DecodeErrc::wrong_subgroup, "g1: not in the prime-order subgroup");
    G1Point out;
    blst_p1_from_affine(as_p1(out.repr_), &aff);
    return out;
}

std::array<std::uint8_t, kG1Bytes> G1Point::to_bytes() const {
    std::array<std::uint8_t, kG1Bytes> out;
    blst_p1_compress(out.data(), as_p1(repr_));
    return out;
}

G1Point G1Point::operator+(const G1Point& o) const {
    G1Point out;
    blst_p1_add_or_double(as_p1(out.repr_), as_p1(repr_), as_p1(o.repr_));
    return out;
}

G1Point G1Point::operator-() const {
    G1Point out = *this;
    blst_p1_cneg(as_p1(out.repr_), true);
    return out;
}

bool G1Point::is_identity() const { return blst_p1_is_inf(as_p1(repr_)); }

bool G1Point::operator==(const G1Point& o) const {
    return blst_p1_is_equal(as_p1(repr_), as_p1(o.repr_));
}

// ---------------------------------------------------------------------------
// G2

G2Point::G2Point() { std::memset(repr_.data(), 0, repr_.size()); }

G2Point G2Point::generator() {
    G2Point out;
    std::memcpy(out.repr_.data(), blst_p2_generator(), sizeof(blst_p2));
    return out;
}

G2Point G2Point::from_bytes(ByteSpan in) {
    if (in.size() != kG2Bytes)
        throw DecodeError(DecodeErrc::wrong_length, "g2: expected 96 bytes");
    blst_p2_affine aff;
    switch (blst_p2_uncompress(&aff, in.data())) {
        case BLST_SUCCESS:
            break;
        case BLST_POINT_NOT_ON_CURVE:
            throw DecodeError(DecodeErrc::off_curve, "g2: point not on curve");
        default:
            throw DecodeError(DecodeErrc::non_canonical, "g2: non-canonical encoding");
    }
    if (!blst_p2_affine_in_g2(&aff))
        throw DecodeError(DecodeErrc::wrong_subgroup, "g2: not in the prime-order subgroup");
    G2Point out;
    blst_p2_from_affine(as_p2(out.repr_), &aff);
    return out;
}

std::array<std::uint8_t, kG2Bytes> G2Point::to_bytes() const {
    std::array<std::uint8_t, kG2Bytes> out;
    blst_p2_compress(out.data(), as_p2(repr_));
    return out;
}

G2Point G2Point::operator+(const G2Point& o) const {
    G2Point out;
    blst_p2_add_or_double(as_p2(out.repr_), as_p2(repr_), as_p2(o.repr_));
    return out;
}

G2Point G2Point::operator-() const {
    G2Point out = *this;
    blst_p2_cneg(as_p2(out.repr_), true);
    return out;
}

bool G2Point::is_identity() const { return blst_p2_is_inf(as_p2(repr_)); }

bool G2Point::operator==(const G2Point& o) const {
    return blst_p2_is_equal(as_p2(repr_), as_p2(o.repr_));
}

// ---------------------------------------------------------------------------
// GT

GtElement::GtElement() { std::memcpy(repr_.data(), blst_fp12_one(), sizeof(blst_fp12)); }

GtElement GtElement::one() { return GtElement{}; }

GtElement GtElement::operator*(const GtElement& o) const {
    GtElement out;
    blst_fp12_mul(as_fp12(out.repr_), as_fp12(repr_), as_fp12(o.repr_));
    return out;
}

GtElement GtElement::pow(const Scalar& e) const {
    GtElement acc;  // one
    auto bits = e.to_bytes();
    for (std::size_t i = 0; i < kScalarBytes * 8; i++) {
        blst_fp12_sqr(as_fp12(acc.repr_), as_fp12(acc.repr_));
        if ((bits[i / 8] >> (7 - i % 8)) & 1)
            blst_fp12_mul(as_fp12(acc.repr_), as_fp12(acc.repr_), as_fp12(repr_));
    }
    return acc;
}

bool GtElement::is_one() const { return blst_fp12_is_one(as_fp12(repr_)); }

bool GtElement::operator==(const GtElement& o) const {
    return blst_fp12_is_equal(as_fp12(repr_), as_fp12(o.repr_));
}

// ---------------------------------------------------------------------------
// Free operations

G1Point g_add(const G1Point& a, const G1Point& b) { return a + b; }
G2Point g_add(const G2Point& a, const G2Point& b) { return a + b; }

G1Point g_mul(const Scalar& s, const G1Point& p) {
    G1Point out;
    blst_scalar sc = to_blst(scalar_bytes(s));
    blst_p1_mult(as_p1(out.repr_), as_p1(p.repr_), sc.b, 255);
    return out;
}

G2Point g_mul(const Scalar& s, const G2Point& p) {
    G2Point out;
    blst_scalar sc = to_blst(scalar_bytes(s));
    blst_p2_mult(as_p2(out.repr_), as_p2(p.repr_), sc.b, 255);
    return out;
}

GtElement pairing(const G2Point& q, const G1Point& p) {
    // e(Q, O) = e(O, P) = 1.
    if (q.is_identity() || p.is_identity()) return GtElement::one();
    blst_p1_affine pa;
    blst_p2_affine qa;
    blst_p1_to_affine(&pa, as_p1(p.repr_));
    blst_p2_to_affine(&qa, as_p2(q.repr_));
    GtElement out;
    blst_miller_loop(as_fp12(out.repr_), &qa, &pa);
    blst_final_exp(as_fp12(out.repr_), as_fp12(out.repr_));
    return out;
}

G1Point hash_to_g1(std::string_view domain_tag, ByteSpan msg) {
    if (domain_tag.empty()) throw std::invalid_argument("hash_to_g1: empty domain tag");
    G1Point out;
    blst_hash_to_g1(as_p1(out.repr_), msg.data(), msg.size(),
                    reinterpret_cast<const byte*>(domain_tag.data()), domain_tag.size(),
                    nullptr, 0);
    return out;
}

Bytes serialize(const Scalar& s) {
    auto a = s.to_bytes();
    return Bytes(a.begin(), a.end());
}

Bytes serialize(const G1Point& p) {
    auto a = p.to_bytes();
    return Bytes(a.begin(), a.end());
}

Bytes serialize(const G2Point& p) {
    auto a = p.to_bytes();
    return Bytes(a.begin(), a.end());
}

}  // namespace sdbls
