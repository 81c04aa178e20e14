/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SDBLS_JSON_IO_HPP_
#define SDBLS_JSON_IO_HPP_

#include <iosfwd>

#include <json.hpp>

#include "sdbls/presentation.hpp"
#include "sdbls/pvss.hpp"

// File schemas. All byte fields are base64url. Malformed input throws
// DecodeError(bad_format) before any cryptographic interpretation; point and
// scalar decoding failures keep their own distinct codes.
namespace sdbls {

using ordered_json = nlohmann::ordered_json;

// {"h","r","sigma","m","nonce"}
ordered_json claim_to_json(const SignedClaim& claim);
SignedClaim claim_from_json(const ordered_json& j);

// {"h","rev"} -- one registry record per line
std::string registry_line(const RevocationRecord& record);
RevocationRecord registry_record_from_line(std::string_view line);
void save_registry(std::ostream& out, std::span<const RevocationRecord> records);
std::vector<RevocationRecord> load_registry(std::istream& in);

// {"h","r","sigma"[,"m","nonce"]}
ordered_json basic_proof_to_json(const BasicProof& proof);
BasicProof basic_proof_from_json(const ordered_json& j);

// {"h","r","sigma_prime","t","pk_t","sigma_t"[,"m","nonce"]}
ordered_json one_time_proof_to_json(const OneTimeProof& proof);
OneTimeProof one_time_proof_from_json(const ordered_json& j);

// {"n","t","commitments":[...],"shares":[{"i","Y","E","ct"}...]}
ordered_json bundle_to_json(const DealerBundle& bundle);
DealerBundle bundle_from_json(const ordered_json& j);

// {"i","s"}
ordered_json revealed_share_to_json(const RevealedShare& share);
RevealedShare revealed_share_from_json(const ordered_json& j);

// {"kind","sk","pk"} / {"kind","x","y"}
ordered_json issuer_keys_to_json(const KeyPair& keys);
KeyPair issuer_keys_from_json(const ordered_json& j);
ordered_json dh_keys_to_json(const IssuerDhKeys& keys);
IssuerDhKeys dh_keys_from_json(const ordered_json& j);

ordered_json parse_json(std::string_view text);  // DecodeError(bad_format) on bad JSON

}  // namespace sdbls

#endif
