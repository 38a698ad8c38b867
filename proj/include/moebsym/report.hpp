#pragma once

#include "moebsym/plane.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace moebsym {

using ordered_json = nlohmann::ordered_json;

// Malformed input document or point encoding (CLI exit code 2).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Named points plus free-form metadata, the CLI input format:
// {"points": {"a": [re, im], "b": "inf"}, "metadata": {...}}.
struct PointDocument {
    std::map<std::string, ExtendedPoint> points;
    std::map<std::string, std::string> metadata;
};

// Wire format: a finite point is [re, im]; infinity is the string "inf".
ExtendedPoint parse_point(const ordered_json& v);
ordered_json point_json(const ExtendedPoint& p);

PointDocument parse_point_document(const std::string& text);

// Serializer with every number at 12 significant digits (the output
// contract; the library's own dump would print shortest-roundtrip digits).
std::string dump_json(const ordered_json& v, int indent = 2);

std::uint64_t fnv1a64(std::string_view s);

// "fnv1a:" + 16 hex digits of the payload hash.
std::string digest_string(std::string_view payload);

// {command, inputs, seed, budget, tool_version, outputs_digest}; the digest
// covers the serialized outputs, so replaying the manifest's command line
// must reproduce it.
ordered_json run_manifest(const std::string& command, ordered_json inputs,
                          std::uint64_t seed, std::uint64_t budget,
                          std::string_view outputs_payload);

// Flat "path = value" lines, one leaf per line, for --format text.
std::string render_text(const ordered_json& v);

} // namespace moebsym
