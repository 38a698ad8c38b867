#include "moebsym/report.hpp"

#include <cmath>
#include <cstdio>

namespace moebsym {

namespace {

std::string format_double(double x) {
    if (x == 0.0) return "0";  // never print "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string escape_string(const std::string& s) {
    std::string out = "\"";
    for (const char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out + "\"";
}

std::string scalar_literal(const ordered_json& v) {
    switch (v.type()) {
    case nlohmann::detail::value_t::null: return "null";
    case nlohmann::detail::value_t::boolean: return v.get<bool>() ? "true" : "false";
    case nlohmann::detail::value_t::string: return escape_string(v.get<std::string>());
    case nlohmann::detail::value_t::number_integer:
        return std::to_string(v.get<std::int64_t>());
    case nlohmann::detail::value_t::number_unsigned:
        return std::to_string(v.get<std::uint64_t>());
    default: return format_double(v.get<double>());
    }
}

void dump_rec(const ordered_json& v, int indent, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');
    if (v.is_object()) {
        if (v.empty()) { out += "{}"; return; }
        out += "{\n";
        bool first = true;
        for (const auto& [key, val] : v.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad + escape_string(key) + ": ";
            dump_rec(val, indent, depth + 1, out);
        }
        out += "\n" + close_pad + "}";
    } else if (v.is_array()) {
        if (v.empty()) { out += "[]"; return; }
        // Arrays of scalars stay on one line; nested structures get a line each.
        bool flat = true;
        for (const auto& item : v) flat = flat && !item.is_structured();
        if (flat) {
            out += "[";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ", ";
                out += scalar_literal(v[i]);
            }
            out += "]";
        } else {
            out += "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ",\n";
                out += pad;
                dump_rec(v[i], indent, depth + 1, out);
            }
            out += "\n" + close_pad + "]";
        }
    } else {
        out += scalar_literal(v);
    }
}

void text_rec(const ordered_json& v, const std::string& path, std::string& out) {
    if (v.is_object()) {
        for (const auto& [key, val] : v.items())
            text_rec(val, path.empty() ? key : path + "." + key, out);
    } else if (v.is_array()) {
        bool flat = true;
        for (const auto& item : v) flat = flat && !item.is_structured();
        if (flat) {
            out += path + " =";
            for (const auto& item : v) out += " " + scalar_literal(item);
            out += "\n";
        } else {
            for (std::size_t i = 0; i < v.size(); ++i)
                text_rec(v[i], path + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out += path + " = " + scalar_literal(v) + "\n";
    }
}

} // namespace

ExtendedPoint parse_point(const ordered_json& v) {
    if (v.is_string()) {
        if (v.get<std::string>() == "inf") return ExtendedPoint::infinity();
        throw parse_error("point: the only string form is \"inf\", got " + v.dump());
    }
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw parse_error("point: expected [re, im] or \"inf\", got " + v.dump());
    const double re = v[0].get<double>(), im = v[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
        throw parse_error("point: coordinates must be finite");
    return ExtendedPoint(re, im);
}

ordered_json point_json(const ExtendedPoint& p) {
    if (p.inf) return "inf";
    return ordered_json::array({p.value.real(), p.value.imag()});
}

PointDocument parse_point_document(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::detail::exception& e) {
        throw parse_error(std::string("document: ") + e.what());
    }
    if (!doc.is_object())
        throw parse_error("document: top level must be an object");
    PointDocument out;
    if (doc.contains("points")) {
        if (!doc["points"].is_object())
            throw parse_error("document: \"points\" must be an object");
        for (const auto& [name, val] : doc["points"].items())
            out.points.emplace(name, parse_point(val));
    }
    if (doc.contains("metadata")) {
        if (!doc["metadata"].is_object())
            throw parse_error("document: \"metadata\" must be an object");
        for (const auto& [name, val] : doc["metadata"].items()) {
            if (!val.is_string())
                throw parse_error("document: metadata values must be strings");
            out.metadata.emplace(name, val.get<std::string>());
        }
    }
    return out;
}

std::string dump_json(const ordered_json& v, int indent) {
    std::string out;
    dump_rec(v, indent, 0, out);
    out += "\n";
    return out;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (const char ch : s) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_string(std::string_view payload) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                  static_cast<unsigned long long>(fnv1a64(payload)));
    return buf;
}

ordered_json run_manifest(const std::string& command, ordered_json inputs,
                          std::uint64_t seed, std::uint64_t budget,
                          std::string_view outputs_payload) {
    ordered_json m;
    m["command"] = command;
    m["inputs"] = std::move(inputs);
    m["seed"] = seed;
    m["budget"] = budget;
    m["tool_version"] = "1.0.0";
    m["outputs_digest"] = digest_string(outputs_payload);
    return m;
}

std::string render_text(const ordered_json& v) {
    std::string out;
    text_rec(v, "", out);
    return out;
}

} // namespace moebsym
