#pragma once

#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "stieltjeskit/numerics.hpp"
#include "stieltjeskit/version.hpp"

namespace skit {

using ordered_json = nlohmann::ordered_json;

enum class Format { json, csv, plain };

/// Round-half-even decimal rendering at a fixed digit count; numbers are
/// carried as strings end to end so output is byte-identical across runs.
inline std::string render(const sk::BigReal& x, int digits) {
    return x.str(digits, std::ios_base::scientific);
}

inline std::string render(const sk::BigComplex& z, int digits) {
    return render(z.re, digits) + (z.im < 0 ? " - " : " + ") + render(abs(z.im), digits) + "i";
}

inline ordered_json make_meta(int precision) {
    return ordered_json{{"version", sk::kVersion}, {"precision", precision}};
}

inline void emit_csv(const ordered_json& meta, const ordered_json& data, std::ostream& os) {
    for (auto& [key, value] : meta.items())
        os << "# " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump())
           << "\n";
    auto cell = [](const ordered_json& v) {
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    if (data.is_array() && !data.empty() && data[0].is_object()) {
        bool first = true;
        for (auto& [key, value] : data[0].items()) {
            os << (first ? "" : ",") << key;
            first = false;
        }
        os << "\n";
        for (auto& row : data) {
            first = true;
            for (auto& [key, value] : row.items()) {
                os << (first ? "" : ",") << cell(value);
                first = false;
            }
            os << "\n";
        }
    } else if (data.is_object()) {
        os << "key,value\n";
        for (auto& [key, value] : data.items()) os << key << "," << cell(value) << "\n";
    } else {
        os << cell(data) << "\n";
    }
}

inline void emit_plain(const ordered_json& meta, const ordered_json& data, std::ostream& os) {
    os << "skit " << meta["version"].get<std::string>() << ", precision "
       << meta["precision"].dump();
    for (auto& [key, value] : meta.items()) {
        if (key == "version" || key == "precision") continue;
        os << ", " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
    }
    os << "\n";
    auto cell = [](const ordered_json& v) {
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    if (data.is_array()) {
        for (auto& row : data) {
            if (row.is_object()) {
                bool first = true;
                for (auto& [key, value] : row.items()) {
                    os << (first ? "" : "  ") << key << "=" << cell(value);
                    first = false;
                }
                os << "\n";
            } else {
                os << cell(row) << "\n";
            }
        }
    } else if (data.is_object()) {
        for (auto& [key, value] : data.items()) os << key << " = " << cell(value) << "\n";
    } else {
        os << cell(data) << "\n";
    }
}

/// Single exit point for all output: a top-level {meta, data} object.
inline void emit(const ordered_json& meta, const ordered_json& data, Format format,
                 std::ostream& os = std::cout) {
    switch (format) {
        case Format::json: os << ordered_json{{"meta", meta}, {"data", data}}.dump(2) << "\n"; break;
        case Format::csv: emit_csv(meta, data, os); break;
        case Format::plain: emit_plain(meta, data, os); break;
    }
}

}  // namespace skit
