#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lipgroove/features.hpp"

namespace lipgroove {

class TemplateFormatError : public Error {
public:
    enum class Kind {
        BadMagic,
        UnsupportedVersion,
        BadHeader,
        BadDims,
        MalformedMap,  ///< map line with the wrong length
        BadMapChar,    ///< map line with characters other than '0'/'1'
        Truncated,
        TrailingData,
    };

    TemplateFormatError(Kind kind, int line, const std::string& msg)
        : Error(msg), kind_(kind), line_(line) {}

    Kind kind() const { return kind_; }
    /// 1-based line number the error was detected on (0 when not line-specific).
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

/// Canonical line-oriented text encoding (LF only):
///   LIPT 1
///   id <id>
///   ratios <r1> <r2>        (9 significant digits, '.' decimal point)
///   dims 128 64
///   64 lines of 128 '0'/'1' characters (h_map, top row first)
///   64 lines of 128 '0'/'1' characters (v_map)
std::string serialize_template(const Template& t);

/// Exact inverse of serialize_template (ratios within 1e-8);
/// re-serializing the parse result is byte-identical.
Template parse_template(std::string_view bytes);

/// Writes `<store_dir>/<id>.lipt` atomically (temp file + rename). The id
/// must sanitize to a filename: alphanumerics, '-' and '_' only.
void enroll(const std::filesystem::path& store_dir, const Template& t,
            bool overwrite = false);

/// Parses every *.lipt file in the store, sorted by id ascending. A
/// malformed file aborts the load with its filename in the error.
std::vector<Template> load_all(const std::filesystem::path& store_dir);

}  // namespace lipgroove
