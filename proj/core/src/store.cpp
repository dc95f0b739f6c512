#include "lipgroove/store.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace lipgroove {

namespace {

using Kind = TemplateFormatError::Kind;

constexpr std::string_view kMagic = "LIPT 1";

std::string format_ratio(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 9);
    if (ec != std::errc())
        throw Error("ratio formatting failed");
    return std::string(buf, end);
}

void append_map(std::string& out, const BinaryMap& map) {
    for (int y = 0; y < map.height(); ++y) {
        for (int x = 0; x < map.width(); ++x)
            out.push_back(map.get(x, y) ? '1' : '0');
        out.push_back('\n');
    }
}

class LineReader {
public:
    explicit LineReader(std::string_view data) : data_(data) {}

    std::string_view next(const char* what) {
        if (pos_ >= data_.size())
            throw TemplateFormatError(Kind::Truncated, line_ + 1,
                                      std::string("missing ") + what);
        auto nl = data_.find('\n', pos_);
        if (nl == std::string_view::npos)
            throw TemplateFormatError(Kind::Truncated, line_ + 1,
                                      std::string(what) + " line not terminated by LF");
        std::string_view line = data_.substr(pos_, nl - pos_);
        pos_ = nl + 1;
        ++line_;
        return line;
    }

    bool at_end() const { return pos_ >= data_.size(); }
    int line() const { return line_; }

private:
    std::string_view data_;
    std::size_t pos_ = 0;
    int line_ = 0;
};

double parse_ratio(std::string_view token, int line) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() ||
        !std::isfinite(v) || v <= 0.0)
        throw TemplateFormatError(Kind::BadHeader, line,
                                  "ratios must be finite positive decimals");
    return v;
}

BinaryMap parse_map(LineReader& reader, const char* name) {
    BinaryMap map(kTemplateMapWidth, kTemplateMapHeight);
    for (int y = 0; y < kTemplateMapHeight; ++y) {
        std::string_view line = reader.next(name);
        if (line.size() != kTemplateMapWidth)
            throw TemplateFormatError(
                Kind::MalformedMap, reader.line(),
                "line " + std::to_string(reader.line()) + ": expected " +
                    std::to_string(kTemplateMapWidth) + " map characters, got " +
                    std::to_string(line.size()));
        for (int x = 0; x < kTemplateMapWidth; ++x) {
            char c = line[x];
            if (c != '0' && c != '1')
                throw TemplateFormatError(
                    Kind::BadMapChar, reader.line(),
                    "line " + std::to_string(reader.line()) +
                        ": map characters must be '0' or '1'");
            map.set(x, y, c == '1');
        }
    }
    return map;
}

void validate_template(const Template& t) {
    if (t.id.empty())
        throw InvalidIdError("template id must be non-empty");
    for (unsigned char c : t.id)
        if (std::iscntrl(c))
            throw InvalidIdError("template id must not contain control characters");
    if (t.h_map.width() != kTemplateMapWidth || t.h_map.height() != kTemplateMapHeight ||
        t.v_map.width() != kTemplateMapWidth || t.v_map.height() != kTemplateMapHeight)
        throw InvalidArgument("template maps must be 128x64");
    if (!(t.ratios.upper_lower_height_ratio > 0.0) ||
        !(t.ratios.upper_height_width_ratio > 0.0) ||
        !std::isfinite(t.ratios.upper_lower_height_ratio) ||
        !std::isfinite(t.ratios.upper_height_width_ratio))
        throw InvalidArgument("template ratios must be finite and positive");
}

bool id_is_filename_safe(const std::string& id) {
    if (id.empty()) return false;
    for (unsigned char c : id)
        if (!std::isalnum(c) && c != '-' && c != '_') return false;
    return true;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw StoreError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

}  // namespace

std::string serialize_template(const Template& t) {
    validate_template(t);
    std::string out;
    out.reserve(16 * 1024 + 256);
    out += kMagic;
    out += "\nid ";
    out += t.id;
    out += "\nratios ";
    out += format_ratio(t.ratios.upper_lower_height_ratio);
    out += ' ';
    out += format_ratio(t.ratios.upper_height_width_ratio);
    out += "\ndims ";
    out += std::to_string(kTemplateMapWidth) + " " + std::to_string(kTemplateMapHeight);
    out += '\n';
    append_map(out, t.h_map);
    append_map(out, t.v_map);
    return out;
}

Template parse_template(std::string_view bytes) {
    LineReader reader(bytes);

    std::string_view magic = reader.next("magic");
    if (magic != kMagic) {
        if (magic.starts_with("LIPT "))
            throw TemplateFormatError(Kind::UnsupportedVersion, 1,
                                      "unsupported template version: " + std::string(magic));
        throw TemplateFormatError(Kind::BadMagic, 1, "not a LIPT template");
    }

    std::string_view id_line = reader.next("id");
    if (!id_line.starts_with("id ") || id_line.size() <= 3)
        throw TemplateFormatError(Kind::BadHeader, 2, "expected 'id <id>'");
    std::string id(id_line.substr(3));
    for (unsigned char c : id)
        if (std::iscntrl(c))
            throw TemplateFormatError(Kind::BadHeader, 2,
                                      "id contains control characters");

    std::string_view ratio_line = reader.next("ratios");
    if (!ratio_line.starts_with("ratios "))
        throw TemplateFormatError(Kind::BadHeader, 3, "expected 'ratios <r1> <r2>'");
    std::string_view rest = ratio_line.substr(7);
    auto space = rest.find(' ');
    if (space == std::string_view::npos)
        throw TemplateFormatError(Kind::BadHeader, 3, "expected two ratio values");
    double r1 = parse_ratio(rest.substr(0, space), 3);
    double r2 = parse_ratio(rest.substr(space + 1), 3);

    std::string_view dims_line = reader.next("dims");
    std::string expected_dims = "dims " + std::to_string(kTemplateMapWidth) + " " +
                                std::to_string(kTemplateMapHeight);
    if (dims_line != expected_dims)
        throw TemplateFormatError(Kind::BadDims, 4,
                                  "expected '" + expected_dims + "', got '" +
                                      std::string(dims_line) + "'");

    Template t;
    t.id = std::move(id);
    t.ratios = LipRatios{r1, r2};
    t.h_map = parse_map(reader, "h_map");
    t.v_map = parse_map(reader, "v_map");

    if (!reader.at_end())
        throw TemplateFormatError(Kind::TrailingData, reader.line() + 1,
                                  "unexpected data after the template maps");
    return t;
}

void enroll(const std::filesystem::path& store_dir, const Template& t, bool overwrite) {
    validate_template(t);
    if (!id_is_filename_safe(t.id))
        throw InvalidIdError("id '" + t.id +
                             "' not enrollable: allowed characters are [A-Za-z0-9_-]");

    std::error_code ec;
    std::filesystem::create_directories(store_dir, ec);
    if (ec)
        throw StoreError("cannot create store directory " + store_dir.string() + ": " +
                         ec.message());

    std::filesystem::path target = store_dir / (t.id + ".lipt");
    if (!overwrite && std::filesystem::exists(target))
        throw DuplicateIdError("id '" + t.id + "' already enrolled");

    std::mt19937_64 rng{std::random_device{}()};
    char suffix[17];
    std::snprintf(suffix, sizeof(suffix), "%016llx",
                  static_cast<unsigned long long>(rng()));
    std::filesystem::path tmp = store_dir / ("." + t.id + ".tmp-" + suffix);

    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw StoreError("cannot open " + tmp.string() + " for writing");
        std::string bytes = serialize_template(t);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            out.close();
            std::filesystem::remove(tmp, ec);
            throw StoreError("write failure on " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw StoreError("cannot rename " + tmp.string() + " to " + target.string() +
                         ": " + ec.message());
    }
}

std::vector<Template> load_all(const std::filesystem::path& store_dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(store_dir, ec))
        throw StoreError("store directory " + store_dir.string() + " not readable");

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(store_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".lipt")
            files.push_back(entry.path());
    }

    std::vector<Template> templates;
    templates.reserve(files.size());
    for (const auto& path : files) {
        try {
            templates.push_back(parse_template(read_file(path)));
        } catch (const TemplateFormatError& ex) {
            throw TemplateFormatError(ex.kind(), ex.line(),
                                      path.string() + ": " + ex.what());
        }
    }
    std::sort(templates.begin(), templates.end(),
              [](const Template& a, const Template& b) { return a.id < b.id; });
    return templates;
}

}  // namespace lipgroove
