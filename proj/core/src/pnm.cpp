#include "lipgroove/pnm.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace lipgroove {

namespace {

bool is_pnm_space(int c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class Cursor {
public:
    explicit Cursor(std::string_view data) : data_(data) {}

    bool eof() const { return pos_ >= data_.size(); }
    int peek() const { return eof() ? -1 : static_cast<unsigned char>(data_[pos_]); }
    int take() { return eof() ? -1 : static_cast<unsigned char>(data_[pos_++]); }

    void skip_space_and_comments() {
        while (!eof()) {
            int c = peek();
            if (c == '#') {
                while (!eof() && take() != '\n') {
                }
            } else if (is_pnm_space(c)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    /// Unsigned decimal token. `kind` selects the error reported when the
    /// token is missing or malformed.
    long read_uint(PnmError::Kind kind, const char* what) {
        skip_space_and_comments();
        if (eof())
            throw PnmError(PnmError::Kind::Truncated,
                           std::string("unexpected end of data while reading ") + what);
        if (peek() < '0' || peek() > '9')
            throw PnmError(kind, std::string("malformed ") + what);
        long value = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + (take() - '0');
            if (value > 1'000'000'000)
                throw PnmError(kind, std::string(what) + " out of range");
        }
        return value;
    }

    std::string_view rest() const { return data_.substr(pos_); }

private:
    std::string_view data_;
    std::size_t pos_ = 0;
};

}  // namespace

PnmImage load_pnm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P')
        throw PnmError(PnmError::Kind::BadMagic, "not a PNM file");
    char magic = bytes[1];
    if (magic != '2' && magic != '3' && magic != '5' && magic != '6')
        throw PnmError(PnmError::Kind::BadMagic,
                       std::string("unsupported PNM magic P") + magic);
    bool color = magic == '3' || magic == '6';
    bool binary = magic == '5' || magic == '6';

    Cursor cur(bytes.substr(2));
    long width = cur.read_uint(PnmError::Kind::BadDimensions, "width");
    long height = cur.read_uint(PnmError::Kind::BadDimensions, "height");
    if (width <= 0 || height <= 0)
        throw PnmError(PnmError::Kind::BadDimensions, "dimensions must be positive");
    long maxval = cur.read_uint(PnmError::Kind::BadHeader, "maxval");
    if (maxval != 255)
        throw PnmError(PnmError::Kind::UnsupportedMaxval,
                       "maxval " + std::to_string(maxval) + " unsupported (need 255)");

    std::size_t channels = color ? 3 : 1;
    std::size_t count = static_cast<std::size_t>(width) * height * channels;
    std::vector<std::uint8_t> samples(count);

    if (binary) {
        // Exactly one whitespace byte separates the maxval from the payload.
        if (cur.eof())
            throw PnmError(PnmError::Kind::Truncated, "missing payload");
        if (!is_pnm_space(cur.peek()))
            throw PnmError(PnmError::Kind::BadHeader,
                           "expected whitespace before binary payload");
        cur.take();
        std::string_view payload = cur.rest();
        if (payload.size() < count)
            throw PnmError(PnmError::Kind::Truncated,
                           "payload holds " + std::to_string(payload.size()) +
                               " bytes, need " + std::to_string(count));
        for (std::size_t i = 0; i < count; ++i)
            samples[i] = static_cast<std::uint8_t>(payload[i]);
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            long v = cur.read_uint(PnmError::Kind::BadSample, "sample");
            if (v > maxval)
                throw PnmError(PnmError::Kind::BadSample,
                               "sample " + std::to_string(v) + " exceeds maxval");
            samples[i] = static_cast<std::uint8_t>(v);
        }
    }

    int w = static_cast<int>(width), h = static_cast<int>(height);
    if (!color)
        return GrayImage(w, h, std::move(samples));
    std::vector<Rgb> px(static_cast<std::size_t>(w) * h);
    for (std::size_t i = 0; i < px.size(); ++i)
        px[i] = Rgb{samples[3 * i], samples[3 * i + 1], samples[3 * i + 2]};
    return RgbImage(w, h, std::move(px));
}

std::string save_pgm(const GrayImage& r) {
    std::string out = "P5\n" + std::to_string(r.width()) + " " +
                      std::to_string(r.height()) + "\n255\n";
    out.reserve(out.size() + r.size());
    for (auto v : r.pixels()) out.push_back(static_cast<char>(v));
    return out;
}

PnmImage load_pnm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof())
        throw Error("read failure on " + path.string());
    return load_pnm(buf.str());
}

void save_pgm_file(const GrayImage& r, const std::filesystem::path& path) {
    std::string bytes = save_pgm(r);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot open " + path.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw Error("write failure on " + path.string());
}

}  // namespace lipgroove
