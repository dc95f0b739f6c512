#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "lipgroove/raster.hpp"

namespace lipgroove {

class PnmError : public Error {
public:
    enum class Kind {
        BadMagic,
        BadHeader,
        BadDimensions,
        UnsupportedMaxval,
        Truncated,
        BadSample,
    };

    PnmError(Kind kind, const std::string& msg) : Error(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

using PnmImage = std::variant<GrayImage, RgbImage>;

/// Parses P2/P5 (grayscale) or P3/P6 (color) with maxval 255. Header
/// comments (`#` to end of line) are accepted; ASCII payloads may carry
/// comments too. Binary payloads start after the single whitespace byte
/// that follows the maxval.
PnmImage load_pnm(std::string_view bytes);

/// Emits binary P5: "P5\n<w> <h>\n255\n" followed by w*h payload bytes.
/// load_pnm(save_pgm(r)) reproduces r bit-exactly.
std::string save_pgm(const GrayImage& r);

PnmImage load_pnm_file(const std::filesystem::path& path);
void save_pgm_file(const GrayImage& r, const std::filesystem::path& path);

}  // namespace lipgroove
