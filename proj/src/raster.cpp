#include "ocr/raster.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>

#include "ocr/kernels.hpp"

namespace ocr {

namespace {

// Header scanner for the Netpbm token syntax: tokens separated by whitespace,
// '#' starts a comment running to end of line.
struct TokenReader {
    const std::vector<std::uint8_t>& data;
    size_t pos = 0;

    explicit TokenReader(const std::vector<std::uint8_t>& d) : data(d) {}

    void skip_space_and_comments() {
        while (pos < data.size()) {
            std::uint8_t c = data[pos];
            if (c == '#') {
                while (pos < data.size() && data[pos] != '\n') pos++;
            } else if (std::isspace(c)) {
                pos++;
            } else {
                break;
            }
        }
    }

    // Reads a nonnegative decimal integer token.
    long next_int(const char* what) {
        skip_space_and_comments();
        if (pos >= data.size() || !std::isdigit(data[pos]))
            throw Error(ErrorKind::TruncatedData, std::string("pgm: missing ") + what);
        long v = 0;
        while (pos < data.size() && std::isdigit(data[pos])) {
            v = v * 10 + (data[pos] - '0');
            if (v > 1'000'000'000) throw Error(ErrorKind::ParseError, "pgm: absurd integer in header");
            pos++;
        }
        return v;
    }
};

} // namespace

GrayImage load_pgm(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 2) throw Error(ErrorKind::BadMagic, "pgm: stream too short for magic");
    const char m0 = static_cast<char>(bytes[0]);
    const char m1 = static_cast<char>(bytes[1]);
    if (m0 != 'P' || (m1 != '2' && m1 != '5'))
        throw Error(ErrorKind::BadMagic, "pgm: expected magic P2 or P5");
    const bool binary = m1 == '5';

    TokenReader tr(bytes);
    tr.pos = 2;
    long w = tr.next_int("width");
    long h = tr.next_int("height");
    long maxval = tr.next_int("maxval");
    if (w < 1 || h < 1) throw Error(ErrorKind::ParseError, "pgm: non-positive dimensions");
    if (maxval < 1) throw Error(ErrorKind::ParseError, "pgm: non-positive maxval");
    if (maxval > 255) throw Error(ErrorKind::MaxvalUnsupported, "pgm: maxval > 255 unsupported");

    GrayImage img(static_cast<int>(w), static_cast<int>(h));
    const size_t n = img.size();

    if (binary) {
        // Exactly one whitespace byte separates maxval from the raster.
        if (tr.pos >= bytes.size() || !std::isspace(bytes[tr.pos]))
            throw Error(ErrorKind::TruncatedData, "pgm: missing raster separator");
        tr.pos++;
        if (bytes.size() - tr.pos < n)
            throw Error(ErrorKind::TruncatedData, "pgm: fewer samples than width*height");
        for (size_t i = 0; i < n; i++) img.samples[i] = bytes[tr.pos + i];
    } else {
        for (size_t i = 0; i < n; i++) {
            long v = tr.next_int("sample");
            if (v > maxval) throw Error(ErrorKind::ParseError, "pgm: sample exceeds maxval");
            img.samples[i] = static_cast<std::uint8_t>(v);
        }
    }
    return img;
}

std::vector<std::uint8_t> save_pgm(const GrayImage& img) {
    char header[64];
    int len = std::snprintf(header, sizeof(header), "P5\n%d %d\n255\n", img.width, img.height);
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<size_t>(len) + img.size());
    out.insert(out.end(), header, header + len);
    out.insert(out.end(), img.samples.begin(), img.samples.end());
    return out;
}

GrayImage load_pgm_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::IoError, "cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    return load_pgm(bytes);
}

void save_pgm_file(const GrayImage& img, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
    auto bytes = save_pgm(img);
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw Error(ErrorKind::IoError, "short write to " + path);
}

GrayImage to_gray(const BinaryImage& img) {
    GrayImage g(img.width, img.height, 255);
    for (size_t i = 0; i < img.size(); i++)
        if (img.mask[i]) g.samples[i] = 0;
    return g;
}

Projection horizontal_projection(const BinaryImage& img) {
    return kernels::horizontal_projection(img);
}

Projection vertical_projection(const BinaryImage& img) {
    return kernels::vertical_projection(img);
}

} // namespace ocr
