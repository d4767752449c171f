#include "dcreid/image.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <string>

#include "dcreid/errors.hpp"

namespace dcreid {

ImageBuffer make_image(int width, int height, Rgb fill) {
  if (width <= 0 || height <= 0) throw ArgumentError("make_image: dimensions must be positive");
  ImageBuffer img;
  img.width = width;
  img.height = height;
  img.pixels.assign(static_cast<std::size_t>(width) * height, fill);
  return img;
}

ImageBuffer decode_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6')
    throw DecodeError("ppm: bad magic at byte offset 0 (want \"P6\")");

  std::size_t pos = 2;
  // header tokens are whitespace separated; '#' comments run to end of line
  auto skip = [&] {
    while (pos < bytes.size()) {
      std::uint8_t c = bytes[pos];
      if (c == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(c)) {
        ++pos;
      } else {
        break;
      }
    }
  };
  auto read_int = [&](const char* what) {
    skip();
    if (pos >= bytes.size() || !std::isdigit(bytes[pos]))
      throw DecodeError(std::string("ppm: expected ") + what + " at byte offset " +
                        std::to_string(pos));
    long value = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      value = value * 10 + (bytes[pos] - '0');
      if (value > 1'000'000'000)
        throw DecodeError(std::string("ppm: ") + what + " overflows at byte offset " +
                          std::to_string(pos));
      ++pos;
    }
    return static_cast<int>(value);
  };

  const int width = read_int("width");
  const int height = read_int("height");
  const int maxval = read_int("maxval");
  if (width <= 0 || height <= 0)
    throw DecodeError("ppm: non-positive dimensions at byte offset " + std::to_string(pos));
  if (maxval != 255)
    throw DecodeError("ppm: unsupported maxval " + std::to_string(maxval) +
                      " at byte offset " + std::to_string(pos) + " (want 255)");
  if (pos >= bytes.size() || !std::isspace(bytes[pos]))
    throw DecodeError("ppm: expected whitespace before pixel data at byte offset " +
                      std::to_string(pos));
  ++pos;

  const std::size_t need = static_cast<std::size_t>(width) * height * 3;
  if (bytes.size() - pos < need)
    throw DecodeError("ppm: truncated pixel payload at byte offset " + std::to_string(bytes.size()) +
                      " (need " + std::to_string(pos + need) + " bytes)");

  ImageBuffer img;
  img.width = width;
  img.height = height;
  img.pixels.resize(static_cast<std::size_t>(width) * height);
  std::memcpy(img.pixels.data(), bytes.data() + pos, need);
  return img;
}

std::vector<std::uint8_t> encode_ppm(const ImageBuffer& img) {
  std::string header = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) +
                       "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const auto* raw = reinterpret_cast<const std::uint8_t*>(img.pixels.data());
  out.insert(out.end(), raw, raw + img.pixels.size() * 3);
  return out;
}

ImageBuffer read_ppm_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open image file: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
  try {
    return decode_ppm(bytes);
  } catch (const DecodeError& e) {
    throw DecodeError(path + ": " + e.what());
  }
}

void write_ppm_file(const std::string& path, const ImageBuffer& img) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write image file: " + path);
  auto bytes = encode_ppm(img);
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

ImageBuffer resize_nearest(const ImageBuffer& img, int width, int height) {
  if (width <= 0 || height <= 0)
    throw ArgumentError("resize_nearest: target dimensions must be positive");
  ImageBuffer out;
  out.width = width;
  out.height = height;
  out.pixels.resize(static_cast<std::size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    const int sy = static_cast<int>(static_cast<std::int64_t>(y) * img.height / height);
    for (int x = 0; x < width; ++x) {
      const int sx = static_cast<int>(static_cast<std::int64_t>(x) * img.width / width);
      out.at(x, y) = img.at(sx, sy);
    }
  }
  return out;
}

ForegroundMask resize_nearest(const ForegroundMask& mask, int width, int height) {
  if (width <= 0 || height <= 0)
    throw ArgumentError("resize_nearest: target dimensions must be positive");
  ForegroundMask out;
  out.width = width;
  out.height = height;
  out.bits.resize(static_cast<std::size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    const int sy = static_cast<int>(static_cast<std::int64_t>(y) * mask.height / height);
    for (int x = 0; x < width; ++x) {
      const int sx = static_cast<int>(static_cast<std::int64_t>(x) * mask.width / width);
      out.bits[static_cast<std::size_t>(y) * width + x] =
          mask.bits[static_cast<std::size_t>(sy) * mask.width + sx];
    }
  }
  return out;
}

ForegroundMask full_mask(int width, int height) {
  if (width <= 0 || height <= 0) throw ArgumentError("full_mask: dimensions must be positive");
  ForegroundMask mask;
  mask.width = width;
  mask.height = height;
  mask.bits.assign(static_cast<std::size_t>(width) * height, 1);
  return mask;
}

ForegroundMask decode_mask_ppm(std::span<const std::uint8_t> bytes) {
  ImageBuffer img = decode_ppm(bytes);
  ForegroundMask mask;
  mask.width = img.width;
  mask.height = img.height;
  mask.bits.resize(img.pixels.size());
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    const Rgb& p = img.pixels[i];
    mask.bits[i] = (p.r || p.g || p.b) ? 1 : 0;
  }
  return mask;
}

}  // namespace dcreid
