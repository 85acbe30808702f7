/**
 * Copyright 2026 The uniaug Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "uniaug/codec.hpp"

#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>

#include <jpeglib.h>

namespace uniaug {
namespace {

bool looks_like_png(const std::vector<uint8_t> &bytes) {
  static const uint8_t magic[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
  return bytes.size() >= 8 && std::memcmp(bytes.data(), magic, 8) == 0;
}

bool looks_like_jpeg(const std::vector<uint8_t> &bytes) {
  return bytes.size() >= 3 && bytes[0] == 0xFF && bytes[1] == 0xD8 && bytes[2] == 0xFF;
}

// Alpha is dropped, not composited: decode as RGBA and strip the A byte.
Image decode_png(const std::vector<uint8_t> &bytes, const std::string &name) {
  png_image png;
  std::memset(&png, 0, sizeof png);
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&png, bytes.data(), bytes.size())) {
    throw DecodeError(name, std::string("png: ") + png.message);
  }
  png.format = PNG_FORMAT_RGBA;
  std::vector<uint8_t> rgba(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, rgba.data(), 0, nullptr)) {
    const std::string message = png.message;
    png_image_free(&png);
    throw DecodeError(name, "png: " + message);
  }
  Image img(static_cast<int>(png.width), static_cast<int>(png.height));
  const uint8_t *src = rgba.data();
  uint8_t *dst = img.data.data();
  for (size_t i = 0, n = img.pixel_count(); i < n; ++i, src += 4, dst += 3) {
    dst[0] = src[0];
    dst[1] = src[1];
    dst[2] = src[2];
  }
  return img;
}

struct JpegErrorTrap {
  jpeg_error_mgr pub;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

void jpeg_error_trap(j_common_ptr cinfo) {
  auto *trap = reinterpret_cast<JpegErrorTrap *>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, trap->message);
  std::longjmp(trap->jump, 1);
}

Image decode_jpeg(const std::vector<uint8_t> &bytes, const std::string &name) {
  jpeg_decompress_struct cinfo;
  JpegErrorTrap trap;
  cinfo.err = jpeg_std_error(&trap.pub);
  trap.pub.error_exit = &jpeg_error_trap;
  trap.message[0] = '\0';

  Image img;
  if (setjmp(trap.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw DecodeError(name, std::string("jpeg: ") + trap.message);
  }
  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);
  img = Image(static_cast<int>(cinfo.output_width), static_cast<int>(cinfo.output_height));
  const size_t stride = static_cast<size_t>(img.width) * 3;
  while (cinfo.output_scanline < cinfo.output_height) {
    uint8_t *row = img.data.data() + static_cast<size_t>(cinfo.output_scanline) * stride;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return img;
}

}  // namespace

Image decode_image(const std::vector<uint8_t> &bytes, const std::string &name) {
  if (looks_like_png(bytes)) {
    return decode_png(bytes, name);
  }
  if (looks_like_jpeg(bytes)) {
    return decode_jpeg(bytes, name);
  }
  throw DecodeError(name, "unsupported container (expected PNG or JPEG)");
}

Image load_image(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DecodeError(path, "cannot open file");
  }
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return decode_image(bytes, path);
}

std::vector<uint8_t> encode_image(const Image &image) {
  require_nonempty(image);
  png_image png;
  std::memset(&png, 0, sizeof png);
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(image.width);
  png.height = static_cast<png_uint_32>(image.height);
  png.format = PNG_FORMAT_RGB;

  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&png, nullptr, &size, 0, image.data.data(), 0, nullptr)) {
    throw InputError(std::string("png encode size query failed: ") + png.message);
  }
  std::vector<uint8_t> out(size);
  if (!png_image_write_to_memory(&png, out.data(), &size, 0, image.data.data(), 0, nullptr)) {
    throw InputError(std::string("png encode failed: ") + png.message);
  }
  out.resize(size);
  return out;
}

void save_image(const Image &image, const std::string &path) {
  const auto bytes = encode_image(image);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw InputError("cannot open output file: " + path);
  }
  out.write(reinterpret_cast<const char *>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw InputError("short write: " + path);
  }
}

}  // namespace uniaug
