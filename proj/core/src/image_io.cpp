#include "dixkit/image_io.hpp"

#include "dixkit/error.hpp"

#include <fmt/format.h>

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <csetjmp>
#include <cstdio>
#include <fstream>
#include <memory>
#include <vector>

// jpeglib.h needs FILE and size_t declared first.
#include <jpeglib.h>

namespace dixkit::io {

namespace fs = std::filesystem;

namespace {

struct FileCloser {
    void operator()(std::FILE *f) const noexcept {
        if (f != nullptr) {
            std::fclose(f);
        }
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const fs::path &path, const char *mode) {
    FilePtr f(std::fopen(path.string().c_str(), mode));
    if (!f) {
        throw DataError(fmt::format("cannot open '{}'", path.string()));
    }
    return f;
}

Image read_png(const fs::path &path) {
    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    if (png_image_begin_read_from_file(&image, path.string().c_str()) == 0) {
        throw DataError(fmt::format("cannot decode PNG '{}': {}", path.string(), image.message));
    }
    if ((image.format & PNG_FORMAT_FLAG_LINEAR) != 0) {
        png_image_free(&image);
        throw DataError(fmt::format("'{}' is a 16-bit PNG; only 8-bit images are supported", path.string()));
    }
    const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
    image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    const std::size_t channels = color ? 3 : 1;
    std::vector<std::uint8_t> data(PNG_IMAGE_SIZE(image));
    if (png_image_finish_read(&image, nullptr, data.data(), 0, nullptr) == 0) {
        throw DataError(fmt::format("cannot decode PNG '{}': {}", path.string(), image.message));
    }
    return Image(image.width, image.height, channels, std::move(data));
}

struct JpegErrorManager {
    jpeg_error_mgr base;
    std::jmp_buf jump;
    std::array<char, JMSG_LENGTH_MAX> message;
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto *err = reinterpret_cast<JpegErrorManager *>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, err->message.data());
    std::longjmp(err->jump, 1);
}

// setjmp/longjmp across these two functions only touches C structs and raw
// buffers, so no destructors are skipped.
bool decode_jpeg(std::FILE *file, std::vector<std::uint8_t> &data, std::size_t &width, std::size_t &height,
                 std::size_t &channels, std::string &message) {
    jpeg_decompress_struct cinfo{};
    JpegErrorManager err{};
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_exit;
    if (setjmp(err.jump) != 0) {
        jpeg_destroy_decompress(&cinfo);
        message = err.message.data();
        return false;
    }
    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, file);
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = cinfo.num_components == 1 ? JCS_GRAYSCALE : JCS_RGB;
    jpeg_start_decompress(&cinfo);
    width = cinfo.output_width;
    height = cinfo.output_height;
    channels = static_cast<std::size_t>(cinfo.output_components);
    data.resize(width * height * channels);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = data.data() + static_cast<std::size_t>(cinfo.output_scanline) * width * channels;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return true;
}

Image read_jpeg(const fs::path &path) {
    FilePtr file = open_file(path, "rb");
    std::vector<std::uint8_t> data;
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t channels = 0;
    std::string message;
    if (!decode_jpeg(file.get(), data, width, height, channels, message)) {
        throw DataError(fmt::format("cannot decode JPEG '{}': {}", path.string(), message));
    }
    return Image(width, height, channels, std::move(data));
}

bool encode_jpeg(std::FILE *file, const Image &img, int quality, std::string &message) {
    jpeg_compress_struct cinfo{};
    JpegErrorManager err{};
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_exit;
    if (setjmp(err.jump) != 0) {
        jpeg_destroy_compress(&cinfo);
        message = err.message.data();
        return false;
    }
    jpeg_create_compress(&cinfo);
    jpeg_stdio_dest(&cinfo, file);
    cinfo.image_width = static_cast<JDIMENSION>(img.width());
    cinfo.image_height = static_cast<JDIMENSION>(img.height());
    cinfo.input_components = static_cast<int>(img.channels());
    cinfo.in_color_space = img.channels() == 1 ? JCS_GRAYSCALE : JCS_RGB;
    jpeg_set_defaults(&cinfo);
    jpeg_set_quality(&cinfo, quality, TRUE);
    jpeg_start_compress(&cinfo, TRUE);
    const std::size_t stride = img.width() * img.channels();
    while (cinfo.next_scanline < cinfo.image_height) {
        // libjpeg takes non-const rows but never writes through them
        auto *row = const_cast<JSAMPLE *>(img.data().data() + static_cast<std::size_t>(cinfo.next_scanline) * stride);
        jpeg_write_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_compress(&cinfo);
    jpeg_destroy_compress(&cinfo);
    return true;
}

std::string lower_extension(const fs::path &path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

}  // namespace

Image read_image(const fs::path &path) {
    std::array<unsigned char, 8> signature{};
    {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw DataError(fmt::format("cannot open image '{}'", path.string()));
        }
        in.read(reinterpret_cast<char *>(signature.data()), signature.size());
        if (in.gcount() < 3) {
            throw DataError(fmt::format("'{}' is too short to be an image", path.string()));
        }
    }
    if (png_sig_cmp(signature.data(), 0, signature.size()) == 0) {
        return read_png(path);
    }
    if (signature[0] == 0xFF && signature[1] == 0xD8 && signature[2] == 0xFF) {
        return read_jpeg(path);
    }
    throw DataError(fmt::format("'{}' is neither PNG nor JPEG", path.string()));
}

void write_png(const fs::path &path, const Image &img) {
    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(img.width());
    image.height = static_cast<png_uint_32>(img.height());
    image.format = img.channels() == 1 ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
    if (png_image_write_to_file(&image, path.string().c_str(), 0, img.data().data(), 0, nullptr) == 0) {
        throw DataError(fmt::format("cannot write PNG '{}': {}", path.string(), image.message));
    }
}

void write_jpeg(const fs::path &path, const Image &img, int quality) {
    FilePtr file = open_file(path, "wb");
    std::string message;
    if (!encode_jpeg(file.get(), img, std::clamp(quality, 1, 100), message)) {
        throw DataError(fmt::format("cannot write JPEG '{}': {}", path.string(), message));
    }
}

void write_image(const fs::path &path, const Image &img) {
    const std::string ext = lower_extension(path);
    if (ext == ".png") {
        write_png(path, img);
    } else if (ext == ".jpg" || ext == ".jpeg") {
        write_jpeg(path, img);
    } else {
        throw InvalidArgument(fmt::format("unsupported image extension '{}'", ext));
    }
}

}  // namespace dixkit::io
