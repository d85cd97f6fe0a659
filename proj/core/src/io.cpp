// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "tribaker/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>

#include <openssl/evp.h>
#include <png.h>

#include "json.hpp"
#include "tribaker/errors.hpp"

namespace tribaker {

static_assert(std::endian::native == std::endian::little,
              "binary formats are written in host order and assume little endian");

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::ofstream open_out(const fs::path& path, bool binary = false) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string());
  }
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

std::ifstream open_in(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

template <typename T>
void put(std::ostream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in, const fs::path& path) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw IoError("truncated file: " + path.string());
  return value;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

void write_reports_csv(const fs::path& path, const std::vector<MeasureReport>& rows) {
  auto out = open_out(path);
  out << "N,R,kind,i,j,sigma,mu,mu_over_N,excluded_fraction\n";
  for (const auto& r : rows) {
    out << r.N << ',' << format_number(r.R) << ',' << to_string(r.kind) << ',' << r.i << ','
        << r.j << ',' << format_number(r.sigma) << ',' << format_number(r.mu) << ','
        << format_number(r.mu_over_N) << ',' << format_number(r.excluded_fraction) << '\n';
  }
  finish(out, path);
}

void write_averages_csv(const fs::path& path, const std::vector<AverageReport>& rows) {
  auto out = open_out(path);
  out << "N,R,kind,j,mu,mu_over_N\n";
  for (const auto& r : rows) {
    out << r.N << ',' << format_number(r.R) << ',' << to_string(r.kind) << ',' << r.j << ','
        << format_number(r.mu) << ',' << format_number(r.mu_over_N) << '\n';
  }
  finish(out, path);
}

void write_spectrum_csv(const fs::path& path, const ResonanceSet& res) {
  auto out = open_out(path);
  out << "index,re,im,abs\n";
  for (int k = 0; k < res.size(); ++k) {
    const auto z = res.eigenvalues(k);
    out << k + 1 << ',' << format_number(z.real()) << ',' << format_number(z.imag()) << ','
        << format_number(std::abs(z)) << '\n';
  }
  finish(out, path);
}

void write_eigenvector_blob(const fs::path& path, const ResonanceSet& res) {
  auto out = open_out(path, true);
  out.write("TBEV", 4);
  put(out, static_cast<std::uint32_t>(res.N));
  put(out, static_cast<std::uint32_t>(res.size()));
  put(out, static_cast<std::uint32_t>(sizeof(double)));
  for (const auto* m : {&res.right, &res.left}) {
    out.write(reinterpret_cast<const char*>(m->data()),
              static_cast<std::streamsize>(m->size() * sizeof(std::complex<double>)));
  }
  finish(out, path);
}

EigenvectorBlob read_eigenvector_blob(const fs::path& path) {
  auto in = open_in(path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::string(magic, 4) != "TBEV") throw IoError("not an eigenvector blob: " + path.string());
  const auto N = get<std::uint32_t>(in, path);
  const auto count = get<std::uint32_t>(in, path);
  if (get<std::uint32_t>(in, path) != sizeof(double)) throw IoError("unsupported precision");
  EigenvectorBlob blob{static_cast<int>(N), Eigen::MatrixXcd(N, count), Eigen::MatrixXcd(N, count)};
  for (auto* m : {&blob.right, &blob.left}) {
    in.read(reinterpret_cast<char*>(m->data()),
            static_cast<std::streamsize>(m->size() * sizeof(std::complex<double>)));
  }
  if (!in) throw IoError("truncated file: " + path.string());
  return blob;
}

namespace {
constexpr char kGridMagic[8] = {'T', 'B', 'G', 'R', 'I', 'D', '1', '\n'};
}

void write_grid_file(const fs::path& path, const PhaseDistribution& dist) {
  const std::size_t n = dist.grid.size();
  if (dist.values.size() != n) throw std::invalid_argument("write_grid_file: size mismatch");
  const json header = {
      {"kind", to_string(dist.kind)},
      {"N", dist.params.N},
      {"R", dist.params.R},
      {"j", dist.params.j},
      {"i", dist.params.i},
      {"n_q", dist.grid.n_q()},
      {"n_p", dist.grid.n_p()},
      {"excluded_count", dist.excluded_count()},
      {"layout", "row-major, q fastest, float64 little endian, then excluded bitmap"},
  };
  const std::string text = header.dump();
  auto out = open_out(path, true);
  out.write(kGridMagic, sizeof kGridMagic);
  put(out, static_cast<std::uint64_t>(text.size()));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.write(reinterpret_cast<const char*>(dist.values.data()),
            static_cast<std::streamsize>(n * sizeof(double)));
  std::vector<std::uint8_t> bitmap((n + 7) / 8, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (dist.is_excluded(k)) bitmap[k / 8] |= static_cast<std::uint8_t>(1u << (k % 8));
  }
  out.write(reinterpret_cast<const char*>(bitmap.data()), static_cast<std::streamsize>(bitmap.size()));
  finish(out, path);
}

PhaseDistribution read_grid_file(const fs::path& path) {
  auto in = open_in(path);
  char magic[8];
  in.read(magic, 8);
  if (!in || !std::equal(magic, magic + 8, kGridMagic)) throw IoError("not a grid file: " + path.string());
  const auto len = get<std::uint64_t>(in, path);
  std::string text(len, '\0');
  in.read(text.data(), static_cast<std::streamsize>(len));
  json header;
  try {
    header = json::parse(text);
  } catch (const json::exception& e) {
    throw IoError("corrupt grid header in " + path.string() + ": " + e.what());
  }
  PhaseDistribution dist;
  dist.grid = PhaseGrid(header.at("n_q").get<int>(), header.at("n_p").get<int>());
  dist.kind = parse_distribution_kind(header.at("kind").get<std::string>());
  dist.params = {header.at("N").get<int>(), header.at("R").get<double>(), header.at("j").get<int>(),
                 header.at("i").get<int>()};
  const std::size_t n = dist.grid.size();
  dist.values.resize(n);
  in.read(reinterpret_cast<char*>(dist.values.data()), static_cast<std::streamsize>(n * sizeof(double)));
  std::vector<std::uint8_t> bitmap((n + 7) / 8);
  in.read(reinterpret_cast<char*>(bitmap.data()), static_cast<std::streamsize>(bitmap.size()));
  if (!in) throw IoError("truncated file: " + path.string());
  if (header.at("excluded_count").get<std::size_t>() > 0) {
    dist.excluded.resize(n);
    for (std::size_t k = 0; k < n; ++k) dist.excluded[k] = (bitmap[k / 8] >> (k % 8)) & 1u;
  }
  return dist;
}

Rgb heat_color(double t) {
  t = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0);
  // Piecewise-linear: blue -> cyan -> yellow -> red.
  constexpr std::array<std::array<double, 3>, 4> stops{{{0, 0, 255}, {0, 255, 255}, {255, 255, 0}, {255, 0, 0}}};
  const double x = t * 3.0;
  const auto seg = std::min<std::size_t>(static_cast<std::size_t>(x), 2);
  const double f = x - static_cast<double>(seg);
  auto mix = [&](int c) {
    return static_cast<unsigned char>(std::lround(stops[seg][c] + f * (stops[seg + 1][c] - stops[seg][c])));
  };
  return {mix(0), mix(1), mix(2)};
}

void write_heatmap_png(const fs::path& path, const PhaseDistribution& dist,
                       const std::vector<TorusPoint>& markers, double marker_radius) {
  const int w = dist.grid.n_q();
  const int h = dist.grid.n_p();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t k = 0; k < dist.values.size(); ++k) {
    if (dist.is_excluded(k)) continue;
    lo = std::min(lo, dist.values[k]);
    hi = std::max(hi, dist.values[k]);
  }
  const double span = hi > lo ? hi - lo : 1.0;

  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(w) * h * 3);
  auto set = [&](int x, int y, Rgb c) {
    // Image row 0 is the top, i.e. the largest p.
    const std::size_t o = (static_cast<std::size_t>(h - 1 - y) * w + x) * 3;
    pixels[o] = c.r;
    pixels[o + 1] = c.g;
    pixels[o + 2] = c.b;
  };
  for (int ip = 0; ip < h; ++ip) {
    for (int iq = 0; iq < w; ++iq) {
      const auto k = dist.grid.index(iq, ip);
      set(iq, ip, dist.is_excluded(k) ? Rgb{0, 0, 0} : heat_color((dist.values[k] - lo) / span));
    }
  }
  // Circle outlines, one cell thick, wrapped on the torus.
  const double cell = std::max(1.0 / w, 1.0 / h);
  const double radius = std::max(marker_radius, 2.0 * cell);
  for (const auto& m : markers) {
    for (int ip = 0; ip < h; ++ip) {
      for (int iq = 0; iq < w; ++iq) {
        const double d = torus_distance(dist.grid.point(dist.grid.index(iq, ip)), m);
        if (std::abs(d - radius) <= 0.5 * cell) set(iq, ip, {255, 255, 255});
      }
    }
  }

  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::unique_ptr<FILE, int (*)(FILE*)> fp(std::fopen(path.c_str(), "wb"), &std::fclose);
  if (!fp) throw IoError("cannot open " + path.string() + " for writing");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("PNG encoding failed: " + path.string());
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(w), static_cast<png_uint_32>(h), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < h; ++y) png_write_row(png, pixels.data() + static_cast<std::size_t>(y) * w * 3);
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

std::string sha256_file(const fs::path& path) {
  auto in = open_in(path);
  std::unique_ptr<EVP_MD_CTX, void (*)(EVP_MD_CTX*)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) throw IoError("sha256 init failed");
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  static constexpr char hex[] = "0123456789abcdef";
  std::string s;
  for (unsigned int k = 0; k < len; ++k) {
    s += hex[digest[k] >> 4];
    s += hex[digest[k] & 15];
  }
  return s;
}

}  // namespace tribaker
