#include "sadic/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <png.h>

#include "sadic/geometry.hpp"

namespace sadic {

Raster::Raster(int width, int height, Window win, Rgb background)
    : w_(width), h_(height), win_(win) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("raster size must be positive");
  if (!(win.xmax > win.xmin) || !(win.ymax > win.ymin)) throw std::invalid_argument("empty window");
  px_.assign(static_cast<std::size_t>(width) * height, background);
}

void Raster::plot(double x, double y, Rgb c) {
  const double fx = (x - win_.xmin) / (win_.xmax - win_.xmin) * w_;
  const double fy = (win_.ymax - y) / (win_.ymax - win_.ymin) * h_;
  if (!(fx >= 0 && fy >= 0 && fx < w_ && fy < h_)) return;
  at(static_cast<int>(fx), static_cast<int>(fy)) = c;
}

void Raster::line(double x0, double y0, double x1, double y1, Rgb c) {
  const double px = std::abs(x1 - x0) / (win_.xmax - win_.xmin) * w_;
  const double py = std::abs(y1 - y0) / (win_.ymax - win_.ymin) * h_;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::max(px, py) * 2)));
  for (int i = 0; i <= steps; ++i) {
    const double s = double(i) / steps;
    plot(x0 + s * (x1 - x0), y0 + s * (y1 - y0), c);
  }
}

void Raster::arrow(double x0, double y0, double x1, double y1, Rgb c) {
  line(x0, y0, x1, y1, c);
  const double dx = x1 - x0, dy = y1 - y0;
  const double len = std::hypot(dx, dy);
  if (len == 0) return;
  const double head = 0.15 * len, ux = dx / len, uy = dy / len;
  for (double sgn : {1.0, -1.0}) {
    const double ca = std::cos(0.4), sa = sgn * std::sin(0.4);
    line(x1, y1, x1 - head * (ca * ux - sa * uy), y1 - head * (sa * ux + ca * uy), c);
  }
}

void Raster::blit(const Raster& src, int x, int y) {
  for (int j = 0; j < src.h_; ++j)
    for (int i = 0; i < src.w_; ++i) {
      const int tx = x + i, ty = y + j;
      if (tx >= 0 && ty >= 0 && tx < w_ && ty < h_) at(tx, ty) = src.at(i, j);
    }
}

void Raster::write_ppm(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "P6\n" << w_ << ' ' << h_ << "\n255\n";
  for (const Rgb& p : px_) out.put(char(p.r)).put(char(p.g)).put(char(p.b));
}

void Raster::write_png(const std::string& path) const {
  std::unique_ptr<FILE, int (*)(FILE*)> fp(std::fopen(path.c_str(), "wb"), &std::fclose);
  if (!fp) throw std::runtime_error("cannot open " + path);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("libpng error writing " + path);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(w_), static_cast<png_uint_32>(h_), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  std::vector<png_byte> row(static_cast<std::size_t>(w_) * 3);
  for (int y = 0; y < h_; ++y) {
    for (int x = 0; x < w_; ++x) {
      const Rgb& p = at(x, y);
      row[3 * x] = p.r;
      row[3 * x + 1] = p.g;
      row[3 * x + 2] = p.b;
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

Raster Raster::read_ppm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  if (magic != "P6" || maxval != 255) throw std::runtime_error(path + ": not an 8-bit P6 file");
  in.get();
  Raster r(w, h, Window{});
  for (Rgb& p : r.px_) {
    char c[3];
    if (!in.read(c, 3)) throw std::runtime_error(path + ": truncated");
    p = {std::uint8_t(c[0]), std::uint8_t(c[1]), std::uint8_t(c[2])};
  }
  return r;
}

double Raster::difference(const Raster& o) const {
  if (o.w_ != w_ || o.h_ != h_) return 1.0;
  std::size_t diff = 0;
  for (std::size_t i = 0; i < px_.size(); ++i) diff += !(px_[i] == o.px_[i]);
  return double(diff) / double(px_.size());
}

std::array<double, 2> screen(const Vec<double>& plane) {
  if (plane.size() == 1) return {plane[0] * std::sqrt(2.0), 0.0};
  if (plane.size() != 2) throw std::invalid_argument("screen coordinates need d = 1 or 2");
  const double a0 = -plane[0] - plane[1], a1 = plane[0], a2 = plane[1];
  return {(a1 - a0) / std::sqrt(2.0), (2 * a2 - a0 - a1) / std::sqrt(6.0)};
}

Rgb letter_color(Letter a) {
  static const Rgb colors[] = {{220, 40, 40}, {40, 160, 60}, {40, 80, 220}, {200, 160, 20}, {150, 60, 180}};
  return colors[a % 5];
}

namespace {

Rgb lighten(Rgb c) {
  auto f = [](std::uint8_t x) { return std::uint8_t(x + (255 - x) * 3 / 5); };
  return {f(c.r), f(c.g), f(c.b)};
}

}  // namespace

Window fit_window(const FractalApprox& f, double pad) {
  if (f.plane.empty()) return {};
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (std::size_t i = 0; i < f.plane.size(); ++i) {
    const auto [x, y] = screen(f.plane[i]);
    if (i == 0 || x < xmin) xmin = x;
    if (i == 0 || x > xmax) xmax = x;
    if (i == 0 || y < ymin) ymin = y;
    if (i == 0 || y > ymax) ymax = y;
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9}) * (1 + 2 * pad);
  const double cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;
  return {cx - span / 2, cx + span / 2, cy - span / 2, cy + span / 2};
}

Raster render(const FractalApprox& f, const RenderOptions& opt) {
  Raster r(opt.width, opt.height, opt.window ? *opt.window : fit_window(f));
  auto color = [&](Letter a) { return a < opt.palette.size() ? opt.palette[a] : letter_color(a); };
  for (const IntVec& n : opt.translates) {
    if (n.size() != f.alphabet_size - 1) throw std::invalid_argument("translate has the wrong dimension");
    for (std::size_t i = 0; i < f.size(); ++i) {
      Vec<double> p = f.plane[i];
      for (std::size_t k = 0; k < p.size(); ++k) p[k] += double(n[k]);
      const auto [x, y] = screen(p);
      r.plot(x, y, lighten(color(f.letters[i])));
    }
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto [x, y] = screen(f.plane[i]);
    r.plot(x, y, color(f.letters[i]));
  }
  if (opt.draw_translation) {
    const auto [x, y] = screen(project(f.v, unit_vector(f.alphabet_size, 0)));
    r.arrow(0, 0, x, y, {0, 0, 0});
  }
  return r;
}

}  // namespace sadic
