#ifndef SADIC_RENDER_HPP
#define SADIC_RENDER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sadic/fractal.hpp"

namespace sadic {

struct Rgb {
  std::uint8_t r = 255, g = 255, b = 255;
  bool operator==(const Rgb&) const = default;
};

struct Window {
  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
};

class Raster {
 public:
  Raster(int width, int height, Window win, Rgb background = {});

  int width() const { return w_; }
  int height() const { return h_; }
  const Window& window() const { return win_; }
  Rgb& at(int x, int y) { return px_[static_cast<std::size_t>(y) * w_ + x]; }
  const Rgb& at(int x, int y) const { return px_[static_cast<std::size_t>(y) * w_ + x]; }

  void plot(double x, double y, Rgb c);
  void line(double x0, double y0, double x1, double y1, Rgb c);
  void arrow(double x0, double y0, double x1, double y1, Rgb c);
  // Pastes another raster with its top-left corner at (x, y).
  void blit(const Raster& src, int x, int y);

  void write_ppm(const std::string& path) const;
  void write_png(const std::string& path) const;
  static Raster read_ppm(const std::string& path);

  // Fraction of pixels that differ.
  double difference(const Raster& o) const;

 private:
  int w_, h_;
  Window win_;
  std::vector<Rgb> px_;
};

// Orthonormal coordinates of a plane point given in the basis e_i - e_0.
std::array<double, 2> screen(const Vec<double>& plane);

Rgb letter_color(Letter a);

struct RenderOptions {
  int width = 400;
  int height = 400;
  std::optional<Window> window;        // fitted to the cloud when empty
  std::vector<IntVec> translates;      // lattice translates drawn in lighter colours
  bool draw_translation = false;       // arrow from 0 to pi_v(e_0)
  std::vector<Rgb> palette;            // defaults to letter_color
};

Window fit_window(const FractalApprox& f, double pad = 0.05);
Raster render(const FractalApprox& f, const RenderOptions& opt = {});

}  // namespace sadic

#endif
