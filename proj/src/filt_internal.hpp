#pragma once

// Shared periodized filtering kernels for the two transforms. Analysis
// convention on an even-length signal:
//   a[i] = sum_k f[k] * x[(2i + 2 - k + phase) mod n]
// The matching synthesis is the transpose map; synthesis filters arrive in
// convolution order (reversed transpose form), so the accumulation is
//   xhat[(2i + 3 - Ls + k + phase) mod n] += c[i] * rec[k].

#include <vector>

#include "wavetir/dwt2d.hpp"
#include "wavetir/image.hpp"

namespace wavetir::detail {

inline int wrap(int i, int n) {
  i %= n;
  return i < 0 ? i + n : i;
}

inline void analyze_periodic(const double* x, int n, int stride,
                             const std::vector<double>& f, int phase,
                             double* out, int out_stride) {
  const int half = n / 2;
  const int L = static_cast<int>(f.size());
  for (int i = 0; i < half; ++i) {
    double s = 0.0;
    for (int k = 0; k < L; ++k) {
      s += f[k] * x[wrap(2 * i + 2 - k + phase, n) * stride];
    }
    out[i * out_stride] = s;
  }
}

inline void synthesize_periodic_add(const double* c, int half, int c_stride,
                                    const std::vector<double>& rec, int phase,
                                    double* x, int n, int x_stride) {
  const int L = static_cast<int>(rec.size());
  for (int i = 0; i < half; ++i) {
    const double ci = c[i * c_stride];
    for (int k = 0; k < L; ++k) {
      x[wrap(2 * i + 3 - L + k + phase, n) * x_stride] += ci * rec[k];
    }
  }
}

// Duplicates the last row/column when the extent is odd (half-sample reflect
// pad) so every level sees even dimensions.
inline Raster pad_even(const Raster& X) {
  const int r = X.rows + (X.rows % 2);
  const int c = X.cols + (X.cols % 2);
  if (r == X.rows && c == X.cols) return X;
  Raster out = Raster::zeros(r, c);
  for (int i = 0; i < r; ++i) {
    const int si = i < X.rows ? i : X.rows - 1;
    for (int j = 0; j < c; ++j) {
      out.at(i, j) = X.at(si, j < X.cols ? j : X.cols - 1);
    }
  }
  return out;
}

struct Quad {
  Raster ll, h, v, d;
};

// One separable analysis level on an even-dimension raster: columns first,
// then rows. h = (high-pass vertical, low-pass horizontal). The vertical and
// horizontal filter pairs may differ (the dual tree mixes trees per axis).
inline Quad analyze2(const Raster& X, const std::vector<double>& vlo,
                     const std::vector<double>& vhi,
                     const std::vector<double>& hlo,
                     const std::vector<double>& hhi, int vphase, int hphase) {
  const int r = X.rows, c = X.cols, r2 = r / 2, c2 = c / 2;
  Raster collo = Raster::zeros(r2, c), colhi = Raster::zeros(r2, c);
  for (int j = 0; j < c; ++j) {
    analyze_periodic(&X.v[j], r, c, vlo, vphase, &collo.v[j], c);
    analyze_periodic(&X.v[j], r, c, vhi, vphase, &colhi.v[j], c);
  }
  Quad q;
  q.ll = Raster::zeros(r2, c2);
  q.v = Raster::zeros(r2, c2);
  q.h = Raster::zeros(r2, c2);
  q.d = Raster::zeros(r2, c2);
  for (int i = 0; i < r2; ++i) {
    analyze_periodic(&collo.v[static_cast<size_t>(i) * c], c, 1, hlo, hphase,
                     &q.ll.v[static_cast<size_t>(i) * c2], 1);
    analyze_periodic(&collo.v[static_cast<size_t>(i) * c], c, 1, hhi, hphase,
                     &q.v.v[static_cast<size_t>(i) * c2], 1);
    analyze_periodic(&colhi.v[static_cast<size_t>(i) * c], c, 1, hlo, hphase,
                     &q.h.v[static_cast<size_t>(i) * c2], 1);
    analyze_periodic(&colhi.v[static_cast<size_t>(i) * c], c, 1, hhi, hphase,
                     &q.d.v[static_cast<size_t>(i) * c2], 1);
  }
  return q;
}

// Inverse of analyze2 onto the even (rows_out, cols_out) grid; the caller
// crops padding afterwards.
inline Raster synthesize2(const Quad& q, const std::vector<double>& vrlo,
                          const std::vector<double>& vrhi,
                          const std::vector<double>& hrlo,
                          const std::vector<double>& hrhi, int rows_out,
                          int cols_out, int vphase, int hphase) {
  const int r2 = q.ll.rows, c2 = q.ll.cols;
  Raster collo = Raster::zeros(r2, cols_out), colhi = Raster::zeros(r2, cols_out);
  for (int i = 0; i < r2; ++i) {
    synthesize_periodic_add(&q.ll.v[static_cast<size_t>(i) * c2], c2, 1, hrlo,
                            hphase, &collo.v[static_cast<size_t>(i) * cols_out],
                            cols_out, 1);
    synthesize_periodic_add(&q.v.v[static_cast<size_t>(i) * c2], c2, 1, hrhi,
                            hphase, &collo.v[static_cast<size_t>(i) * cols_out],
                            cols_out, 1);
    synthesize_periodic_add(&q.h.v[static_cast<size_t>(i) * c2], c2, 1, hrlo,
                            hphase, &colhi.v[static_cast<size_t>(i) * cols_out],
                            cols_out, 1);
    synthesize_periodic_add(&q.d.v[static_cast<size_t>(i) * c2], c2, 1, hrhi,
                            hphase, &colhi.v[static_cast<size_t>(i) * cols_out],
                            cols_out, 1);
  }
  Raster X = Raster::zeros(rows_out, cols_out);
  for (int j = 0; j < cols_out; ++j) {
    synthesize_periodic_add(&collo.v[j], r2, cols_out, vrlo, vphase, &X.v[j],
                            rows_out, cols_out);
    synthesize_periodic_add(&colhi.v[j], r2, cols_out, vrhi, vphase, &X.v[j],
                            rows_out, cols_out);
  }
  return X;
}

inline Raster image_to_raster(const Image& im) {
  Raster r;
  r.rows = im.height;
  r.cols = im.width;
  r.v = im.data;
  return r;
}

}  // namespace wavetir::detail
