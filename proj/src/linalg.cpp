#include "hyper3/linalg.hpp"

#include <utility>

namespace hyper3 {

Mat2 reduced_density_one(const StateVector& s, Vertex q) {
  const int bq = vertex_bit(q);
  const int b1 = bq == 2 ? 1 : 2;
  const int b2 = bq == 0 ? 1 : 0;
  Mat2 rho;
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j) {
      double sum = 0.0;
      for (unsigned y1 = 0; y1 < 2; ++y1)
        for (unsigned y2 = 0; y2 < 2; ++y2) {
          const unsigned rest = (y1 << b1) | (y2 << b2);
          sum += s[(i << bq) | rest] * s[(j << bq) | rest];
        }
      rho(i, j) = sum;
    }
  return rho;
}

Mat4 reduced_density_pair(const StateVector& s, Vertex q1, Vertex q2) {
  if (q1 == q2)
    throw std::invalid_argument("reduced_density_pair: vertices must differ");
  if (static_cast<int>(q1) > static_cast<int>(q2)) std::swap(q1, q2);
  const int bhi = vertex_bit(q1);  // q1 < q2 alphabetically, so higher bit
  const int blo = vertex_bit(q2);
  const int bt = 3 - bhi - blo;    // the traced-out qubit's bit
  Mat4 rho;
  for (unsigned r = 0; r < 4; ++r)
    for (unsigned c = 0; c < 4; ++c) {
      const unsigned ri = ((r >> 1) << bhi) | ((r & 1u) << blo);
      const unsigned ci = ((c >> 1) << bhi) | ((c & 1u) << blo);
      double sum = 0.0;
      for (unsigned t = 0; t < 2; ++t)
        sum += s[ri | (t << bt)] * s[ci | (t << bt)];
      rho(r, c) = sum;
    }
  return rho;
}

}  // namespace hyper3
