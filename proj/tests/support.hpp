#pragma once

#include <random>
#include <vector>

#include "ulrich/parse.hpp"
#include "ulrich/polynomial.hpp"

namespace testing_support {

using ulrich::Ambient;
using ulrich::ExponentVector;
using ulrich::RationalField;
using QPoly = ulrich::Polynomial<RationalField>;

inline QPoly random_poly(std::mt19937& rng, int nvars, int max_terms, int max_deg, int coef_range = 5) {
  RationalField Q;
  std::uniform_int_distribution<int> nt(0, max_terms), ex(0, max_deg), co(-coef_range, coef_range), den(1, 3);
  QPoly p(Q, nvars);
  int terms = nt(rng);
  for (int i = 0; i < terms; ++i) {
    ExponentVector e;
    for (int v = 0; v < nvars; ++v) e[v] = static_cast<std::uint16_t>(ex(rng));
    mpq_class c(co(rng), den(rng));
    c.canonicalize();
    p += QPoly::monomial(Q, nvars, e, c);
  }
  return p;
}

inline QPoly X(int nvars = 2) { return QPoly::variable(RationalField{}, nvars, 0); }
inline QPoly Y(int nvars = 2) { return QPoly::variable(RationalField{}, nvars, 1); }

inline QPoly qp(const char* text, const Ambient& A = Ambient::xy()) { return ulrich::parse_polynomial<RationalField>(text, A); }
inline std::vector<QPoly> qgens(const char* text, const Ambient& A = Ambient::xy()) {
  return ulrich::parse_generators<RationalField>(text, A);
}

}  // namespace testing_support
