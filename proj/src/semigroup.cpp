#include "ulrich/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ulrich {

std::string lattice_string(const LatticePoint& p, int dim) {
  std::string s = "(";
  for (int i = 0; i < dim; ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

AffineSemigroup::AffineSemigroup(int dim, std::vector<ExponentVector> generators) : dim_(dim) {
  if (dim < 1 || dim > 4) throw std::invalid_argument("semigroup dimension must be 1..4");
  for (const auto& g : generators) {
    for (int i = dim; i < kMaxVars; ++i)
      if (g[i]) throw std::invalid_argument("dimension mismatch in semigroup generator");
    if (g.is_one()) throw std::invalid_argument("semigroup generators must be nonzero");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  gens_ = std::move(generators);
  if (gens_.empty()) throw std::invalid_argument("semigroup needs at least one generator");
  min_deg_ = max_deg_ = gens_.front().degree();
  for (const auto& g : gens_) {
    max_deg_ = std::max(max_deg_, g.degree());
    min_deg_ = std::min(min_deg_, g.degree());
  }
}

bool operator==(const AffineSemigroup& a, const AffineSemigroup& b) {
  return a.dim_ == b.dim_ && a.gens_ == b.gens_;
}

AffineSemigroup parse_semigroup(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw std::invalid_argument("semigroup spec: " + msg + " at column " + std::to_string(pos + 1));
  };
  skip();
  if (text.substr(pos, 2) == "sg") {
    pos += 2;
    skip();
  }
  int declared = -1;
  if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    declared = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      declared = declared * 10 + (text[pos++] - '0');
    skip();
  }
  if (pos >= text.size() || text[pos] != '{') fail("expected '{'");
  ++pos;
  std::vector<std::vector<int>> tuples;
  skip();
  while (pos < text.size() && text[pos] != '}') {
    skip();
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> t;
    for (;;) {
      skip();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected non-negative integer");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = v * 10 + (text[pos++] - '0');
      t.push_back(v);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    tuples.push_back(std::move(t));
    skip();
    if (pos < text.size() && text[pos] == ',') ++pos;
    skip();
  }
  if (pos >= text.size()) fail("expected '}'");
  ++pos;
  skip();
  if (pos != text.size()) fail("trailing input");
  if (tuples.empty()) fail("empty generator list");
  int dim = declared >= 0 ? declared : static_cast<int>(tuples.front().size());
  std::vector<ExponentVector> gens;
  for (const auto& t : tuples) {
    if (static_cast<int>(t.size()) != dim) throw std::invalid_argument("semigroup spec: dimension mismatch");
    ExponentVector e;
    for (int i = 0; i < dim; ++i) e[i] = static_cast<std::uint16_t>(t[i]);
    gens.push_back(e);
  }
  return AffineSemigroup(dim, std::move(gens));
}

std::string to_string(const AffineSemigroup& g) {
  std::string s = "sg " + std::to_string(g.dim()) + " {";
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    if (i) s += ",";
    s += exponent_string(g.generators()[i], g.dim());
  }
  return s + "}";
}

AffineSemigroup no_ulrich_semigroup(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return AffineSemigroup(2, {{n, 0}, {n + 1, 0}, {n, 1}, {0, n}, {0, n + 1}, {1, n}, {1, 1}});
}

AffineSemigroup veronese_face_semigroup(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return AffineSemigroup(3, {{n + 1, 0, 0},
                             {1, n, 0},
                             {0, n + 1, 0},
                             {0, n, 1},
                             {1, 0, n},
                             {0, 0, n + 1},
                             {0, 1, n},
                             {n - 1, 1, 1}});
}

// ---------------------------------------------------------------------------

MembershipCertificate sg_member(const AffineSemigroup& g, const std::vector<int>& v) {
  if (static_cast<int>(v.size()) != g.dim()) throw std::invalid_argument("dimension mismatch");
  ExponentVector e;
  for (int i = 0; i < g.dim(); ++i) {
    if (v[i] < 0) return {false, {}};
    e[i] = static_cast<std::uint16_t>(v[i]);
  }
  return sg_member(g, e);
}

MembershipCertificate sg_member(const AffineSemigroup& g, const ExponentVector& v) {
  for (int i = g.dim(); i < kMaxVars; ++i)
    if (v[i]) throw std::invalid_argument("dimension mismatch");
  const int d = g.dim();
  // Reachability over the box [0, v], row-major; parent records the last generator used.
  std::vector<std::size_t> stride(d);
  std::size_t size = 1;
  for (int i = d - 1; i >= 0; --i) {
    stride[i] = size;
    size *= static_cast<std::size_t>(v[i]) + 1;
  }
  std::vector<int> parent(size, -2);  // -2 unreachable, -1 origin
  parent[0] = -1;
  const auto& gens = g.generators();
  std::vector<int> coord(d, 0);
  for (std::size_t idx = 0; idx < size; ++idx) {
    if (idx > 0) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        bool fits = true;
        std::size_t back = idx;
        for (int i = 0; i < d && fits; ++i) {
          if (gens[k][i] > coord[i]) fits = false;
          else back -= gens[k][i] * stride[i];
        }
        if (fits && parent[back] != -2) {
          parent[idx] = static_cast<int>(k);
          break;
        }
      }
    }
    for (int i = d - 1; i >= 0; --i) {
      if (++coord[i] <= v[i]) break;
      coord[i] = 0;
    }
  }
  MembershipCertificate cert;
  if (parent[size - 1] == -2) return cert;
  cert.member = true;
  cert.decomposition.assign(gens.size(), 0);
  std::size_t idx = size - 1;
  while (parent[idx] >= 0) {
    int k = parent[idx];
    ++cert.decomposition[k];
    for (int i = 0; i < d; ++i) idx -= gens[k][i] * stride[i];
  }
  return cert;
}

// ---------------------------------------------------------------------------

OrderTable::OrderTable(const AffineSemigroup& g, int bound) : dim_(g.dim()), bound_(bound) {
  std::size_t size = 1;
  for (int i = 0; i < dim_; ++i) size *= static_cast<std::size_t>(bound) + 1;
  ord_.assign(size, -1);
  ord_[0] = 0;
  std::vector<LatticePoint> gens;
  for (const auto& e : g.generators()) gens.push_back(to_lattice(e));
  // Points visited by increasing total degree so predecessors are final.
  std::vector<std::vector<LatticePoint>> by_degree(static_cast<std::size_t>(bound) + 1);
  for_each_point([&](const LatticePoint& p) { by_degree[lattice_degree(p)].push_back(p); });
  for (int deg = 1; deg <= bound; ++deg) {
    for (const auto& p : by_degree[deg]) {
      int best = -1;
      for (const auto& gen : gens) {
        LatticePoint q = p - gen;
        if (!nonnegative(q)) continue;
        int o = ord_[index(q)];
        if (o >= 0) best = std::max(best, o + 1);
      }
      ord_[index(p)] = static_cast<short>(best);
    }
  }
}

std::size_t OrderTable::index(const LatticePoint& p) const {
  std::size_t idx = 0;
  for (int i = 0; i < dim_; ++i) idx = idx * (static_cast<std::size_t>(bound_) + 1) + static_cast<std::size_t>(p[i]);
  return idx;
}

bool OrderTable::in_range(const LatticePoint& p) const { return nonnegative(p) && lattice_degree(p) <= bound_; }

int OrderTable::ord(const LatticePoint& p) const {
  if (!nonnegative(p)) return -1;
  if (lattice_degree(p) > bound_) throw std::out_of_range("order table queried beyond its bound");
  return ord_[index(p)];
}

// ---------------------------------------------------------------------------

int GapSet::max_gap_degree() const {
  int m = -1;
  for (const auto& g : gaps) m = std::max(m, g.degree());
  return m;
}

GapSet gap_set(const AffineSemigroup& g, int bound) {
  const int maxgen = g.max_generator_degree();
  if (bound < maxgen) throw std::invalid_argument("bound below the maximal generator degree");
  const int top = std::max(bound, (g.dim() + 1) * maxgen);
  OrderTable table(g, top);
  GapSet out;
  out.shell_top = top;
  bool shell_full = true;
  table.for_each_point([&](const LatticePoint& p) {
    int deg = lattice_degree(p);
    if (deg >= top - maxgen && !table.member(p)) shell_full = false;
  });
  if (!shell_full) return out;
  out.finite = true;
  table.for_each_point([&](const LatticePoint& p) {
    if (lattice_degree(p) < top - maxgen && !table.member(p)) {
      ExponentVector e;
      for (int i = 0; i < g.dim(); ++i) e[i] = static_cast<std::uint16_t>(p[i]);
      out.gaps.push_back(e);
    }
  });
  std::sort(out.gaps.begin(), out.gaps.end(), [](const ExponentVector& a, const ExponentVector& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  });
  return out;
}

GapSet find_gap_set(const AffineSemigroup& g, int limit) {
  // The lattice box grows like bound^dim; keep 3- and 4-dimensional searches small.
  if (g.dim() >= 3) limit = std::min(limit, 128);
  int bound = (g.dim() + 1) * g.max_generator_degree();
  for (;;) {
    auto r = gap_set(g, bound);
    if (r.finite || bound >= limit) return r;
    bound = std::min(limit, bound * 2);
  }
}

namespace {

// Order table large enough that every point beyond it has ord ≥ t_max.
// Certificate: the top shell of width maxgen has ord ≥ t_max everywhere, lies
// above all gaps, and above dim*maxgen (so an axis generator can be peeled off
// any larger point while staying inside the member region).
OrderTable certified_table(const AffineSemigroup& g, const GapSet& gaps, int t_max) {
  const int maxgen = g.max_generator_degree();
  int bound = std::max({t_max * maxgen + gaps.max_gap_degree() + maxgen + 1, (g.dim() + 1) * maxgen + 1,
                        gaps.shell_top});
  for (int attempt = 0; attempt < 8; ++attempt) {
    OrderTable table(g, bound);
    bool ok = true;
    table.for_each_point([&](const LatticePoint& p) {
      if (lattice_degree(p) > bound - maxgen && table.ord(p) < t_max) ok = false;
    });
    if (ok) return table;
    bound *= 2;
  }
  throw std::runtime_error("could not certify the order table bound");
}

}  // namespace

std::vector<long> hilbert_samuel_table(const AffineSemigroup& g, int t_max) {
  std::vector<long> out(static_cast<std::size_t>(t_max), 0);
  if (t_max <= 0) return out;
  if (g.homogeneous()) {
    // ord(s) = deg(s) / delta exactly.
    const int delta = g.max_generator_degree();
    OrderTable table(g, t_max * delta - 1);
    table.for_each_point([&](const LatticePoint& p) {
      int o = table.ord(p);
      if (o < 0) return;
      for (int t = o + 1; t <= t_max; ++t) ++out[t - 1];
    });
    return out;
  }
  auto gaps = find_gap_set(g);
  if (gaps.finite) {
    auto table = certified_table(g, gaps, t_max);
    table.for_each_point([&](const LatticePoint& p) {
      int o = table.ord(p);
      if (o < 0) return;
      for (int t = std::max(o + 1, 1); t <= t_max; ++t) ++out[t - 1];
    });
    return out;
  }
  throw std::invalid_argument("hilbert_samuel: infinite gap set");
}

long hilbert_samuel(const AffineSemigroup& g, int t) {
  if (t <= 0) return 0;
  return hilbert_samuel_table(g, t).back();
}

DifferenceCertificate multiplicity(const AffineSemigroup& g, int t_max) {
  int t = std::min(t_max, 12);
  for (;;) {
    auto cert = stabilized_difference(hilbert_samuel_table(g, t), g.dim());
    if (cert.stabilized || t >= t_max) return cert;
    t = std::min(t_max, t * 2);
  }
}

int nu_max_ideal(const AffineSemigroup& g) {
  if (!g.homogeneous() && !find_gap_set(g).finite)
    throw std::invalid_argument("nu_max_ideal: infinite gap set");
  OrderTable table(g, g.max_generator_degree());
  int count = 0;
  for (const auto& e : g.generators())
    if (table.ord(to_lattice(e)) == 1) ++count;
  return count;
}

FaceLocalization localize_at_face(const AffineSemigroup& g, int face) {
  if (face != 0) throw std::invalid_argument("only the face inverting the first variable is supported");
  if (g.dim() != 3) throw std::invalid_argument("localize_at_face expects a semigroup in (s,x,y)");
  if (!g.homogeneous()) throw std::invalid_argument("localize_at_face expects homogeneous generators");
  std::vector<ExponentVector> image, units;
  for (const auto& e : g.generators()) {
    ExponentVector r{e[1], e[2]};
    if (r.is_one()) units.push_back(e);
    else image.push_back(r);
  }
  return {AffineSemigroup(2, std::move(image)), std::move(units)};
}

// ---------------------------------------------------------------------------

MonomialModule::MonomialModule(AffineSemigroup ring, std::vector<LatticePoint> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)), gaps_(find_gap_set(ring_)) {
  if (!gaps_.finite) throw std::invalid_argument("monomial modules need a ring with finite gap set");
  for (const auto& p : gens_)
    for (int i = ring_.dim(); i < 4; ++i)
      if (p[i]) throw std::invalid_argument("dimension mismatch in module generator");
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

bool MonomialModule::ring_member(const LatticePoint& v) const {
  if (!nonnegative(v)) return false;
  ExponentVector e;
  for (int i = 0; i < dim(); ++i) e[i] = static_cast<std::uint16_t>(v[i]);
  return std::find(gaps_.gaps.begin(), gaps_.gaps.end(), e) == gaps_.gaps.end();
}

bool MonomialModule::contains(const LatticePoint& v) const {
  for (const auto& m : gens_)
    if (ring_member(v - m)) return true;
  return false;
}

bool MonomialModule::saturation_contains(const LatticePoint& v) const {
  for (const auto& m : gens_)
    if (nonnegative(v - m)) return true;
  return false;
}

LatticePoint MonomialModule::corner() const {
  if (gens_.empty()) return {0, 0, 0, 0};
  LatticePoint c = gens_.front();
  for (const auto& m : gens_)
    for (int i = 0; i < 4; ++i) c[i] = std::min(c[i], m[i]);
  return c;
}

int MonomialModule::max_generator_degree() const {
  if (gens_.empty()) return 0;
  int d = lattice_degree(gens_.front());
  for (const auto& m : gens_) d = std::max(d, lattice_degree(m));
  return d;
}

std::vector<LatticePoint> MonomialModule::saturation_quotient_basis() const {
  std::set<LatticePoint> out;
  for (const auto& m : gens_)
    for (const auto& gap : gaps_.gaps) {
      LatticePoint v = m + to_lattice(gap);
      if (!contains(v)) out.insert(v);
    }
  return {out.begin(), out.end()};
}

MonomialModule MonomialModule::saturation() const {
  // M·S is generated over R by M's generators plus M·S/M and their
  // S-translates by gap vectors; the gap translates cover everything R misses.
  std::set<LatticePoint> gens(gens_.begin(), gens_.end());
  for (const auto& m : gens_) {
    for (const auto& gap : gaps_.gaps) gens.insert(m + to_lattice(gap));
  }
  return MonomialModule(ring_, {gens.begin(), gens.end()});
}

int MonomialModule::minimal_generator_count() const {
  int count = 0;
  for (const auto& m : gens_) {
    bool in_mM = false;
    for (const auto& g : ring_.generators())
      if (contains(m - to_lattice(g))) {
        in_mM = true;
        break;
      }
    if (!in_mM) ++count;
  }
  return count;
}

int MonomialModule::saturation_generator_count() const {
  int count = 0;
  for (const auto& m : gens_) {
    bool redundant = false;
    for (const auto& o : gens_)
      if (o != m && nonnegative(m - o)) redundant = true;
    if (!redundant) ++count;
  }
  return count;
}

DifferenceCertificate MonomialModule::multiplicity(int t_max) const {
  int t_cap = std::min(t_max, 12);
  for (;;) {
    auto table = certified_table(ring_, gaps_, t_cap);
    // ord_M(v) = max over generators m with v - m ∈ R of ord_R(v - m); beyond
    // the table it is ≥ t_cap.
    std::vector<long> hs(static_cast<std::size_t>(t_cap), 0);
    std::set<LatticePoint> seen;
    for (const auto& m : gens_) {
      table.for_each_point([&](const LatticePoint& r) {
        if (table.ord(r) < 0) return;
        LatticePoint v = m + r;
        if (!seen.insert(v).second) return;
        int best = -1;
        for (const auto& m2 : gens_) {
          LatticePoint w = v - m2;
          if (!nonnegative(w)) continue;
          if (!table.in_range(w)) {
            best = t_cap;
            break;
          }
          best = std::max(best, table.ord(w));
        }
        for (int t = best + 1; t <= t_cap; ++t) ++hs[t - 1];
      });
    }
    auto cert = stabilized_difference(hs, dim());
    if (cert.stabilized || t_cap >= t_max) return cert;
    t_cap = std::min(t_max, t_cap * 2);
  }
}

}  // namespace ulrich
