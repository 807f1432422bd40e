#include "slope/toric.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "slope/errors.hpp"
#include "slope/polynomial.hpp"

namespace slope {

namespace {

Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

Vec2 sub(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }

bool lex_less(const Vec2& a, const Vec2& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

// Angle ordering for nonzero vectors: [0, pi) before [pi, 2pi), then by cross
// product within a half-plane.
int half_of(const Rational& x, const Rational& y) {
  if (y.sign() > 0 || (y.is_zero() && x.sign() > 0)) return 0;
  return 1;
}

bool angle_less(const Vec2& a, const Vec2& b) {
  int ha = half_of(a.x, a.y), hb = half_of(b.x, b.y);
  if (ha != hb) return ha < hb;
  return cross(a, b).sign() > 0;
}

void check_primitive(long x, long y, const char* what) {
  if (x == 0 && y == 0) throw invalid_input(std::string(what) + " must be a nonzero vector");
  long g = std::gcd(x < 0 ? -x : x, y < 0 ? -y : y);
  if (g != 1) throw invalid_input(std::string(what) + " must be primitive (gcd 1)");
}

std::optional<Vec2> line_intersect(const Halfspace& h1, const Rational& o1, const Halfspace& h2,
                                   const Rational& o2) {
  Rational det = Rational(h1.nx) * Rational(h2.ny) - Rational(h1.ny) * Rational(h2.nx);
  if (det.is_zero()) return std::nullopt;
  Rational x = (o1 * Rational(h2.ny) - o2 * Rational(h1.ny)) / det;
  Rational y = (Rational(h1.nx) * o2 - Rational(h2.nx) * o1) / det;
  return Vec2{x, y};
}

Rational eval_halfspace(const Halfspace& h, const Vec2& p) {
  return Rational(h.nx) * p.x + Rational(h.ny) * p.y - h.offset;
}

// Bounded iff the normals positively span the plane: sorted by angle, every
// consecutive gap (including the wraparound) is strictly less than pi.
bool normals_positively_span(const std::vector<Halfspace>& hs) {
  std::vector<Vec2> dirs;
  dirs.reserve(hs.size());
  for (const auto& h : hs) dirs.push_back({Rational(h.nx), Rational(h.ny)});
  std::sort(dirs.begin(), dirs.end(), angle_less);
  std::size_t m = dirs.size();
  if (m < 3) return false;
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2& a = dirs[i];
    const Vec2& b = dirs[(i + 1) % m];
    Rational cr = cross(a, b);
    if (cr.sign() > 0) continue;
    if (cr.is_zero() && (a.x * b.x + a.y * b.y).sign() > 0) continue;  // duplicate direction
    return false;
  }
  return true;
}

std::optional<Polytope> build_polytope(std::vector<Halfspace> hs, bool strict) {
  if (hs.size() < 3) throw invalid_input("a polygon needs at least 3 halfspaces");
  for (const auto& h : hs) check_primitive(h.nx, h.ny, "halfspace normal");
  if (!normals_positively_span(hs)) throw invalid_input("polytope must be bounded");

  // Exact duplicates would break the edge <-> facet bijection.
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j)
      if (hs[i].nx == hs[j].nx && hs[i].ny == hs[j].ny && hs[i].offset == hs[j].offset) {
        if (strict) throw invalid_input("duplicate halfspace");
        hs.erase(hs.begin() + static_cast<std::ptrdiff_t>(j));
        --j;
      }

  std::vector<Vec2> verts;
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      auto p = line_intersect(hs[i], hs[i].offset, hs[j], hs[j].offset);
      if (!p) continue;
      bool ok = true;
      for (const auto& h : hs)
        if (eval_halfspace(h, *p).sign() < 0) {
          ok = false;
          break;
        }
      if (ok) verts.push_back(*p);
    }
  std::sort(verts.begin(), verts.end(), lex_less);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.size() < 3) {
    if (strict) throw invalid_input("polytope must be two-dimensional");
    return std::nullopt;
  }

  Vec2 centroid{Rational(0), Rational(0)};
  for (const auto& v : verts) {
    centroid.x += v.x;
    centroid.y += v.y;
  }
  Rational inv(1, static_cast<long>(verts.size()));
  centroid.x *= inv;
  centroid.y *= inv;
  std::sort(verts.begin(), verts.end(),
            [&](const Vec2& a, const Vec2& b) { return angle_less(sub(a, centroid), sub(b, centroid)); });

  std::size_t start = 0;
  for (std::size_t i = 1; i < verts.size(); ++i)
    if (lex_less(verts[i], verts[start])) start = i;
  std::rotate(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(start), verts.end());

  Rational area2(0);
  for (std::size_t i = 0; i < verts.size(); ++i)
    area2 += cross(verts[i], verts[(i + 1) % verts.size()]);
  if (area2.sign() <= 0) {
    if (strict) throw invalid_input("polytope must be two-dimensional");
    return std::nullopt;
  }

  // Map each edge to the unique halfspace whose boundary line carries it.
  std::vector<Halfspace> ordered;
  std::vector<bool> used(hs.size(), false);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Vec2& a = verts[i];
    const Vec2& b = verts[(i + 1) % verts.size()];
    bool found = false;
    for (std::size_t j = 0; j < hs.size(); ++j) {
      if (used[j]) continue;
      if (eval_halfspace(hs[j], a).is_zero() && eval_halfspace(hs[j], b).is_zero()) {
        ordered.push_back(hs[j]);
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) throw internal_error("polygon edge without a supporting halfspace");
  }
  for (std::size_t j = 0; j < hs.size(); ++j)
    if (!used[j]) {
      if (strict) throw invalid_input("redundant halfspace (supports no edge)");
      // tolerant path: quietly drop it
    }

  Polytope P;
  P.facets = std::move(ordered);
  P.vertices = std::move(verts);
  return P;
}

// The slicing constraint g >= x as a primitive integral halfspace.
Halfspace g_halfspace(const ToricSubscheme& Z, const Rational& x) {
  Rational ux(0), uy(0), off(0);
  for (const auto& f : Z.faces) {
    Rational inv(1, f.multiplicity);
    ux += Rational(f.ux) * inv;
    uy += Rational(f.uy) * inv;
    off += f.offset * inv;
  }
  // g(p) = ux*px + uy*py - off >= x  <=>  (q ux) px + (q uy) py >= q(x + off), then
  // divide by the content to make the normal primitive.
  mpz_class q;
  mpz_lcm(q.get_mpz_t(), ux.den().get_mpz_t(), uy.den().get_mpz_t());
  mpz_class a = ux.num() * (q / ux.den());
  mpz_class b = uy.num() * (q / uy.den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g == 0) throw invalid_input("subscheme vanishing function must be nonconstant");
  a /= g;
  b /= g;
  if (!a.fits_slong_p() || !b.fits_slong_p())
    throw invalid_input("subscheme conormal data too large");
  Rational scale = Rational(q, g);
  return Halfspace{a.get_si(), b.get_si(), scale * (x + off)};
}

std::optional<Polytope> clipped_slice(const Polytope& P, const ToricSubscheme& Z,
                                      const Rational& x) {
  std::vector<Halfspace> hs = P.facets;
  hs.push_back(g_halfspace(Z, x));
  return build_polytope(std::move(hs), false);
}

// P intersected with {g <= c} (the region below the cut).
std::optional<Polytope> clipped_below(const Polytope& P, const ToricSubscheme& Z,
                                      const Rational& c) {
  Halfspace h = g_halfspace(Z, c);
  std::vector<Halfspace> hs = P.facets;
  hs.push_back(Halfspace{-h.nx, -h.ny, -h.offset});
  return build_polytope(std::move(hs), false);
}

Rational area_of(const Polytope& P) {
  Rational area2(0);
  for (std::size_t i = 0; i < P.vertices.size(); ++i)
    area2 += cross(P.vertices[i], P.vertices[(i + 1) % P.vertices.size()]);
  return area2 / 2;
}

// Exact integral of an affine function over the polygon via fan triangulation
// (the average of an affine function over a triangle is its vertex average).
Rational integrate_affine(const Polytope& P, const ToricSubscheme& Z) {
  Rational total(0);
  const auto& v = P.vertices;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    Rational tri2 = cross(sub(v[i], v[0]), sub(v[i + 1], v[0]));
    Rational avg = (subscheme_g(Z, v[0]) + subscheme_g(Z, v[i]) + subscheme_g(Z, v[i + 1])) / 3;
    total += tri2 * avg;
  }
  return total / 2;
}

// integral_0^1 min(c, (1-t) gA + t gB) dt, exactly.
Rational edge_min_integral(const Rational& c, const Rational& gA, const Rational& gB) {
  Rational lo = min(gA, gB), hi = max(gA, gB);
  if (hi <= c) return (gA + gB) / 2;
  if (lo >= c) return c;
  Rational s = (c - lo) / (hi - lo);  // fraction of the edge with g <= c
  return s * (lo + c) / 2 + (Rational(1) - s) * c;
}

}  // namespace

Polytope make_polytope(std::vector<Halfspace> hs) {
  auto p = build_polytope(std::move(hs), true);
  if (!p) throw invalid_input("polytope must be two-dimensional");
  return *std::move(p);
}

void validate_subscheme(const Polytope& P, const ToricSubscheme& Z) {
  if (Z.faces.empty()) throw invalid_input("subscheme needs at least one face weight");
  for (const auto& f : Z.faces) {
    check_primitive(f.ux, f.uy, "face conormal");
    if (f.multiplicity < 1) throw invalid_input("face multiplicity must be >= 1");
    for (const auto& v : P.vertices) {
      Rational val = Rational(f.ux) * v.x + Rational(f.uy) * v.y - f.offset;
      if (val.sign() < 0)
        throw invalid_input("face weight must be non-negative on the polytope");
    }
  }
  Rational ux(0), uy(0);
  for (const auto& f : Z.faces) {
    Rational inv(1, f.multiplicity);
    ux += Rational(f.ux) * inv;
    uy += Rational(f.uy) * inv;
  }
  if (ux.is_zero() && uy.is_zero())
    throw invalid_input("subscheme vanishing function must be nonconstant");
}

Rational subscheme_g(const ToricSubscheme& Z, const Vec2& p) {
  Rational out(0);
  for (const auto& f : Z.faces)
    out += (Rational(f.ux) * p.x + Rational(f.uy) * p.y - f.offset) / Rational(f.multiplicity);
  return out;
}

Rational subscheme_g_min(const Polytope& P, const ToricSubscheme& Z) {
  Rational best = subscheme_g(Z, P.vertices[0]);
  for (const auto& v : P.vertices) best = min(best, subscheme_g(Z, v));
  return best;
}

Rational subscheme_g_max(const Polytope& P, const ToricSubscheme& Z) {
  Rational best = subscheme_g(Z, P.vertices[0]);
  for (const auto& v : P.vertices) best = max(best, subscheme_g(Z, v));
  return best;
}

Rational polygon_area(const Polytope& P) { return area_of(P); }

Rational lattice_length(const Vec2& a, const Vec2& b) {
  Rational dx = (b.x - a.x).abs(), dy = (b.y - a.y).abs();
  if (dx.is_zero() && dy.is_zero()) return Rational(0);
  // d = t * w with w primitive integral: t = content of the rational vector.
  mpz_class q;
  mpz_lcm(q.get_mpz_t(), dx.den().get_mpz_t(), dy.den().get_mpz_t());
  mpz_class ix = dx.num() * (q / dx.den());
  mpz_class iy = dy.num() * (q / dy.den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), ix.get_mpz_t(), iy.get_mpz_t());
  return Rational(g, q);
}

Rational polygon_boundary_measure(const Polytope& P) {
  Rational total(0);
  for (std::size_t i = 0; i < P.vertices.size(); ++i)
    total += lattice_length(P.vertices[i], P.vertices[(i + 1) % P.vertices.size()]);
  return total;
}

Polytope slice(const Polytope& P, const ToricSubscheme& Z, const Rational& x) {
  validate_subscheme(P, Z);
  if (x >= subscheme_g_max(P, Z))
    throw invalid_input("slice parameter must stay below the maximum of g on the polytope");
  auto s = clipped_slice(P, Z, x);
  if (!s) throw internal_error("interior slice unexpectedly degenerate");
  return *std::move(s);
}

SlopeProfile toric_profile(const Polytope& P, const ToricSubscheme& Z) {
  validate_subscheme(P, Z);
  Rational gmin = subscheme_g_min(P, Z);
  if (gmin.sign() < 0) throw invalid_input("vanishing function must be non-negative on the polytope");
  Rational gmax = subscheme_g_max(P, Z);
  if (gmax.sign() <= 0) throw invalid_input("vanishing function must be positive somewhere");

  std::vector<Rational> breaks;
  breaks.push_back(Rational(0));
  for (const auto& v : P.vertices) {
    Rational g = subscheme_g(Z, v);
    if (g.sign() > 0 && g < gmax) breaks.push_back(g);
  }
  breaks.push_back(gmax);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::vector<Polynomial> a0p, a1p;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const Rational &lo = breaks[i], &hi = breaks[i + 1];
    std::vector<std::pair<Rational, Rational>> p0, p1;
    Rational check_x, check_vol, check_bd;
    for (int j = 1; j <= 4; ++j) {
      Rational x = lo + (hi - lo) * Rational(j, 5);
      auto s = clipped_slice(P, Z, x);
      if (!s) throw internal_error("interior slice unexpectedly degenerate");
      Rational vol = area_of(*s);
      Rational bd = polygon_boundary_measure(*s) / 2;
      if (j <= 3) {
        p0.push_back({x, vol});
        p1.push_back({x, bd});
      } else {
        check_x = x;
        check_vol = vol;
        check_bd = bd;
      }
    }
    Polynomial q0 = interpolate(p0);
    Polynomial q1 = interpolate(p1);
    if (q1.degree() > 1)
      throw internal_error("slice boundary length is not affine on a combinatorial chamber");
    if (q0.eval(check_x) != check_vol || q1.eval(check_x) != check_bd)
      throw internal_error("slice data failed the polynomial consistency check");
    a0p.push_back(std::move(q0));
    a1p.push_back(std::move(q1));
  }

  PiecewisePolynomial a0(breaks, std::move(a0p));
  PiecewisePolynomial a1(std::move(breaks), std::move(a1p));
  // The configuration is valid for every c up to g_max, and at g_max it is the
  // nontrivial degeneration induced by g itself, so the bound saturates.
  return SlopeProfile(2, std::move(a0), std::move(a1), SeshadriBound::exact(gmax),
                      Saturation::Yes);
}

Rational lattice_count(const Polytope& P, long k) {
  if (k < 1) throw invalid_input("dilation factor must be >= 1");
  Rational kk(k);
  Rational ymin = P.vertices[0].y, ymax = P.vertices[0].y;
  for (const auto& v : P.vertices) {
    ymin = min(ymin, v.y);
    ymax = max(ymax, v.y);
  }
  mpz_class count(0);
  Rational ylo = (kk * ymin).ceil(), yhi = (kk * ymax).floor();
  for (Rational y = ylo; y <= yhi; y += Rational(1)) {
    bool empty = false;
    bool has_lo = false, has_hi = false;
    Rational xlo, xhi;
    for (const auto& h : P.facets) {
      Rational rhs = kk * h.offset - Rational(h.ny) * y;
      if (h.nx > 0) {
        Rational bound = rhs / Rational(h.nx);
        if (!has_lo || bound > xlo) xlo = bound;
        has_lo = true;
      } else if (h.nx < 0) {
        Rational bound = rhs / Rational(h.nx);
        if (!has_hi || bound < xhi) xhi = bound;
        has_hi = true;
      } else if (rhs.sign() > 0) {
        empty = true;
        break;
      }
    }
    if (empty) continue;
    if (!has_lo || !has_hi) throw internal_error("bounded polygon without x bounds on a row");
    Rational a = xlo.ceil(), b = xhi.floor();
    if (a <= b) count += b.num() - a.num() + 1;
  }
  return Rational(count, mpz_class(1));
}

WeightPair donaldson_weights(const Polytope& P, const ToricSubscheme& Z, const Rational& c) {
  validate_subscheme(P, Z);
  if (c.sign() <= 0) throw invalid_input("filtration parameter c must be positive");
  if (c > subscheme_g_max(P, Z))
    throw invalid_input("parameter c exceeds the maximum of g on the polytope");

  // b0 = -int_P min(c, g): split at the level set {g = c}.
  Rational interior(0);
  if (auto upper = clipped_slice(P, Z, c)) interior += c * area_of(*upper);
  if (auto lower = clipped_below(P, Z, c)) interior += integrate_affine(*lower, Z);

  Rational boundary(0);
  for (std::size_t i = 0; i < P.vertices.size(); ++i) {
    const Vec2& a = P.vertices[i];
    const Vec2& b = P.vertices[(i + 1) % P.vertices.size()];
    boundary += lattice_length(a, b) * edge_min_integral(c, subscheme_g(Z, a), subscheme_g(Z, b));
  }
  return {-interior, -boundary / 2};
}

WeightPair donaldson_to_engine(const WeightPair& w, const SlopeProfile& prof, const Rational& c) {
  return {-w.b0 - c * prof.a0_at0(), -w.b1 - c * prof.a1_at0()};
}

Rational toric_surface_seshadri(const Polytope& P, const ToricSubscheme& Z) {
  validate_subscheme(P, Z);
  std::size_t m = P.facets.size();
  std::vector<Rational> shift(m, Rational(0));
  for (const auto& f : Z.faces) {
    bool matched = false;
    for (std::size_t j = 0; j < m; ++j) {
      const Halfspace& h = P.facets[j];
      if (h.nx == f.ux && h.ny == f.uy && h.offset == f.offset) {
        shift[j] += Rational(f.multiplicity);
        matched = true;
        break;
      }
    }
    if (!matched)
      throw invalid_input("Seshadri bound needs a divisorial subscheme (facet conormals only)");
  }

  // Vertex between facets j and j+1 as an affine function of c, solved at
  // c = 0 and c = 1 (Cramer is affine in the offsets).
  auto vertex_at = [&](std::size_t j, const Rational& c) {
    std::size_t jn = (j + 1) % m;
    auto p = line_intersect(P.facets[j], P.facets[j].offset + c * shift[j], P.facets[jn],
                            P.facets[jn].offset + c * shift[jn]);
    if (!p) throw internal_error("adjacent facet lines are parallel");
    return *p;
  };

  bool any = false;
  Rational eps;
  for (std::size_t j = 0; j < m; ++j) {
    // Edge j runs from vertex(j-1, j) to vertex(j, j+1) along direction w_j.
    std::size_t jp = (j + m - 1) % m;
    Vec2 d0 = sub(vertex_at(j, Rational(0)), vertex_at(jp, Rational(0)));
    Vec2 d1 = sub(vertex_at(j, Rational(1)), vertex_at(jp, Rational(1)));
    Vec2 w = sub(P.vertices[(j + 1) % m], P.vertices[j]);
    Rational wl = lattice_length(P.vertices[j], P.vertices[(j + 1) % m]);
    // signed multiples of the primitive direction w / wl
    Rational t0 = w.x.is_zero() ? d0.y / (w.y / wl) : d0.x / (w.x / wl);
    Rational t1 = w.x.is_zero() ? d1.y / (w.y / wl) : d1.x / (w.x / wl);
    Rational slope = t1 - t0;
    if (slope.sign() >= 0) continue;  // this curve's degree never drops
    Rational root = t0 / (t0 - t1);
    eps = any ? min(eps, root) : root;
    any = true;
  }
  if (!any) throw internal_error("effective divisor never obstructs nefness");
  return eps;
}

std::vector<ScanHit> destabilizer_scan(const Polytope& P, int budget) {
  if (budget < 1) throw invalid_input("scan budget must be >= 1");
  std::size_t m = P.facets.size();
  std::size_t max_size = std::min<std::size_t>(static_cast<std::size_t>(budget), m);

  std::vector<ScanHit> hits;

  // Enumerate facet subsets of each size in lexicographic order.
  auto run_candidate = [&](const std::vector<std::size_t>& support,
                           const std::vector<long>& mults) {
    ToricSubscheme Z;
    for (std::size_t i = 0; i < support.size(); ++i) {
      const Halfspace& h = P.facets[support[i]];
      Z.faces.push_back(FaceWeight{h.nx, h.ny, h.offset, mults[i]});
    }
    if (!subscheme_g_min(P, Z).is_zero()) return;  // nothing vanishes: empty configuration

    SlopeProfile prof = toric_profile(P, Z);
    Rational gmax = prof.eps().value;

    std::vector<Rational> grid;
    const auto& br = prof.a0().breaks();
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
      if (br[i].sign() > 0) grid.push_back(br[i]);
      grid.push_back((br[i] + br[i + 1]) / 2);
    }
    grid.push_back(gmax);
    Rational epsd = toric_surface_seshadri(P, Z);
    if (epsd.sign() > 0 && epsd <= gmax) grid.push_back(epsd);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    bool first = true;
    Rational best_f, best_c;
    for (const auto& c : grid) {
      Rational f1 = futaki(prof, c);
      if (first || f1 < best_f) {
        best_f = f1;
        best_c = c;
        first = false;
      }
    }
    if (first) return;
    Rational a00 = prof.a0_at0();
    ScanHit hit;
    hit.facet_idx = support;
    hit.mults = mults;
    hit.c = best_c;
    hit.futaki = best_f;
    hit.margin = -a00 * a00 * best_f;
    hit.Z = std::move(Z);
    hits.push_back(std::move(hit));
  };

  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<std::size_t> comb(size);
    for (std::size_t i = 0; i < size; ++i) comb[i] = i;
    while (true) {
      std::vector<long> mults(size, 1);
      while (true) {
        run_candidate(comb, mults);
        std::size_t pos = size;
        while (pos > 0 && mults[pos - 1] == budget) --pos;
        if (pos == 0) break;
        ++mults[pos - 1];
        for (std::size_t q = pos; q < size; ++q) mults[q] = 1;
      }
      std::size_t pos = size;
      while (pos > 0 && comb[pos - 1] == m - size + (pos - 1)) --pos;
      if (pos == 0) break;
      ++comb[pos - 1];
      for (std::size_t q = pos; q < size; ++q) comb[q] = comb[q - 1] + 1;
    }
  }

  std::sort(hits.begin(), hits.end(), [](const ScanHit& a, const ScanHit& b) {
    if (a.futaki != b.futaki) return a.futaki < b.futaki;
    if (a.facet_idx != b.facet_idx) return a.facet_idx < b.facet_idx;
    if (a.mults != b.mults) return a.mults < b.mults;
    return a.c < b.c;
  });
  return hits;
}

}  // namespace slope
