#include "slope/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "slope/errors.hpp"

namespace slope {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void field_error(const std::string& field, const std::string& msg) {
  throw invalid_input("field '" + field + "': " + msg);
}

Rational parse_rat(const std::string& field, const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const invalid_input& e) {
    field_error(field, e.what());
  }
}

long parse_long(const std::string& field, const std::string& s) {
  Rational r = parse_rat(field, s);
  if (!r.is_integer()) field_error(field, "expected an integer, got '" + s + "'");
  return static_cast<long>(r.to_long());
}

std::vector<Rational> parse_rat_list(const std::string& field, const std::string& s) {
  std::vector<Rational> out;
  for (const auto& tok : split_ws(s)) out.push_back(parse_rat(field, tok));
  return out;
}

SeshadriBound parse_eps(const std::string& field, const std::string& s) {
  auto toks = split_ws(s);
  if (toks.size() == 1 && toks[0] == "unknown") return SeshadriBound::unknown();
  if (toks.size() == 2 && toks[0] == "exact") return SeshadriBound::exact(parse_rat(field, toks[1]));
  if (toks.size() == 2 && toks[0] == "lower")
    return SeshadriBound::lower_bound(parse_rat(field, toks[1]));
  field_error(field, "expected 'unknown', 'exact p/q' or 'lower p/q'");
}

Saturation parse_sat(const std::string& field, const std::string& s) {
  if (s == "yes") return Saturation::Yes;
  if (s == "no") return Saturation::No;
  if (s == "unknown") return Saturation::Unknown;
  field_error(field, "expected 'yes', 'no' or 'unknown'");
}

// Per-piece coefficient lists, constant term first, pieces separated by '|'.
std::vector<Polynomial> parse_pieces(const std::string& field, const std::string& s) {
  std::vector<Polynomial> out;
  std::string current;
  std::istringstream in(s);
  std::string segment;
  std::vector<std::string> segs;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = s.find('|', start);
    segs.push_back(s.substr(start, bar == std::string::npos ? bar : bar - start));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  for (const auto& seg : segs) {
    auto coeffs = parse_rat_list(field, seg);
    if (coeffs.empty()) field_error(field, "empty coefficient list");
    out.push_back(Polynomial(std::move(coeffs)));
  }
  return out;
}

struct KV {
  std::string key, value;
  int line;
};

const std::map<std::string, std::set<std::string>>& allowed_fields() {
  static const std::map<std::string, std::set<std::string>> table = {
      {"surface_curve", {"KL", "L2", "LZ", "KZ", "Z2", "genus", "epsilon"}},
      {"divisor", {"n", "LnjZj", "LZK", "epsilon"}},
      {"curve_in_nfold", {"n", "genus", "LZ", "c1nu", "Ln", "KLn1", "epsilon"}},
      {"smooth_curve", {"genus", "degL", "d"}},
      {"toric", {"facet", "face"}},
      {"bundle", {"base_genus", "base_deg", "E", "subsheaf", "m"}},
      {"raw_profile", {"dim", "breaks", "a0", "a1", "epsilon", "saturates"}},
  };
  return table;
}

}  // namespace

std::string kind_name(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::SurfaceCurve: return "surface_curve";
    case ScenarioKind::Divisor: return "divisor";
    case ScenarioKind::CurveInNfold: return "curve_in_nfold";
    case ScenarioKind::SmoothCurve: return "smooth_curve";
    case ScenarioKind::Toric: return "toric";
    case ScenarioKind::Bundle: return "bundle";
    case ScenarioKind::RawProfile: return "raw_profile";
  }
  return "unknown";
}

Scenario parse_scenario_text(const std::string& text) {
  std::vector<KV> entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw invalid_input("line " + std::to_string(lineno) + ": expected 'key = value'");
    KV kv{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), lineno};
    if (kv.key.empty()) throw invalid_input("line " + std::to_string(lineno) + ": empty key");
    entries.push_back(std::move(kv));
  }

  Scenario s;
  std::string kind;
  for (const auto& kv : entries)
    if (kv.key == "kind") {
      if (!kind.empty()) throw invalid_input("field 'kind': given twice");
      kind = kv.value;
    }
  if (kind.empty()) throw invalid_input("field 'kind': missing");

  if (kind == "surface_curve") s.kind = ScenarioKind::SurfaceCurve;
  else if (kind == "divisor") s.kind = ScenarioKind::Divisor;
  else if (kind == "curve_in_nfold") s.kind = ScenarioKind::CurveInNfold;
  else if (kind == "smooth_curve") s.kind = ScenarioKind::SmoothCurve;
  else if (kind == "toric") s.kind = ScenarioKind::Toric;
  else if (kind == "bundle") s.kind = ScenarioKind::Bundle;
  else if (kind == "raw_profile") s.kind = ScenarioKind::RawProfile;
  else throw invalid_input("field 'kind': unknown kind '" + kind + "'");

  const std::set<std::string>& allowed = allowed_fields().at(kind);
  std::set<std::string> seen;
  bool sawE = false, sawM = false;

  for (const auto& kv : entries) {
    const std::string& k = kv.key;
    const std::string& v = kv.value;
    if (k == "kind") continue;
    if (k == "tag") { s.tag = v; continue; }
    if (k == "title") { s.title = v; continue; }
    if (k == "c") { s.c = parse_rat("c", v); continue; }
    if (!allowed.count(k))
      throw invalid_input("unknown field '" + k + "' for kind '" + kind + "'");
    bool repeatable = (k == "facet" || k == "face" || k == "subsheaf");
    if (!repeatable && !seen.insert(k).second)
      throw invalid_input("field '" + k + "': given twice");

    switch (s.kind) {
      case ScenarioKind::SurfaceCurve: {
        if (k == "KL") s.surface.KL = parse_rat(k, v);
        else if (k == "L2") s.surface.L2 = parse_rat(k, v);
        else if (k == "LZ") s.surface.LZ = parse_rat(k, v);
        else if (k == "KZ") s.surface.KZ = parse_rat(k, v);
        else if (k == "Z2") s.surface.Z2 = parse_rat(k, v);
        else if (k == "genus") s.surface.genus = parse_long(k, v);
        else if (k == "epsilon") s.surface.epsilon = parse_eps(k, v);
        break;
      }
      case ScenarioKind::Divisor: {
        if (k == "n") s.divisor.n = static_cast<int>(parse_long(k, v));
        else if (k == "LnjZj") s.divisor.LnjZj = parse_rat_list(k, v);
        else if (k == "LZK") s.divisor.LZK = parse_rat_list(k, v);
        else if (k == "epsilon") s.divisor.epsilon = parse_eps(k, v);
        break;
      }
      case ScenarioKind::CurveInNfold: {
        if (k == "n") s.curve.n = static_cast<int>(parse_long(k, v));
        else if (k == "genus") s.curve.genus = parse_long(k, v);
        else if (k == "LZ") s.curve.LZ = parse_rat(k, v);
        else if (k == "c1nu") s.curve.c1nu = parse_rat(k, v);
        else if (k == "Ln") s.curve.Ln = parse_rat(k, v);
        else if (k == "KLn1") s.curve.KLn1 = parse_rat(k, v);
        else if (k == "epsilon") s.curve.epsilon = parse_eps(k, v);
        break;
      }
      case ScenarioKind::SmoothCurve: {
        if (k == "genus") s.smooth.genus = parse_long(k, v);
        else if (k == "degL") s.smooth.degL = parse_rat(k, v);
        else if (k == "d") s.smooth.d = parse_rat(k, v);
        break;
      }
      case ScenarioKind::Toric: {
        auto toks = split_ws(v);
        if (k == "facet") {
          if (toks.size() != 3) field_error(k, "expected 'nx ny offset'");
          Halfspace h;
          h.nx = parse_long(k, toks[0]);
          h.ny = parse_long(k, toks[1]);
          h.offset = parse_rat(k, toks[2]);
          s.toric.facets.push_back(h);
        } else {  // face
          if (toks.size() != 4) field_error(k, "expected 'ux uy offset multiplicity'");
          FaceWeight f;
          f.ux = parse_long(k, toks[0]);
          f.uy = parse_long(k, toks[1]);
          f.offset = parse_rat(k, toks[2]);
          f.multiplicity = parse_long(k, toks[3]);
          s.toric.Z.faces.push_back(f);
        }
        break;
      }
      case ScenarioKind::Bundle: {
        if (k == "base_genus" || k == "base_deg") {
          // handled after the loop so genus/deg order does not matter
        } else if (k == "E") {
          auto toks = split_ws(v);
          if (toks.size() != 2) field_error(k, "expected 'rank deg'");
          s.bundle.E.rank = parse_long(k, toks[0]);
          s.bundle.E.deg = parse_rat(k, toks[1]);
          sawE = true;
        } else if (k == "subsheaf") {
          auto toks = split_ws(v);
          if (toks.size() < 2 || toks.size() > 4) field_error(k, "expected 'rank deg [nosplit] [label]'");
          SubsheafEntry sub;
          sub.F.rank = parse_long(k, toks[0]);
          sub.F.deg = parse_rat(k, toks[1]);
          std::size_t i = 2;
          if (i < toks.size() && toks[i] == "nosplit") {
            sub.not_direct_summand = true;
            ++i;
          }
          if (i < toks.size()) sub.label = toks[i++];
          if (i != toks.size()) field_error(k, "unexpected trailing tokens");
          s.bundle.subsheaves.push_back(std::move(sub));
        } else if (k == "m") {
          s.bundle.m = parse_rat(k, v);
          sawM = true;
        }
        break;
      }
      case ScenarioKind::RawProfile: {
        if (k == "dim") s.raw.dim = static_cast<int>(parse_long(k, v));
        else if (k == "breaks") s.raw.breaks = parse_rat_list(k, v);
        else if (k == "a0") s.raw.a0 = parse_pieces(k, v);
        else if (k == "a1") s.raw.a1 = parse_pieces(k, v);
        else if (k == "epsilon") s.raw.eps = parse_eps(k, v);
        else if (k == "saturates") s.raw.sat = parse_sat(k, v);
        break;
      }
    }
  }

  auto require = [&](const char* f) {
    if (!seen.count(f)) throw invalid_input(std::string("field '") + f + "': missing");
  };
  switch (s.kind) {
    case ScenarioKind::SurfaceCurve:
      require("KL"); require("L2"); require("LZ"); require("KZ"); require("Z2");
      break;
    case ScenarioKind::Divisor:
      require("n"); require("LnjZj"); require("LZK");
      break;
    case ScenarioKind::CurveInNfold:
      require("n"); require("genus"); require("LZ"); require("c1nu");
      break;
    case ScenarioKind::SmoothCurve:
      require("genus"); require("degL"); require("d");
      break;
    case ScenarioKind::Toric:
      if (s.toric.facets.empty()) throw invalid_input("field 'facet': missing");
      if (s.toric.Z.faces.empty()) throw invalid_input("field 'face': missing");
      break;
    case ScenarioKind::Bundle: {
      long bg = 0;
      Rational bd;
      bool saw_bg = false, saw_bd = false;
      for (const auto& kv : entries) {
        if (kv.key == "base_genus") { bg = parse_long(kv.key, kv.value); saw_bg = true; }
        if (kv.key == "base_deg") { bd = parse_rat(kv.key, kv.value); saw_bd = true; }
      }
      if (!saw_bg) throw invalid_input("field 'base_genus': missing");
      if (!saw_bd) throw invalid_input("field 'base_deg': missing");
      if (!sawE) throw invalid_input("field 'E': missing");
      if (!sawM) throw invalid_input("field 'm': missing");
      s.bundle.base = curve_base(bg, bd);
      break;
    }
    case ScenarioKind::RawProfile:
      require("dim"); require("breaks"); require("a0"); require("a1");
      break;
  }
  return s;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

std::optional<SlopeProfile> scenario_profile(const Scenario& s) {
  switch (s.kind) {
    case ScenarioKind::SurfaceCurve: return surface_curve_profile(s.surface);
    case ScenarioKind::Divisor: return divisor_profile(s.divisor);
    case ScenarioKind::CurveInNfold:
      if (s.curve.Ln && s.curve.KLn1) return curve_in_nfold_profile(s.curve);
      return std::nullopt;
    case ScenarioKind::SmoothCurve:
      return smooth_curve_profile(s.smooth.genus, s.smooth.degL, s.smooth.d);
    case ScenarioKind::Toric:
      return toric_profile(make_polytope(s.toric.facets), s.toric.Z);
    case ScenarioKind::Bundle:
      if (s.bundle.subsheaves.empty()) return std::nullopt;
      return profile_from_bundle(s.bundle, s.bundle.subsheaves.front());
    case ScenarioKind::RawProfile: {
      PiecewisePolynomial a0(s.raw.breaks, s.raw.a0);
      PiecewisePolynomial a1(s.raw.breaks, s.raw.a1);
      return SlopeProfile(s.raw.dim, std::move(a0), std::move(a1), s.raw.eps, s.raw.sat);
    }
  }
  return std::nullopt;
}

namespace {

std::string eps_text(const SeshadriBound& e) {
  switch (e.kind) {
    case SeshadriBound::Kind::Exact: return "exact " + e.value.str();
    case SeshadriBound::Kind::LowerBound: return "lower " + e.value.str();
    case SeshadriBound::Kind::Unknown: return "unknown";
  }
  return "unknown";
}

std::string rat_list(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += v[i].str();
  }
  return out;
}

std::string piece_list(const std::vector<Polynomial>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += " | ";
    const auto& c = ps[i].coeffs();
    if (c.empty()) out += "0";
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out += " ";
      out += c[j].str();
    }
  }
  return out;
}

}  // namespace

std::string scenario_echo(const Scenario& s) {
  std::ostringstream out;
  out << "kind = " << kind_name(s.kind) << "\n";
  if (!s.tag.empty()) out << "tag = " << s.tag << "\n";
  if (!s.title.empty()) out << "title = " << s.title << "\n";
  switch (s.kind) {
    case ScenarioKind::SurfaceCurve:
      out << "KL = " << s.surface.KL.str() << "\n";
      out << "L2 = " << s.surface.L2.str() << "\n";
      out << "LZ = " << s.surface.LZ.str() << "\n";
      out << "KZ = " << s.surface.KZ.str() << "\n";
      out << "Z2 = " << s.surface.Z2.str() << "\n";
      if (s.surface.genus) out << "genus = " << *s.surface.genus << "\n";
      out << "epsilon = " << eps_text(s.surface.epsilon) << "\n";
      break;
    case ScenarioKind::Divisor:
      out << "n = " << s.divisor.n << "\n";
      out << "LnjZj = " << rat_list(s.divisor.LnjZj) << "\n";
      out << "LZK = " << rat_list(s.divisor.LZK) << "\n";
      out << "epsilon = " << eps_text(s.divisor.epsilon) << "\n";
      break;
    case ScenarioKind::CurveInNfold:
      out << "n = " << s.curve.n << "\n";
      out << "genus = " << s.curve.genus << "\n";
      out << "LZ = " << s.curve.LZ.str() << "\n";
      out << "c1nu = " << s.curve.c1nu.str() << "\n";
      if (s.curve.Ln) out << "Ln = " << s.curve.Ln->str() << "\n";
      if (s.curve.KLn1) out << "KLn1 = " << s.curve.KLn1->str() << "\n";
      out << "epsilon = " << eps_text(s.curve.epsilon) << "\n";
      break;
    case ScenarioKind::SmoothCurve:
      out << "genus = " << s.smooth.genus << "\n";
      out << "degL = " << s.smooth.degL.str() << "\n";
      out << "d = " << s.smooth.d.str() << "\n";
      break;
    case ScenarioKind::Toric:
      for (const auto& h : s.toric.facets)
        out << "facet = " << h.nx << " " << h.ny << " " << h.offset.str() << "\n";
      for (const auto& f : s.toric.Z.faces)
        out << "face = " << f.ux << " " << f.uy << " " << f.offset.str() << " "
            << f.multiplicity << "\n";
      break;
    case ScenarioKind::Bundle: {
      // reconstruct genus from muB * a0B = 1 - g
      Rational oneg = s.bundle.base.muB * s.bundle.base.a0B;
      out << "base_genus = " << (Rational(1) - oneg).str() << "\n";
      out << "base_deg = " << s.bundle.base.a0B.str() << "\n";
      out << "E = " << s.bundle.E.rank << " " << s.bundle.E.deg.str() << "\n";
      for (const auto& sub : s.bundle.subsheaves) {
        out << "subsheaf = " << sub.F.rank << " " << sub.F.deg.str();
        if (sub.not_direct_summand) out << " nosplit";
        if (!sub.label.empty()) out << " " << sub.label;
        out << "\n";
      }
      out << "m = " << s.bundle.m.str() << "\n";
      break;
    }
    case ScenarioKind::RawProfile:
      out << "dim = " << s.raw.dim << "\n";
      out << "breaks = " << rat_list(s.raw.breaks) << "\n";
      out << "a0 = " << piece_list(s.raw.a0) << "\n";
      out << "a1 = " << piece_list(s.raw.a1) << "\n";
      out << "epsilon = " << eps_text(s.raw.eps) << "\n";
      out << "saturates = "
          << (s.raw.sat == Saturation::Yes ? "yes"
                                           : s.raw.sat == Saturation::No ? "no" : "unknown")
          << "\n";
      break;
  }
  if (s.c) out << "c = " << s.c->str() << "\n";
  return out.str();
}

}  // namespace slope
