#include "templikit/io/io.hpp"

#include <fstream>
#include <sstream>

#include "templikit/errors.hpp"

namespace templikit::io {

using coeff::Matrix;
using coeff::Module;
using coeff::Morphism;
using coeff::Ring;
using coeff::Scalar;
using quiver::Quiver;
using quiver::QuiverMorphism;
using templicial::TemplicialModule;

namespace {

std::string num(long long v) { return std::to_string(v); }

long long parse_int(const json& j, const std::string& what) {
  if (!j.is_string()) throw ValidationError(what + " must be a decimal string");
  const std::string s = j.get<std::string>();
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw ValidationError(what + " is not a decimal integer: '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ValidationError(what + " is not a decimal integer: '" + s + "'");
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

json components(const QuiverMorphism& f) {
  const Ring& R = f.domain().ring();
  json out = json::array();
  const auto& S = f.domain().vertices();
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = 0; b < S.size(); ++b) {
      const Matrix& m = f.component(a, b).matrix();
      if (m.rows() == 0 || m.cols() == 0) continue;
      json rows = json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(R.format_element(m(i, c)));
        rows.push_back(std::move(row));
      }
      json comp;
      comp["a"] = S[a];
      comp["b"] = S[b];
      comp["rows"] = num(static_cast<long long>(m.rows()));
      comp["cols"] = num(static_cast<long long>(m.cols()));
      comp["entries"] = std::move(rows);
      out.push_back(std::move(comp));
    }
  return out;
}

std::size_t vertex_index(const std::vector<std::string>& S, const json& j) {
  if (!j.is_string()) throw ValidationError("vertex must be a string");
  auto it = std::find(S.begin(), S.end(), j.get<std::string>());
  if (it == S.end()) throw ValidationError("unknown vertex '" + j.get<std::string>() + "'");
  return static_cast<std::size_t>(it - S.begin());
}

template <class Setter>
void read_components(const Ring& R, const std::vector<std::string>& S, const Quiver& dom, const Quiver& cod,
                     const json& comps, const std::string& what, Setter set) {
  if (!comps.is_array()) throw ValidationError(what + ": components must be a list");
  for (const auto& c : comps) {
    const std::size_t a = vertex_index(S, field(c, "a"));
    const std::size_t b = vertex_index(S, field(c, "b"));
    const auto rows = static_cast<std::size_t>(parse_int(field(c, "rows"), what + " rows"));
    const auto cols = static_cast<std::size_t>(parse_int(field(c, "cols"), what + " cols"));
    if (rows != cod.hom(a, b).gens() || cols != dom.hom(a, b).gens())
      throw ValidationError(what + " component (" + S[a] + "," + S[b] + ") has dimensions " + std::to_string(rows) +
                            "x" + std::to_string(cols) + ", expected " + std::to_string(cod.hom(a, b).gens()) + "x" +
                            std::to_string(dom.hom(a, b).gens()));
    const json& entries = field(c, "entries");
    if (!entries.is_array() || entries.size() != rows) throw ValidationError(what + ": wrong number of rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!entries[i].is_array() || entries[i].size() != cols) throw ValidationError(what + ": wrong number of columns");
      for (std::size_t k = 0; k < cols; ++k) {
        if (!entries[i][k].is_string()) throw ValidationError(what + ": entries must be strings");
        m(i, k) = R.parse_element(entries[i][k].get<std::string>());
      }
    }
    set(a, b, Morphism(dom.hom(a, b), cod.hom(a, b), std::move(m)));
  }
}

}  // namespace

json to_json(const TemplicialModule& X) {
  const auto& S = X.vertices();
  const int N = X.max_level();
  json j;
  j["format_version"] = kFormatVersion;
  j["ring"] = X.ring().name();
  j["vertices"] = S;
  j["max_level"] = num(N);
  json levels = json::array();
  for (int n = 1; n <= N; ++n) {
    json homs = json::array();
    for (std::size_t a = 0; a < S.size(); ++a)
      for (std::size_t b = 0; b < S.size(); ++b) {
        const Module& M = X.level(n).hom(a, b);
        if (M.gens() == 0) continue;
        json h;
        h["a"] = S[a];
        h["b"] = S[b];
        json ann = json::array();
        for (const auto& x : M.annihilators()) ann.push_back(X.ring().format_element(x));
        h["annihilators"] = std::move(ann);
        homs.push_back(std::move(h));
      }
    json level;
    level["n"] = num(n);
    level["homs"] = std::move(homs);
    levels.push_back(std::move(level));
  }
  j["levels"] = std::move(levels);
  json faces = json::array();
  for (int n = 2; n <= N; ++n)
    for (int i = 1; i < n; ++i)
      faces.push_back({{"n", num(n)}, {"j", num(i)}, {"components", components(X.face(n, i))}});
  j["faces"] = std::move(faces);
  json degens = json::array();
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i)
      degens.push_back({{"n", num(n)}, {"i", num(i)}, {"components", components(X.degeneracy(n, i))}});
  j["degeneracies"] = std::move(degens);
  json comults = json::array();
  for (int k = 1; k < N; ++k)
    for (int l = 1; k + l <= N; ++l)
      comults.push_back({{"k", num(k)}, {"l", num(l)}, {"components", components(X.comultiplication(k, l))}});
  j["comultiplications"] = std::move(comults);
  return j;
}

TemplicialModule templicial_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("instance must be a JSON object");
  if (field(j, "format_version") != kFormatVersion) throw ValidationError("unsupported format_version");
  const Ring R = Ring::parse(field(j, "ring").get<std::string>());
  const json& vj = field(j, "vertices");
  if (!vj.is_array() || vj.empty()) throw ValidationError("vertices must be a non-empty list");
  std::vector<std::string> S;
  for (const auto& v : vj) {
    if (!v.is_string()) throw ValidationError("vertex names must be strings");
    if (std::find(S.begin(), S.end(), v.get<std::string>()) != S.end()) throw ValidationError("duplicate vertex name");
    S.push_back(v.get<std::string>());
  }
  const int N = static_cast<int>(parse_int(field(j, "max_level"), "max_level"));
  if (N < 1 || N > 12) throw ValidationError("max_level must lie between 1 and 12");
  TemplicialModule X(R, S, N);
  const json& levels = field(j, "levels");
  if (!levels.is_array() || levels.size() != static_cast<std::size_t>(N))
    throw ValidationError("expected one entry per level 1.." + std::to_string(N));
  for (const auto& level : levels) {
    const int n = static_cast<int>(parse_int(field(level, "n"), "level n"));
    if (n < 1 || n > N) throw ValidationError("level index out of range");
    Quiver q(R, S);
    for (const auto& h : field(level, "homs")) {
      std::vector<Scalar> ann;
      for (const auto& x : field(h, "annihilators")) {
        if (!x.is_string()) throw ValidationError("annihilators must be strings");
        ann.push_back(R.parse_element(x.get<std::string>()));
      }
      q.set_hom(vertex_index(S, field(h, "a")), vertex_index(S, field(h, "b")), Module(R, std::move(ann)));
    }
    X.set_level(n, std::move(q));
  }
  for (const auto& f : field(j, "faces")) {
    const int n = static_cast<int>(parse_int(field(f, "n"), "face n"));
    const int i = static_cast<int>(parse_int(field(f, "j"), "face j"));
    if (n < 2 || n > N || i < 1 || i >= n) throw ValidationError("face index out of range");
    read_components(R, S, X.level(n), X.level(n - 1), field(f, "components"),
                    "face (" + std::to_string(n) + "," + std::to_string(i) + ")",
                    [&](std::size_t a, std::size_t b, Morphism m) { X.set_face(n, i, a, b, std::move(m)); });
  }
  for (const auto& f : field(j, "degeneracies")) {
    const int n = static_cast<int>(parse_int(field(f, "n"), "degeneracy n"));
    const int i = static_cast<int>(parse_int(field(f, "i"), "degeneracy i"));
    if (n < 0 || n >= N || i < 0 || i > n) throw ValidationError("degeneracy index out of range");
    read_components(R, S, X.level(n), X.level(n + 1), field(f, "components"),
                    "degeneracy (" + std::to_string(n) + "," + std::to_string(i) + ")",
                    [&](std::size_t a, std::size_t b, Morphism m) { X.set_degeneracy(n, i, a, b, std::move(m)); });
  }
  for (const auto& f : field(j, "comultiplications")) {
    const int k = static_cast<int>(parse_int(field(f, "k"), "comultiplication k"));
    const int l = static_cast<int>(parse_int(field(f, "l"), "comultiplication l"));
    if (k < 1 || l < 1 || k + l > N) throw ValidationError("comultiplication index out of range");
    read_components(R, S, X.level(k + l), X.tensor_levels({k, l}), field(f, "components"),
                    "comultiplication (" + std::to_string(k) + "," + std::to_string(l) + ")",
                    [&](std::size_t a, std::size_t b, Morphism m) { X.set_comultiplication(k, l, a, b, std::move(m)); });
  }
  return X;
}

deform::DeformationPair Instance::pair() const {
  if (!deformation) throw ValidationError("instance has no deformation block");
  return {coeff::RingExtension::parse(deformation->extension), module, deformation->fiber, std::nullopt};
}

json to_json(const Instance& inst) {
  json j = to_json(inst.module);
  if (inst.deformation) {
    json d;
    d["extension"] = inst.deformation->extension;
    d["fiber"] = to_json(inst.deformation->fiber);
    j["deformation"] = std::move(d);
  }
  return j;
}

Instance instance_from_json(const json& j) {
  Instance inst{templicial_from_json(j), std::nullopt};
  if (j.contains("deformation")) {
    const json& d = j.at("deformation");
    const json& ext = field(d, "extension");
    if (!ext.is_string()) throw ValidationError("deformation extension must be a string");
    inst.deformation = Instance::Deformation{ext.get<std::string>(), templicial_from_json(field(d, "fiber"))};
    auto theta = coeff::RingExtension::parse(inst.deformation->extension);
    if (theta.source() != inst.module.ring() || theta.target() != inst.deformation->fiber.ring())
      throw ValidationError("deformation extension does not match the rings of the instance and its fiber");
  }
  return inst;
}

std::string serialize(const Instance& inst) { return to_json(inst).dump(2) + "\n"; }

Instance parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return instance_from_json(j);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed instance: ") + e.what());
  }
}

Instance read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_file(const std::string& path, const Instance& inst) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << serialize(inst);
}

json to_json(const kan::CheckReport& report) {
  json j;
  j["property"] = report.property;
  j["verdict"] = kan::verdict_name(report.verdict);
  json results = json::array();
  std::size_t failed = 0;
  for (const auto& r : report.results) {
    json x;
    x["index"] = r.index;
    x["passed"] = r.passed;
    if (!r.detail.empty()) x["detail"] = r.detail;
    if (r.witness) x["cokernel"] = r.witness->to_string();
    failed += !r.passed;
    results.push_back(std::move(x));
  }
  j["checked"] = std::to_string(report.results.size());
  j["failed"] = std::to_string(failed);
  j["results"] = std::move(results);
  j["notes"] = report.notes;
  return j;
}

json to_json(const templicial::ValidationReport& report) {
  json j;
  j["property"] = "validation";
  j["verdict"] = report.passed() ? "pass" : "fail";
  json v = json::array();
  for (const auto& x : report.violations) v.push_back({{"identity", x.identity}, {"indices", x.indices}, {"detail", x.detail}});
  j["violations"] = std::move(v);
  return j;
}

}  // namespace templikit::io
