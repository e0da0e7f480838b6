#include "koszul/serialize.hpp"

#include <fstream>
#include <sstream>

#include "koszul/errors.hpp"
#include "koszul/skew_map.hpp"

namespace koszul {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rat_to_string(x));
  return out;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  Vec v;
  v.reserve(j.size());
  for (const auto& x : j) {
    if (x.is_string())
      v.push_back(parse_rat(x.get<std::string>()));
    else if (x.is_number_integer())
      v.push_back(Rat(x.get<long long>()));
    else
      throw InputError("expected a rational entry");
  }
  return v;
}

CurveModel model_from_json(const Json& j) {
  if (!j.contains("kind")) throw InputError("model lacks a kind");
  std::string kind = j.at("kind").get<std::string>();
  CurveModel m;
  if (kind == "rational") {
    m = CurveModel::rational(j.at("degree").get<int>());
  } else if (kind == "quadric_presented") {
    int n = j.at("n_vars").get<int>();
    std::vector<QuadricForm> i2;
    for (const auto& qj : j.at("I2")) {
      Vec entries = vec_from_json(qj);
      if (static_cast<int>(entries.size()) != sym_dim(n))
        throw InputError("quadric entry list has wrong length");
      QuadricForm q;
      q.n_vars = n;
      int k = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b, ++k)
          if (entries[k] != 0) q.coeffs[{a, b}] = entries[k];
      i2.push_back(std::move(q));
    }
    m = CurveModel::quadric_presented(n, std::move(i2));
  } else {
    throw InputError("unknown model kind \"" + kind + "\"");
  }
  if (j.contains("canonical_mult")) {
    const auto& cj = j.at("canonical_mult");
    MixedFixture f;
    f.w = cj.at("w").get<int>();
    f.dimA = cj.at("dimA").get<int>();
    f.dimM = cj.at("dimM").get<int>();
    f.dimT = cj.at("dimT").get<int>();
    f.p = cj.at("p").get<int>();
    f.WA = BilinearTable(f.w, f.dimA, f.dimM);
    f.WM = BilinearTable(f.w, f.dimM, f.dimT);
    const auto& wa = cj.at("WA");
    const auto& wm = cj.at("WM");
    if (static_cast<int>(wa.size()) != f.w || static_cast<int>(wm.size()) != f.w)
      throw InputError("canonical tables have wrong row count");
    for (int i = 0; i < f.w; ++i) {
      for (int a = 0; a < f.dimA; ++a) {
        Vec v = vec_from_json(wa.at(i).at(a));
        if (static_cast<int>(v.size()) != f.dimM)
          throw InputError("canonical WA entry has wrong length");
        f.WA.val[i][a] = std::move(v);
      }
      for (int b = 0; b < f.dimM; ++b) {
        Vec v = vec_from_json(wm.at(i).at(b));
        if (static_cast<int>(v.size()) != f.dimT)
          throw InputError("canonical WM entry has wrong length");
        f.WM.val[i][b] = std::move(v);
      }
    }
    m.canonical = std::move(f);
  }
  return m;
}

CurveModel load_model(const std::string& path) {
  return model_from_json(load_json(path));
}

Json class_to_json(const KoszulClass& c) {
  Json out;
  out["p"] = c.p;
  out["ambient_dim"] = c.ambient_dim;
  if (c.value_dim != c.ambient_dim) out["value_dim"] = c.value_dim;
  Json coeffs = Json::array();
  for (const auto& [key, v] : c.coeffs) {
    Json e;
    e["wedge"] = key.first;
    e["v"] = key.second;
    e["c"] = rat_to_string(v);
    coeffs.push_back(std::move(e));
  }
  out["coeffs"] = std::move(coeffs);
  return out;
}

KoszulClass class_from_json(const Json& j) {
  int p = j.at("p").get<int>();
  int ambient = j.at("ambient_dim").get<int>();
  int value = j.contains("value_dim") ? j.at("value_dim").get<int>() : ambient;
  KoszulClass c(p, ambient, value);
  for (const auto& e : j.at("coeffs")) {
    Subset s = e.at("wedge").get<Subset>();
    WedgeIndex check(s, ambient);  // validates
    if (static_cast<int>(s.size()) != p)
      throw InputError("wedge size differs from p");
    c.add(s, e.at("v").get<int>(), parse_rat(e.at("c").get<std::string>()));
  }
  return c;
}

KoszulClass load_class(const std::string& path) {
  return class_from_json(load_json(path));
}

Json datum_to_json(const DeterminantDatum& d) {
  Json out;
  out["H_dim"] = d.H_dim;
  out["target_dim"] = d.d.target_dim;
  Json entries = Json::array();
  for (const auto& [ij, v] : d.d.values) {
    Json e;
    e["i"] = ij.first;
    e["j"] = ij.second;
    e["value"] = vec_to_json(v);
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  return out;
}

DeterminantDatum datum_from_json(const Json& j) {
  DeterminantDatum d;
  d.H_dim = j.at("H_dim").get<int>();
  int target = j.at("target_dim").get<int>();
  if (d.H_dim < 2) throw InputError("datum needs H_dim >= 2");
  d.d = SkewMap(d.H_dim, target);
  for (const auto& e : j.at("entries")) {
    Vec v = vec_from_json(e.at("value"));
    if (static_cast<int>(v.size()) != target)
      throw InputError("datum entry has wrong dimension");
    d.d.set(e.at("i").get<int>(), e.at("j").get<int>(), std::move(v));
  }
  return d;
}

DeterminantDatum load_datum(const std::string& path) {
  return datum_from_json(load_json(path));
}

std::vector<Vec> matrix_from_json(const Json& j) {
  const Json& rows = j.contains("matrix") ? j.at("matrix") : j;
  if (!rows.is_array()) throw InputError("expected an array of rows");
  std::vector<Vec> out;
  for (const auto& r : rows) out.push_back(vec_from_json(r));
  return out;
}

std::vector<Vec> load_matrix(const std::string& path) {
  return matrix_from_json(load_json(path));
}

std::vector<Vec> subspace_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of vectors");
  std::vector<Vec> out;
  for (const auto& r : j) out.push_back(vec_from_json(r));
  return out;
}

Json skew_to_json(const SkewMap& a) {
  Json out;
  out["h"] = a.h;
  out["target_dim"] = a.target_dim;
  Json entries = Json::array();
  for (const auto& [ij, v] : a.values) {
    Json e;
    e["i"] = ij.first;
    e["j"] = ij.second;
    e["value"] = vec_to_json(v);
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  return out;
}

std::string file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::uint64_t h = 1469598103934665603ULL;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace koszul
