#include "koszul/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "koszul/differential.hpp"
#include "koszul/errors.hpp"
#include "koszul/koszul_core.hpp"
#include "koszul/serialize.hpp"

namespace koszul {

namespace {

Vec parse_rat_list(const std::string& s) {
  Vec out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(parse_rat(tok));
  }
  if (out.empty()) throw InputError("empty coordinate list");
  return out;
}

int param_int(const JobSpec& job, const std::string& key) {
  auto it = job.params.find(key);
  if (it == job.params.end())
    throw InputError("missing parameter --" + key);
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw InputError("parameter --" + key + " is not an integer");
  }
}

std::string param_str(const JobSpec& job, const std::string& key) {
  auto it = job.params.find(key);
  if (it == job.params.end())
    throw InputError("missing parameter --" + key);
  return it->second;
}

bool has_param(const JobSpec& job, const std::string& key) {
  return job.params.count(key) > 0;
}

std::vector<int> genzero_primes() {
  std::vector<int> primes;
  if (const char* env = std::getenv("KOSZUL_GENZERO_PRIMES")) {
    std::stringstream ss(env);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) primes.push_back(std::stoi(tok));
  }
  if (primes.empty()) primes = {5, 7, 11};
  return primes;
}

Json report_head(const JobSpec& job) {
  Json rep;
  rep["command"] = job.command;
  if (!job.model_path.empty()) {
    rep["model"] = job.model_path;
    rep["model_hash"] = file_hash(job.model_path);
  }
  Json params = Json::object();
  for (const auto& [k, v] : job.params) params[k] = v;
  rep["params"] = std::move(params);
  return rep;
}

void emit(const JobSpec& job, const Json& rep, std::ostream& out) {
  if (job.json_output) {
    out << rep.dump() << "\n";
  } else {
    for (const auto& [k, v] : rep.items()) {
      if (k == "params" || k == "model_hash") continue;
      out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
          << "\n";
    }
  }
}

Json run_dims(const JobSpec& job) {
  CurveModel model = load_model(job.model_path);
  int p = param_int(job, "p");
  KoszulGroupReport r;
  if (has_param(job, "subspace")) {
    auto W = subspace_from_json(load_json(param_str(job, "subspace")));
    r = compute_K_p1_subspace(model.mult_table(), p, W);
  } else {
    r = compute_K_p1(model.mult_table(), p);
  }
  Json rep = report_head(job);
  rep["p"] = r.p;
  rep["dim"] = r.dim;
  rep["kernel_dim"] = r.kernel_dim;
  rep["boundary_dim"] = r.boundary_dim;
  if (has_param(job, "basis") && param_str(job, "basis") == "true") {
    Json basis = Json::array();
    for (const auto& c : r.cycle_basis) basis.push_back(class_to_json(c));
    rep["cycle_basis"] = std::move(basis);
  }
  return rep;
}

Json run_build_gl(const JobSpec& job) {
  CurveModel model = load_model(job.model_path);
  if (model.kind != CurveModel::Kind::rational)
    throw PreconditionError("build-gl needs a rational model");
  int d1 = param_int(job, "d1"), d2 = param_int(job, "d2");
  if (d1 + d2 != model.degree)
    throw PreconditionError("d1 + d2 must equal the model degree");
  Vec s1, s2;
  if (has_param(job, "s1-coeffs"))
    s1 = parse_rat_list(param_str(job, "s1-coeffs"));
  else {
    s1 = zero_vec(d1 + 1);
    s1[has_param(job, "s1") ? param_int(job, "s1") : 0] = 1;
  }
  if (has_param(job, "s2-coeffs"))
    s2 = parse_rat_list(param_str(job, "s2-coeffs"));
  else {
    s2 = zero_vec(d2 + 1);
    s2[has_param(job, "s2") ? param_int(job, "s2") : d2] = 1;
  }
  GlRationalResult r = build_gl_class_rational(d1, d2, s1, s2);
  const MultTable& mult = r.model.mult_table();
  bool nonzero = is_nonzero_class(mult, r.gl.cls);
  Json rep = report_head(job);
  rep["p"] = r.gl.p;
  rep["model_degree"] = r.model.degree;
  rep["d1"] = r.d1;
  rep["d2"] = r.d2;
  rep["nonzero"] = nonzero;
  rep["support_dim"] = static_cast<int>(support(r.gl.cls).size());
  rep["class"] = class_to_json(r.gl.cls);
  return rep;
}

Json run_build_voisin(const JobSpec& job) {
  CurveModel model = load_model(job.model_path);
  DeterminantDatum datum = load_datum(param_str(job, "datum"));
  Vec t = parse_rat_list(param_str(job, "t"));
  auto U = subspace_from_json(load_json(param_str(job, "U")));
  int p = param_int(job, "p");
  KoszulClass c = build_voisin_class(datum, model.mult_table(), t, U, p);
  Json rep = report_head(job);
  rep["p"] = p;
  rep["nonzero"] = is_nonzero_class(model.mult_table(), c);
  rep["class"] = class_to_json(c);
  return rep;
}

Json run_class_rank(const JobSpec& job) {
  CurveModel model = load_model(job.model_path);
  KoszulClass c = load_class(param_str(job, "class"));
  ClassRank r = class_rank(model.mult_table(), c);
  Json rep = report_head(job);
  rep["rank"] = r.rank;
  rep["exact"] = r.exact;
  if (r.certified_rep) rep["certified_rep"] = class_to_json(*r.certified_rep);
  return rep;
}

Json run_split_detect(const JobSpec& job) {
  CurveModel model = load_model(job.model_path);
  DeterminantDatum datum = load_datum(param_str(job, "datum"));
  Vec t = parse_rat_list(param_str(job, "t"));
  auto U = subspace_from_json(load_json(param_str(job, "U")));
  int p = param_int(job, "p");
  const MultTable& mult = model.mult_table();
  auto h = split_detect(datum, t, U, p);
  KoszulClass c = build_voisin_class(datum, mult, t, U, p);
  std::vector<Vec> W;
  for (const auto& u : U) W.push_back(datum.d.apply(t, u));
  Json rep = report_head(job);
  rep["h"] = h ? vec_to_json(*h) : Json(nullptr);
  rep["w_coboundary"] = is_w_coboundary(mult, c, W);
  rep["nonzero"] = is_nonzero_class(mult, c);
  return rep;
}

Json run_check_ks(const JobSpec& job) {
  CurveModel model = load_model(job.model_path);
  KoszulClass c = load_class(param_str(job, "class"));
  KSMatrix ks =
      has_param(job, "W")
          ? ks_matrix_from_class(c, subspace_from_json(load_json(param_str(job, "W"))))
          : ks_matrix_from_class(c);
  const MultTable& mult = model.mult_table();
  KsConditions cond = check_ks_conditions(ks, mult);
  Json rep = report_head(job);
  rep["i"] = cond.first_row_independent;
  rep["ii"] = cond.some_pfaffian_nonzero;
  rep["iii"] = cond.pfaffians_vanish;
  rep["matrix"] = skew_to_json(ks.A);
  return rep;
}

Json run_check_four_term(const JobSpec& job) {
  CurveModel model = load_model(job.model_path);
  DeterminantDatum datum = load_datum(param_str(job, "datum"));
  Json rep = report_head(job);
  rep["holds"] = check_four_term(datum, model.mult_table());
  return rep;
}

Json run_gen_zero(const JobSpec& job) {
  CurveModel model = load_model(job.model_path);
  (void)model;
  DeterminantDatum datum = load_datum(param_str(job, "datum"));
  auto r = has_generalized_zero(datum, genzero_primes());
  Json rep = report_head(job);
  if (const auto* w = std::get_if<GenZeroWitness>(&r)) {
    rep["witness"] = Json{{"u", vec_to_json(w->u)}, {"v", vec_to_json(w->v)}};
  } else {
    const auto& c = std::get<GenZeroCertificate>(r);
    Json cert;
    cert["primes_used"] = c.primes_used;
    cert["primes_skipped"] = c.primes_skipped;
    cert["points_enumerated"] = c.points_enumerated;
    cert["candidates_lifted"] = c.candidates_lifted;
    rep["none_found"] = std::move(cert);
  }
  return rep;
}

Json run_plucker(const JobSpec& job) {
  Json rep = report_head(job);
  PluckerReport r;
  if (has_param(job, "matrix")) {
    r = plucker_check_numeric(load_matrix(param_str(job, "matrix")));
  } else {
    CurveModel model = load_model(job.model_path);
    DeterminantDatum datum = load_datum(param_str(job, "datum"));
    r = plucker_check_symbolic(datum.d, model.mult_table());
  }
  rep["on_grassmannian"] = r.on_grassmannian;
  rep["on_linear_space"] = r.on_linear_space;
  return rep;
}

Json run_mu_coker(const JobSpec& job) {
  CurveModel model = load_model(job.model_path);
  if (!model.canonical)
    throw PreconditionError("model carries no canonical_mult block");
  const MixedFixture& f = *model.canonical;
  int coker = mu_cokernel(f.WM);
  KoszulGroupReport mixed = compute_K_p1_mixed(f.w, f.WA, f.WM, f.p);
  Json rep = report_head(job);
  rep["coker"] = coker;
  rep["p"] = f.p;
  rep["mixed_dim"] = mixed.dim;
  rep["equal"] = (coker == mixed.dim);
  return rep;
}

Json run_pfaffian(const JobSpec& job) {
  CurveModel model = load_model(job.model_path);
  DeterminantDatum datum = load_datum(param_str(job, "datum"));
  int i = param_int(job, "i"), j = param_int(job, "j");
  int k = param_int(job, "k"), l = param_int(job, "l");
  Json rep = report_head(job);
  rep["value"] = vec_to_json(pfaffian4(datum.d, model.mult_table(), i, j, k, l));
  rep["value_sym"] = vec_to_json(pfaffian4_sym(datum.d, i, j, k, l));
  return rep;
}

}  // namespace

int run_job(const JobSpec& job, std::ostream& out) {
  try {
    Json rep;
    if (job.command == "dims")
      rep = run_dims(job);
    else if (job.command == "build-gl")
      rep = run_build_gl(job);
    else if (job.command == "build-voisin")
      rep = run_build_voisin(job);
    else if (job.command == "class-rank")
      rep = run_class_rank(job);
    else if (job.command == "split-detect")
      rep = run_split_detect(job);
    else if (job.command == "check-ks")
      rep = run_check_ks(job);
    else if (job.command == "check-four-term")
      rep = run_check_four_term(job);
    else if (job.command == "gen-zero")
      rep = run_gen_zero(job);
    else if (job.command == "plucker")
      rep = run_plucker(job);
    else if (job.command == "mu-coker")
      rep = run_mu_coker(job);
    else if (job.command == "pfaffian")
      rep = run_pfaffian(job);
    else
      throw InputError("unknown command \"" + job.command + "\"");
    emit(job, rep, out);
    return 0;
  } catch (const PreconditionError& e) {
    Json err{{"error", e.what()}, {"kind", "precondition"}};
    out << err.dump() << "\n";
    return 2;
  } catch (const InputError& e) {
    Json err{{"error", e.what()}, {"kind", "input"}};
    out << err.dump() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    Json err{{"error", e.what()}, {"kind", "input"}};
    out << err.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    Json err{{"error", e.what()}, {"kind", "internal"}};
    out << err.dump() << "\n";
    return 1;
  }
}

}  // namespace koszul
