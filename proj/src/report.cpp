#include "nonschur/report.hpp"

#include <sstream>

namespace nonschur {

namespace {

Json vec_json(const DimVec& v) { return Json(v.values()); }
Json part_json(const Partition& p) { return Json(p.parts()); }

template <class Terms>
Json terms_of(const Terms& terms) {
  Json out = Json::array();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    out.push_back(Json{{"partition", part_json(it->first)}, {"coeff", integer_json(it->second)}});
  return out;
}

}  // namespace

Json integer_json(const Integer& x) {
  if (auto v = to_int64(x)) return Json(*v);
  return Json(to_string(x));
}

Json terms_json(const SymExpr& e) { return terms_of(e.terms()); }
Json terms_json(const SchubertClass& c) { return terms_of(c.terms()); }

Json class_json(const SchubertClass& c) {
  return Json{{"box", Json{{"d", c.box().d}, {"codim", c.box().codim}}}, {"terms", terms_json(c)}};
}

Json report_json(const AnalysisReport& rep) {
  const auto& dec = rep.decomposition;
  const auto& p = rep.parameters;
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = Json{
      {"quiver", Json::array({dec.quiver.m12(), dec.quiver.m13(), dec.quiver.m23()})},
      {"alpha1", vec_json(dec.alpha1)},
      {"alpha2", vec_json(dec.alpha2)},
      {"alpha3", vec_json(dec.alpha3)},
      {"d1", dec.d1},
      {"d2", dec.d2},
      {"d3", dec.d3},
      {"alpha", vec_json(p.alpha)},
      {"sampling", Json{{"trials", rep.sampling.trials}, {"prime", rep.sampling.prime}, {"seed", rep.sampling.seed}}}};
  j["parameters"] = Json{{"l", p.l},
                         {"m", p.m},
                         {"n", p.n},
                         {"r", p.r},
                         {"s", p.s},
                         {"t", p.t},
                         {"w", p.w},
                         {"p", p.p()},
                         {"k", p.k()},
                         {"euler_alphahat_alpha1", p.euler_hat_alpha1},
                         {"euler_alpha_alpha", p.euler_alpha_alpha},
                         {"alpha_hat", vec_json(p.alpha_hat)},
                         {"delta", vec_json(p.delta)},
                         {"grassmannian", Json{{"d", p.r}, {"codim", p.l * p.s - p.r}}}};
  j["special_case"] = Json{{"kind", to_string(rep.special_case.kind)},
                           {"fall0_bound", rep.special_case.fall0_bound ? Json(*rep.special_case.fall0_bound) : Json()}};
  j["dimensions"] = Json{{"dim_x1", rep.dims.dim_x1},
                         {"dim_x2", rep.dims.dim_x2},
                         {"dim_gr", rep.dims.dim_gr},
                         {"expected_intersection", rep.dims.expected_intersection},
                         {"kac_parameter_count", rep.dims.kac_parameter_count}};
  j["pushforward_class"] = rep.pushforward ? terms_json(*rep.pushforward) : Json();
  j["intersection_class"] = rep.intersection ? terms_json(rep.intersection->cls) : Json();
  j["gcd"] = rep.intersection ? integer_json(rep.intersection->gcd) : Json();
  if (rep.witness) {
    const auto& w = *rep.witness;
    j["witness"] = Json{{"mu", part_json(w.mu)},
                        {"lambda_conj", part_json(w.lambda_conj)},
                        {"lambda", part_json(w.lambda)},
                        {"coefficient", integer_json(w.coefficient)},
                        {"dominance", w.dominance},
                        {"fits_box", w.fits_box},
                        {"certified", w.certified}};
  } else {
    j["witness"] = Json();
  }
  j["warnings"] = Json(rep.warnings);
  return j;
}

std::string report_text(const AnalysisReport& rep) {
  const auto& dec = rep.decomposition;
  const auto& p = rep.parameters;
  std::ostringstream os;
  os << std::boolalpha;
  os << "quiver        " << dec.quiver.to_string() << '\n';
  os << "decomposition " << dec.alpha1.to_string() << '^' << dec.d1 << " + " << dec.alpha2.to_string() << '^' << dec.d2
     << " + " << dec.alpha3.to_string() << '^' << dec.d3 << " = " << p.alpha.to_string() << '\n';
  os << "sampling      trials=" << rep.sampling.trials << " prime=" << rep.sampling.prime << " seed=" << rep.sampling.seed
     << '\n';
  os << "parameters    l=" << p.l << " m=" << p.m << " n=" << p.n << " r=" << p.r << " s=" << p.s << " t=" << p.t
     << " w=" << p.w << " p=" << p.p() << " k=" << p.k() << '\n';
  os << "euler         <alphahat,alpha1>=" << p.euler_hat_alpha1 << " <alpha,alpha>=" << p.euler_alpha_alpha
     << " alphahat=" << p.alpha_hat.to_string() << " delta=" << p.delta.to_string() << '\n';
  os << "grassmannian  Gr_" << p.r << " box " << p.r << 'x' << p.l * p.s - p.r << '\n';
  os << "special case  " << to_string(rep.special_case.kind);
  if (rep.special_case.fall0_bound) os << " (dimension bound " << *rep.special_case.fall0_bound << ')';
  os << '\n';
  os << "dimensions    dimX1=" << rep.dims.dim_x1 << " dimX2=" << rep.dims.dim_x2 << " dimGr=" << rep.dims.dim_gr
     << " expected=" << rep.dims.expected_intersection << " kac=" << rep.dims.kac_parameter_count << '\n';
  if (rep.pushforward) os << "pushforward   " << rep.pushforward->to_string() << '\n';
  if (rep.intersection) {
    os << "intersection  N*[X1]*[X2] = " << rep.intersection->cls.to_string() << '\n';
    os << "gcd           " << rep.intersection->gcd << '\n';
  }
  if (rep.witness) {
    const auto& w = *rep.witness;
    os << "witness       mu=" << w.mu.to_string() << " lambda'=" << w.lambda_conj.to_string()
       << " lambda=" << w.lambda.to_string() << " d_lambda=" << w.coefficient << " dominance=" << w.dominance
       << " fits=" << w.fits_box << " certified=" << w.certified << '\n';
  }
  for (const auto& w : rep.warnings) os << "warning       " << w << '\n';
  return os.str();
}

Json decomposition_json(const KroneckerDecomposition& kd) {
  return Json{{"schema_version", kSchemaVersion},
              {"n", kd.base.n},
              {"first", vec_json(kd.first())},
              {"second", vec_json(kd.second())},
              {"k", kd.k},
              {"scale", kd.scale},
              {"base_first", vec_json(kd.base.first)},
              {"base_second", vec_json(kd.base.second)},
              {"conditions", check_conditions(kd.base)}};
}

std::string decomposition_text(const KroneckerDecomposition& kd) {
  std::ostringstream os;
  if (kd.scale > 1) os << kd.scale << "*[";
  os << kd.base.first.to_string() << '+' << kd.k << "*" << kd.base.second.to_string();
  if (kd.scale > 1) os << ']';
  os << '\n';
  return os.str();
}

Json gluing_json(const Split& split, const GluingReport& rep) {
  return Json{{"schema_version", kSchemaVersion},
              {"beta", vec_json(rep.beta)},
              {"gamma", vec_json(rep.gamma)},
              {"c_s", split.c_s},
              {"c", split.c},
              {"beta_kron", vec_json(split.beta_kron)},
              {"gamma_kron", vec_json(split.gamma_kron)},
              {"n_beta", rep.n_beta},
              {"n_gamma", rep.n_gamma},
              {"euler_beta_gamma", rep.euler_beta_gamma},
              {"euler_gamma_beta", rep.euler_gamma_beta},
              {"ker_beta_gamma", rep.ker_beta_gamma},
              {"ker_gamma_beta", rep.ker_gamma_beta},
              {"parameter_total", rep.parameter_total},
              {"kac_parameter_count", rep.kac_parameter_count},
              {"beta_type_one", rep.beta_type_one},
              {"gamma_type_one", rep.gamma_type_one},
              {"trials", rep.trials}};
}

std::string gluing_text(const Split& split, const GluingReport& rep) {
  std::ostringstream os;
  os << "beta  " << rep.beta.to_string() << " = alpha1^" << split.c_s << " + kron" << split.beta_kron.to_string()
     << (rep.beta_type_one ? " (type one)" : "") << '\n';
  os << "gamma " << rep.gamma.to_string() << " = alpha1^" << split.c << " + kron" << split.gamma_kron.to_string()
     << (rep.gamma_type_one ? " (type one)" : "") << '\n';
  os << "<beta,gamma>=" << rep.euler_beta_gamma << " <gamma,beta>=" << rep.euler_gamma_beta << " n_beta=" << rep.n_beta
     << " n_gamma=" << rep.n_gamma << '\n';
  os << "ker f(beta,gamma)=" << rep.ker_beta_gamma << " ker f(gamma,beta)=" << rep.ker_gamma_beta << '\n';
  os << "parameter total " << rep.parameter_total << " (1-<alpha,alpha> = " << rep.kac_parameter_count << ")\n";
  os << "trials " << rep.trials << '\n';
  return os.str();
}

}  // namespace nonschur
