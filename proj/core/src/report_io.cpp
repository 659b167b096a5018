#include "cuspbif/report_io.hpp"

#include <iomanip>
#include <sstream>

#include "cuspbif/errors.hpp"
#include "json.hpp"

namespace cuspbif {

namespace {

using Json = nlohmann::ordered_json;

Json dim_json(const QuotientDim& d) { return d.is_finite() ? Json(d.value()) : Json("INFINITE"); }

QuotientDim dim_from(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "INFINITE") throw Error(ErrorKind::InvalidArgument, "bad dimension " + j.dump());
    return QuotientDim::infinite();
  }
  return QuotientDim::finite(j.get<std::size_t>());
}

Json degree_json(const DegreeSummary& d) {
  return {{"degree", d.degree}, {"algebra_dim", d.algebra_dim}, {"positives", d.positives}, {"negatives", d.negatives}};
}

DegreeSummary degree_from(const Json& j) {
  return {j.at("degree").get<int>(), j.at("algebra_dim").get<std::size_t>(), j.at("positives").get<std::size_t>(),
          j.at("negatives").get<std::size_t>()};
}

Json branch_json(const BranchCount& b) {
  return {{"xi", b.xi},
          {"k", b.k},
          {"deg_H_plus", b.deg_H_plus},
          {"deg_H_minus", b.deg_H_minus},
          {"b0", b.b0},
          {"dim_H_plus", b.dim_H_plus},
          {"dim_H_minus", b.dim_H_minus}};
}

BranchCount branch_from(const Json& j) {
  BranchCount b;
  b.xi = j.at("xi").get<unsigned>();
  b.k = j.at("k").get<unsigned>();
  b.deg_H_plus = j.at("deg_H_plus").get<int>();
  b.deg_H_minus = j.at("deg_H_minus").get<int>();
  b.b0 = j.at("b0").get<int>();
  b.dim_H_plus = j.at("dim_H_plus").get<std::size_t>();
  b.dim_H_minus = j.at("dim_H_minus").get<std::size_t>();
  return b;
}

Json hypotheses_json(const HypothesisReport& h) {
  return {{"dim_t_f1_f2", dim_json(h.dim_t_f1_f2)},   {"dim_t_F1_F2", dim_json(h.dim_t_F1_F2)},
          {"dim_t_gradJ", dim_json(h.dim_t_gradJ)},   {"dim_I_prime", dim_json(h.dim_I_prime)},
          {"dim_d1_ideal", dim_json(h.dim_d1_ideal)}, {"dim_d2_ideal", dim_json(h.dim_d2_ideal)},
          {"dim_I_dblprime", dim_json(h.dim_I_dblprime)}, {"dim_Q", dim_json(h.dim_Q)},
          {"J_vanishes", h.J_vanishes}};
}

HypothesisReport hypotheses_from(const Json& j) {
  HypothesisReport h;
  h.dim_t_f1_f2 = dim_from(j.at("dim_t_f1_f2"));
  h.dim_t_F1_F2 = dim_from(j.at("dim_t_F1_F2"));
  h.dim_t_gradJ = dim_from(j.at("dim_t_gradJ"));
  h.dim_I_prime = dim_from(j.at("dim_I_prime"));
  h.dim_d1_ideal = dim_from(j.at("dim_d1_ideal"));
  h.dim_d2_ideal = dim_from(j.at("dim_d2_ideal"));
  h.dim_I_dblprime = dim_from(j.at("dim_I_dblprime"));
  h.dim_Q = dim_from(j.at("dim_Q"));
  h.J_vanishes = j.at("J_vanishes").get<bool>();
  return h;
}

Json combination_json(const CombinationSummary& c) {
  return {{"matrix", c.matrix},         {"identity_choice", c.identity_choice}, {"attempts", c.attempts},
          {"curve_dim", c.curve_dim},   {"t_slice_dim", c.t_slice_dim},         {"g1", c.g1},
          {"g2", c.g2},                 {"g3", c.g3}};
}

CombinationSummary combination_from(const Json& j) {
  CombinationSummary c;
  c.matrix = j.at("matrix").get<IntMatrix3>();
  c.identity_choice = j.at("identity_choice").get<bool>();
  c.attempts = j.at("attempts").get<unsigned>();
  c.curve_dim = j.at("curve_dim").get<std::string>();
  c.t_slice_dim = j.at("t_slice_dim").get<std::string>();
  c.g1 = j.at("g1").get<std::string>();
  c.g2 = j.at("g2").get<std::string>();
  c.g3 = j.at("g3").get<std::string>();
  return c;
}

}  // namespace

std::string report_to_json(const BifurcationReport& r, int indent) {
  Json j;
  j["schema"] = kReportSchemaVersion;
  j["f1"] = r.f1;
  j["f2"] = r.f2;
  j["seed"] = r.seed;
  j["J"] = r.J;
  j["F1"] = r.F1;
  j["F2"] = r.F2;
  j["hypotheses"] = hypotheses_json(r.hypotheses);
  j["f0"] = degree_json(r.f0);
  j["d0"] = degree_json(r.d0);
  j["d1"] = degree_json(r.d1);
  j["d2"] = degree_json(r.d2);
  j["deg_f0"] = r.deg_f0;
  j["deg_d0"] = r.deg_d0;
  j["deg_d1"] = r.deg_d1;
  j["deg_d2"] = r.deg_d2;
  j["cusp_deg_pos_t"] = r.cusp_deg_pos_t;
  j["cusp_deg_neg_t"] = r.cusp_deg_neg_t;
  j["combination"] = combination_json(r.combination);
  j["branch"] = branch_json(r.branch);
  j["branch_positive"] = branch_json(r.branch_positive);
  j["b0"] = r.b0;
  j["b0_prime"] = r.b0_prime;
  j["sigma"] = r.sigma;
  j["chi_M_pos_t"] = r.chi_M_pos_t;
  j["chi_M_neg_t"] = r.chi_M_neg_t;
  j["L0_count"] = r.L0_count;
  j["fold_boundary_crit_count"] = r.fold_boundary_crit_count;
  j["parity_ok"] = r.parity_ok;
  j["symmetry_detected"] = r.symmetry_detected;
  j["symmetry_ok"] = r.symmetry_ok;
  return j.dump(indent);
}

BifurcationReport report_from_json(std::string_view text) {
  try {
    Json j = Json::parse(text);
    if (j.at("schema").get<int>() != kReportSchemaVersion) {
      throw Error(ErrorKind::InvalidArgument, "unsupported report schema " + j.at("schema").dump());
    }
    BifurcationReport r;
    r.f1 = j.at("f1").get<std::string>();
    r.f2 = j.at("f2").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.J = j.at("J").get<std::string>();
    r.F1 = j.at("F1").get<std::string>();
    r.F2 = j.at("F2").get<std::string>();
    r.hypotheses = hypotheses_from(j.at("hypotheses"));
    r.f0 = degree_from(j.at("f0"));
    r.d0 = degree_from(j.at("d0"));
    r.d1 = degree_from(j.at("d1"));
    r.d2 = degree_from(j.at("d2"));
    r.deg_f0 = j.at("deg_f0").get<int>();
    r.deg_d0 = j.at("deg_d0").get<int>();
    r.deg_d1 = j.at("deg_d1").get<int>();
    r.deg_d2 = j.at("deg_d2").get<int>();
    r.cusp_deg_pos_t = j.at("cusp_deg_pos_t").get<int>();
    r.cusp_deg_neg_t = j.at("cusp_deg_neg_t").get<int>();
    r.combination = combination_from(j.at("combination"));
    r.branch = branch_from(j.at("branch"));
    r.branch_positive = branch_from(j.at("branch_positive"));
    r.b0 = j.at("b0").get<int>();
    r.b0_prime = j.at("b0_prime").get<int>();
    r.sigma = j.at("sigma").get<SigmaCounts>();
    r.chi_M_pos_t = j.at("chi_M_pos_t").get<int>();
    r.chi_M_neg_t = j.at("chi_M_neg_t").get<int>();
    r.L0_count = j.at("L0_count").get<int>();
    r.fold_boundary_crit_count = j.at("fold_boundary_crit_count").get<int>();
    r.parity_ok = j.at("parity_ok").get<bool>();
    r.symmetry_detected = j.at("symmetry_detected").get<bool>();
    r.symmetry_ok = j.at("symmetry_ok").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed report: ") + e.what());
  }
}

std::string report_to_text(const BifurcationReport& r) {
  std::ostringstream out;
  auto row = [&out](std::string_view label, const auto& value) {
    out << "  " << std::left << std::setw(34) << label << value << '\n';
  };
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  const auto& h = r.hypotheses;

  out << "input\n";
  row("f1", r.f1);
  row("f2", r.f2);
  row("seed", r.seed);
  out << "derived germs\n";
  row("J", r.J);
  row("F1", r.F1);
  row("F2", r.F2);
  out << "hypotheses\n";
  row("J(0) = 0", yes_no(h.J_vanishes));
  row("dim O3/<t, f1, f2>", h.dim_t_f1_f2.to_string());
  row("dim O3/<t, F1, F2>", h.dim_t_F1_F2.to_string());
  row("dim O3/<t, dJ/dx1, dJ/dx2>", h.dim_t_gradJ.to_string());
  row("dim O3/I'", h.dim_I_prime.to_string());
  row("dim O3/<dJ/dt, dJ/dx1, dJ/dx2>", h.dim_d1_ideal.to_string());
  row("dim O3/<J, dJ/dx1, dJ/dx2>", h.dim_d2_ideal.to_string());
  row("dim O3/I''", h.dim_I_dblprime.to_string());
  row("dim Q = dim O3/<t, J, F1, F2>", h.dim_Q.to_string());
  out << "local degrees\n";
  row("deg f0", r.deg_f0);
  row("deg d0", r.deg_d0);
  row("deg d1", r.deg_d1);
  row("deg d2", r.deg_d2);
  row("cusp deg f_t, t > 0", r.cusp_deg_pos_t);
  row("cusp deg f_t, t < 0", r.cusp_deg_neg_t);
  out << "branch counting\n";
  row("combination", r.combination.identity_choice ? "g = (F1, F2, J)" : "random matrix");
  if (!r.combination.identity_choice) {
    std::ostringstream m;
    for (std::size_t i = 0; i < 3; ++i) {
      m << (i ? " " : "") << '[' << r.combination.matrix[i][0] << ' ' << r.combination.matrix[i][1] << ' '
        << r.combination.matrix[i][2] << ']';
    }
    row("matrix", m.str());
  }
  row("matrices tried", r.combination.attempts);
  row("curve criterion dim", r.combination.curve_dim);
  row("xi, k", std::to_string(r.branch.xi) + ", " + std::to_string(r.branch.k));
  row("deg H+, deg H-", std::to_string(r.branch.deg_H_plus) + ", " + std::to_string(r.branch.deg_H_minus));
  row("b0", r.b0);
  row("xi', k' (t -> t^2)", std::to_string(r.branch_positive.xi) + ", " + std::to_string(r.branch_positive.k));
  row("deg H'+, deg H'-",
      std::to_string(r.branch_positive.deg_H_plus) + ", " + std::to_string(r.branch_positive.deg_H_minus));
  row("b0'", r.b0_prime);
  out << "cusps of f_t for small t > 0\n";
  row("#S_t+, #S_t-", std::to_string(r.sigma[0]) + ", " + std::to_string(r.sigma[1]));
  row("#S_-t+, #S_-t-", std::to_string(r.sigma[2]) + ", " + std::to_string(r.sigma[3]));
  out << "extras\n";
  row("chi(M_t-), t > 0", r.chi_M_pos_t);
  row("chi(M_t-), t < 0", r.chi_M_neg_t);
  row("#L0", r.L0_count);
  row("fold boundary critical points", r.fold_boundary_crit_count);
  row("parity check against dim Q", r.parity_ok ? "ok" : "FAILED");
  if (r.symmetry_detected) row("t -> -t symmetry check", r.symmetry_ok ? "ok" : "FAILED");
  return out.str();
}

}  // namespace cuspbif
