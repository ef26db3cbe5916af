#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "relcalc/campaign.hpp"
#include "relcalc/chains.hpp"
#include "relcalc/fixtures.hpp"

namespace rc = relcalc;

namespace {

// 0 ok, 1 usage/parse, 2 precondition, 3 bound-violation
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitViolation = 3;

void emit(const rc::Json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw rc::ParseError("cannot write to " + out_path);
  out << doc.dump(2) << "\n";
}

rc::FieldTag parse_field_name(const std::string& name) {
  if (name == "Q") return rc::FieldTag::rationals();
  if (name == "Qi") return rc::FieldTag::gaussian_rationals();
  std::string digits;
  if (name.rfind("GF", 0) == 0) {
    for (char c : name.substr(2))
      if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
  }
  if (digits.empty()) throw rc::ParseError("unknown field '" + name + "' (use Q, Qi, GFp)");
  return rc::FieldTag::prime_field(static_cast<unsigned>(std::stoul(digits)));
}

std::vector<rc::Eigenvalue> parse_lambdas(const rc::FieldTag& tag,
                                          const std::vector<std::string>& raw) {
  std::vector<rc::Eigenvalue> out;
  for (const auto& s : raw) out.push_back(rc::eigenvalue_parse(tag, s));
  return out;
}

int run_analyze(const std::string& path, std::size_t nmax, const std::string& out) {
  rc::LinearRelation a = rc::relation_from_json(rc::load_json_file(path));
  if (nmax == 0) nmax = 2 * a.d();
  const rc::RelationParts& parts = rc::parts(a);
  rc::Json doc{{"field", rc::field_to_json(a.tag())},
               {"d", a.d()},
               {"dim", a.dim()},
               {"pairs", rc::matrix_rows_to_json(a.space().basis())},
               {"dom", rc::subspace_to_json(parts.dom)},
               {"ran", rc::subspace_to_json(parts.ran)},
               {"ker", rc::subspace_to_json(parts.ker)},
               {"mul", rc::subspace_to_json(parts.mul)},
               {"jordan_degrees", rc::jordan_degrees(a, nmax)},
               {"kernel_dims", rc::kernel_dims(a, nmax)},
               {"has_singular_chain", rc::has_singular_chain(a)}};
  emit(doc, out);
  return kExitOk;
}

int run_pencil(const std::string& path, const std::vector<std::string>& raw_lambdas,
               std::size_t nmax, const std::string& out) {
  rc::Pencil p = rc::pencil_from_json(rc::load_json_file(path));
  if (nmax == 0) nmax = 2 * p.d();
  rc::PencilProfile prof = rc::profile(p);
  rc::SpectrumScan scan = rc::spectrum_scan(p);
  std::vector<rc::Eigenvalue> lambdas = parse_lambdas(p.tag(), raw_lambdas);
  if (lambdas.empty()) {
    lambdas = scan.finite;
    lambdas.push_back(rc::Eigenvalue::infinity());
  }
  rc::Json det = rc::Json::array();
  for (const auto& c : prof.det_poly.coeffs()) det.push_back(c.str());
  rc::Json per_lambda = rc::Json::array();
  for (const auto& l : lambdas)
    per_lambda.push_back(rc::Json{{"lambda", l.str()},
                                  {"degrees", rc::jordan_dims_at(p, l, nmax)}});
  std::vector<rc::Subspace> w = rc::wong(p, nmax);
  rc::Json wong_spaces = rc::Json::array();
  for (const auto& wi : w) wong_spaces.push_back(rc::subspace_to_json(wi));
  rc::Json doc{{"field", rc::field_to_json(p.tag())},
               {"d", p.d()},
               {"profile",
                rc::Json{{"det_poly", std::move(det)},
                         {"regular", prof.regular},
                         {"rank", prof.pencil_rank}}},
               {"untested_spectrum", !scan.fully_resolved},
               {"relation", rc::relation_to_json(rc::to_relation(p))},
               {"lambdas", std::move(per_lambda)},
               {"wong", std::move(wong_spaces)}};
  emit(doc, out);
  return kExitOk;
}

int run_sn(const std::string& a_path, const std::string& b_path, std::size_t nmax,
           const std::string& out) {
  rc::LinearRelation a = rc::relation_from_json(rc::load_json_file(a_path));
  rc::LinearRelation b = rc::relation_from_json(rc::load_json_file(b_path));
  if (nmax == 0) nmax = 2 * a.d();
  std::vector<long> ab, ba, bracket;
  for (std::size_t n = 0; n <= nmax; ++n) {
    ab.push_back(rc::s_n(a, b, n));
    ba.push_back(rc::s_n(b, a, n));
    bracket.push_back(std::max(ab.back(), ba.back()));
  }
  rc::Json doc{{"order", rc::perturbation_order(a, b)},
               {"nmax", nmax},
               {"s_ab", ab},
               {"s_ba", ba},
               {"s_bracket", bracket}};
  emit(doc, out);
  return kExitOk;
}

int run_perturb(const std::string& pencil_path, const std::string& rank1_path,
                const std::vector<std::string>& raw_lambdas, std::size_t nmax,
                const std::string& out) {
  rc::Pencil p = rc::pencil_from_json(rc::load_json_file(pencil_path));
  rc::RankOnePencil q = rc::rank_one_from_json(rc::load_json_file(rank1_path));
  if (nmax == 0) nmax = 2 * p.d();
  rc::Pencil pert = rc::apply_perturbation(p, q);
  std::vector<rc::Eigenvalue> lambdas = parse_lambdas(p.tag(), raw_lambdas);
  for (const auto& l : rc::auto_lambdas(p, pert)) {
    bool dup = false;
    for (const auto& have : lambdas) dup = dup || have == l;
    if (!dup) lambdas.push_back(l);
  }
  rc::BoundReport rep = rc::pencil_bound_report(p, q, lambdas, nmax);
  emit(rc::pencil_report_to_json(rep), out);
  return rep.pass() ? kExitOk : kExitViolation;
}

int run_verify(const rc::CampaignConfig& cfg, const std::string& out) {
  rc::Report rep = rc::run_campaign(cfg);
  emit(rc::report_to_json(rep), out);
  return rep.pass() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relcalc: exact calculus of linear relations and matrix pencils"};
  app.require_subcommand(1);

  std::string relation_file, a_file, b_file, pencil_file, rank1_file, out_path;
  std::vector<std::string> lambdas;
  std::size_t nmax = 0;

  auto* analyze = app.add_subcommand("analyze", "parts, Jordan degrees and singular-chain flag of a relation");
  analyze->add_option("--relation", relation_file, "relation JSON file")->required();
  analyze->add_option("--nmax", nmax, "degree cutoff (default 2d)");
  analyze->add_option("--out", out_path, "write the report to a file");

  auto* pencil = app.add_subcommand("pencil", "profile, Jordan dimensions and Wong sequence of a pencil");
  pencil->add_option("--file", pencil_file, "pencil JSON file")->required();
  pencil->add_option("--lambda", lambdas, "eigenvalue (exact scalar or 'inf'); repeatable");
  pencil->add_option("--nmax", nmax, "degree cutoff (default 2d)");
  pencil->add_option("--out", out_path, "write the report to a file");

  auto* sn = app.add_subcommand("sn", "perturbation order and s_n tables for a relation pair");
  sn->add_option("--a", a_file, "first relation JSON file")->required();
  sn->add_option("--b", b_file, "second relation JSON file")->required();
  sn->add_option("--nmax", nmax, "table cutoff (default 2d)");
  sn->add_option("--out", out_path, "write the report to a file");

  auto* perturb = app.add_subcommand("perturb", "rank-one pencil perturbation bound report");
  perturb->add_option("--pencil", pencil_file, "pencil JSON file")->required();
  perturb->add_option("--rank1", rank1_file, "rank-one perturbation JSON file")->required();
  perturb->add_option("--lambda", lambdas, "extra eigenvalues to test; repeatable");
  perturb->add_option("--nmax", nmax, "degree cutoff (default 2d)");
  perturb->add_option("--out", out_path, "write the report to a file");

  rc::CampaignConfig cfg;
  std::string scenario = "fixtures", field_name = "Q";
  std::size_t dim = 3;
  auto* verify = app.add_subcommand("verify", "randomized verification campaign");
  verify->add_option("--scenario", scenario,
                     "relation-1dim | relation-pdim | pencil-rankone | s_n-oracle | fixtures")
      ->required();
  verify->add_option("--trials", cfg.trials, "trial count")->required();
  verify->add_option("--seed", cfg.seed, "64-bit seed");
  verify->add_option("--field", field_name, "Q | Qi | GFp (e.g. GF3)");
  verify->add_option("--dim", dim, "ambient dimension d");
  verify->add_option("--p", cfg.p, "perturbation order for relation-pdim");
  verify->add_option("--nmax", cfg.nmax, "bound cutoff (default 2d)");
  verify->add_option("--out", out_path, "write the report to a file");

  auto* fixtures = app.add_subcommand("fixtures", "replay the fixture regression suite");
  fixtures->add_option("--out", out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*analyze) return run_analyze(relation_file, nmax, out_path);
    if (*pencil) return run_pencil(pencil_file, lambdas, nmax, out_path);
    if (*sn) return run_sn(a_file, b_file, nmax, out_path);
    if (*perturb) return run_perturb(pencil_file, rank1_file, lambdas, nmax, out_path);
    if (*verify) {
      cfg.scenario = rc::scenario_parse(scenario);
      cfg.field = parse_field_name(field_name);
      cfg.dmin = cfg.dmax = dim;
      return run_verify(cfg, out_path);
    }
    if (*fixtures) {
      rc::CampaignConfig fx;
      fx.scenario = rc::Scenario::Fixtures;
      return run_verify(fx, out_path);
    }
  } catch (const rc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const rc::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const rc::DimensionError& e) {
    std::cerr << "dimension mismatch: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const rc::FieldMismatchError& e) {
    std::cerr << "field mismatch: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
