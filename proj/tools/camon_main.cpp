// camon: exact computations with cellular-automaton monoids, finite-monoid
// ranks, and group rings over finite fields.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "camon/ca.hpp"
#include "camon/cache.hpp"
#include "camon/config.hpp"
#include "camon/errors.hpp"
#include "camon/group.hpp"
#include "camon/group_ring.hpp"
#include "camon/linear_ca.hpp"
#include "camon/monoid.hpp"
#include "camon/poly.hpp"
#include "camon/verify.hpp"

namespace {

using camon::Json;

camon::FiniteGroup resolve_group(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw camon::ParseError("cannot open group file " + spec.substr(1));
    std::stringstream buf;
    buf << in.rdbuf();
    return camon::group_from_cayley_text(buf.str(), spec.substr(1));
  }
  return camon::named_group(spec);
}

camon::Subgroup parse_subgroup(const camon::FiniteGroup& g,
                               const std::string& csv) {
  std::vector<camon::Elem> elems;
  std::stringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) elems.push_back(std::stoi(tok));
  return camon::subgroup_from_elements(g, elems);
}

void emit(const camon::RunConfig& cfg, const Json& body) {
  if (cfg.format == "json") {
    std::cout << body.dump(2) << "\n";
    return;
  }
  // flat markdown rendering of one report object
  for (const auto& [key, value] : body.items())
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>()
                                                   : value.dump())
              << "\n";
}

Json rank_result_json(const camon::RankResult& r) {
  Json j;
  if (r.rank)
    j["rank"] = *r.rank;
  else
    j["rank"] = Json{{"lower", r.lower_bound}, {"upper", r.upper_bound}};
  j["witness"] = r.witness;
  j["stats"] = Json{{"steps", r.steps}};
  return j;
}

Json rank_formula_json(const camon::FiniteMonoid& m,
                       const camon::RankFormulaReport& rep) {
  Json j;
  j["monoid"] = m.label;
  j["size"] = m.size;
  j["rank"] = rank_result_json(rep.whole);
  j["rankU"] = rank_result_json(rep.units);
  j["relRank"] = rank_result_json(rep.relative);
  j["exact"] = rep.all_exact;
  if (rep.all_exact) j["formula_holds"] = rep.equality;
  j["tie_break"] = "lex";
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for cellular-automaton monoids, monoid ranks, "
               "and group rings over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();

  camon::RunConfig cfg;
  std::string config_path;
  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--budget", cfg.monoid_budget, "monoid enumeration budget");
  app.add_option("--table-budget", cfg.table_budget,
                 "composition table cutoff");
  app.add_option("--closure-budget", cfg.closure_budget,
                 "rank search step budget");
  app.add_option("--ring-budget", cfg.ring_budget, "unit scan budget");
  app.add_option("--format", cfg.format, "markdown or json");
  app.add_option("--cache-dir", cfg.cache_dir, "monoid cache directory");
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--workers", cfg.workers, "worker threads");
  app.add_flag("--timings", cfg.timings, "include wall-clock fields in JSON");

  // ------------------------------------------------------------ group
  auto* cmd_group = app.add_subcommand("group", "subgroup lattice summaries");
  std::string group_spec;
  cmd_group->add_option("name", group_spec,
                        "built-in name (Z12, S3, D4, Q8, Z2xZ4) or @table-file");
  auto* group_chain = cmd_group->add_subcommand("chain", "cyclic chain family");
  int chain_m = 2, chain_k = 1;
  group_chain->add_option("m", chain_m, "modulus")->required();
  group_chain->add_option("k", chain_k, "depth")->required();

  // ------------------------------------------------------------ ca
  auto* cmd_ca = app.add_subcommand("ca", "cellular-automaton monoids");
  auto* ca_enum = cmd_ca->add_subcommand("enum", "enumerate End(A^G)");
  std::string ca_group;
  int ca_q = 2;
  ca_enum->add_option("group", ca_group)->required();
  ca_enum->add_option("alphabet", ca_q)->required();
  auto* ca_classify = cmd_ca->add_subcommand("classify", "classify one rule");
  std::string cl_group, cl_rule;
  int cl_q = 2;
  ca_classify->add_option("group", cl_group)->required();
  ca_classify->add_option("alphabet", cl_q)->required();
  ca_classify->add_option("rule", cl_rule, "rule digit string")->required();
  auto* ca_project = cmd_ca->add_subcommand(
      "project", "push a rule through End(A^G) -> End(A^{G/N})");
  std::string pj_group, pj_subgroup, pj_rule;
  int pj_q = 2;
  ca_project->add_option("group", pj_group)->required();
  ca_project->add_option("alphabet", pj_q)->required();
  ca_project->add_option("subgroup", pj_subgroup, "normal subgroup, e.g. 0,2")
      ->required();
  ca_project->add_option("rule", pj_rule)->required();
  auto* ca_lift = cmd_ca->add_subcommand("lift",
                                         "lift a quotient rule back to A^G");
  std::string lf_group, lf_subgroup, lf_rule;
  int lf_q = 2;
  ca_lift->add_option("group", lf_group)->required();
  ca_lift->add_option("alphabet", lf_q)->required();
  ca_lift->add_option("subgroup", lf_subgroup)->required();
  ca_lift->add_option("rule", lf_rule, "rule digits over the quotient")
      ->required();

  // ------------------------------------------------------------ rank
  auto* cmd_rank = app.add_subcommand("rank", "rank and relative rank");
  auto* rank_ca = cmd_rank->add_subcommand("ca", "rank formula for End(A^G)");
  std::string rk_group;
  int rk_q = 2;
  rank_ca->add_option("group", rk_group)->required();
  rank_ca->add_option("alphabet", rk_q)->required();
  auto* rank_table = cmd_rank->add_subcommand("table", "rank of a table file");
  std::string rk_file;
  rank_table->add_option("file", rk_file)->required();
  auto* rank_ring = cmd_rank->add_subcommand(
      "ring", "rank formula for the multiplicative monoid of F[G]");
  std::string rr_field, rr_group;
  rank_ring->add_option("field", rr_field)->required();
  rank_ring->add_option("group", rr_group)->required();

  // ------------------------------------------------------------ bound
  auto* cmd_bound = app.add_subcommand(
      "bound", "relative-rank lower bound vs brute force");
  std::string bd_group;
  int bd_q = 2;
  cmd_bound->add_option("group", bd_group);
  cmd_bound->add_option("--alphabet", bd_q, "alphabet size");
  auto* bound_chain = cmd_bound->add_subcommand("chain", "growth table");
  int bc_m = 2, bc_k = 1;
  bound_chain->add_option("m", bc_m)->required();
  bound_chain->add_option("k", bc_k)->required();

  // ------------------------------------------------------------ ring
  auto* cmd_ring = app.add_subcommand("ring", "group rings over finite fields");
  auto* ring_pw = cmd_ring->add_subcommand("pw", "decomposition of F_q[Z_n]");
  std::string pw_field;
  int pw_n = 2;
  ring_pw->add_option("field", pw_field)->required();
  ring_pw->add_option("n", pw_n)->required();
  auto* ring_units = cmd_ring->add_subcommand("units", "unit scan of F[G]");
  std::string ru_field, ru_group;
  ring_units->add_option("field", ru_field)->required();
  ring_units->add_option("group", ru_group)->required();

  // ------------------------------------------------------------ lca
  auto* cmd_lca = app.add_subcommand("lca", "linear cellular automata");
  auto* lca_formula = cmd_lca->add_subcommand(
      "rankformula", "linear rank formula for End_F(V^G)");
  std::string lc_field, lc_group;
  int lc_d = 1;
  lca_formula->add_option("field", lc_field)->required();
  lca_formula->add_option("d", lc_d)->required();
  lca_formula->add_option("group", lc_group)->required();

  // ------------------------------------------------------------ verify
  auto* cmd_verify =
      app.add_subcommand("verify", "run the full verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (!config_path.empty()) {
      camon::RunConfig file_cfg = camon::RunConfig::from_file(config_path);
      // explicit flags win over file values
      std::swap(cfg, file_cfg);
      camon::RunConfig defaults;
      if (file_cfg.monoid_budget != defaults.monoid_budget)
        cfg.monoid_budget = file_cfg.monoid_budget;
      if (file_cfg.table_budget != defaults.table_budget)
        cfg.table_budget = file_cfg.table_budget;
      if (file_cfg.closure_budget != defaults.closure_budget)
        cfg.closure_budget = file_cfg.closure_budget;
      if (file_cfg.ring_budget != defaults.ring_budget)
        cfg.ring_budget = file_cfg.ring_budget;
      if (file_cfg.format != defaults.format) cfg.format = file_cfg.format;
      if (!file_cfg.cache_dir.empty()) cfg.cache_dir = file_cfg.cache_dir;
      if (file_cfg.seed != defaults.seed) cfg.seed = file_cfg.seed;
      if (file_cfg.workers != defaults.workers) cfg.workers = file_cfg.workers;
    }
    const camon::EndBudget ebudget{cfg.monoid_budget, cfg.table_budget};
    const camon::SearchBudget sbudget{cfg.closure_budget};

    if (*cmd_group) {
      if (*group_chain) {
        const camon::ChainFamily fam = camon::chain_family(chain_m, chain_k);
        const std::vector<int> counts = camon::normal_count_along_chain(fam);
        Json j;
        j["modulus"] = chain_m;
        j["depth"] = chain_k;
        Json orders = Json::array(), ncol = Json::array();
        for (std::size_t i = 0; i < fam.quotients.size(); ++i) {
          orders.push_back(fam.quotients[i].order);
          ncol.push_back(counts[i]);
        }
        j["orders"] = orders;
        j["normal_counts"] = ncol;
        emit(cfg, j);
        return 0;
      }
      if (group_spec.empty())
        throw camon::ParseError("group: missing name (or use `group chain`)");
      const camon::FiniteGroup g = resolve_group(group_spec);
      const camon::SubgroupLatticeSummary lat = camon::lattice_summary(g);
      Json j;
      j["group"] = g.label;
      j["order"] = g.order;
      j["subgroups"] = lat.subgroups.size();
      j["classCount"] = lat.class_count;
      j["normalCount"] = lat.normal_count;
      j["index2Count"] = lat.index2_count;
      j["edgeCountAllPairs"] = lat.edge_count_all_pairs;
      j["edgeCountHasse"] = lat.edge_count_hasse;
      j["dedekind"] = camon::is_dedekind(g);
      emit(cfg, j);
      return 0;
    }

    if (*cmd_ca) {
      if (*ca_enum) {
        const camon::FiniteGroup g = resolve_group(ca_group);
        const camon::CAMonoid end = camon::load_or_enumerate_end(
            cfg.cache_dir, g, ca_q, ebudget, cfg.workers);
        Json j;
        j["group"] = g.label;
        j["alphabet"] = ca_q;
        j["elements"] = end.elements.size();
        j["units"] = end.unit_indices.size();
        j["composition_table"] = end.has_table();
        emit(cfg, j);
        return 0;
      }
      if (*ca_classify) {
        const camon::FiniteGroup g = resolve_group(cl_group);
        const camon::CellularAutomaton tau = camon::ca_from_string(
            g, g.label + " " + std::to_string(cl_q) + " " + cl_rule);
        Json j;
        j["rule"] = camon::ca_to_string(tau);
        j["injective"] = tau.injective;
        j["surjective"] = tau.surjective;
        j["unit"] = tau.unit();
        if (const auto w = camon::left_unit_witness(tau))
          j["left_inverse"] = camon::ca_to_string(*w);
        emit(cfg, j);
        return 0;
      }
      if (*ca_project || *ca_lift) {
        const bool projecting = static_cast<bool>(*ca_project);
        const camon::FiniteGroup g =
            resolve_group(projecting ? pj_group : lf_group);
        const camon::Subgroup n =
            parse_subgroup(g, projecting ? pj_subgroup : lf_subgroup);
        const camon::QuotientGroup quo = camon::make_quotient(g, n);
        Json j;
        if (projecting) {
          const camon::CellularAutomaton tau = camon::ca_from_string(
              g, g.label + " " + std::to_string(pj_q) + " " + pj_rule);
          j["projected"] = camon::ca_to_string(camon::project_ca(tau, quo));
        } else {
          const camon::CellularAutomaton s = camon::ca_from_string(
              quo.quotient, quo.quotient.label + " " + std::to_string(lf_q) +
                                " " + lf_rule);
          j["lifted"] = camon::ca_to_string(camon::lift_ca(s, quo));
        }
        emit(cfg, j);
        return 0;
      }
      throw camon::ParseError("ca: missing subcommand");
    }

    if (*cmd_rank) {
      Json j;
      if (*rank_ca) {
        const camon::FiniteGroup g = resolve_group(rk_group);
        const camon::FiniteMonoid m = camon::to_finite_monoid(
            camon::load_or_enumerate_end(cfg.cache_dir, g, rk_q, ebudget,
                                         cfg.workers));
        j = rank_formula_json(m, camon::verify_rank_formula(m, sbudget));
      } else if (*rank_table) {
        std::ifstream in(rk_file);
        if (!in) throw camon::ParseError("cannot open " + rk_file);
        std::stringstream buf;
        buf << in.rdbuf();
        const camon::FiniteMonoid m =
            camon::monoid_from_table_text(buf.str(), rk_file);
        j = rank_formula_json(m, camon::verify_rank_formula(m, sbudget));
      } else if (*rank_ring) {
        const camon::FiniteField F = camon::FiniteField::parse_spec(rr_field);
        const camon::FiniteGroup g = resolve_group(rr_group);
        const camon::GroupRing ring(camon::CoefficientRing::field_ring(F), g);
        const camon::FiniteMonoid m =
            camon::linear_monoid(ring, cfg.table_budget);
        j = rank_formula_json(m, camon::verify_rank_formula(m, sbudget));
      } else {
        throw camon::ParseError("rank: missing subcommand");
      }
      emit(cfg, j);
      return 0;
    }

    if (*cmd_bound) {
      Json j;
      if (*bound_chain) {
        const camon::ChainFamily fam = camon::chain_family(bc_m, bc_k);
        Json rows = Json::array();
        for (int k = 1; k <= bc_k; ++k) {
          const camon::FiniteGroup& q = fam.quotients[k - 1];
          const camon::SubgroupLatticeSummary lat = camon::lattice_summary(q);
          rows.push_back(Json{{"k", k},
                              {"order", q.order},
                              {"normalCount", lat.normal_count},
                              {"index2Count", lat.index2_count},
                              {"lower_bound",
                               lat.normal_count - lat.index2_count}});
        }
        j["modulus"] = bc_m;
        j["rows"] = rows;
        emit(cfg, j);
        return 0;
      }
      if (bd_group.empty())
        throw camon::ParseError("bound: missing group (or use `bound chain`)");
      const camon::FiniteGroup g = resolve_group(bd_group);
      const camon::SubgroupLatticeSummary lat = camon::lattice_summary(g);
      const long bound = bd_q == 2
                             ? lat.edge_count_all_pairs - lat.index2_count
                             : lat.edge_count_all_pairs;
      j["group"] = g.label;
      j["alphabet"] = bd_q;
      j["edgeCountAllPairs"] = lat.edge_count_all_pairs;
      j["index2Count"] = lat.index2_count;
      j["lower_bound"] = bound;
      j["dedekind"] = camon::is_dedekind(g);
      try {
        const camon::FiniteMonoid m = camon::to_finite_monoid(
            camon::load_or_enumerate_end(cfg.cache_dir, g, bd_q, ebudget,
                                         cfg.workers));
        const camon::UnitSets units = camon::classify_units(m);
        const camon::RankResult rel =
            camon::relative_rank(m, units.units, sbudget);
        j["brute_force"] = rank_result_json(rel);
        if (rel.exact()) j["equality"] = *rel.rank == bound;
      } catch (const camon::BudgetError& e) {
        j["brute_force"] = std::string("skipped-budget: ") + e.what();
      }
      emit(cfg, j);
      return 0;
    }

    if (*cmd_ring) {
      Json j;
      if (*ring_pw) {
        const camon::FiniteField F = camon::FiniteField::parse_spec(pw_field);
        const camon::PerlisWalkerDecomposition pw =
            camon::perlis_walker(F, pw_n);
        j["field"] = F.spec_string();
        j["n"] = pw_n;
        Json factors = Json::array();
        for (const camon::PolyFactor& pf : pw.factors)
          factors.push_back(Json{{"poly", camon::poly_to_string(F, pf.factor)},
                                 {"degree", camon::poly_deg(pf.factor)},
                                 {"multiplicity", pf.multiplicity}});
        j["factors"] = factors;
        j["semisimple"] = pw.semisimple;
        if (pw.semisimple) {
          j["t"] = pw.t;
          j["summandSizes"] = pw.summand_sizes;
          j["unitFactors"] = pw.unit_factors;
          j["abelianRank"] = pw.abelian_rank;
          j["unitCount"] = pw.unit_count();
        }
      } else if (*ring_units) {
        const camon::FiniteField F = camon::FiniteField::parse_spec(ru_field);
        const camon::FiniteGroup g = resolve_group(ru_group);
        const camon::GroupRing ring(camon::CoefficientRing::field_ring(F), g);
        const camon::UnitReport rep =
            camon::units_of_group_ring(ring, cfg.ring_budget, cfg.workers);
        j["field"] = F.spec_string();
        j["group"] = g.label;
        j["ring_size"] = rep.ring_size;
        j["units"] = rep.units.size();
        j["trivial_units"] = rep.trivial_units.size();
        j["all_trivial"] = rep.all_trivial;
        j["exhaustive"] = rep.exhaustive;
        if (rep.unit_group_abelian)
          j["invariant_factors"] = rep.invariant_factors;
      } else {
        throw camon::ParseError("ring: missing subcommand");
      }
      emit(cfg, j);
      return 0;
    }

    if (*cmd_lca) {
      if (!*lca_formula) throw camon::ParseError("lca: missing subcommand");
      const camon::FiniteField F = camon::FiniteField::parse_spec(lc_field);
      const camon::FiniteGroup g = resolve_group(lc_group);
      const camon::GroupRing ring(
          lc_d == 1 ? camon::CoefficientRing::field_ring(F)
                    : camon::CoefficientRing::matrix_ring(F, lc_d),
          g);
      const camon::LinearRankFormulaReport rep =
          camon::verify_linear_rank_formula(ring, sbudget, cfg.table_budget);
      Json j;
      j["monoid_size"] = rep.monoid_size;
      j["units"] = rep.unit_count;
      j["directly_finite"] = rep.directly_finite;
      j["one_sided_units_ok"] = rep.le_monoids_ok;
      j["rank"] = rank_result_json(rep.formula.whole);
      j["rankU"] = rank_result_json(rep.formula.units);
      j["relRank"] = rank_result_json(rep.formula.relative);
      if (rep.formula.all_exact) j["formula_holds"] = rep.formula.equality;
      emit(cfg, j);
      return 0;
    }

    if (*cmd_verify) {
      const std::vector<camon::VerificationReport> reports =
          camon::run_verification_suite(cfg);
      if (cfg.format == "json")
        std::cout << camon::reports_to_json(reports, cfg.timings).dump(2)
                  << "\n";
      else
        std::cout << camon::reports_to_markdown(reports);
      return camon::count_failures(reports) > 0 ? 1 : 0;
    }
  } catch (const camon::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const camon::BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
