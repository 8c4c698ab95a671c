#ifndef CARTAN_CLI_HPP
#define CARTAN_CLI_HPP

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cartan/json_io.hpp"
#include "cartan/pluecker.hpp"

namespace cartan::cli {

namespace detail {

inline std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw parameter_error(std::string(what) + ": bad integer list '" + s + "'");
    }
  }
  if (out.empty()) throw parameter_error(std::string(what) + ": empty list");
  return out;
}

inline Gaussian parse_rational(const std::string& s, const char* what) {
  try {
    Rational r(s);
    r.canonicalize();
    return Gaussian(r);
  } catch (const std::exception&) {
    throw parameter_error(std::string(what) + ": bad rational '" + s + "'");
  }
}

inline void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

struct PlueckerOutcome {
  std::string name;
  int ambient_k = 0, ambient_n = 0;
  int degree = 0;
  std::vector<std::pair<std::string, bool>> memberships;
};

inline PlueckerOutcome run_family(const std::string& family, int param, const Gaussian& v0,
                                  const Gaussian& v1) {
  PlueckerOutcome res;
  res.name = family;
  auto finish = [&](const ParamSubspace& fam) {
    res.ambient_k = fam.k();
    res.ambient_n = fam.ambient;
    res.degree = curve_degree(fam);
  };
  if (family == "projective-line") {
    ParamSubspace fam = projective_space_line_family(param);
    finish(fam);
  } else if (family == "ci-line") {
    ParamSubspace fam = ci_line_family(param);
    finish(fam);
    res.memberships.emplace_back("symplectic isotropy",
                                 family_isotropy_check(fam, symplectic_form(param)));
  } else if (family == "quadric-ruling") {
    ParamSubspace fam = quadric_ruling_line_family(v0, v1);
    finish(fam);
    std::vector<Poly> pt(4);
    for (int j = 0; j < 4; ++j) pt[j] = fam.rows(0, j);
    res.memberships.emplace_back("quadric", quadric_membership(pt, euclidean_quadric_form(4)).member);
  } else if (family == "conic") {
    ParamSubspace fam = veronese_conic_family();
    finish(fam);
    std::vector<Poly> pt(4);
    for (int j = 0; j < 4; ++j) pt[j] = fam.rows(0, j);
    res.memberships.emplace_back("quadric", quadric_membership(pt, euclidean_quadric_form(4)).member);
    res.memberships.emplace_back("plane z3=0", pt[3].is_zero());
  } else if (family == "ci-embedding" || family == "diii-embedding") {
    IsotropicModel model =
        (family == "ci-embedding") ? ci_standard_model(param) : diii_standard_model(param);
    ParamSubspace line = domain_pencil(model, 0, param - 1);
    ParamSubspace fam = lagrangian_extension_family(line, model.form, model.v2);
    finish(fam);
    res.memberships.emplace_back("isotropy along the family",
                                 family_isotropy_check(fam, model.form));
  } else {
    throw parameter_error("unknown family '" + family +
                          "' (expected projective-line, ci-line, quadric-ruling, conic, "
                          "ci-embedding, diii-embedding)");
  }
  return res;
}

}  // namespace detail

/// Entry point shared by the binary and the tests.  Returns the process exit
/// status; JSON mode writes exactly one document to `out`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations for root systems, Weyl dimensions, Schubert degrees,\n"
               "Pluecker curves and the Hermitian symmetric space catalog"};
  app.require_subcommand(1);

  bool as_json = false;

  // roots
  auto* roots_cmd = app.add_subcommand("roots", "root systems and parabolic splits");
  std::string r_type = "A";
  int r_rank = 1;
  int r_marked = 0;
  std::string r_delete;
  roots_cmd->add_option("--type", r_type, "A, B, C, D, E6 or E7")->required();
  roots_cmd->add_option("--rank", r_rank, "rank")->required();
  roots_cmd->add_option("--marked", r_marked, "marked simple root (1-based) for the split");
  roots_cmd->add_option("--delete", r_delete, "comma list of vertices to delete and classify");

  // dim
  auto* dim_cmd = app.add_subcommand("dim", "irreducible representation dimensions");
  std::string d_type = "A";
  int d_rank = 1;
  std::string d_weight;
  long d_below = 0;
  long d_summand = 0;
  bool d_oracle = false;
  dim_cmd->add_option("--type", d_type, "Lie type")->required();
  dim_cmd->add_option("--rank", d_rank, "rank")->required();
  dim_cmd->add_option("--weight", d_weight, "comma list m_1,...,m_l");
  dim_cmd->add_option("--below", d_below, "list all irreducibles of dimension <= bound");
  dim_cmd->add_option("--trivial-summand", d_summand,
                      "minimal trivial summand of a module of this dimension (type A)");
  dim_cmd->add_flag("--oracle", d_oracle, "also report the tableau count (type A)");

  // schubert
  auto* sch_cmd = app.add_subcommand("schubert", "Schubert index dimension and degree");
  std::string s_index;
  std::string s_ambient;
  sch_cmd->add_option("--index", s_index, "comma list a_0,...,a_d")->required();
  sch_cmd->add_option("--ambient", s_ambient, "d,n for Gr(d, n)")->required();

  // hss
  auto* hss_cmd = app.add_subcommand("hss", "Hermitian symmetric space catalog");
  std::string h_kind;
  int h_p = 0, h_q = 0, h_m = 0, h_n = 0;
  hss_cmd->add_option("--kind", h_kind, "AIII, BDI, CI, DIII, EIII, EVII")->required();
  hss_cmd->add_option("--p", h_p, "AIII parameter p");
  hss_cmd->add_option("--q", h_q, "AIII parameter q");
  hss_cmd->add_option("--m", h_m, "BDI parameter m");
  hss_cmd->add_option("--n", h_n, "CI/DIII parameter n");

  // pluecker
  auto* plk_cmd = app.add_subcommand("pluecker", "degrees of the named curve families");
  std::string p_family;
  int p_param = 3;
  std::string p_v0 = "0", p_v1 = "1";
  plk_cmd->add_option("--family", p_family,
                      "projective-line | ci-line | quadric-ruling | conic | ci-embedding | "
                      "diii-embedding")
      ->required();
  plk_cmd->add_option("--param", p_param, "size parameter (d or n)");
  plk_cmd->add_option("--v0", p_v0, "ruling parameter v0 (rational)");
  plk_cmd->add_option("--v1", p_v1, "ruling parameter v1 (rational)");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "run the reproduction suite");
  std::string v_scope = "all";
  bool v_dump_pairs = false;
  ver_cmd->add_option("--scope", v_scope, "all, roots, rep, schubert, lie, pluecker or hss");
  ver_cmd->add_flag("--dump-pairs", v_dump_pairs,
                    "include the so(m+2) Cartan-pair bases in the JSON report");

  for (auto* sub : {roots_cmd, dim_cmd, sch_cmd, hss_cmd, plk_cmd, ver_cmd})
    sub->add_flag("--json", as_json, "emit one JSON document on stdout");

  std::vector<const char*> argv;
  std::string prog = "cartan";
  argv.push_back(prog.c_str());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (roots_cmd->parsed()) {
      RootSystem rs = RootSystem::build(lie_type_from_string(r_type), r_rank);
      if (!r_delete.empty()) {
        std::set<int> removed;
        for (int v : detail::parse_int_list(r_delete, "--delete")) removed.insert(v);
        auto components = delete_vertices(rs, removed);
        if (as_json) {
          json comps = json::array();
          for (const auto& [t, k] : components)
            comps.push_back(json{{"type", to_string(t)}, {"rank", k}});
          detail::emit(out, json{{"type", to_string(rs.type())},
                                 {"rank", rs.rank()},
                                 {"deleted", std::vector<int>(removed.begin(), removed.end())},
                                 {"components", comps}});
        } else {
          for (const auto& [t, k] : components) out << to_string(t) << "_" << k << "\n";
        }
      } else if (r_marked > 0) {
        ParabolicSplit ps = parabolic_split(rs, r_marked);
        if (as_json)
          detail::emit(out, to_json(rs, ps));
        else
          out << "complex dimension of (" << to_string(rs.type()) << "_" << rs.rank()
              << ", alpha_" << r_marked << "): " << ps.complex_dimension() << "\n";
      } else {
        if (as_json)
          detail::emit(out, to_json(rs));
        else
          out << to_string(rs.type()) << "_" << rs.rank() << ": "
              << rs.positive_roots().size() << " positive roots\n";
      }
      return 0;
    }

    if (dim_cmd->parsed()) {
      LieType t = lie_type_from_string(d_type);
      RootSystem rs = RootSystem::build(t, d_rank);
      if (d_summand > 0) {
        if (t != LieType::A) throw unsupported_error("--trivial-summand is type A only");
        TrivialSummandResult res = min_trivial_summand(d_rank, d_summand);
        if (as_json)
          detail::emit(out, json{{"rank", d_rank},
                                 {"module_dimension", d_summand},
                                 {"min_trivial_summand", res.r},
                                 {"lower_bound", res.lower_bound},
                                 {"narrow_gate", res.narrow_gate},
                                 {"wide_gate", res.wide_gate}});
        else
          out << res.r << "\n";
        return 0;
      }
      if (d_below > 0) {
        auto records = enumerate_irreps_below(rs, Integer(d_below));
        if (as_json)
          detail::emit(out, json{{"type", d_type},
                                 {"rank", d_rank},
                                 {"bound", d_below},
                                 {"irreps", to_json(records)}});
        else
          for (const auto& rec : records) {
            out << "[";
            for (int i = 0; i < rec.weight.rank(); ++i)
              out << (i ? "," : "") << rec.weight.coeffs[i];
            out << "] " << rec.dimension.get_str() << "\n";
          }
        return 0;
      }
      if (d_weight.empty()) throw parameter_error("dim: pass --weight, --below or --trivial-summand");
      if (d_oracle && t != LieType::A)
        throw unsupported_error("--oracle: the tableau count exists for type A only");
      DominantWeight w{detail::parse_int_list(d_weight, "--weight")};
      Integer dim = weyl_dimension(rs, w);
      if (as_json) {
        json doc{{"type", d_type}, {"rank", d_rank}, {"weight", w.coeffs},
                 {"dimension", to_json(dim)}};
        if (d_oracle && t == LieType::A)
          doc["tableau_dimension"] = to_json(tableau_dimension(d_rank, w));
        detail::emit(out, doc);
      } else {
        out << dim.get_str() << "\n";
        if (d_oracle && t == LieType::A)
          out << "tableau count: " << tableau_dimension(d_rank, w).get_str() << "\n";
      }
      return 0;
    }

    if (sch_cmd->parsed()) {
      auto ambient = detail::parse_int_list(s_ambient, "--ambient");
      if (ambient.size() != 2) throw parameter_error("--ambient expects d,n");
      auto entries = detail::parse_int_list(s_index, "--index");
      if (static_cast<int>(entries.size()) != ambient[0] + 1)
        throw parameter_error("--index length must be d+1");
      SchubertIndex idx(entries, ambient[1]);
      if (as_json)
        detail::emit(out, schubert_json(idx));
      else
        out << "k = " << schubert_dimension(idx) << ", degree = "
            << schubert_degree(idx).get_str() << "\n";
      return 0;
    }

    if (hss_cmd->parsed()) {
      HssKind kind = hss_kind_from_string(h_kind);
      HermitianSpace s = HermitianSpace::eiii();
      switch (kind) {
        case HssKind::AIII:
          if (h_p < 1 || h_q < 1) throw parameter_error("AIII needs --p and --q");
          s = HermitianSpace::aiii(h_p, h_q);
          break;
        case HssKind::BDI:
          if (h_m < 3) throw parameter_error("BDI needs --m >= 3");
          s = HermitianSpace::bdi(h_m);
          break;
        case HssKind::CI:
          if (h_n < 2) throw parameter_error("CI needs --n >= 2");
          s = HermitianSpace::ci(h_n);
          break;
        case HssKind::DIII:
          if (h_n < 3) throw parameter_error("DIII needs --n >= 3");
          s = HermitianSpace::diii(h_n);
          break;
        case HssKind::EIII: s = HermitianSpace::eiii(); break;
        case HssKind::EVII: s = HermitianSpace::evii(); break;
      }
      if (as_json) {
        detail::emit(out, hss_json(s));
      } else {
        out << s.str() << ": dim_C = " << complex_dimension(s)
            << ", projective rank = " << projective_rank(s) << ", min degree =";
        for (int d : min_degree(s)) out << " " << d;
        out << "\n";
        PairTable pt = symmetric_pairs(s);
        for (const auto& pr : pt.rows)
          out << "  (" << product_label(pr.m_plus) << " ; " << product_label(pr.m_minus)
              << ")  " << pr.constraint << "\n";
        out << "  orbit count: " << pt.count << "\n";
      }
      return 0;
    }

    if (plk_cmd->parsed()) {
      detail::PlueckerOutcome res = detail::run_family(
          p_family, p_param, detail::parse_rational(p_v0, "--v0"),
          detail::parse_rational(p_v1, "--v1"));
      if (as_json) {
        json checks = json::array();
        for (const auto& [name, pass] : res.memberships)
          checks.push_back(json{{"check", name}, {"pass", pass}});
        detail::emit(out, json{{"map_name", res.name},
                               {"ambient", json{{"k", res.ambient_k}, {"N", res.ambient_n}}},
                               {"degree", res.degree},
                               {"membership_checks", checks}});
      } else {
        out << res.name << ": degree " << res.degree << " in G(" << res.ambient_k << ", "
            << res.ambient_n << ")\n";
        for (const auto& [name, pass] : res.memberships)
          out << "  " << (pass ? "pass" : "FAIL") << "  " << name << "\n";
      }
      return 0;
    }

    if (ver_cmd->parsed()) {
      verify::VerifyReport rep = verify::run_verify(v_scope);
      if (as_json) {
        json doc = to_json(rep);
        if (v_dump_pairs) {
          json pairs = json::array();
          for (int m = 2; m <= 4; ++m) pairs.push_back(to_json(bdi_cartan_pair(m)));
          doc["cartan_pairs"] = pairs;
        }
        detail::emit(out, doc);
      } else {
        for (const auto& c : rep.checks)
          out << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.claim
              << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
        out << rep.passed << "/" << rep.total << " checks passed\n";
      }
      return rep.failed == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace cartan::cli

#endif
