#include "cli.hpp"

#include "cache.hpp"
#include "rtint/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rtint::cli {

namespace {

enum class Format { Text, Json, Csv };

struct Session {
  std::string type_name;
  int r = 0;
  Format format = Format::Text;
  std::string cache_dir;
};

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string coords(const Weight& w) {
  std::string s;
  for (size_t i = 0; i < w.coords.size(); ++i) s += (i ? " " : "") + std::to_string(w.coords[i]);
  return s;
}

std::string coeffs(const Cyclotomic& a) {
  std::string s;
  for (size_t i = 0; i < a.coeffs().size(); ++i) s += (i ? " " : "") + a.coeffs()[i].get_str();
  return s;
}

RootSystem session_root_system(const Session& s) {
  RootSystem rs(LieType::parse(s.type_name));
  require_admissible(rs, s.r);
  return rs;
}

void print_reports(const std::vector<Report>& reports, Format f, std::ostream& out) {
  if (f == Format::Json) {
    json arr = json::array();
    bool all = true;
    for (const auto& r : reports) {
      arr.push_back(to_json(r));
      all = all && r.passed();
    }
    out << json{{"passed", all}, {"reports", arr}}.dump(2) << "\n";
  } else if (f == Format::Csv) {
    out << "suite,check,passed,detail\n";
    for (const auto& r : reports)
      for (const auto& c : r.checks)
        out << csv_quote(r.title) << "," << csv_quote(c.name) << "," << (c.passed ? "true" : "false") << ","
            << csv_quote(c.detail) << "\n";
  } else {
    for (const auto& r : reports) out << r.to_text();
  }
}

bool all_passed(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
}

std::vector<SurgeryPresentation> standard_sweep() {
  std::vector<SurgeryPresentation> out{{{}, 0}, {{}, 1}, {{Unknot{0}}, 0}, {{Unknot{0}}, 1}};
  for (int p = 1; p <= 12; ++p)
    for (long w : {0L, 1L}) out.push_back(lens_space(p, w));
  for (int a = -2; a <= 3; ++a)
    for (int b = -2; b <= 3; ++b)
      for (long w : {0L, 1L}) out.push_back({{HopfPair{a, b}}, w});
  out.push_back({{Unknot{2}, HopfPair{1, -1}, Unknot{-3}}, 0});
  return out;
}

Report surgery_suite(const ModularData& md) {
  Report rep;
  rep.title = "surgery formula (" + md.root_system().type().name() + ", r=" + std::to_string(md.r()) + ")";
  const LocalizedCyclotomic one = LocalizedCyclotomic::one(md.zeta_order(), md.r());
  rep.add("[S^1 x S^2] = 1", invariant(md, {{Unknot{0}}, 0}).value == one);
  rep.add("[S^3, w=0] = 1/D", invariant(md, {{}, 0}).value == md.D_inverse());
  size_t stab = 0, stab_bad = 0, integ_bad = 0;
  std::string first;
  for (const auto& p : standard_sweep()) {
    const LocalizedCyclotomic v = invariant(md, p).value;
    for (int s : {1, -1}) {
      ++stab;
      if (!(invariant(md, stabilize(p, s)).value == v) || !(invariant(md, stabilize(stabilize(p, s), -s)).value == v))
        ++stab_bad;
    }
    const Report ir = check_integrality(md, p);
    if (!ir.passed() && integ_bad++ == 0) first = ir.to_text();
  }
  rep.add("stabilization invariance", stab_bad == 0, std::to_string(stab) + " stabilizations");
  rep.add("integrality (F_L ratio, F_- [M] in Z[zeta], even => Z[xi])", integ_bad == 0,
          std::to_string(standard_sweep().size()) + " presentations" + (integ_bad ? "; " + first : ""));
  return rep;
}

std::vector<Report> verify_all(const RootSystem& rs, int r, TableCache& cache, std::ostream& err) {
  std::vector<Report> reports;
  reports.push_back(verify_generating_weights(rs, r));
  const ModularData md = cache.load(rs, r, err);
  reports.push_back(md.fusion().verify());
  reports.push_back(verify_qdim_homomorphism(md));
  reports.push_back(verify_wall_vanishing(rs, r));
  reports.push_back(verify_lmS(md));
  reports.push_back(verify_modular(md));
  reports.push_back(verify_kirby_scalars(md));
  reports.push_back(surgery_suite(md));
  if (rs.type().family() == Family::A && rs.rank() == 1) reports.push_back(verify_sl2(12, r));
  return reports;
}

int cmd_alcove(const Session& s, std::ostream& out) {
  const RootSystem rs = session_root_system(s);
  if (s.format == Format::Json) {
    out << lie_data_json(rs, s.r).dump(2) << "\n";
  } else if (s.format == Format::Csv) {
    out << "label,level,dual\n";
    for (const auto& l : alcove_labels(rs, s.r))
      out << coords(l) << "," << rs.level(l) << "," << coords(dual_label(rs, l)) << "\n";
  } else {
    out << rs.type().name() << ", r = " << s.r << "\n";
    out << "coxeter number " << rs.coxeter_number() << ", m(g) = " << rs.m_bound() << ", sign(w_0) = " << rs.sign_w0()
        << ", |Phi_+| = " << rs.num_positive_roots() << "\n";
    out << "alpha_0 = " << rs.alpha0().to_string() << ", rho = " << rs.rho().to_string() << "\n";
    const auto labels = alcove_labels(rs, s.r);
    out << labels.size() << " alcove labels:\n";
    for (const auto& l : labels) out << "  " << l.to_string() << "  level " << rs.level(l) << "\n";
  }
  return kPass;
}

int cmd_fusion(const Session& s, const TableCache& cache, std::ostream& out, std::ostream& err) {
  const RootSystem rs = session_root_system(s);
  const ModularData md = cache.load(rs, s.r, err);
  const FusionTable& t = md.fusion();
  if (s.format == Format::Json) {
    out << fusion_json(t).dump(2) << "\n";
    return kPass;
  }
  if (s.format == Format::Csv) out << "lambda,mu,nu,N\n";
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = 0; j < t.size(); ++j) {
      std::string line;
      for (size_t k = 0; k < t.size(); ++k) {
        if (long m = t.N(i, j, k)) {
          if (s.format == Format::Csv) {
            out << coords(t.labels()[i]) << "," << coords(t.labels()[j]) << "," << coords(t.labels()[k]) << "," << m
                << "\n";
          } else {
            line += (line.empty() ? "" : " + ") + (m > 1 ? std::to_string(m) + " " : std::string()) +
                    t.labels()[k].to_string();
          }
        }
      }
      if (s.format == Format::Text)
        out << t.labels()[i].to_string() << " x " << t.labels()[j].to_string() << " = " << (line.empty() ? "0" : line)
            << "\n";
    }
  return kPass;
}

int cmd_smatrix(const Session& s, const TableCache& cache, std::ostream& out, std::ostream& err) {
  const RootSystem rs = session_root_system(s);
  const ModularData md = cache.load(rs, s.r, err);
  if (s.format == Format::Json) {
    out << modular_json(md).dump(2) << "\n";
    return kPass;
  }
  if (s.format == Format::Csv) {
    out << "lambda,mu,order,coeffs\n";
    for (size_t i = 0; i < md.size(); ++i)
      for (size_t j = 0; j < md.size(); ++j)
        out << coords(md.labels()[i]) << "," << coords(md.labels()[j]) << "," << md.r() << "," << coeffs(md.S()(i, j))
            << "\n";
    return kPass;
  }
  out << rs.type().name() << ", r = " << s.r << ", " << md.size() << " labels, O(zeta) = " << md.zeta_order()
      << ", kappa order " << md.kappa_order() << "\n";
  for (size_t i = 0; i < md.size(); ++i)
    out << "qdim " << md.labels()[i].to_string() << " = " << md.qdims()[i].to_string() << ", twist xi^"
        << md.twist_exponents()[i] << "\n";
  for (size_t i = 0; i < md.size(); ++i)
    for (size_t j = i; j < md.size(); ++j)
      out << "S[" << md.labels()[i].to_string() << "," << md.labels()[j].to_string() << "] = " << md.S()(i, j).to_string()
          << "\n";
  out << "Dsq = " << md.Dsq().to_string() << "\n";
  out << "D = " << md.D().to_string() << "\n";
  out << "F_+ = " << md.F_plus().to_string() << "\n";
  out << "F_- = " << md.F_minus().to_string() << "\n";
  out << "kappa = " << md.kappa().to_string() << "\n";
  return kPass;
}

int cmd_sl2(int n, Format f, std::ostream& out) {
  if (n < 0) throw HypothesisError("n must be nonnegative");
  if (f == Format::Json) {
    out << sl2_json(n).dump(2) << "\n";
    return kPass;
  }
  const Sl2Module m = build_module(n);
  const LaurentMatrix g = shapovalov_gram(m);
  if (f == Format::Csv) {
    out << "i,gram\n";
    for (size_t i = 0; i < g.rows(); ++i) out << i << "," << csv_quote(g(i, i).to_string()) << "\n";
    return kPass;
  }
  out << "V_" << n << "\n";
  for (size_t i = 0; i < g.rows(); ++i) out << "  H(e_" << i << ", e_" << i << ") = " << g(i, i).to_string() << "\n";
  out << "det = " << det_factorization(n).to_string() << "\n";
  out << "invertible over Z[v, v^-1]: " << (nonunit_over_A(n) ? "no" : "yes")
      << "; invertible after inverting [m]! for m = " << min_factorial_inverted(n) << "\n";
  return kPass;
}

int cmd_invariant(const std::string& file, Format f, const TableCache& cache, std::ostream& out, std::ostream& err) {
  std::ifstream in(file);
  if (!in) {
    err << "error: cannot read " << file << "\n";
    return kUsageError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  PresentationFile pf;
  try {
    pf = parse_presentation(buf.str());
  } catch (const ParseError& e) {
    err << "error: " << file << ": " << e.what() << "\n";
    return kUsageError;
  }
  RootSystem rs(pf.type);
  require_admissible(rs, pf.r);
  const ModularData md = cache.load(rs, pf.r, err);
  const json j = invariant_json(md, pf.presentation);
  const bool ok = j["checks"]["passed"].get<bool>();
  if (f == Format::Json) {
    out << j.dump(2) << "\n";
  } else if (f == Format::Csv) {
    out << "presentation,order,coeffs,rpow,even,checks\n";
    out << csv_quote(pf.presentation.to_string()) << "," << md.zeta_order() << ","
        << coeffs(cyclotomic_from_json(j["value"])) << "," << j["rpow"].get<unsigned>() << ","
        << (j["even"].get<bool>() ? "true" : "false") << "," << (ok ? "pass" : "fail") << "\n";
  } else {
    const InvariantValue v = invariant(md, pf.presentation);
    out << pf.presentation.to_string() << " for " << rs.type().name() << ", r = " << pf.r << "\n";
    out << "[M] = " << v.value.to_string() << "\n";
    out << "even: " << (is_even(pf.presentation) ? "yes" : "no") << "\n";
    out << check_integrality(md, pf.presentation).to_text();
  }
  return ok ? kPass : kVerificationFailure;
}

int cmd_sweep(const Session& s, int pmax, const TableCache& cache, std::ostream& out, std::ostream& err) {
  if (pmax < 1) throw HypothesisError("--pmax must be at least 1");
  const RootSystem rs = session_root_system(s);
  const ModularData md = cache.load(rs, s.r, err);
  bool all = true;
  json rows = json::array();
  if (s.format == Format::Csv) out << "p,weight,even,ratio_in_Zxi,FmM_in_Zzeta,parity_check,rpow,passed\n";
  for (int p = 1; p <= pmax; ++p)
    for (long w : {0L, 1L}) {
      const SurgeryPresentation pres = lens_space(p, w);
      const Report rep = check_integrality(md, pres);
      all = all && rep.passed();
      const auto status = [&](size_t i) {
        return i < rep.checks.size() ? (rep.checks[i].passed ? "pass" : "fail") : "n/a";
      };
      const InvariantValue v = invariant(md, pres);
      if (s.format == Format::Json) {
        rows.push_back(invariant_json(md, pres));
      } else if (s.format == Format::Csv) {
        out << p << "," << w << "," << (is_even(pres) ? "true" : "false") << "," << status(0) << "," << status(1) << ","
            << status(2) << "," << v.value.rpow() << "," << (rep.passed() ? "true" : "false") << "\n";
      } else {
        out << "L(" << p << ",1) w=" << w << (is_even(pres) ? " even" : " odd ") << "  ratio " << status(0)
            << "  F_-[M] in Z[zeta] " << status(1) << "  parity " << status(2) << (rep.passed() ? "" : "  FAIL")
            << "\n";
      }
    }
  if (s.format == Format::Json)
    out << json{{"lie_type", std::string(1, rs.type().letter())}, {"rank", rs.rank()}, {"r", s.r}, {"passed", all},
                {"rows", rows}}
               .dump(2)
        << "\n";
  return all ? kPass : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact modular data and integral 3-manifold invariants for quantum groups at roots of unity", "rtint"};
  app.set_config("--config", "", "TOML/INI file with option values");
  app.require_subcommand(1);

  Session s;
  bool as_json = false, as_csv = false;
  auto* json_flag = app.add_flag("--json", as_json, "JSON output");
  app.add_flag("--csv", as_csv, "CSV output")->excludes(json_flag);
  app.add_option("--cache-dir", s.cache_dir, "Table cache directory (default: $RTINT_CACHE_DIR)");

  const auto add_session = [&](CLI::App* sub, bool with_defaults) {
    auto* t = sub->add_option("--type", s.type_name, "Lie type, e.g. A2, B3, E6");
    auto* r = sub->add_option("--r", s.r, "Odd prime r > m(g)");
    if (with_defaults) {
      s.type_name = "A1";
      s.r = 5;
      t->capture_default_str();
      r->capture_default_str();
    } else {
      t->required();
      r->required();
    }
  };

  auto* alcove = app.add_subcommand("alcove", "Cartan data, h, m(g) and the alcove labels");
  add_session(alcove, false);
  auto* fusion = app.add_subcommand("fusion", "Fusion rules of the quotient category");
  add_session(fusion, false);
  auto* smatrix = app.add_subcommand("smatrix", "Quantum dimensions, twists, S-matrix, D, F_+-, kappa");
  add_session(smatrix, false);
  auto* verify = app.add_subcommand("verify", "Run every verification suite for (g, r)");
  add_session(verify, false);
  std::string file;
  auto* inv = app.add_subcommand("invariant", "Evaluate [M] for a surgery presentation file");
  inv->add_option("file", file, "Presentation JSON")->required();
  int pmax = 12;
  auto* sweep = app.add_subcommand("sweep-lens", "Integrality table for L(p,1), p = 1..pmax, both weight parities");
  add_session(sweep, true);
  sweep->add_option("--pmax", pmax, "Largest p")->capture_default_str();
  int n = 0;
  auto* sl2 = app.add_subcommand("sl2", "Rank-1 integral module V_n and its Shapovalov form");
  sl2->add_option("--n", n, "Highest weight")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kPass;
    }
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsageError;
  }
  s.format = as_json ? Format::Json : as_csv ? Format::Csv : Format::Text;
  TableCache cache = TableCache::from_environment(s.cache_dir);

  try {
    if (alcove->parsed()) return cmd_alcove(s, out);
    if (fusion->parsed()) return cmd_fusion(s, cache, out, err);
    if (smatrix->parsed()) return cmd_smatrix(s, cache, out, err);
    if (sl2->parsed()) return cmd_sl2(n, s.format, out);
    if (inv->parsed()) return cmd_invariant(file, s.format, cache, out, err);
    if (sweep->parsed()) return cmd_sweep(s, pmax, cache, out, err);
    if (verify->parsed()) {
      const RootSystem rs = session_root_system(s);
      const auto reports = verify_all(rs, s.r, cache, err);
      print_reports(reports, s.format, out);
      return all_passed(reports) ? kPass : kVerificationFailure;
    }
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace rtint::cli
