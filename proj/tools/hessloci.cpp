/*
 * Copyright 2026 The hessloci authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file hessloci.cpp
 * @brief Command-line surface. Every subcommand wraps one library
 *        operation; exit code 0 means all checks passed, 1 means a check
 *        failed (with a certificate in the report), 2 means bad input.
 *        Reports are JSON with a deterministic body for a fixed seed;
 *        wall-clock time lives outside the body.
 */

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hessloci/checks.hpp"

namespace hl = hessloci;
using hl::json;

namespace {

const auto g_start = std::chrono::steady_clock::now();

struct FieldSpec {
  bool rational = true;
  std::uint64_t prime = 0;
};

FieldSpec parse_field(const std::string& s) {
  if (s == "q") return {true, 0};
  if (s.rfind("fp:", 0) == 0) {
    std::uint64_t p = std::stoull(s.substr(3));
    if (!hl::is_prime_u64(p) || p == 2)
      throw hl::DomainError("field modulus must be an odd prime: " + s);
    return {false, p};
  }
  throw hl::DomainError("unknown field '" + s + "' (use q or fp:<prime>)");
}

struct Common {
  std::string field = "q";
  int nvars = 0;
  std::string ftext;
  std::string ffile;
  std::uint64_t seed = 0;
  std::string json_path;
};

void add_common(CLI::App* cmd, Common& c, bool need_poly = true) {
  cmd->add_option("--field", c.field, "scalar field: q or fp:<prime>");
  cmd->add_option("--seed", c.seed, "seed for randomized checks");
  cmd->add_option("--json", c.json_path, "write the JSON report to this path");
  if (need_poly) {
    cmd->add_option("--nvars", c.nvars, "number of variables (x0..x{n})")->required();
    cmd->add_option("--f", c.ftext, "polynomial in the text grammar");
    cmd->add_option("--f-file", c.ffile, "file containing the polynomial");
  }
}

std::string poly_text(const Common& c) {
  if (!c.ftext.empty()) return c.ftext;
  if (!c.ffile.empty()) {
    std::ifstream in(c.ffile);
    if (!in) throw hl::DomainError("cannot open " + c.ffile);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  throw hl::DomainError("one of --f or --f-file is required");
}

template <class K>
hl::MultiPoly<K> load_poly(const Common& c, const K& like) {
  return hl::poly_parse<K>(poly_text(c), c.nvars, like);
}

template <class K>
std::vector<K> parse_scalar_list(const std::string& s, const K& like) {
  std::vector<K> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if constexpr (std::is_same_v<K, hl::Rat>) {
      out.push_back(hl::rat_from_string(item));
      (void)like;
    } else {
      out.push_back(hl::reduce_mod(hl::rat_from_string(item), like.prime()));
    }
  }
  if (out.empty()) throw hl::DomainError("empty scalar list");
  return out;
}

template <class K>
hl::ProjPoint<K> parse_point(const std::string& s, int nvars, const K& like) {
  auto v = parse_scalar_list<K>(s, like);
  if (static_cast<int>(v.size()) != nvars)
    throw hl::DomainError("point needs " + std::to_string(nvars) + " coordinates");
  return hl::ProjPoint<K>(v);
}

/// Space from "--points p;p;..." or "--forms f;f;..." (one must be given).
template <class K>
hl::LinearSpace<K> parse_space(const std::string& points, const std::string& forms,
                               int nvars, const K& like) {
  if (!points.empty()) {
    std::vector<hl::ProjPoint<K>> pts;
    std::stringstream ss(points);
    std::string item;
    while (std::getline(ss, item, ';')) pts.push_back(parse_point<K>(item, nvars, like));
    return hl::LinearSpace<K>::from_points(std::move(pts));
  }
  if (!forms.empty()) {
    std::vector<hl::MultiPoly<K>> fs;
    std::stringstream ss(forms);
    std::string item;
    while (std::getline(ss, item, ';'))
      fs.push_back(hl::poly_parse<K>(item, nvars, like));
    return hl::LinearSpace<K>::from_forms(std::move(fs));
  }
  throw hl::DomainError("give the space by --points or --forms");
}

// The "report" subtree is byte-identical across runs for fixed inputs and
// seed; wall time sits next to it, outside the reproducibility contract.
int emit(const Common& c, const json& body, int exit_code) {
  if (!c.json_path.empty()) {
    json wrapper;
    wrapper["report"] = body;
    wrapper["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - g_start)
            .count();
    std::ofstream out(c.json_path);
    out << wrapper.dump(2) << "\n";
  }
  return exit_code;
}

json base_body(const Common& c, const std::string& command) {
  json b;
  b["schema"] = hl::kReportSchema;
  b["command"] = command;
  b["field"] = c.field;
  b["seed"] = c.seed;
  return b;
}

// The per-field dispatch: run the callable with a field exemplar.
template <class Fn>
int with_field(const Common& c, Fn&& fn) {
  FieldSpec fs = parse_field(c.field);
  if (fs.rational) return fn(hl::Rat(0));
  return fn(hl::Fp(0, fs.prime));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on Hessian loci of cubic hypersurfaces"};
  app.require_subcommand(1);

  // ---- hess ----
  Common hess_c;
  auto* hess = app.add_subcommand("hess", "Hessian matrix of f");
  add_common(hess, hess_c);
  hess->callback([&]() {
    std::exit(with_field(hess_c, [&](auto like) {
      auto f = load_poly(hess_c, like);
      hl::DForm df(f);
      json rows = json::array();
      for (int i = 0; i < df.nvars(); ++i) {
        json row = json::array();
        for (int j = 0; j < df.nvars(); ++j) {
          row.push_back(hl::poly_print(df.hessian()(i, j)));
          std::cout << hl::poly_print(df.hessian()(i, j))
                    << (j + 1 < df.nvars() ? " | " : "\n");
        }
        rows.push_back(row);
      }
      json b = base_body(hess_c, "hess");
      b["hessian"] = rows;
      return emit(hess_c, b, 0);
    }));
  });

  // ---- hesspoly ----
  Common hp_c;
  auto* hp = app.add_subcommand("hesspoly", "hessian polynomial det H_f");
  add_common(hp, hp_c);
  hp->callback([&]() {
    std::exit(with_field(hp_c, [&](auto like) {
      auto f = load_poly(hp_c, like);
      hl::DForm df(f);
      const auto& h = df.hessian_poly();
      std::cout << hl::poly_print(h) << "\n";
      json b = base_body(hp_c, "hesspoly");
      b["h"] = hl::poly_print(h);
      b["identically_zero"] = h.is_zero();
      b["degree"] = h.degree();
      return emit(hp_c, b, 0);
    }));
  });

  // ---- rank-at ----
  Common ra_c;
  std::string ra_point;
  auto* ra = app.add_subcommand("rank-at", "rank of H_f at a point");
  add_common(ra, ra_c);
  ra->add_option("--point", ra_point, "comma-separated coordinates")->required();
  ra->callback([&]() {
    std::exit(with_field(ra_c, [&](auto like) {
      auto f = load_poly(ra_c, like);
      hl::DForm df(f);
      auto p = parse_point(ra_point, ra_c.nvars, like);
      const int r = hl::rank_at(df, p);
      std::cout << "rank " << r << "\n";
      json b = base_body(ra_c, "rank-at");
      b["rank"] = r;
      return emit(ra_c, b, 0);
    }));
  });

  // ---- kernel (iota) ----
  Common ker_c;
  std::string ker_point;
  auto* ker = app.add_subcommand("kernel", "kernel correspondence iota at a point");
  add_common(ker, ker_c);
  ker->add_option("--point", ker_point)->required();
  ker->callback([&]() {
    std::exit(with_field(ker_c, [&](auto like) {
      auto f = load_poly(ker_c, like);
      hl::DForm df(f);
      auto p = parse_point(ker_point, ker_c.nvars, like);
      auto s = hl::iota(df, p);
      std::cout << "dim " << s.dim() << "\n";
      for (const auto& form : s.cutting_forms())
        std::cout << "cut: " << hl::poly_print(form) << "\n";
      json b = base_body(ker_c, "kernel");
      b["iota"] = hl::space_json(s);
      return emit(ker_c, b, 0);
    }));
  });

  // ---- in-dk ----
  Common dk_c;
  std::string dk_point;
  int dk_k = 0;
  auto* dk = app.add_subcommand("in-dk", "membership of a point in D_k(f)");
  add_common(dk, dk_c);
  dk->add_option("--point", dk_point)->required();
  dk->add_option("--k", dk_k)->required();
  dk->callback([&]() {
    std::exit(with_field(dk_c, [&](auto like) {
      auto f = load_poly(dk_c, like);
      hl::DForm df(f);
      auto p = parse_point(dk_point, dk_c.nvars, like);
      const bool in = hl::in_dk(df, p, dk_k);
      const int r = hl::rank_at(df, p);
      std::cout << (in ? "member" : "not a member") << " (rank " << r << ")\n";
      json b = base_body(dk_c, "in-dk");
      b["k"] = dk_k;
      b["rank"] = r;
      b["member"] = in;
      return emit(dk_c, b, in ? 0 : 1);
    }));
  });

  // ---- space-in-dk ----
  Common sdk_c;
  std::string sdk_points, sdk_forms;
  int sdk_k = 0;
  auto* sdk = app.add_subcommand("space-in-dk",
                                 "is a whole linear space inside D_k(f)?");
  add_common(sdk, sdk_c);
  sdk->add_option("--points", sdk_points, "semicolon-separated basis points");
  sdk->add_option("--forms", sdk_forms, "semicolon-separated cutting forms");
  sdk->add_option("--k", sdk_k)->required();
  sdk->callback([&]() {
    std::exit(with_field(sdk_c, [&](auto like) {
      auto f = load_poly(sdk_c, like);
      hl::DForm df(f);
      auto s = parse_space(sdk_points, sdk_forms, sdk_c.nvars, like);
      auto rep = hl::verify_space_in_dk(df, s, sdk_k);
      json b = base_body(sdk_c, "space-in-dk");
      b["k"] = sdk_k;
      b["contained"] = rep.ok;
      if (!rep.ok) {
        json w;
        w["rows"] = rep.witness->rows;
        w["cols"] = rep.witness->cols;
        w["minor"] = hl::poly_print(rep.witness->minor);
        b["nonzero_minor"] = w;
        std::cout << "no: minor (" << hl::poly_print(rep.witness->minor) << ")\n";
      } else {
        std::cout << "yes: all (k+1)-minors vanish identically\n";
      }
      return emit(sdk_c, b, rep.ok ? 0 : 1);
    }));
  });

  // ---- kernel-preimage ----
  Common kp_c;
  std::string kp_points, kp_forms;
  auto* kp = app.add_subcommand("kernel-preimage",
                                "all P with H_f(P) v = 0 for v in the space");
  add_common(kp, kp_c);
  kp->add_option("--points", kp_points);
  kp->add_option("--forms", kp_forms);
  kp->callback([&]() {
    std::exit(with_field(kp_c, [&](auto like) {
      auto f = load_poly(kp_c, like);
      hl::DForm df(f);
      auto s = parse_space(kp_points, kp_forms, kp_c.nvars, like);
      auto pre = hl::kernel_preimage(df, s);
      json b = base_body(kp_c, "kernel-preimage");
      b["empty"] = !pre.space.has_value();
      if (pre.space) {
        b["solution_space"] = hl::space_json(*pre.space);
        json cls = json::array();
        for (const auto& [pt, rel] : pre.classified) {
          json e;
          e["point"] = hl::point_json(pt);
          e["relation"] =
              rel == hl::PreimageRelation::equal ? "equal" : "strictly_contains";
          cls.push_back(e);
        }
        b["classified"] = cls;
        std::cout << "solution space of dim " << pre.space->dim() << "\n";
      } else {
        std::cout << "empty\n";
      }
      return emit(kp_c, b, 0);
    }));
  });

  // ---- constant-kernel ----
  Common ck_c;
  std::string ck_line, ck_target;
  auto* ck = app.add_subcommand("constant-kernel",
                                "does the line have constant kernel equal to the target line?");
  add_common(ck, ck_c);
  ck->add_option("--line", ck_line, "two basis points, semicolon-separated")->required();
  ck->add_option("--target", ck_target, "two basis points of the expected kernel")->required();
  ck->callback([&]() {
    std::exit(with_field(ck_c, [&](auto like) {
      auto f = load_poly(ck_c, like);
      hl::DForm df(f);
      auto ell = parse_space(ck_line, "", ck_c.nvars, like);
      auto target = parse_space(ck_target, "", ck_c.nvars, like);
      auto rep = hl::verify_constant_kernel(df, ell, target);
      json b = base_body(ck_c, "constant-kernel");
      b["constant_kernel"] = rep.ok;
      b["diagnostic"] = rep.diag == hl::ConstantKernelDiag::ok ? "ok"
                        : rep.diag == hl::ConstantKernelDiag::kernel_not_contained
                            ? "kernel_not_contained"
                            : "line lies in D_{n-1}: generic rank below n-1";
      std::cout << (rep.ok ? "yes" : "no") << "\n";
      return emit(ck_c, b, rep.ok ? 0 : 1);
    }));
  });

  // ---- smooth ----
  Common sm_c;
  auto* sm = app.add_subcommand("smooth", "is V(f) smooth? (Jacobian ring Artinian)");
  add_common(sm, sm_c);
  sm->callback([&]() {
    std::exit(with_field(sm_c, [&](auto like) {
      auto f = load_poly(sm_c, like);
      hl::DForm df(f);
      const bool smooth = hl::smoothness_check(df);
      std::cout << (smooth ? "smooth" : "singular") << "\n";
      json b = base_body(sm_c, "smooth");
      b["smooth"] = smooth;
      return emit(sm_c, b, smooth ? 0 : 1);
    }));
  });

  // ---- cone ----
  Common co_c;
  auto* co = app.add_subcommand("cone", "vertex directions of V(g), if any");
  add_common(co, co_c);
  co->callback([&]() {
    std::exit(with_field(co_c, [&](auto like) {
      auto g = load_poly(co_c, like);
      auto vertex = hl::cone_check(g);
      json b = base_body(co_c, "cone");
      b["is_cone"] = vertex.has_value();
      if (vertex) {
        b["vertex_space"] = hl::space_json(*vertex);
        std::cout << "cone with vertex space of dim " << vertex->dim() << "\n";
      } else {
        std::cout << "not a cone\n";
      }
      return emit(co_c, b, 0);
    }));
  });

  // ---- hilbert ----
  Common hb_c;
  auto* hb = app.add_subcommand("hilbert", "Hilbert function of the Jacobian ring");
  add_common(hb, hb_c);
  hb->callback([&]() {
    std::exit(with_field(hb_c, [&](auto like) {
      auto f = load_poly(hb_c, like);
      hl::DForm df(f);
      auto dims = hl::hilbert_function(df);
      for (std::size_t i = 0; i < dims.size(); ++i)
        std::cout << (i ? " " : "") << dims[i];
      std::cout << "\n";
      json b = base_body(hb_c, "hilbert");
      b["dims"] = dims;
      b["socle_degree"] = df.socle_degree();
      return emit(hb_c, b, 0);
    }));
  });

  // ---- member ----
  Common me_c;
  std::string me_target;
  auto* me = app.add_subcommand("member", "ideal membership r in (J_f) with certificate");
  add_common(me, me_c);
  me->add_option("--r", me_target, "target polynomial")->required();
  me->callback([&]() {
    std::exit(with_field(me_c, [&](auto like) {
      auto f = load_poly(me_c, like);
      hl::DForm df(f);
      hl::JacobianRing jr(df);
      auto r = hl::poly_parse(me_target, me_c.nvars, like);
      auto cert = hl::ideal_membership(jr, r);
      std::cout << (cert.member ? "member" : "not a member") << "\n";
      json b = base_body(me_c, "member");
      b["certificate"] = hl::certificate_json(cert);
      return emit(me_c, b, cert.member ? 0 : 1);
    }));
  });

  // ---- socle ----
  Common so_c;
  auto* so = app.add_subcommand("socle", "socle facts: dim (R_f)_N = 1 and h_f outside J_f");
  add_common(so, so_c);
  so->callback([&]() {
    std::exit(with_field(so_c, [&](auto like) {
      auto f = load_poly(so_c, like);
      hl::DForm df(f);
      auto rep = hl::socle_check(df);
      json b = base_body(so_c, "socle");
      b["refused"] = rep.refused;
      if (rep.refused) {
        b["reason"] = rep.refusal;
        std::cout << "refused: " << rep.refusal << "\n";
        return emit(so_c, b, 2);
      }
      b["socle_dim"] = rep.socle_dim;
      b["h_not_member"] = rep.h_nonmember;
      std::cout << "socle dim " << rep.socle_dim << ", h_f "
                << (rep.h_nonmember ? "not in" : "IN") << " the Jacobian ideal\n";
      return emit(so_c, b, rep.ok() ? 0 : 1);
    }));
  });

  // ---- thmd ----
  Common td_c;
  int td_d = 0;
  auto* td = app.add_subcommand("thmd",
                                "certify x_i d_j h - (d-2) delta_ij h in (J_f) for all i,j");
  add_common(td, td_c);
  td->add_option("--d", td_d, "expected degree of f (validated)");
  td->callback([&]() {
    std::exit(with_field(td_c, [&](auto like) {
      auto f = load_poly(td_c, like);
      if (td_d > 0 && f.degree() != td_d)
        throw hl::DomainError("--d does not match the degree of f");
      hl::DForm df(f);
      auto rep = hl::thmd_certificates(df);
      json b = base_body(td_c, "thmd");
      b["vacuous"] = rep.vacuous;
      if (rep.vacuous) {
        std::cout << "h_f is identically zero: vacuous\n";
        return emit(td_c, b, 0);
      }
      json certs = json::array();
      for (const auto& c : rep.certs) certs.push_back(hl::certificate_json(c));
      b["certificates"] = certs;
      b["all_member"] = rep.all_member;
      std::cout << rep.certs.size() << " certificates, "
                << (rep.all_member ? "all members" : "NOT all members") << "\n";
      return emit(td_c, b, rep.all_member ? 0 : 1);
    }));
  });

  // ---- strata ----
  Common st_c;
  std::string st_mode = "full";
  int st_k = -1;
  bool st_sing = false;
  std::uint64_t st_prime = 10007, st_prime2 = 0, st_trials = 200000;
  auto* st = app.add_subcommand("strata", "finite-field stratum enumeration and dimension");
  st->require_subcommand(1);
  auto* st_enum = st->add_subcommand("enum", "enumerate D_k(f) over F_p");
  auto* st_dim = st->add_subcommand("dim", "two-prime dimension estimate for D_k(f)");
  for (CLI::App* sub : {st_enum, st_dim}) {
    Common& c = st_c;
    sub->add_option("--nvars", c.nvars)->required();
    sub->add_option("--f", c.ftext);
    sub->add_option("--f-file", c.ffile);
    sub->add_option("--seed", c.seed);
    sub->add_option("--json", c.json_path);
    sub->add_option("--k", st_k, "rank bound of the stratum");
    sub->add_flag("--sing", st_sing, "use k = n-1 (the singular locus of the hessian)");
    sub->add_option("--prime", st_prime)->required();
  }
  st_enum->add_option("--mode", st_mode, "full|sample");
  st_enum->add_option("--trials", st_trials, "sampling trials");
  st_dim->add_option("--prime2", st_prime2)->required();
  st_enum->callback([&]() {
    std::exit([&]() {
      if (!hl::is_prime_u64(st_prime)) throw hl::DomainError("--prime must be prime");
      auto f = load_poly<hl::Rat>(st_c, hl::Rat(0));
      hl::DForm<hl::Rat> dfq(f);
      if (st_sing) st_k = dfq.n() - 1;
      if (st_k < 0) throw hl::DomainError("give the stratum by --k or --sing");
      hl::DForm<hl::Fp> df(hl::reduce_poly_mod(f, st_prime));
      hl::StrataOptions opt;
      opt.full = st_mode == "full";
      opt.seed = st_c.seed;
      opt.trials = st_trials;
      auto rep = hl::enumerate_stratum(df, st_k, opt);
      std::cout << "count " << rep.count << " (scanned " << rep.scanned << ")\n";
      json b = base_body(st_c, "strata enum");
      b["report"] = hl::strata_json(rep);
      return emit(st_c, b, 0);
    }());
  });
  st_dim->callback([&]() {
    std::exit([&]() {
      if (!hl::is_prime_u64(st_prime) || !hl::is_prime_u64(st_prime2))
        throw hl::DomainError("--prime/--prime2 must be prime");
      auto f = load_poly<hl::Rat>(st_c, hl::Rat(0));
      hl::DForm<hl::Rat> df(f);
      if (st_sing) st_k = df.n() - 1;
      if (st_k < 0) throw hl::DomainError("give the stratum by --k or --sing");
      auto est = hl::estimate_stratum_dimension(df, st_k, st_prime, st_prime2);
      if (est.empty_over_tested)
        std::cout << "empty over tested fields\n";
      else if (est.dim < 0)
        std::cout << "no consistent estimate\n";
      else
        std::cout << "dim " << est.dim
                  << (est.lifted_zero_dimensional ? " (verified rational lifts)" : "")
                  << "\n";
      json b = base_body(st_c, "strata dim");
      b["estimate"] = hl::dimension_json(est);
      return emit(st_c, b, 0);
    }());
  });

  // ---- family ----
  Common fam_c;
  std::string fam_a = "1,1,1,1,1", fam_f1, fam_f2, fam_alpha = "1,1,1,1,1",
              fam_lambda = "1";
  int fam_n = 4;
  bool fam_verify = false, fam_two_lines = false;
  auto* fam = app.add_subcommand("family", "construct and verify the special families");
  fam->require_subcommand(1);
  auto* fam_ts = fam->add_subcommand("ts", "direct sum of two blocks");
  auto* fam_cyc = fam->add_subcommand("cyclic", "x0^3 + f2(x1..xn)");
  auto* fam_war = fam->add_subcommand("waring", "rank-(n+2) normal form with closed-form hessian");
  auto* fam_star = fam->add_subcommand("star", "the exceptional linear system");
  auto* fam_step2 = fam->add_subcommand("step2", "the obstruction family sum a_k x_k^3 + lambda L x4^2");
  for (CLI::App* sub : {fam_ts, fam_cyc, fam_war, fam_star, fam_step2}) {
    sub->add_option("--seed", fam_c.seed);
    sub->add_option("--json", fam_c.json_path);
    sub->add_flag("--verify", fam_verify, "run the family's verification report");
  }
  fam_ts->add_option("--nvars", fam_c.nvars)->required();
  fam_ts->add_option("--f1", fam_f1)->required();
  fam_ts->add_option("--f2", fam_f2)->required();
  fam_cyc->add_option("--nvars", fam_c.nvars)->required();
  fam_cyc->add_option("--f2", fam_f2)->required();
  fam_war->add_option("--a", fam_a, "comma-separated nonzero a_i");
  fam_star->add_option("--n", fam_n, "ambient dimension n >= 3");
  fam_star->add_flag("--two-lines", fam_two_lines, "run the n=4 two-lines minor check");
  fam_step2->add_option("--alpha", fam_alpha);
  fam_step2->add_option("--a", fam_a);
  fam_step2->add_option("--lambda", fam_lambda);

  fam_ts->callback([&]() {
    std::exit([&]() {
      auto f1 = hl::poly_parse<hl::Rat>(fam_f1, fam_c.nvars, hl::Rat(0));
      auto f2 = hl::poly_parse<hl::Rat>(fam_f2, fam_c.nvars, hl::Rat(0));
      auto ts = hl::gen_ts(f1, f2);
      std::cout << hl::poly_print(ts.f) << "\n";
      json b = base_body(fam_c, "family ts");
      b["f"] = hl::poly_print(ts.f);
      b["split_k"] = ts.split_k;
      b["certificate_ok"] = ts.certificate_ok;
      return emit(fam_c, b, ts.certificate_ok ? 0 : 1);
    }());
  });
  fam_cyc->callback([&]() {
    std::exit([&]() {
      auto f2 = hl::poly_parse<hl::Rat>(fam_f2, fam_c.nvars, hl::Rat(0));
      auto ts = hl::gen_cyclic(f2);
      std::cout << hl::poly_print(ts.f) << "\n";
      json b = base_body(fam_c, "family cyclic");
      b["f"] = hl::poly_print(ts.f);
      b["certificate_ok"] = ts.certificate_ok;
      return emit(fam_c, b, ts.certificate_ok ? 0 : 1);
    }());
  });
  fam_war->callback([&]() {
    std::exit([&]() {
      auto a = parse_scalar_list<hl::Rat>(fam_a, hl::Rat(0));
      auto w = hl::gen_waring_normal(a);
      std::cout << hl::poly_print(w.f) << "\n";
      json b = base_body(fam_c, "family waring");
      b["f"] = hl::poly_print(w.f);
      int code = 0;
      if (fam_verify) {
        auto rep = hl::closed_forms_check(w);
        b["hessian_identity"] = rep.hessian_ok;
        b["hesspoly_identity"] = rep.hesspoly_ok;
        code = rep.ok() ? 0 : 1;
        std::cout << "closed forms: " << (rep.ok() ? "verified" : "FAILED") << "\n";
      }
      return emit(fam_c, b, code);
    }());
  });
  fam_star->callback([&]() {
    std::exit([&]() {
      json b = base_body(fam_c, "family star");
      int code = 0;
      if (fam_verify) {
        auto [s, rep] = hl::draw_verified_star(fam_n, fam_c.seed);
        std::cout << hl::poly_print(s.f) << "\n";
        b["f"] = hl::poly_print(s.f);
        b["seed_used"] = rep.seed;
        b["retries"] = rep.retries_used;
        b["plane_in_hessian"] = rep.plane_in_hessian;
        b["kernel_preimage_empty"] = rep.preimage_empty;
        b["smooth"] = rep.smooth;
        code = rep.ok() ? 0 : 1;
        if (fam_two_lines) {
          auto tl = hl::star_two_lines_check(s);
          b["two_lines_minors"] = tl.minor_22 && tl.minor_23 && tl.minor_33;
          b["two_lines_sign"] = tl.sign;
          b["p"] = hl::poly_print(tl.p);
          b["p_nondegenerate"] = tl.p_nondegenerate;
          code = code == 0 && tl.ok() ? 0 : 1;
        }
      } else {
        auto s = hl::gen_star<hl::Rat>(fam_n, fam_c.seed, hl::Rat(0));
        std::cout << hl::poly_print(s.f) << "\n";
        b["f"] = hl::poly_print(s.f);
      }
      return emit(fam_c, b, code);
    }());
  });
  fam_step2->callback([&]() {
    std::exit([&]() {
      auto alpha = parse_scalar_list<hl::Rat>(fam_alpha, hl::Rat(0));
      auto a = parse_scalar_list<hl::Rat>(fam_a, hl::Rat(0));
      auto rep = hl::step2_family(alpha, hl::rat_from_string(fam_lambda), a);
      std::cout << hl::poly_print(rep.g) << "\n";
      std::cout << "obstruction minor " << rep.minor.get_str() << ", rank at Q_04 "
                << rep.rank_at_q04 << "\n";
      json b = base_body(fam_c, "family step2");
      b["g"] = hl::poly_print(rep.g);
      b["minor"] = rep.minor.get_str();
      b["expected"] = rep.expected.get_str();
      b["minor_matches"] = rep.minor_matches;
      b["rank_at_q04"] = rep.rank_at_q04;
      b["obstruction"] = rep.obstruction;
      return emit(fam_c, b, rep.minor_matches && rep.obstruction ? 0 : 1);
    }());
  });

  // ---- tensor-of ----
  Common to_c;
  std::string to_out;
  auto* to = app.add_subcommand("tensor-of",
                                "third-derivative tensor of a cubic, as tensor JSON");
  add_common(to, to_c);
  to->add_option("--out", to_out, "tensor JSON output path")->required();
  to->callback([&]() {
    std::exit([&]() {
      auto f = load_poly<hl::Rat>(to_c, hl::Rat(0));
      hl::DForm<hl::Rat> df(f);
      hl::json jt = hl::tensor_json(hl::tensor_of(df));
      std::ofstream out(to_out);
      if (!out) throw hl::DomainError("cannot write " + to_out);
      out << jt.dump(2) << "\n";
      std::cout << "tensor written to " << to_out << "\n";
      json b = base_body(to_c, "tensor-of");
      b["out"] = to_out;
      return emit(to_c, b, 0);
    }());
  });

  // ---- reconstruct ----
  Common rc_c;
  std::string rc_tensor, rc_a;
  auto* rc = app.add_subcommand("reconstruct",
                                "recover the cubic from a third-derivative tensor");
  rc->add_option("--tensor", rc_tensor, "tensor JSON file")->required();
  rc->add_option("--a", rc_a, "Waring datum a (comma-separated, nonzero)")->required();
  rc->add_option("--json", rc_c.json_path);
  rc->callback([&]() {
    std::exit([&]() {
      std::ifstream in(rc_tensor);
      if (!in) throw hl::DomainError("cannot open " + rc_tensor);
      json jt = json::parse(in);
      auto t = hl::tensor_from_json(jt);
      auto a = parse_scalar_list<hl::Rat>(rc_a, hl::Rat(0));
      json b = base_body(rc_c, "reconstruct");
      auto rel = hl::validate_relations(t, a);
      if (!rel.ok()) {
        json viols = json::array();
        for (const auto& v : rel.violations)
          viols.push_back({v.i, v.j, v.k, v.row});
        b["relations_ok"] = false;
        b["violations"] = viols;
        b["ts_degenerate"] = !rel.has_nonzero_mixed;
        std::cout << "relations failed ("
                  << (rel.has_nonzero_mixed ? "violations listed"
                                            : "all mixed entries vanish")
                  << ")\n";
        return emit(rc_c, b, 1);
      }
      auto rr = hl::reconstruct_g(t, a);
      std::cout << hl::poly_print(rr.g) << "\n";
      b["relations_ok"] = true;
      b["lambda"] = rr.lambda.get_str();
      json bv = json::array();
      for (const auto& x : rr.b) bv.push_back(x.get_str());
      b["b"] = bv;
      b["g"] = hl::poly_print(rr.g);
      b["anchor"] = rr.anchor;
      return emit(rc_c, b, 0);
    }());
  });

  // ---- hessian-equal ----
  Common he_c;
  std::string he_g;
  auto* he = app.add_subcommand("hessian-equal",
                                "are h_f and h_g equal up to one scalar?");
  add_common(he, he_c);
  he->add_option("--g", he_g, "second polynomial")->required();
  he->callback([&]() {
    std::exit(with_field(he_c, [&](auto like) {
      auto f = load_poly(he_c, like);
      auto g = hl::poly_parse(he_g, he_c.nvars, like);
      hl::DForm df(f), dg(g);
      const auto verdict = hl::hessian_equality_probe(df, dg);
      const bool equal = verdict == hl::HessianEqual::equal_up_to_scalar;
      std::cout << (equal ? "equal-up-to-scalar" : "different") << "\n";
      json b = base_body(he_c, "hessian-equal");
      b["verdict"] = equal ? "equal-up-to-scalar" : "different";
      return emit(he_c, b, equal ? 0 : 1);
    }));
  });

  // ---- verify-paper ----
  Common vp_c;
  unsigned vp_jobs = 0;
  auto* vp = app.add_subcommand("verify-paper",
                                "run every registered claim check and fold one report");
  vp->add_option("--seed", vp_c.seed);
  vp->add_option("--json", vp_c.json_path);
  vp->add_option("--jobs", vp_jobs, "checks run concurrently (0 = hardware)");
  vp->callback([&]() {
    std::exit([&]() {
      json body = hl::run_verify_paper(vp_c.seed, vp_jobs);
      for (const auto& [id, entry] : body.at("checks").items())
        std::cout << (entry.at("pass").get<bool>() ? "[PASS] " : "[FAIL] ") << id
                  << "  " << entry.at("title").get<std::string>() << "\n";
      const bool all = body.at("all_pass").get<bool>();
      std::cout << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
      return emit(vp_c, body, all ? 0 : 1);
    }());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const hl::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const hl::DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
