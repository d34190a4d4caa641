// colp: resolutions, Betti tables, shift ideals, powers and Delta(A) for
// generalized co-letterplace ideals given as JSON instance files.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 guard trip.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "colp/betti_oracle.hpp"
#include "colp/classify.hpp"
#include "colp/export.hpp"
#include "colp/instance.hpp"
#include "colp/powers.hpp"
#include "colp/shift.hpp"

namespace fs = std::filesystem;
using namespace colp;
using nlohmann::json;

namespace {

struct Options {
  std::string instance;
  std::string field = "rat";
  std::vector<std::string> guards;
  std::string out;
  std::uint64_t seed = 1;
};

Guards parse_guards(const std::vector<std::string>& specs) {
  Guards g;
  for (const auto& s : specs) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw InputError("--guard expects name=value, got " + s);
    std::size_t value = 0;
    try {
      value = std::stoull(s.substr(eq + 1));
    } catch (const std::exception&) {
      throw InputError("--guard value is not a number: " + s);
    }
    g.set(s.substr(0, eq), value);
  }
  return g;
}

Instance load(const Options& o) { return load_instance(read_instance_file(o.instance), parse_guards(o.guards)); }

// Writes `text` to <out>/<name> when --out is given and echoes the path.
void emit(const Options& o, const std::string& name, const std::string& text) {
  if (o.out.empty()) return;
  fs::create_directories(o.out);
  const fs::path p = fs::path(o.out) / name;
  std::ofstream f(p, std::ios::binary);
  if (!f) throw InputError("cannot write " + p.string());
  f << text;
  std::cout << "wrote " << p.string() << "\n";
}

std::string ranks_string(const std::vector<std::size_t>& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + "]";
}

void print_labels(const Instance& in) {
  std::cout << "labels:";
  for (std::size_t i = 0; i < in.space().m(); ++i) std::cout << " p" << i + 1 << "=" << in.space().poset.name(i);
  std::cout << "\n";
}

int cmd_resolution(const Options& o, bool cone) {
  const auto in = load(o);
  const auto field = FieldChoice::parse(o.field);
  print_labels(in);
  const auto rz = cone ? build_by_mapping_cone(in.ideal, in.guards) : build_resolution(in.ideal, in.guards);
  const auto rep = verify_exact(rz, ideal_of(in.ideal), field, in.guards);
  std::cout << "ranks " << ranks_string(rz.ranks()) << "\npd " << rz.pd() << "\n"
            << "verified: complex, minimal, exact on " << rep.checked() << " strands"
            << (cone ? ", mapping cone identical" : "") << "\n";
  emit(o, "resolution.json", resolution_json(rz).dump(2) + "\n");
  emit(o, "resolution.txt", matrix_text(rz));
  return 0;
}

int cmd_betti(const Options& o, const std::string& mode) {
  const auto in = load(o);
  const auto field = FieldChoice::parse(o.field);
  const auto rz = build_resolution(in.ideal, in.guards);
  const auto from_rz = betti_table_from_resolution(rz);
  TaylorMode tm = TaylorMode::Auto;
  if (mode == "literal") tm = TaylorMode::Literal;
  else if (mode == "contracted") tm = TaylorMode::Contracted;
  else if (mode != "auto") throw InputError("--mode must be auto, literal or contracted");
  const auto oracle = taylor_betti(ideal_of(in.ideal), field, tm, in.guards);
  print_labels(in);
  std::cout << format_betti(from_rz);
  std::size_t diff = 0;
  std::set<BettiTable::Key> keys;
  for (const auto& [k, v] : from_rz.entries()) keys.insert(k);
  for (const auto& [k, v] : oracle.entries()) keys.insert(k);
  for (const auto& k : keys)
    if (from_rz.at(k.first, k.second) != oracle.at(k.first, k.second)) {
      std::cout << "diff i=" << k.first << " b=" << to_string(k.second) << ": construction "
                << from_rz.at(k.first, k.second) << ", oracle " << oracle.at(k.first, k.second) << "\n";
      ++diff;
    }
  std::cout << (diff ? "MISMATCH with the Taylor oracle\n" : "matches the Taylor oracle\n");
  emit(o, "betti.json", json{{"construction", betti_json(from_rz)}, {"oracle", betti_json(oracle)}}.dump(2) + "\n");
  return diff ? 1 : 0;
}

int cmd_hs(const Options& o, int t, bool all) {
  const auto in = load(o);
  const auto field = FieldChoice::parse(o.field);
  const auto report = hs_linearity_report(in.ideal, field, in.guards);
  json out = json::array();
  std::cout << "t  gens  linear     quasi-linear  witness\n";
  for (const auto& r : report) {
    if (!all && r.t != t) continue;
    const std::string lin = r.linear ? (*r.linear ? "yes" : "no") : "undecided";
    std::string wit = "-";
    if (!r.witnesses.empty()) {
      wit = to_string(r.witnesses.front().generator) + " : {";
      for (std::size_t i = 0; i < r.witnesses.front().non_variable.size(); ++i)
        wit += (i ? ", " : "") + to_string(r.witnesses.front().non_variable[i]);
      wit += "}";
    }
    std::printf("%-2d %-5zu %-10s %-13s %s\n", r.t, r.generators, lin.c_str(), r.quasi_linear ? "yes" : "no",
                wit.c_str());
    json gens = json::array();
    for (const auto& g : r.hs.generators()) gens.push_back(to_string(g));
    out.push_back({{"t", r.t}, {"generators", gens}, {"linear", r.linear ? json(*r.linear) : json("undecided")},
                   {"quasi_linear", r.quasi_linear}});
  }
  if (!all && (t < 0 || static_cast<std::size_t>(t) >= report.size()))
    std::cout << t << "  0     (HS_t is zero beyond pd = " << report.size() - 1 << ")\n";
  emit(o, "hs.json", out.dump(2) + "\n");
  return 0;
}

struct PowerFlags {
  int k = 2;
  bool bounded = false, true_power = false, certify = false, verify_res = false, polarization = false;
};

int cmd_power(const Options& o, const PowerFlags& pf) {
  const auto in = load(o);
  const auto field = FieldChoice::parse(o.field);
  print_labels(in);
  json out;
  out["k"] = pf.k;
  if (pf.bounded || (!pf.true_power && !pf.certify && !pf.verify_res && !pf.polarization)) {
    const auto b = bounded_power(in.ideal, pf.k, in.guards);
    std::cout << "L(A;" << pf.k << ") = " << to_string(b) << "\n";
    out["bounded"] = to_string(b);
  }
  if (pf.true_power) {
    const auto p = ideal_power(ideal_of(in.ideal), pf.k);
    std::cout << "L(A)^" << pf.k << " = " << to_string(p) << "\n";
    out["true_power"] = to_string(p);
  }
  if (pf.certify) {
    const auto ctx = lift(in.ideal, pf.k, in.guards);
    const auto c = regular_sequence_certificate(ctx, in.guards);
    std::cout << "N_T(t) = " << to_string(c.numerator_t) << "\nN_R(t) = " << to_string(c.numerator_r) << "\n"
              << "c = " << c.c << " variable differences; quotient " << (c.quotient_matches ? "matches" : "DIFFERS")
              << "; regular sequence " << (c.holds ? "certified" : "NOT certified") << "\n";
    out["regular"] = {{"N_T", to_string(c.numerator_t)}, {"N_R", to_string(c.numerator_r)}, {"c", c.c}, {"holds", c.holds}};
    if (!c.holds) {
      emit(o, "power.json", out.dump(2) + "\n");
      return 1;
    }
  }
  if (pf.verify_res) {
    if (in.ideal.size() != enumerate_hom(in.space(), in.guards.hom_maps).size())
      throw InputError("--verify-resolution needs the full Hom(P, A)");
    const auto rep = verify_power_resolution(in.space().poset, in.space().alphabet, pf.k, field, in.guards);
    std::cout << "ranks " << ranks_string(rep.ranks) << "\nverified: complex, minimal, exact on "
              << rep.strands_checked << " strands, Betti numbers match the Taylor oracle\n";
    out["resolution"] = resolution_json(rep.complex);
    emit(o, "power_resolution.txt", matrix_text(rep.complex));
  }
  if (pf.polarization) {
    const auto ctx = lift(in.ideal, pf.k, in.guards);
    const auto rep = polarization_mismatch(ctx, in.guards);
    if (rep.isomorphic) {
      std::cout << "lifted ideal is the polarization up to renaming:";
      for (const auto& [a, b] : rep.witness) std::cout << " " << to_string(a) << "->" << to_string(b);
      std::cout << "\n";
    } else {
      std::cout << "no variable bijection onto the polarization (" << rep.reason << ", " << rep.nodes
                << " nodes)\n";
    }
    out["polarization"] = {{"isomorphic", rep.isomorphic}, {"nodes", rep.nodes}};
  }
  emit(o, "power.json", out.dump(2) + "\n");
  return 0;
}

int cmd_complex(const Options& o, const std::string& what) {
  const auto in = load(o);
  const auto field = FieldChoice::parse(o.field);
  print_labels(in);
  if (what == "classify") {
    const auto rep = classify(in.ideal, true, field, in.guards);
    std::cout << rep.verdict();
    if (!rep.sphere) {
      std::size_t verts = 0;
      for (Face f : rep.boundary.facets())
        if (face_size(f) == 1) ++verts;
      std::cout << ", boundary = ";
      if (rep.boundary.dim() == 0) std::cout << verts << " vertices";
      else std::cout << rep.boundary.facets().size() << " facets of dimension " << rep.boundary.dim();
    }
    std::cout << "\npd " << rep.pd << ", sum |B_i| - m = " << rep.pd_bound << "\n";
    if (!rep.delta.discarded.empty()) {
      std::cout << "discarded cone vertices:";
      for (const auto& v : rep.delta.discarded) std::cout << " " << v;
      std::cout << "\n";
    }
    emit(o, "complex.json",
         json{{"delta", complex_json(rep.delta.complex)}, {"verdict", rep.verdict()}, {"pd", rep.pd},
              {"boundary", complex_json(rep.boundary)}}
                 .dump(2) +
             "\n");
    return 0;
  }
  const auto delta = delta_of(in.ideal, in.guards);
  if (what == "boundary") {
    const auto b = boundary(delta.complex);
    std::cout << b.to_string();
    emit(o, "boundary.json", complex_json(b).dump(2) + "\n");
    return 0;
  }
  if (what == "homology") {
    const auto h = reduced_homology(delta.complex, field, in.guards.faces);
    std::cout << delta.complex.to_string();
    for (std::size_t i = 0; i < h.size(); ++i) std::cout << "H~_" << static_cast<int>(i) - 1 << " = " << h[i] << "\n";
    const auto cert = certify_homology_type(delta.complex, field, in.guards);
    std::cout << (cert.sphere ? "homology sphere" : cert.ball ? "homology ball" : "neither: " + cert.failure)
              << " (" << cert.faces_checked << " links checked)\n";
    emit(o, "homology.json", json{{"reduced_homology", h}, {"sphere", cert.sphere}, {"ball", cert.ball}}.dump(2) + "\n");
    return 0;
  }
  throw InputError("complex: expected classify, boundary or homology");
}

int cmd_verify_all(const Options& o) {
  const auto in = load(o);
  const auto field = FieldChoice::parse(o.field);
  const auto& g = in.guards;
  auto ok = [](const std::string& what) { std::cout << "ok   " << what << "\n"; };

  const auto L = ideal_of(in.ideal);
  const auto rz = build_resolution(in.ideal, g);
  ok("resolution: complex and minimal, ranks " + ranks_string(rz.ranks()));
  ok("strand exactness on " + std::to_string(verify_exact(rz, L, field, g).checked()) + " multidegrees");
  build_by_mapping_cone(in.ideal, g);
  ok("mapping cone identical to the direct construction");
  verify(betti_table_from_resolution(rz) == taylor_betti(L, field, TaylorMode::Auto, g), "Betti table differs from the Taylor oracle");
  ok("Betti table equals the Taylor oracle");
  verify(is_weakly_polymatroidal(L).holds, "L(A) is not weakly polymatroidal");
  linear_quotients_sets(in.ideal);
  ok("weakly polymatroidal, linear quotient sets match Delta_f");
  ideal_properties(in.ideal);
  verify(ideal_from_generators(in.ideal.space_ptr(), in.ideal.maximal_elements(), g.hom_maps) == in.ideal,
         "ideal is not generated by its maximal elements");
  ok("poset ideal properties");
  if (in.space().alphabet.sets[0].size() >= 2) {
    const auto sp = verify_split_additivity(in.ideal, field, g);
    if (sp.applicable) {
      verify(sp.intersection_identity && sp.additive, "Betti splitting fails");
      ok("Betti splitting on the first element");
    } else {
      ok("Betti splitting: no split (every map uses min A_1)");
    }
  }
  hs_linearity_report(in.ideal, field, g);
  ok("homological shift ideals match F_t; linear implies quasi-linear");
  for (int k : {2, 3}) {
    verify(is_weakly_polymatroidal(bounded_power(in.ideal, k, g), VariableOrder::ElementLetterCopy).holds,
           "L(A;k) is not weakly polymatroidal");
  }
  ok("L(A;k) weakly polymatroidal for k = 2, 3");
  equivalence_report(in.ideal, 2, g);
  ok("the five power conditions agree");
  const auto ctx = lift(in.ideal, 2, g);
  verify(regular_sequence_certificate(ctx, g).holds, "Hilbert series certificate fails");
  ok("lift to P^2 and Hilbert series regularity certificate");
  if (in.ideal.size() == enumerate_hom(in.space(), g.hom_maps).size()) {
    verify_power_resolution(in.space().poset, in.space().alphabet, 2, field, g);
    ok("specialized resolution of L(P, A)^2");
  }
  const auto c = classify(in.ideal, true, field, g);
  ok("Delta(A) is a " + c.verdict() + "; both rules and the homology certificate agree");
  return 0;
}

int cmd_random(const Options& o, std::size_t m, int n, std::size_t max_ideal) {
  const auto spec = random_instance(o.seed, RandomBounds{m, n, max_ideal});
  const auto text = dump_instance(spec);
  if (o.out.empty()) std::cout << text;
  emit(o, "instance.json", text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal free resolutions of generalized co-letterplace ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "rat or gfp:<p>");
  app.add_option("--guard", o.guards, "name=value size cap override")->take_all();
  app.add_option("--out", o.out, "directory for artifacts");
  app.add_option("--seed", o.seed, "random seed");

  auto* res = app.add_subcommand("resolution", "build and verify the resolution");
  res->add_option("instance", o.instance)->required();
  bool cone = false;
  res->add_flag("--cone", cone, "build by iterated mapping cones and compare");

  auto* betti = app.add_subcommand("betti", "Betti table from the construction and the Taylor oracle");
  betti->add_option("instance", o.instance)->required();
  std::string mode = "auto";
  betti->add_option("--mode", mode, "oracle mode: auto, literal, contracted");

  auto* hs = app.add_subcommand("hs", "homological shift ideals");
  hs->add_option("instance", o.instance)->required();
  int hs_t = 0;
  bool hs_all = false;
  auto* t_opt = hs->add_option("--t", hs_t, "single t");
  hs->add_flag("--all", hs_all, "every t")->excludes(t_opt);

  auto* power = app.add_subcommand("power", "bounded and true powers");
  power->add_option("instance", o.instance)->required();
  PowerFlags pf;
  power->add_option("--k", pf.k)->required()->check(CLI::Range(1, 16));
  power->add_flag("--bounded", pf.bounded);
  power->add_flag("--true-power", pf.true_power);
  power->add_flag("--certify-regular", pf.certify);
  power->add_flag("--verify-resolution", pf.verify_res);
  power->add_flag("--polarization-check", pf.polarization);

  auto* cx = app.add_subcommand("complex", "Delta(A): classify, boundary, homology");
  std::string what;
  cx->add_option("what", what)->required()->check(CLI::IsMember({"classify", "boundary", "homology"}));
  cx->add_option("instance", o.instance)->required();

  auto* all = app.add_subcommand("verify-all", "every property check on one instance");
  all->add_option("instance", o.instance)->required();

  auto* rnd = app.add_subcommand("random", "print a random instance");
  std::size_t rm = 4, rmax = 200;
  int rn = 5;
  rnd->add_option("--m", rm, "max poset size")->check(CLI::Range(1, 8));
  rnd->add_option("--n", rn, "max letter")->check(CLI::Range(1, 10));
  rnd->add_option("--max-ideal", rmax, "max size of the poset ideal")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*res) return cmd_resolution(o, cone);
    if (*betti) return cmd_betti(o, mode);
    if (*hs) return cmd_hs(o, hs_t, hs_all);
    if (*power) return cmd_power(o, pf);
    if (*cx) return cmd_complex(o, what);
    if (*all) return cmd_verify_all(o);
    if (*rnd) return cmd_random(o, rm, rn, rmax);
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const GuardError& e) {
    std::cerr << "guard tripped: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
