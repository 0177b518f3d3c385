#include "cli.hpp"

#include "nonschur/chow.hpp"
#include "nonschur/errors.hpp"
#include "nonschur/gluing.hpp"
#include "nonschur/pipeline.hpp"
#include "nonschur/report.hpp"
#include "nonschur/symfunc.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>

namespace nonschur::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t parse_int(const std::string& s, const std::string& flag) {
  std::int64_t v = 0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e || s.empty()) throw UsageError(flag + ": '" + s + "' is not an integer");
  if (v < 0) throw UsageError(flag + ": negative value " + s);
  return v;
}

std::vector<std::int64_t> parse_list(const std::string& s, const std::string& flag) {
  std::vector<std::int64_t> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item, flag));
  if (s.back() == ',') throw UsageError(flag + ": trailing comma");
  return out;
}

DimVec parse_vec(const std::string& s, const std::string& flag, std::size_t len) {
  auto v = parse_list(s, flag);
  if (v.size() != len) throw UsageError(flag + ": expected " + std::to_string(len) + " comma-separated entries");
  return DimVec(v);
}

std::vector<int> to_ints(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

// "coeff:p1,p2,..." with an empty part list for the unit class.
std::pair<Integer, Partition> parse_term(const std::string& s, const std::string& flag) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError(flag + ": expected COEFF:PARTS, got '" + s + "'");
  const std::string cs = s.substr(0, colon);
  Integer c;
  try {
    c = Integer(cs);
  } catch (const std::exception&) {
    throw UsageError(flag + ": bad coefficient '" + cs + "'");
  }
  return {c, Partition(to_ints(parse_list(s.substr(colon + 1), flag)))};
}

struct Common {
  int trials = 8;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  std::string format = "text";

  SamplingOptions sampling() const { return {trials, prime, seed}; }
};

void add_common(CLI::App* sub, Common& c, bool sampling) {
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  if (!sampling) return;
  sub->add_option("--trials", c.trials, "random trials per generic hom/ext")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--prime", c.prime, "field size for sampling (prime >= 101)")->capture_default_str();
  sub->add_option("--seed", c.seed, "base seed")->capture_default_str();
}

struct DecFlags {
  std::string quiver, a1, a2, a3;
  std::optional<std::int64_t> d1, d2, d3;

  void add(CLI::App* sub, bool mults_required) {
    sub->add_option("--quiver", quiver, "arrow counts m12,m13,m23")->required();
    sub->add_option("--a1", a1, "alpha1 as q1,q2,q3")->required();
    sub->add_option("--a2", a2, "alpha2")->required();
    sub->add_option("--a3", a3, "alpha3")->required();
    auto* o1 = sub->add_option("--d1", d1, "multiplicity of alpha1");
    auto* o2 = sub->add_option("--d2", d2, "multiplicity of alpha2");
    auto* o3 = sub->add_option("--d3", d3, "multiplicity of alpha3");
    if (mults_required) {
      o1->required();
      o2->required();
      o3->required();
    }
  }

  ExcDecomposition build(std::int64_t m1, std::int64_t m2, std::int64_t m3) const {
    const DimVec q = parse_vec(quiver, "--quiver", 3);
    for (auto x : {m1, m2, m3})
      if (x < 0) throw UsageError("negative multiplicity");
    return {QuiverThree(static_cast<int>(q[0]), static_cast<int>(q[1]), static_cast<int>(q[2])),
            parse_vec(a1, "--a1", 3), parse_vec(a2, "--a2", 3), parse_vec(a3, "--a3", 3), m1, m2, m3};
  }
};

void check_prime(const Common& c) {
  if (c.prime < 101 || !is_prime_u64(c.prime) || c.prime >= (1ULL << 32))
    throw UsageError("--prime must be a prime in [101, 2^32)");
}

void print_errors(const Common& c, const std::vector<std::string>& errors, std::ostream& out, std::ostream& err) {
  if (c.format == "json") {
    out << Json{{"schema_version", kSchemaVersion}, {"errors", errors}}.dump(2) << '\n';
  } else {
    for (const auto& e : errors) err << "error: " << e << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intersection-theoretic analysis of non-Schurian roots of three-vertex quivers"};
  app.require_subcommand(1, 1);
  Common common;

  auto* analyze_cmd = app.add_subcommand("analyze", "validate a decomposition and compute the intersection class");
  DecFlags adec;
  adec.add(analyze_cmd, true);
  std::vector<std::string> expects;
  analyze_cmd->add_option("--expect", expects, "reference value NAME=VALUE for l,m,n,r,s,t,w; mismatches become warnings");
  add_common(analyze_cmd, common, true);

  auto* kostka_cmd = app.add_subcommand("kostka", "Kostka number K_{shape,weight}");
  std::string shape, weight;
  kostka_cmd->add_option("--shape", shape, "partition")->required();
  kostka_cmd->add_option("--weight", weight, "weight (any order)")->required();
  add_common(kostka_cmd, common, false);

  auto* chow_cmd = app.add_subcommand("chow", "Schubert calculus in a Grassmannian");
  std::string box;
  std::vector<std::string> terms, with_terms;
  std::string op = "show";
  std::optional<int> op_arg;
  chow_cmd->add_option("--box", box, "d,codim")->required();
  chow_cmd->add_option("--term", terms, "COEFF:PARTS, repeatable")->required();
  chow_cmd->add_option("--op", op, "operation")->check(CLI::IsMember({"show", "rect", "pieri", "degree", "mul"}))->capture_default_str();
  chow_cmd->add_option("--arg", op_arg, "j for rect, r for pieri");
  chow_cmd->add_option("--with", with_terms, "second factor for mul, COEFF:PARTS, repeatable");
  add_common(chow_cmd, common, false);

  auto* dec_cmd = app.add_subcommand("decompose", "decompose a root of K(n)");
  int kn = 0;
  std::string root;
  dec_cmd->add_option("--n", kn, "arrow count")->required();
  dec_cmd->add_option("--root", root, "source,sink")->required();
  add_common(dec_cmd, common, false);

  auto* glue_cmd = app.add_subcommand("glue", "gluing arithmetic for a split alpha = beta + gamma");
  DecFlags gdec;
  gdec.add(glue_cmd, false);
  std::string beta, gamma;
  bool enumerate = false;
  glue_cmd->add_option("--beta", beta, "multiplicities of alpha1,alpha2,alpha3 in beta");
  glue_cmd->add_option("--gamma", gamma, "multiplicities of alpha1,alpha2,alpha3 in gamma");
  glue_cmd->add_flag("--enumerate", enumerate, "search splits along the Kronecker decomposition");
  add_common(glue_cmd, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    check_prime(common);
    const bool json = common.format == "json";

    if (*analyze_cmd) {
      std::map<std::string, std::int64_t> expected;
      for (const auto& e : expects) {
        const auto eq = e.find('=');
        if (eq == std::string::npos) throw UsageError("--expect: expected NAME=VALUE");
        expected[e.substr(0, eq)] = parse_int(e.substr(eq + 1), "--expect");
      }
      const ExcDecomposition dec = adec.build(*adec.d1, *adec.d2, *adec.d3);
      const AnalysisReport rep = analyze(dec, common.sampling(), expected);
      out << (json ? report_json(rep).dump(2) + "\n" : report_text(rep));
    } else if (*kostka_cmd) {
      const Partition lam(to_ints(parse_list(shape, "--shape")));
      const Partition mu = Partition::from_unsorted(to_ints(parse_list(weight, "--weight")));
      const Integer k = kostka(lam, mu);
      if (json) out << Json{{"schema_version", kSchemaVersion}, {"shape", lam.parts()}, {"weight", mu.parts()}, {"kostka", integer_json(k)}}.dump(2) << '\n';
      else out << k << '\n';
    } else if (*chow_cmd) {
      const DimVec b = parse_vec(box, "--box", 2);
      const GrassBox gb(static_cast<int>(b[0]), static_cast<int>(b[1]));
      auto load = [&](const std::vector<std::string>& ts, const char* flag) {
        SchubertClass x(gb);
        for (const auto& t : ts) {
          auto [c, p] = parse_term(t, flag);
          if (!gb.contains(p)) throw DomainError(std::string(flag) + ": " + p.to_string() + " lies outside the box");
          x.add(p, c);
        }
        return x;
      };
      const SchubertClass x = load(terms, "--term");
      if (op == "degree") {
        const Integer d = degree(x);
        if (json) out << Json{{"schema_version", kSchemaVersion}, {"degree", integer_json(d)}}.dump(2) << '\n';
        else out << d << '\n';
        return kExitOk;
      }
      SchubertClass y(gb);
      if (op == "show") y = x;
      else if (op == "rect" || op == "pieri") {
        if (!op_arg) throw UsageError("--op " + op + " needs --arg");
        y = op == "rect" ? rectangle_mul(x, *op_arg) : pieri_mul(x, *op_arg);
      } else {
        if (with_terms.empty()) throw UsageError("--op mul needs --with");
        y = product_oracle(x, load(with_terms, "--with"));
      }
      if (json) {
        Json j{{"schema_version", kSchemaVersion}};
        j.update(class_json(y));
        out << j.dump(2) << '\n';
      } else {
        out << y.to_string() << '\n';
      }
    } else if (*dec_cmd) {
      const auto kd = kronecker_decompose(kn, parse_vec(root, "--root", 2));
      out << (json ? decomposition_json(kd).dump(2) + "\n" : decomposition_text(kd));
    } else if (*glue_cmd) {
      if (enumerate) {
        if (!gdec.d1 || !gdec.d2 || !gdec.d3) throw UsageError("--enumerate needs --d1 --d2 --d3");
        const ExcDecomposition dec = gdec.build(*gdec.d1, *gdec.d2, *gdec.d3);
        const auto splits = enumerate_splits(dec, common.sampling());
        Json arr = Json::array();
        for (const auto& s : splits) {
          const auto rep = gluing_report(s, common.sampling());
          if (json) arr.push_back(gluing_json(s, rep));
          else out << gluing_text(s, rep) << '\n';
        }
        if (json) out << Json{{"schema_version", kSchemaVersion}, {"splits", arr}}.dump(2) << '\n';
        else if (splits.empty()) out << "no split found\n";
      } else {
        if (beta.empty() || gamma.empty()) throw UsageError("glue needs --beta and --gamma, or --enumerate");
        const DimVec bm = parse_vec(beta, "--beta", 3), gm = parse_vec(gamma, "--gamma", 3);
        const DimVec total = bm + gm;
        if ((gdec.d1 && *gdec.d1 != total[0]) || (gdec.d2 && *gdec.d2 != total[1]) || (gdec.d3 && *gdec.d3 != total[2]))
          throw ValidationError({"beta + gamma != alpha"});
        const ExcDecomposition dec = gdec.build(total[0], total[1], total[2]);
        const Split s{dec, bm[0], gm[0], DimVec{bm[2], bm[1]}, DimVec{gm[2], gm[1]}};
        const auto rep = gluing_report(s, common.sampling());
        out << (json ? gluing_json(s, rep).dump(2) + "\n" : gluing_text(s, rep));
      }
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    print_errors(common, e.failures(), out, err);
    return kExitValidation;
  } catch (const DomainError& e) {
    print_errors(common, {e.what()}, out, err);
    return kExitValidation;
  } catch (const DimensionError& e) {
    print_errors(common, {e.what()}, out, err);
    return kExitValidation;
  } catch (const DecompositionNotFound& e) {
    print_errors(common, {e.what()}, out, err);
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace nonschur::cli
