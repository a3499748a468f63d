#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hrp/digitset.hpp"
#include "hrp/errors.hpp"
#include "hrp/expander.hpp"
#include "hrp/json_io.hpp"
#include "hrp/places.hpp"
#include "hrp/verify.hpp"

namespace hrp::cli {

namespace {

struct RunConfig {
  unsigned precision = kDefaultPrecision;
  long max_steps = kDefaultMaxSteps;
  long budget = kDefaultSearchBudget;
  std::string seed_box;  // "", "K", "lo:hi" or "empty"
  std::string tolerance = "1e-9";
  std::string out;
  std::string digits_file;
  int length = 32;
  std::string alphabet;

  Rational tol;

  void validate() {
    if (precision < 1 || precision > kMaxPrecision)
      throw InputError("--precision must be in [1, " + std::to_string(kMaxPrecision) + "]");
    if (max_steps < 1) throw InputError("--max-steps must be positive");
    if (budget < 1) throw InputError("--budget must be positive");
    if (length < 0) throw InputError("--length must be non-negative");
    tol = parse_rational(tolerance);
    if (tol <= 0 || tol > Rational(1, 1000000)) throw InputError("--tolerance must be in (0, 1e-6]");
  }

  SeedBox box(long default_radius) const {
    if (seed_box.empty()) return SeedBox::symmetric(default_radius);
    if (seed_box == "empty") return SeedBox::none();
    try {
      const auto colon = seed_box.find(':');
      SeedBox b;
      if (colon == std::string::npos) {
        const long k = std::stol(seed_box);
        if (k < 0) throw InputError("--seed-box radius must be non-negative");
        b = SeedBox::symmetric(k);
      } else {
        b = {std::stol(seed_box.substr(0, colon)), std::stol(seed_box.substr(colon + 1))};
      }
      return b;
    } catch (const std::logic_error&) {
      throw InputError("bad --seed-box '" + seed_box + "' (use K, lo:hi or empty)");
    }
  }
};

std::vector<Integer> parse_integers(const std::string& text, const char* what) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty() && item[0] == '+') item.erase(0, 1);
    Integer z;
    if (item.empty() || z.set_str(item, 10) != 0)
      throw InputError(std::string("bad ") + what + " coefficient '" + item + "'");
    out.push_back(z);
  }
  if (out.empty()) throw InputError(std::string(what) + " needs at least one coefficient");
  return out;
}

MinPoly parse_minpoly(const std::string& text) {
  if (text.empty()) throw InputError("--minpoly is required");
  return MinPoly::from_coeffs(parse_integers(text, "--minpoly"));
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not JSON: " + e.what());
  }
}

// JSON to --out (summary to `out`) or to `out` (summary to `err`).
class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  void json(const Json& j) {
    if (cfg_.out.empty()) {
      out_ << dump(j);
      return;
    }
    std::ofstream f(cfg_.out, std::ios::binary);
    if (!f) throw InputError("cannot write '" + cfg_.out + "'");
    f << dump(j);
  }
  std::ostream& info() { return cfg_.out.empty() ? err_ : out_; }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

struct Context {
  MinPoly m;
  std::shared_ptr<const Embedder> emb;
  Classification cls;
};

Context make_context(const MinPoly& m, const RunConfig& cfg, std::size_t degree) {
  AlgebraicNumber a = analyze(m, cfg.precision);
  const Classification cls = classify(a);
  const std::size_t deg = std::max({degree, static_cast<std::size_t>(m.degree()), kDefaultTableDegree});
  return {m, std::make_shared<const Embedder>(std::move(a), deg), cls};
}

DigitSet digit_set(const Context& ctx, const RunConfig& cfg) {
  if (!cfg.digits_file.empty()) return digit_set_from_json(read_json(cfg.digits_file), *ctx.emb);
  return build_digit_set(*ctx.emb, cfg.budget);
}

bool require_hrp(const Context& ctx, std::ostream& err) {
  if (ctx.cls.has_hrp()) return true;
  err << "alpha has a conjugate strictly inside the unit circle (SomeInside); no digit set\n";
  return false;
}

std::string decimal(const Rational& x) { return to_fixed(x, 12, Rounding::Up); }

int cmd_classify(const std::string& minpoly, const RunConfig& cfg, Emitter& emit) {
  const MinPoly m = parse_minpoly(minpoly);
  const AlgebraicNumber a = analyze(m, cfg.precision);
  const Classification c = classify(a);
  emit.json(classification_json(a, c));
  emit.info() << to_string(c.kind) << (c.kind == ModulusKind::AllUnitModulus
                                            ? (c.is_root_of_unity ? " (root of unity)" : " (not a root of unity)")
                                            : "")
              << '\n';
  return c.has_hrp() ? kOk : kSomeInside;
}

int cmd_digits(const std::string& minpoly, const RunConfig& cfg, Emitter& emit, std::ostream& err) {
  const Context ctx = make_context(parse_minpoly(minpoly), cfg, 0);
  if (!require_hrp(ctx, err)) return kSomeInside;
  const DigitSet F = digit_set(ctx, cfg);
  emit.json(digit_set_json(F));
  emit.info() << "Card(F) = " << F.size() << "\nbound 2^n|M(0)| = " << F.cardinality_bound() << "\nc = "
              << decimal(F.c()) << '\n';
  return kOk;
}

int cmd_expand(const std::string& minpoly, const std::string& beta_text, const RunConfig& cfg, Emitter& emit,
               std::ostream& err) {
  if (beta_text.empty()) throw InputError("--beta is required");
  const IntPoly beta(parse_integers(beta_text, "--beta"));
  const Context ctx = make_context(parse_minpoly(minpoly), cfg, static_cast<std::size_t>(std::max(beta.degree(), 0)));
  if (!require_hrp(ctx, err)) return kSomeInside;
  const Expander ex(digit_set(ctx, cfg), ctx.emb);
  const ExpansionTrace t = ex.expand(beta, cfg.max_steps);
  const AuditReport audit = audit_trace(t, ex.digits(), *ctx.emb, cfg.tol);
  emit.json(trace_json(t, ex.digits(), audit));
  auto& info = emit.info();
  info << "status " << to_string(t.status);
  if (t.status == ExpansionStatus::Cycle) info << " (entry " << t.cycle_entry << ", period " << t.cycle_period << ")";
  info << ", " << t.digits_out.size() << " digits, tail " << t.tail.to_string() << "\nrecomposition "
       << (audit.recomposition ? "exact" : "FAILED") << ", audit " << (audit.passed() ? "pass" : "FAIL") << " ("
       << audit.entries.size() << " checks)\n";
  if (!audit.passed()) return kAuditFailed;
  if (t.status == ExpansionStatus::Budget) return kBudget;
  return kOk;
}

int cmd_attractor(const std::string& minpoly, const RunConfig& cfg, Emitter& emit, std::ostream& err) {
  const Context ctx = make_context(parse_minpoly(minpoly), cfg, 0);
  if (!require_hrp(ctx, err)) return kSomeInside;
  const Expander ex(digit_set(ctx, cfg), ctx.emb);
  const SeedBox box = cfg.box(kDefaultSeedRadius);
  const Attractor A = attractor(ex, box, cfg.max_steps);
  emit.json(attractor_json(A, ctx.m, box, cfg.max_steps));
  auto& info = emit.info();
  info << "|A| = " << A.states.size() << ", " << A.cycles.size() << " non-zero cycles";
  if (!A.cycles.empty()) {
    info << " (periods";
    for (const auto& c : A.cycles) info << ' ' << c.size();
    info << ')';
  }
  info << "\nseeds " << A.seed_count << ": " << A.zero_count << " zero, " << A.cycle_count << " cycle, "
       << A.budget_failures.size() << " budget\n";
  return A.budget_failures.empty() ? kOk : kBudget;
}

int cmd_coverage(const std::string& minpoly, const RunConfig& cfg, Emitter& emit, std::ostream& err) {
  const Context ctx = make_context(parse_minpoly(minpoly), cfg, 0);
  const SeedBox box = cfg.box(4);
  const int n = ctx.m.degree();
  const std::vector<IntPoly> region = seeds(box, n);
  std::vector<IntPoly> alphabet;
  std::string what;
  if (!cfg.alphabet.empty()) {
    for (const auto& z : parse_integers(cfg.alphabet, "--alphabet")) alphabet.push_back(IntPoly::constant(z));
    what = "given alphabet";
  } else {
    if (!require_hrp(ctx, err)) return kSomeInside;
    const Expander ex(digit_set(ctx, cfg), ctx.emb);
    const Attractor A = attractor(ex, box, cfg.max_steps);
    for (const auto& d : ex.digits().digits()) alphabet.push_back(d.rep);
    alphabet.insert(alphabet.end(), A.states.begin(), A.states.end());
    what = "F u A";
  }
  std::string desc = box.empty() ? "empty" : "[" + std::to_string(box.lo) + "," + std::to_string(box.hi) + "]^" +
                                                 std::to_string(n);
  const CoverageReport rep = coverage(alphabet, ctx.emb->number(), region, cfg.length, kWordGuard, desc);
  emit.json(coverage_json(rep, ctx.m));
  emit.info() << what << " (" << rep.alphabet_size << " letters), region " << desc << ": "
              << (rep.covered ? "covered at length " + std::to_string(rep.length_used)
                              : std::to_string(rep.misses.size()) + " misses within length " +
                                    std::to_string(cfg.length))
              << '\n';
  return rep.covered ? kOk : kNotCovered;
}

int cmd_audit(const std::string& trace_file, const std::string& minpoly, const RunConfig& cfg, Emitter& emit) {
  if (trace_file.empty()) throw InputError("audit needs a trace file");
  const Json j = read_json(trace_file);
  const ExpansionTrace t = trace_from_json(j);
  const MinPoly m = minpoly.empty() ? minpoly_from_json(j.at("alpha")) : parse_minpoly(minpoly);
  int degree = t.beta0.degree();
  for (const auto& st : t.steps) degree = std::max(degree, st.beta.degree());
  const Context ctx = make_context(m, cfg, static_cast<std::size_t>(std::max(degree, 0)));
  if (!ctx.cls.has_hrp()) throw InputError("trace alpha has a conjugate strictly inside the unit circle");
  const DigitSet F = digit_set(ctx, cfg);
  const AuditReport audit = audit_trace(t, F, *ctx.emb, cfg.tol);
  long failed = 0;
  for (const auto& e : audit.entries) failed += e.pass ? 0 : 1;
  emit.json(Json{{"alpha", minpoly_json(m)},
                 {"checks", audit.entries.size()},
                 {"failed", failed},
                 {"recomposition", audit.recomposition},
                 {"decrease_violations", audit.decrease_violations},
                 {"sign_violations", audit.sign_violations},
                 {"angle_violations", audit.angle_violations},
                 {"digit_violations", audit.digit_violations},
                 {"pass", audit.passed()}});
  emit.info() << "audit " << (audit.passed() ? "pass" : "FAIL") << " (" << audit.entries.size() << " checks)\n";
  return audit.passed() ? kOk : kAuditFailed;
}

// "--minpoly -1,-1,1" would otherwise read as an option.
std::vector<std::string> glue_values(const std::vector<std::string>& args) {
  static const char* kValued[] = {"--minpoly", "--beta", "--alphabet", "--seed-box"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool valued = std::any_of(std::begin(kValued), std::end(kValued), [&](const char* f) { return args[i] == f; });
    if (valued && i + 1 < args.size()) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  CLI::App app{"Height-reducing digit expansions in Z[alpha]", "hrp"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string minpoly, beta, trace_file;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--minpoly", minpoly, "minimal polynomial, ascending coefficients a0,...,an");
    sub->add_option("--precision", cfg.precision, "root enclosure precision in bits")->capture_default_str();
    sub->add_option("--out", cfg.out, "write JSON here instead of stdout");
  };
  auto digits_opts = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, "largest coefficient radius of the digit search")->capture_default_str();
    sub->add_option("--digits-file", cfg.digits_file, "digit set JSON to use instead of building one");
  };

  auto* classify_cmd = app.add_subcommand("classify", "modulus class of alpha");
  common(classify_cmd);
  auto* digits_cmd = app.add_subcommand("digits", "build the digit set F");
  common(digits_cmd);
  digits_opts(digits_cmd);
  auto* expand_cmd = app.add_subcommand("expand", "expand beta and audit the trace");
  common(expand_cmd);
  digits_opts(expand_cmd);
  expand_cmd->add_option("--beta", beta, "element of Z[alpha], ascending coefficients");
  expand_cmd->add_option("--max-steps", cfg.max_steps)->capture_default_str();
  expand_cmd->add_option("--tolerance", cfg.tolerance)->capture_default_str();
  auto* attractor_cmd = app.add_subcommand("attractor", "cycles reached from a seed box");
  common(attractor_cmd);
  digits_opts(attractor_cmd);
  attractor_cmd->add_option("--seed-box", cfg.seed_box, "K, lo:hi or empty (default 20)");
  attractor_cmd->add_option("--max-steps", cfg.max_steps)->capture_default_str();
  auto* coverage_cmd = app.add_subcommand("coverage", "BFS word coverage of a coefficient box");
  common(coverage_cmd);
  digits_opts(coverage_cmd);
  coverage_cmd->add_option("--seed-box", cfg.seed_box, "region box: K, lo:hi or empty (default 4)");
  coverage_cmd->add_option("--length", cfg.length, "longest word")->capture_default_str();
  coverage_cmd->add_option("--alphabet", cfg.alphabet, "integer digits to use instead of F u A");
  coverage_cmd->add_option("--max-steps", cfg.max_steps)->capture_default_str();
  auto* audit_cmd = app.add_subcommand("audit", "re-audit a trace file");
  common(audit_cmd);
  digits_opts(audit_cmd);
  audit_cmd->add_option("trace", trace_file, "trace JSON from expand")->required();
  audit_cmd->add_option("--tolerance", cfg.tolerance)->capture_default_str();

  std::vector<std::string> args = glue_values(raw);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInput;
  }

  Emitter emit(cfg, out, err);
  try {
    cfg.validate();
    if (*classify_cmd) return cmd_classify(minpoly, cfg, emit);
    if (*digits_cmd) return cmd_digits(minpoly, cfg, emit, err);
    if (*expand_cmd) return cmd_expand(minpoly, beta, cfg, emit, err);
    if (*attractor_cmd) return cmd_attractor(minpoly, cfg, emit, err);
    if (*coverage_cmd) return cmd_coverage(minpoly, cfg, emit, err);
    if (*audit_cmd) return cmd_audit(trace_file, minpoly, cfg, emit);
  } catch (const SearchExhausted& e) {
    err << "error: " << e.what() << " (attempted radius " << e.attempted_radius() << ")\n";
    return kSearchExhausted;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kGuard;
  } catch (const PrecisionExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kPrecision;
  } catch (const BoundaryUndecidable& e) {
    err << "error: " << e.what() << '\n';
    return kPrecision;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}

}  // namespace hrp::cli
