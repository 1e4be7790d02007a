#include "kfin/cli/commands.hpp"

#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "kfin/cli/wire.hpp"
#include "kfin/errors.hpp"
#include "kfin/singularities.hpp"
#include "kfin/strata.hpp"

namespace kfin::cli {

namespace {

CommandOutput error_output(int code, const std::string& kind, const std::string& message) {
  Json j{{"error", kind}, {"message", message}};
  return {code, j.dump() + "\n"};
}

// Maps library exceptions onto exit codes; the message goes to stdout as JSON.
CommandOutput guarded(const std::function<CommandOutput()>& body) {
  try {
    return body();
  } catch (const WireError& e) {
    return error_output(kExitMalformed, "malformed_input", e.what());
  } catch (const Unclassified& e) {
    return error_output(kExitPrecondition, "unclassified", e.what());
  } catch (const InvalidInput& e) {
    return error_output(kExitPrecondition, "invalid_input", e.what());
  } catch (const PreconditionError& e) {
    return error_output(kExitPrecondition, "precondition", e.what());
  } catch (const InternalError& e) {
    return error_output(kExitInternal, "internal", e.what());
  } catch (const std::exception& e) {
    return error_output(kExitInternal, "internal", e.what());
  }
}

std::string render(const Json& j, Format format, const std::function<std::string(const Json&)>& text) {
  return format == Format::Json ? j.dump() + "\n" : text(j);
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string verdict_text(const Json& v) {
  std::ostringstream os;
  os << v["outcome"].get<std::string>();
  if (v.contains("witness_k")) os << " k=" << v["witness_k"].dump();
  if (v.contains("cap")) os << " cap=" << v["cap"].dump();
  if (v.contains("point")) os << " point=" << v["point"].get<std::string>();
  os << " bound=" << scalar_text(v["bound_used"]);
  if (v.contains("witnesses")) {
    for (const auto& w : v["witnesses"]) {
      os << "\n  k=" << w["k"].dump() << " ";
      os << (w.contains("point") ? w["point"].get<std::string>() : "roots of " + w["factor"].get<std::string>());
    }
  }
  os << "\n";
  return os.str();
}

}  // namespace

int exit_code_for(Outcome o) {
  switch (o) {
    case Outcome::KF:
      return kExitKF;
    case Outcome::NotKF:
      return kExitNotKF;
    case Outcome::Undecided:
      return kExitUndecided;
  }
  return kExitInternal;
}

SweepAxis parse_axis(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw WireError("grid axis must read name=values: '" + text + "'");
  SweepAxis axis;
  axis.name = text.substr(0, eq);
  if (axis.name != "a" && axis.name != "b" && axis.name != "c") {
    throw WireError("grid axis must be a, b or c: '" + axis.name + "'");
  }
  const std::string rest = text.substr(eq + 1);
  try {
    auto dots = rest.find("..");
    if (dots != std::string::npos) {
      Rational lo = parse_rational(rest.substr(0, dots));
      Rational hi = parse_rational(rest.substr(dots + 2));
      if (lo.get_den() != 1 || hi.get_den() != 1) throw WireError("range endpoints must be integers");
      for (Integer v = lo.get_num(); v <= hi.get_num(); ++v) axis.values.emplace_back(v);
    } else {
      std::stringstream ss(rest);
      std::string item;
      while (std::getline(ss, item, ',')) axis.values.push_back(parse_rational(item));
    }
  } catch (const InvalidInput& e) {
    throw WireError(e.what());
  }
  if (axis.values.empty()) throw WireError("grid axis '" + axis.name + "' has no values");
  return axis;
}

CommandOutput cmd_decide(const std::string& input, const DecideOptions& opts) {
  return guarded([&] {
    Json j = parse_json_text(input);
    Verdict v;
    if (is_stratum_spec(j)) {
      StratumSpec s = stratum_from_json(j);
      std::optional<ProjPoint> q;
      if (opts.point) q = point_from_text(*opts.point, params_field(s.params));
      v = stratum_decide(s.id, s.params, q, opts.ell, opts.max_k);
    } else {
      FormSpace l = curve_from_json(j);
      const long ell = opts.ell ? *opts.ell : l.field()->degree();
      if (opts.point) {
        v = decide_point(l, point_from_text(*opts.point, l.field()), ell, opts.max_k);
      } else {
        AnyValuationOptions av;
        av.cap = opts.max_k;
        v = any_valuation(l, ell, av);
      }
    }
    Json out = verdict_to_json(v);
    return CommandOutput{exit_code_for(v.outcome), render(out, opts.format, verdict_text)};
  });
}

CommandOutput cmd_classify(const std::string& input, const std::vector<std::string>& points, Format format) {
  return guarded([&] {
    Json j = parse_json_text(input);
    FormSpace l = is_stratum_spec(j) ? [&] {
      StratumSpec s = stratum_from_json(j);
      return stratum_space(s.id, s.params);
    }()
                                     : curve_from_json(j);
    Json out;
    if (!points.empty()) {
      if (!basepoint_free(l)) throw PreconditionError("the linear system has base points");
      std::vector<ProjPoint> pts;
      for (const auto& p : points) pts.push_back(point_from_text(p, l.field()));
      out = classification_to_json(classify_profile(center_of(l), pts));
    } else {
      SingularLocus locus = singular_parameter_locus(l);
      out = singularities_to_json(analyze_singularities(l), locus);
    }
    auto text = [](const Json& o) {
      std::ostringstream os;
      if (o.contains("genus")) {
        os << "genus " << o["genus"].dump() << ", total delta " << o["total_delta"].dump() << "\n";
        for (const auto& p : o["singular_points"]) {
          os << (p["type"].is_null() ? std::string("unclassified") : p["type"].get<std::string>()) << " at";
          for (const auto& q : p["preimages"]) os << " " << q.get<std::string>();
          os << "\n";
        }
        for (const auto& u : o["unresolved"]) os << "unresolved factor " << u.get<std::string>() << "\n";
      } else {
        os << o["type"].get<std::string>() << " (delta " << o["delta"].dump() << ")\n";
      }
      return os.str();
    };
    return CommandOutput{0, render(out, format, text)};
  });
}

CommandOutput cmd_semigroup(const std::string& input, const std::string& point, int k_max, Format format) {
  return guarded([&] {
    FormSpace l = curve_from_json(parse_json_text(input));
    SemigroupReport r = value_semigroup(l, point_from_text(point, l.field()), k_max);
    Json out = semigroup_to_json(r);
    auto text = [](const Json& o) {
      std::ostringstream os;
      os << "generators";
      for (const auto& g : o["generators"]) os << " (" << g[0].dump() << "," << g[1].dump() << ")";
      os << (o["truncated"].get<bool>() ? " [truncated]" : "") << "\n";
      return os.str();
    };
    return CommandOutput{0, render(out, format, text)};
  });
}

CommandOutput cmd_locus(const std::string& stratum, int n, Format format) {
  return guarded([&] {
    StratumId id;
    try {
      id = stratum_from_string(stratum);
    } catch (const InvalidInput& e) {
      throw WireError(e.what());
    }
    if (id != StratumId::OrdinaryTriplePoint && id != StratumId::TwoNodes) {
      throw WireError("locus is available for OrdinaryTriplePoint and TwoNodes only");
    }
    MultiPoly p = locus_polynomial(id, n);
    Json out = locus_to_json(id, n, p);
    return CommandOutput{0, render(out, format, [](const Json& o) { return o["polynomial"].get<std::string>() + "\n"; })};
  });
}

CommandOutput cmd_export(const std::string& input) {
  return guarded([&] {
    StratumSpec s = stratum_from_json(parse_json_text(input));
    return CommandOutput{0, curve_to_json(stratum_space(s.id, s.params)).dump() + "\n"};
  });
}

CommandOutput cmd_sweep(const SweepOptions& opts) {
  return guarded([&] {
    StratumId id;
    try {
      id = stratum_from_string(opts.stratum);
    } catch (const InvalidInput& e) {
      throw WireError(e.what());
    }
    if (opts.jobs < 1) throw WireError("--jobs must be positive");
    if (opts.max_k < 1) throw WireError("--max-k must be positive");
    std::size_t cells = 1;
    for (const auto& axis : opts.grid) cells *= axis.values.size();

    // Cell i decodes with the first axis varying slowest.
    auto params_of = [&](std::size_t i) {
      std::vector<std::pair<std::string, Rational>> out(opts.grid.size());
      for (std::size_t ax = opts.grid.size(); ax-- > 0;) {
        const auto& vals = opts.grid[ax].values;
        out[ax] = {opts.grid[ax].name, vals[i % vals.size()]};
        i /= vals.size();
      }
      return out;
    };
    auto run_cell = [&](std::size_t i) {
      const auto cell = params_of(i);
      Json params = Json::object();
      StratumParams p;
      p.n = opts.n;
      for (const auto& [name, value] : cell) {
        params[name] = to_string(value);
        FieldElement e(NumberField::rationals(), value);
        (name == "a" ? p.a : name == "b" ? p.b : p.c) = e;
      }
      Json line{{"params", params}};
      CommandOutput r = guarded([&] {
        Verdict v = stratum_decide(id, p, std::nullopt, std::nullopt, opts.max_k);
        line["verdict"] = verdict_to_json(v);
        return CommandOutput{};
      });
      if (r.exit_code != 0) line["error"] = Json::parse(r.text)["message"];
      if (opts.format == Format::Json) return line.dump() + "\n";
      std::ostringstream os;
      for (const auto& [name, value] : params.items()) os << name << "=" << value.get<std::string>() << " ";
      os << ": " << (line.contains("error") ? "error " + line["error"].get<std::string>() + "\n" : verdict_text(line["verdict"]));
      return os.str();
    };

    std::vector<std::string> lines(cells);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < cells; i = next++) lines[i] = run_cell(i);
    };
    std::vector<std::thread> pool;
    const int threads = static_cast<int>(std::min<std::size_t>(opts.jobs, cells));
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::string text;
    for (const auto& l : lines) text += l;
    return CommandOutput{0, text};
  });
}

}  // namespace kfin::cli
