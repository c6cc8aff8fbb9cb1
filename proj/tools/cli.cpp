#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "stabring/bounds.hpp"
#include "stabring/fourier.hpp"
#include "stabring/halfgraph.hpp"
#include "stabring/sidon.hpp"
#include "stabring/stability.hpp"

namespace stabring::cli {
namespace {

constexpr double kSlack = 1e-9;  // relative slack on checked inequalities
constexpr double kPi = 3.14159265358979323846264338327950288;

// ---------------------------------------------------------------- parsing

std::string trimmed(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t parse_int(const std::string& raw, const char* what) {
  const std::string s = trimmed(raw);
  std::int64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw std::invalid_argument(std::string("cannot parse ") + what + ": '" + raw + "'");
  return v;
}

// ------------------------------------------------------------ formatting

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// One report field: a key plus its JSON rendering and a flat (csv/text) one.
struct Field {
  std::string key;
  std::string json;
  std::string flat;
};

Field f_str(std::string key, const std::string& v) {
  return {std::move(key), "\"" + json_escape(v) + "\"", v};
}

Field f_int(std::string key, std::int64_t v) {
  std::string s = std::to_string(v);
  return {std::move(key), s, s};
}

Field f_uint(std::string key, std::uint64_t v) {
  std::string s = std::to_string(v);
  return {std::move(key), s, s};
}

Field f_double(std::string key, double v) {
  std::string s = format_double(v);
  return {std::move(key), s, s};
}

Field f_bool(std::string key, bool v) {
  const char* s = v ? "true" : "false";
  return {std::move(key), s, s};
}

Field f_null(std::string key) { return {std::move(key), "null", "-"}; }

Field f_int_array(std::string key, const std::vector<std::int64_t>& v) {
  std::string json = "[";
  std::string flat;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) {
      json += ',';
      flat += ' ';
    }
    json += std::to_string(v[i]);
    flat += std::to_string(v[i]);
  }
  json += ']';
  return {std::move(key), std::move(json), std::move(flat)};
}

Field f_double_array(std::string key, const std::vector<double>& v) {
  std::string json = "[";
  std::string flat;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) {
      json += ',';
      flat += ' ';
    }
    const std::string s = format_double(v[i]);
    json += s;
    flat += s;
  }
  json += ']';
  return {std::move(key), std::move(json), std::move(flat)};
}

// Big integers are serialized as decimal strings: JSON number parsers are
// not required to take thousands of digits.
Field f_bigint(std::string key, const BigInt& v) {
  const std::string s = v.get_str();
  return {std::move(key), "\"" + s + "\"", s};
}

std::string fields_to_json(const std::vector<Field>& fields) {
  std::string out = "{";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += '"';
    out += json_escape(fields[i].key);
    out += "\":";
    out += fields[i].json;
  }
  out += '}';
  return out;
}

// Emits one logical report: `head` fields identify the run, each entry of
// `records` is one result row.  JSON inlines a single record for readability.
void emit(const RunConfig& cfg, std::ostream& out, const std::vector<Field>& head,
          const std::vector<std::vector<Field>>& records) {
  switch (cfg.output) {
    case RunConfig::Output::json: {
      if (records.size() == 1) {
        std::vector<Field> all = head;
        all.insert(all.end(), records[0].begin(), records[0].end());
        out << fields_to_json(all) << '\n';
      } else {
        std::string s = "{";
        for (std::size_t i = 0; i < head.size(); ++i) {
          if (i) s += ',';
          s += '"' + json_escape(head[i].key) + "\":" + head[i].json;
        }
        if (!head.empty()) s += ',';
        s += "\"records\":[";
        for (std::size_t i = 0; i < records.size(); ++i) {
          if (i) s += ',';
          s += fields_to_json(records[i]);
        }
        s += "]}";
        out << s << '\n';
      }
      break;
    }
    case RunConfig::Output::csv: {
      if (records.empty()) return;
      for (std::size_t i = 0; i < records[0].size(); ++i) {
        if (i) out << ',';
        out << records[0][i].key;
      }
      out << '\n';
      for (const auto& rec : records) {
        for (std::size_t i = 0; i < rec.size(); ++i) {
          if (i) out << ',';
          out << rec[i].flat;
        }
        out << '\n';
      }
      break;
    }
    case RunConfig::Output::text: {
      for (const auto& f : head) out << f.key << ": " << f.flat << '\n';
      for (const auto& rec : records) {
        if (!head.empty() || records.size() > 1) out << "--\n";
        for (const auto& f : rec) out << f.key << ": " << f.flat << '\n';
      }
      break;
    }
  }
}

// ------------------------------------------------------------- sets/groups

std::vector<std::vector<std::int64_t>> load_sets(const RunConfig& cfg,
                                                 const FiniteAbelianGroup& g) {
  std::vector<std::vector<std::int64_t>> sets;
  if (!cfg.set_file.empty()) {
    std::ifstream in(cfg.set_file);
    if (!in) throw std::invalid_argument("cannot open set file: " + cfg.set_file);
    std::string line;
    while (std::getline(in, line)) {
      const std::string t = trimmed(line);
      if (t.empty() || t[0] == '#') continue;
      sets.push_back(parse_set_spec(g, t));
    }
    if (sets.empty()) throw std::invalid_argument("set file has no sets: " + cfg.set_file);
  } else {
    sets.push_back(parse_set_spec(g, cfg.set_spec));
  }
  return sets;
}

unsigned thread_budget(std::size_t tasks) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("STABRING_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v < 1024) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return std::max(1u, std::min<unsigned>(n, static_cast<unsigned>(tasks)));
}

// ------------------------------------------------------------- commands

int cmd_stability(const RunConfig& cfg, std::ostream& out) {
  const FiniteAbelianGroup g = parse_group_spec(cfg.group_spec);
  std::vector<Field> head{f_str("command", "stability"), f_str("group", g.spec_string())};
  std::vector<std::vector<Field>> records;
  for (const auto& members : load_sets(cfg, g)) {
    const GroupSubset a(g, members);
    const StabilityReport r = stability_index(a, cfg.max_k);
    std::vector<Field> rec{f_int_array("set", a.members()),
                           f_int("max_order", r.max_order),
                           f_int("stability_index", r.stability_index)};
    if (r.witness) {
      rec.push_back(f_int_array("witness_a", r.witness->a));
      rec.push_back(f_int_array("witness_b", r.witness->b));
    } else {
      rec.push_back(f_null("witness_a"));
      rec.push_back(f_null("witness_b"));
    }
    records.push_back(std::move(rec));
  }
  emit(cfg, out, head, records);
  return 0;
}

int cmd_norm(const RunConfig& cfg, std::ostream& out) {
  const FiniteAbelianGroup g = parse_group_spec(cfg.group_spec);
  std::vector<Field> head{f_str("command", "norm"), f_str("group", g.spec_string())};
  std::vector<std::vector<Field>> records;
  for (const auto& members : load_sets(cfg, g)) {
    const GroupSubset a(g, members);
    const NormReport r = bg_norm(a);
    const std::size_t size = a.members().size();
    std::vector<Field> rec{f_int_array("set", a.members()),
                           f_int("size", static_cast<std::int64_t>(size)),
                           f_double("norm", r.norm)};
    // Diagnostic only: the square-root comparison has an unresolved o(1).
    if (size > 0)
      rec.push_back(f_double("ratio_to_sqrt_size",
                             r.norm / std::sqrt(static_cast<double>(size))));
    else
      rec.push_back(f_null("ratio_to_sqrt_size"));
    rec.push_back(f_double_array("per_character", r.per_character));
    records.push_back(std::move(rec));
  }
  emit(cfg, out, head, records);
  return 0;
}

int cmd_sidon(const RunConfig& cfg, std::ostream& out) {
  const FiniteAbelianGroup g = parse_group_spec(cfg.group_spec);
  std::vector<Field> head{f_str("command", "sidon"), f_str("group", g.spec_string())};
  std::vector<std::vector<Field>> records;
  for (const auto& members : load_sets(cfg, g)) {
    const GroupSubset a(g, members);
    const SidonVerdict v = is_sidon(a);
    const std::int64_t size = static_cast<std::int64_t>(a.members().size());
    std::vector<Field> rec{f_int_array("set", a.members()),
                           f_bool("is_sidon", v.is_sidon)};
    if (v.violation)
      rec.push_back(f_int_array("violation",
                                {v.violation->x, v.violation->y, v.violation->z,
                                 v.violation->w}));
    else
      rec.push_back(f_null("violation"));
    if (v.is_sidon)
      rec.push_back(f_bool("size_bound_ok",
                           size * size - size + 1 <= g.order()));
    else
      rec.push_back(f_null("size_bound_ok"));
    records.push_back(std::move(rec));
  }
  emit(cfg, out, head, records);
  return 0;
}

int cmd_singer(const RunConfig& cfg, std::ostream& out) {
  const DifferenceSetReport r = singer_difference_set(cfg.q);
  const FiniteAbelianGroup zn = FiniteAbelianGroup::cyclic(r.modulus);
  const GroupSubset a(zn, r.set);
  const NormReport nr = bg_norm(a);
  const double closed = singer_norm_closed_form(cfg.q);
  const bool norm_ok = std::abs(nr.norm - closed) <= 1e-9;
  std::vector<std::vector<Field>> records{{
      f_int("q", cfg.q),
      f_int("modulus", r.modulus),
      f_int_array("set", r.set),
      f_int("size", static_cast<std::int64_t>(r.set.size())),
      f_bool("perfect_difference_set", r.lambda_check),
      f_bool("is_sidon", is_sidon(a).is_sidon),
      f_double("norm", nr.norm),
      f_double("closed_form", closed),
      f_bool("norm_ok", norm_ok),
  }};
  emit(cfg, out, {f_str("command", "singer")}, records);
  return norm_ok ? 0 : 1;
}

int cmd_halfgraph(const RunConfig& cfg, std::ostream& out) {
  if (cfg.k < 1 || cfg.k > 4096)
    throw std::invalid_argument("halfgraph: k must be in [1, 4096]");
  const HalfGraphSpectrum s = half_graph_spectrum(cfg.k);
  double max_diff = 0.0;
  for (int i = 0; i < cfg.k; ++i)
    max_diff = std::max(max_diff, std::abs(s.closed_form[i] - s.numeric[i]));
  const bool lower_ok = s.trace_norm >= s.lower_bound * (1.0 - kSlack);
  std::vector<std::vector<Field>> records{{
      f_int("k", cfg.k),
      f_double_array("closed_form", s.closed_form),
      f_double_array("numeric", s.numeric),
      f_double("spectrum_agreement", max_diff),
      f_double("trace_norm", s.trace_norm),
      f_double("lower_bound", s.lower_bound),
      f_bool("lower_bound_ok", lower_ok),
  }};
  emit(cfg, out, {f_str("command", "halfgraph")}, records);
  return lower_ok ? 0 : 1;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  if (cfg.multinomial.empty() == cfg.representation.empty())
    throw std::invalid_argument("bounds: need exactly one of --multinomial, --representation");
  if (!cfg.multinomial.empty()) {
    std::vector<std::int64_t> ks;
    for (const auto& part : split(cfg.multinomial, ','))
      ks.push_back(parse_int(part, "colour size"));
    const BigBound b = multinomial_ramsey_bound(ks);
    std::vector<std::vector<Field>> records{{
        f_str("mode", "multinomial"),
        f_int_array("colours", ks),
        f_bigint("value", b.value),
        f_str("expression", b.expression),
    }};
    emit(cfg, out, {f_str("command", "bounds")}, records);
    return 0;
  }
  const auto parts = split(cfg.representation, ',');
  if (parts.size() != 2)
    throw std::invalid_argument("bounds: --representation expects 'k,s'");
  const int k = static_cast<int>(parse_int(parts[0], "k"));
  const int s = static_cast<int>(parse_int(parts[1], "s"));
  const RepresentationBound rb = representation_stability_bound(k, s);
  const std::size_t bits =
      mpz_sizeinbase(rb.exact_chain.value.get_mpz_t(), 2);
  const bool compare = !rb.k1_flagged;
  const bool comparison_ok = compare ? exact_chain_below_simplified(rb) : true;
  std::vector<Field> rec{
      f_str("mode", "representation"),
      f_int("k", k),
      f_int("s", s),
      f_str("exact_chain_expression", rb.exact_chain.expression),
      f_uint("exact_chain_bits", bits),
  };
  if (bits <= 4096)
    rec.push_back(f_bigint("exact_chain", rb.exact_chain.value));
  else
    rec.push_back(f_null("exact_chain"));
  rec.push_back(f_str("simplified_expression", rb.simplified.expression));
  rec.push_back(f_bigint("simplified_log2", rb.simplified_log2));
  rec.push_back(f_bool("simplified_materialized", rb.simplified_materialized));
  rec.push_back(f_bool("k1_flagged", rb.k1_flagged));
  if (compare)
    rec.push_back(f_bool("comparison_ok", comparison_ok));
  else
    rec.push_back(f_null("comparison_ok"));
  emit(cfg, out, {f_str("command", "bounds")}, {{rec}});
  return comparison_ok ? 0 : 1;
}

int cmd_interval(const RunConfig& cfg, std::ostream& out) {
  if (cfg.k < 1) throw std::invalid_argument("interval: k must be >= 1");
  if (cfg.k > 100000) throw std::invalid_argument("interval: k capped at 1e5");
  const double quad = interval_norm_quadrature(cfg.k);
  const double series = szego_series(cfg.k, cfg.tol);
  const double bound = constants().c1 * std::exp(kPi * kPi * quad / 4.0);
  const bool c1_ok = cfg.k + 1 >= bound * (1.0 - kSlack);
  std::vector<std::vector<Field>> records{{
      f_int("k", cfg.k),
      f_double("tol", cfg.tol),
      f_double("quadrature", quad),
      f_double("szego", series),
      f_double("difference", quad - series),
      f_double("c1_exp_bound", bound),
      f_bool("c1_ok", c1_ok),
  }};
  emit(cfg, out, {f_str("command", "interval")}, records);
  return c1_ok ? 0 : 1;
}

struct SweepRecord {
  std::string group;
  std::vector<std::int64_t> set;
  double norm = 0.0;
  int max_order = 0;
  int stability_index = 0;
  double bound = 0.0;
  bool theorem_ok = false;
  bool trace_ok = false;
};

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<FiniteAbelianGroup> groups = parse_group_list(cfg.groups_spec);
  if (groups.empty()) throw std::invalid_argument("verify: no groups given");
  const bool exhaustive = cfg.exhaustive || !cfg.sample.has_value();
  const int sample = cfg.sample.value_or(0);
  if (sample < 0) throw std::invalid_argument("verify: sample must be >= 0");

  // Task list in canonical order: groups as given; per group all subsets by
  // ascending bitmask, then sampled subsets in generation order.  The PRNG
  // stream is consumed sequentially here so records are schedule-independent.
  std::vector<std::pair<std::size_t, std::vector<std::int64_t>>> tasks;
  XorShift64 rng(cfg.seed);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const std::int64_t n = groups[gi].order();
    if (exhaustive) {
      if (n > 16)
        throw std::invalid_argument("verify: exhaustive sweep needs group order <= 16");
      for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<std::int64_t> members;
        for (std::int64_t e = 0; e < n; ++e)
          if (mask >> e & 1) members.push_back(e);
        tasks.emplace_back(gi, std::move(members));
      }
    }
    for (int i = 0; i < sample; ++i) {
      std::vector<std::int64_t> members;
      for (std::int64_t e = 0; e < n; ++e)
        if (rng.next() >> 63) members.push_back(e);
      tasks.emplace_back(gi, std::move(members));
    }
  }

  std::vector<SweepRecord> recs(tasks.size());
  const unsigned threads = thread_budget(tasks.size());
  std::atomic<std::size_t> cursor{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) return;
      const FiniteAbelianGroup& g = groups[tasks[i].first];
      const GroupSubset a(g, tasks[i].second);
      const TheoremCheck c = theorem_inequality_check(a);
      recs[i] = SweepRecord{g.spec_string(), a.members(),   c.norm,
                            c.max_order,     c.stability_index, c.index_bound,
                            c.index_ok,      c.trace_ok};
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::size_t violations = 0;
  for (const auto& r : recs)
    if (!r.theorem_ok || !r.trace_ok) ++violations;

  std::vector<Field> head{
      f_str("command", "verify"),
      f_str("groups", cfg.groups_spec),
      f_bool("exhaustive", exhaustive),
      f_int("sample", sample),
      f_uint("seed", cfg.seed),
  };
  const auto record_fields = [](const SweepRecord& r) {
    return std::vector<Field>{
        f_str("group", r.group),
        f_int_array("set", r.set),
        f_double("norm", r.norm),
        f_int("max_order", r.max_order),
        f_int("stability_index", r.stability_index),
        f_double("bound", r.bound),
        f_bool("theorem_ok", r.theorem_ok),
        f_bool("trace_norm_ok", r.trace_ok),
    };
  };

  switch (cfg.output) {
    case RunConfig::Output::json: {
      std::string s = "{";
      for (std::size_t i = 0; i < head.size(); ++i) {
        if (i) s += ',';
        s += '"' + json_escape(head[i].key) + "\":" + head[i].json;
      }
      s += ",\"records\":[";
      for (std::size_t i = 0; i < recs.size(); ++i) {
        if (i) s += ',';
        s += fields_to_json(record_fields(recs[i]));
      }
      s += "],\"summary\":{\"total\":" + std::to_string(recs.size()) +
           ",\"violations\":" + std::to_string(violations) + "}}";
      out << s << '\n';
      break;
    }
    case RunConfig::Output::csv: {
      out << "group,set,norm,max_order,stability_index,bound,theorem_ok,trace_norm_ok\n";
      for (const auto& r : recs) {
        const auto fs = record_fields(r);
        for (std::size_t i = 0; i < fs.size(); ++i) {
          if (i) out << ',';
          out << fs[i].flat;
        }
        out << '\n';
      }
      break;
    }
    case RunConfig::Output::text: {
      for (const auto& r : recs)
        if (!r.theorem_ok || !r.trace_ok) {
          out << "VIOLATION group=" << r.group << " set={";
          for (std::size_t i = 0; i < r.set.size(); ++i)
            out << (i ? " " : "") << r.set[i];
          out << "} norm=" << format_double(r.norm)
              << " index=" << r.stability_index
              << " bound=" << format_double(r.bound) << '\n';
        }
      out << "verify: total=" << recs.size() << " violations=" << violations
          << '\n';
      break;
    }
  }

  const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  err << "verify: " << recs.size() << " records, " << violations
      << " violations, " << dt << " ms, threads=" << threads << '\n';
  return violations == 0 ? 0 : 1;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

FiniteAbelianGroup parse_group_spec(const std::string& spec) {
  std::string s = trimmed(spec);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (s.empty()) throw std::invalid_argument("empty group spec");
  std::vector<std::int64_t> moduli;
  for (const auto& part : split(s, 'x')) {
    const std::string p = trimmed(part);
    if (p.rfind("z/", 0) != 0)
      throw std::invalid_argument("group factor must look like Z/n: '" + part + "'");
    const std::int64_t n = parse_int(p.substr(2), "cyclic order");
    moduli.push_back(n);
  }
  return FiniteAbelianGroup(moduli);
}

std::vector<FiniteAbelianGroup> parse_group_list(const std::string& spec) {
  std::vector<FiniteAbelianGroup> out;
  for (const auto& item : split(spec, ',')) {
    const std::string t = trimmed(item);
    const std::size_t dots = t.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_group_spec(t));
      continue;
    }
    const FiniteAbelianGroup lo = parse_group_spec(t.substr(0, dots));
    const FiniteAbelianGroup hi = parse_group_spec(t.substr(dots + 2));
    if (lo.rank() != 1 || hi.rank() != 1)
      throw std::invalid_argument("group ranges need cyclic endpoints: '" + item + "'");
    if (lo.order() > hi.order())
      throw std::invalid_argument("empty group range: '" + item + "'");
    for (std::int64_t n = lo.order(); n <= hi.order(); ++n)
      out.push_back(FiniteAbelianGroup::cyclic(n));
  }
  return out;
}

std::vector<std::int64_t> parse_set_spec(const FiniteAbelianGroup& g,
                                         const std::string& spec) {
  const std::string s = trimmed(spec);
  std::vector<std::int64_t> members;
  if (s.empty()) return members;

  if (s[0] == '(') {
    // Residue tuples: "(0,1),(1,2)"; entries are reduced mod each factor.
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != '(')
        throw std::invalid_argument("expected '(' in tuple set spec");
      const std::size_t close = s.find(')', pos);
      if (close == std::string::npos)
        throw std::invalid_argument("unbalanced parenthesis in set spec");
      const auto parts = split(s.substr(pos + 1, close - pos - 1), ',');
      if (parts.size() != g.moduli().size())
        throw std::invalid_argument("tuple arity does not match group rank");
      GroupElement e;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        const std::int64_t n = g.moduli()[j];
        std::int64_t r = parse_int(parts[j], "residue") % n;
        if (r < 0) r += n;
        e.residues.push_back(r);
      }
      members.push_back(g.index_of(e));
      pos = close + 1;
      if (pos < s.size()) {
        if (s[pos] != ',')
          throw std::invalid_argument("expected ',' between tuples");
        ++pos;
      }
    }
  } else {
    for (const auto& part : split(s, ',')) {
      const std::int64_t idx = parse_int(part, "element index");
      if (idx < 0 || idx >= g.order())
        throw std::invalid_argument("element index out of range: " + trimmed(part));
      members.push_back(idx);
    }
  }
  return members;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case RunConfig::Command::stability: return cmd_stability(config, out);
      case RunConfig::Command::norm: return cmd_norm(config, out);
      case RunConfig::Command::sidon: return cmd_sidon(config, out);
      case RunConfig::Command::singer: return cmd_singer(config, out);
      case RunConfig::Command::halfgraph: return cmd_halfgraph(config, out);
      case RunConfig::Command::bounds: return cmd_bounds(config, out);
      case RunConfig::Command::interval: return cmd_interval(config, out);
      case RunConfig::Command::verify: return cmd_verify(config, out, err);
    }
    err << "error: unknown command\n";
    return 2;
  } catch (const BoundTooLarge& e) {
    // The refused expression is still part of the machine-readable output.
    std::vector<std::vector<Field>> records{{
        f_str("error", e.what()),
        f_str("expression", e.expression),
    }};
    emit(config, out, {f_str("command", "bounds")}, records);
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace stabring::cli
