// Command-line front end.  Every subcommand writes one of three formats
// to standard output; identical invocations produce identical bytes, with
// floating values routed through a single fixed-precision formatter so
// runs with different thread counts stay comparable.  Exit codes: 0 on
// success, 1 for usage or input errors, 2 when a guarded computation
// would exceed its work bound, 3 when a reproduction run finds a failing
// check.
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glnq/acceptance.hpp"

namespace {

using namespace glnq;

enum class out_format { text, json, csv };

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void print_csv(const std::vector<std::string>& cols,
               const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < cols.size(); ++i)
    std::cout << (i ? "," : "") << csv_field(cols[i]);
  std::cout << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      std::cout << (i ? "," : "") << csv_field(row[i]);
    std::cout << '\n';
  }
}

std::string complex_str(std::complex<double> z) {
  return fixed12(z.real()) + (z.imag() < 0 ? "-" : "+") + fixed12(std::abs(z.imag())) + "i";
}

// shared option storage filled by the parser and read by the runners
struct cli_state {
  out_format format = out_format::text;
  int threads = 1;

  int m = 0;                       // partitions
  int n = 0;                       // types, cancel, classes, chars, flags, fiber
  std::string rho, lambda;         // greenq
  std::string family = "both";     // cancel
  std::uint64_t q = 0;             // field size where needed
  std::string dims, subset, gtext; // flags prob
  std::uint64_t a = 0, b = 0;      // induce
  std::string cls = "identity";    // fiber count
  std::string group = "gl";        // fiber count
  std::string method = "brute";    // fiber count
  std::string qlist;               // fiber scan
  std::string scan_fam = "transvection";
  std::uint64_t fit_min_q = 5;     // fiber scan
  std::string out_dir = "reproduce_out";            // reproduce
  std::string fixtures = "tests/fixtures/acceptance_fixtures.json";
  bool record = false, slow = false;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      require(!cur.empty(), errc::parse_error, "empty entry in list '" + text + "'");
      out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      require(std::isdigit(static_cast<unsigned char>(c)), errc::parse_error,
              "bad list entry in '" + text + "'");
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

// A class either by keyword or by its label text.  Keywords cover the
// classes the counting examples use; everything else is spelled out.
class_label resolve_class(irreducible_table& tab, int n, const std::string& text) {
  const Fq& F = tab.field();
  const std::uint64_t q = F.q();
  auto t_minus = [&](Fq::elem ev) { return fqpoly(F, {F.neg(ev), F.one()}); };
  if (text == "identity") return class_label{{{t_minus(F.one()), partition::one_to_the(n)}}};
  if (text == "transvection") {
    require(n >= 2, errc::range_error, "transvections need n >= 2");
    partition shape = merge(partition::one_to_the(n - 2), partition({2}));
    return class_label{{{t_minus(F.one()), shape}}};
  }
  if (text == "order3") {
    require(n == 2, errc::range_error, "the order-3 keyword names a 2 x 2 class");
    if (q % 3 == 1) {
      Fq::elem w = F.pow(F.generator(), (q - 1) / 3);
      return class_label{
          {{t_minus(w), partition({1})}, {t_minus(F.mul(w, w)), partition({1})}}};
    }
    if (q % 3 == 0) return class_label{{{t_minus(F.one()), partition({2})}}};
    return class_label{{{fqpoly(F, {F.one(), F.one(), F.one()}), partition({1})}}};
  }
  if (text == "split") return scan_class_label(tab, scan_family::split, n);
  if (text == "elliptic") return scan_class_label(tab, scan_family::elliptic, n);
  return parse_class_label(F, text);
}

fiber_method parse_method(const std::string& text) {
  if (text == "brute") return fiber_method::brute;
  if (text == "transporter") return fiber_method::transporter;
  if (text == "character") return fiber_method::character;
  fail(errc::parse_error, "unknown method '" + text + "'");
}

scan_family parse_family(const std::string& text) {
  if (text == "transvection") return scan_family::transvection;
  if (text == "split") return scan_family::split;
  if (text == "elliptic") return scan_family::elliptic;
  fail(errc::parse_error, "unknown scan family '" + text + "'");
}

int run_partitions(const cli_state& st) {
  require(st.m >= 0 && st.m <= 40, errc::too_large, "partition listing capped at m = 40");
  std::vector<partition> parts = enumerate_partitions(st.m);
  if (st.format == out_format::json) {
    njson j;
    j["m"] = st.m;
    j["count"] = parts.size();
    njson arr = njson::array();
    for (const partition& p : parts) arr.push_back(partition_json(p));
    j["partitions"] = std::move(arr);
    std::cout << j.dump() << '\n';
  } else if (st.format == out_format::csv) {
    std::vector<std::vector<std::string>> rows;
    for (const partition& p : parts) rows.push_back({p.to_exponent_string()});
    print_csv({"partition"}, rows);
  } else {
    for (const partition& p : parts) std::cout << p.to_string() << '\n';
  }
  return 0;
}

int run_types(const cli_state& st) {
  require(st.n >= 1 && st.n <= 8, errc::too_large, "type listing capped at n = 8");
  std::vector<type_tau> types = enumerate_types(st.n);
  if (st.format == out_format::json) {
    njson j;
    j["n"] = st.n;
    j["count"] = types.size();
    njson arr = njson::array();
    for (const type_tau& t : types)
      arr.push_back(njson{{"type", t.to_string()}, {"dim", t.dim()}});
    j["types"] = std::move(arr);
    std::cout << j.dump() << '\n';
  } else if (st.format == out_format::csv) {
    std::vector<std::vector<std::string>> rows;
    for (const type_tau& t : types) rows.push_back({t.to_string(), std::to_string(t.dim())});
    print_csv({"type", "dim"}, rows);
  } else {
    for (const type_tau& t : types) std::cout << t.to_string() << '\n';
  }
  return 0;
}

int run_greenq(const cli_state& st) {
  partition rho = parse_partition(st.rho);
  partition lam = parse_partition(st.lambda);
  require(rho.size() <= 40, errc::too_large, "Green polynomials capped at size 40");
  intpoly g = green_Q(rho, lam);
  if (st.format == out_format::json) {
    njson j;
    j["rho"] = partition_json(rho);
    j["lambda"] = partition_json(lam);
    j["green"] = g.to_string();
    j["degree"] = g.degree();
    j["bound"] = n_lambda(lam);
    std::cout << j.dump() << '\n';
  } else if (st.format == out_format::csv) {
    print_csv({"rho", "lambda", "green", "degree"},
              {{rho.to_string(), lam.to_string(), g.to_string(), std::to_string(g.degree())}});
  } else {
    std::cout << g.to_string() << '\n';
  }
  return 0;
}

int run_cancel(const cli_state& st) {
  require(st.n >= 1 && st.n <= 16, errc::too_large, "cancellation check capped at n = 16");
  bool want_identity = st.family == "identity" || st.family == "both";
  bool want_transvection = st.family == "transvection" || st.family == "both";
  require(want_identity || want_transvection, errc::parse_error,
          "family must be identity, transvection, or both");
  struct row {
    int s, v;
    const char* family;
    bool ok;
    std::string value;
  };
  std::vector<row> rows;
  bool all_ok = true;
  for (int s = 1; s <= st.n; ++s) {
    if (st.n % s != 0) continue;
    int v = st.n / s;
    auto push = [&](green_family fam, const char* name) {
      ratfunc rhs = closed_form_rhs(s, v, fam);
      bool ok = cancel_sum(s, v, fam) == rhs;
      all_ok = all_ok && ok;
      rows.push_back({s, v, name, ok, rhs.to_string()});
    };
    if (want_identity) push(green_family::identity, "identity");
    if (want_transvection && s > 1) push(green_family::transvection, "transvection");
  }
  if (st.format == out_format::json) {
    njson j;
    j["n"] = st.n;
    njson arr = njson::array();
    for (const row& r : rows)
      arr.push_back(njson{{"s", r.s}, {"v", r.v}, {"family", r.family}, {"ok", r.ok},
                          {"value", r.value}});
    j["results"] = std::move(arr);
    std::cout << j.dump() << '\n';
  } else if (st.format == out_format::csv) {
    std::vector<std::vector<std::string>> out;
    for (const row& r : rows)
      out.push_back({std::to_string(r.s), std::to_string(r.v), r.family, r.ok ? "yes" : "no",
                     r.value});
    print_csv({"s", "v", "family", "ok", "value"}, out);
  } else {
    for (const row& r : rows)
      std::cout << "s=" << r.s << " v=" << r.v << ' ' << r.family << ' '
                << (r.ok ? "OK" : "MISMATCH") << '\n';
  }
  return all_ok ? 0 : 3;
}

int run_classes(const cli_state& st) {
  require(st.n >= 1 && st.n <= 6, errc::too_large, "class listing capped at n = 6");
  require(st.q <= 32, errc::too_large, "class listing capped at q = 32");
  Fq F = parse_field(std::to_string(st.q));
  irreducible_table tab(F);
  tab.adopt(cached_irreducibles(F, st.n));
  std::vector<class_label> labels = cached_class_labels(tab, st.n);
  if (st.format == out_format::json) {
    njson j;
    j["n"] = st.n;
    j["q"] = st.q;
    j["count"] = labels.size();
    njson arr = njson::array();
    for (const class_label& lab : labels)
      arr.push_back(njson{{"label", class_label_json(lab)}, {"text", lab.to_string()},
                          {"size", bigint_str(class_size_gl(lab))}});
    j["classes"] = std::move(arr);
    std::cout << j.dump() << '\n';
  } else if (st.format == out_format::csv) {
    std::vector<std::vector<std::string>> rows;
    for (const class_label& lab : labels)
      rows.push_back({lab.to_string(), bigint_str(class_size_gl(lab))});
    print_csv({"label", "size"}, rows);
  } else {
    for (const class_label& lab : labels) std::cout << lab.to_string() << '\n';
  }
  return 0;
}

int run_chars(const cli_state& st) {
  require(st.n >= 1 && st.n <= 6, errc::too_large, "character listing capped at n = 6");
  require(st.q <= 32, errc::too_large, "character listing capped at q = 32");
  Fq F = parse_field(std::to_string(st.q));  // validates the size
  std::vector<char_label> labels = enumerate_char_labels(F.q(), st.n);
  if (st.format == out_format::json) {
    njson j;
    j["n"] = st.n;
    j["q"] = st.q;
    j["count"] = labels.size();
    njson arr = njson::array();
    for (const char_label& lab : labels)
      arr.push_back(njson{{"label", char_label_json(lab)}, {"text", lab.to_string()}});
    j["chars"] = std::move(arr);
    std::cout << j.dump() << '\n';
  } else if (st.format == out_format::csv) {
    std::vector<std::vector<std::string>> rows;
    for (const char_label& lab : labels) rows.push_back({lab.to_string()});
    print_csv({"label"}, rows);
  } else {
    for (const char_label& lab : labels) std::cout << lab.to_string() << '\n';
  }
  return 0;
}

int run_gl2_table(const cli_state& st) {
  Fq F = parse_field(std::to_string(st.q));
  gl2_table t(F, cached_dlogs(F));
  const auto& cls = t.classes();
  const auto& chs = t.chars();
  if (st.format == out_format::json) {
    njson j;
    j["q"] = st.q;
    njson classes = njson::array();
    for (const gl2_class& c : cls)
      classes.push_back(njson{{"class", c.label.to_string()}, {"size", bigint_str(c.size)}});
    j["classes"] = std::move(classes);
    njson chars = njson::array();
    for (const gl2_char& ch : chs)
      chars.push_back(njson{{"family", to_name(ch.family)}, {"params", ch.params_string()},
                            {"degree", ch.degree}});
    j["chars"] = std::move(chars);
    njson values = njson::array();
    for (std::size_t i = 0; i < chs.size(); ++i) {
      njson row = njson::array();
      for (std::size_t c = 0; c < cls.size(); ++c) {
        std::complex<double> z = t.value(i, c);
        row.push_back(njson{{"re", fixed12(z.real())}, {"im", fixed12(z.imag())}});
      }
      values.push_back(std::move(row));
    }
    j["values"] = std::move(values);
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (const gl2_char& ch : chs)
    for (const gl2_class& c : cls) {
      std::complex<double> z = t.value(ch, c);
      rows.push_back({to_name(ch.family), ch.params_string(), std::to_string(ch.degree),
                      c.label.to_string(), fixed12(z.real()), fixed12(z.imag())});
    }
  if (st.format == out_format::csv) {
    print_csv({"family", "params", "degree", "class", "value_re", "value_im"}, rows);
  } else {
    for (const auto& r : rows)
      std::cout << r[0] << ' ' << r[1] << " deg=" << r[2] << " @ " << r[3] << " = "
                << complex_str({std::stod(r[4]), std::stod(r[5])}) << '\n';
  }
  return 0;
}

int run_gl2_frobenius(const cli_state& st) {
  Fq F = parse_field(std::to_string(st.q));
  gl2_table t(F, cached_dlogs(F));
  if (st.format == out_format::json) {
    njson j;
    j["q"] = st.q;
    njson arr = njson::array();
    for (const gl2_class& c : t.classes())
      arr.push_back(njson{{"class", c.label.to_string()},
                          {"count", bigint_str(t.frobenius_fiber(c.label))}});
    j["fibers"] = std::move(arr);
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (const gl2_class& c : t.classes())
    rows.push_back({c.label.to_string(), bigint_str(t.frobenius_fiber(c.label))});
  if (st.format == out_format::csv)
    print_csv({"class", "count"}, rows);
  else
    for (const auto& r : rows) std::cout << r[0] << ' ' << r[1] << '\n';
  return 0;
}

int run_flags_prob(const cli_state& st) {
  Fq F = parse_field(std::to_string(st.q));
  std::vector<int> dims = parse_int_list(st.dims);
  std::set<int> S;
  if (!st.subset.empty())
    for (int i : parse_int_list(st.subset)) S.insert(i);
  flag_spec sp(F, dims);
  require(st.n == 0 || st.n == sp.n(), errc::dimension_mismatch,
          "--n disagrees with the flag shape");
  matf g = parse_matrix(F, st.gtext);
  flag_prob_report rep = flag_probability_report(g, sp, S);
  njson j = flag_prob_json(rep);
  if (st.format == out_format::csv)
    print_csv({"probability_num", "probability_den", "exponent", "constant"},
              {{j["probability_num"].get<std::string>(), j["probability_den"].get<std::string>(),
                std::to_string(rep.exponent), fixed12(rep.constant)}});
  else if (st.format == out_format::json)
    std::cout << j.dump() << '\n';
  else
    std::cout << j.dump(2) << '\n';
  return 0;
}

int run_induce(const cli_state& st) {
  Fq F = parse_field(std::to_string(st.q));
  require(st.a + 1 < F.q() && st.b + 1 < F.q(), errc::range_error,
          "character exponents live in {0..q-2}");
  gl2_table t(F, cached_dlogs(F));
  if (st.format == out_format::json) {
    njson j;
    j["q"] = st.q;
    j["a"] = st.a;
    j["b"] = st.b;
    njson arr = njson::array();
    for (const gl2_class& c : t.classes()) {
      std::complex<double> z = induce_gl2(st.a, st.b, c.label);
      arr.push_back(njson{{"class", c.label.to_string()}, {"re", fixed12(z.real())},
                          {"im", fixed12(z.imag())}});
    }
    j["values"] = std::move(arr);
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (const gl2_class& c : t.classes()) {
    std::complex<double> z = induce_gl2(st.a, st.b, c.label);
    rows.push_back({c.label.to_string(), fixed12(z.real()), fixed12(z.imag())});
  }
  if (st.format == out_format::csv)
    print_csv({"class", "value_re", "value_im"}, rows);
  else
    for (const auto& r : rows)
      std::cout << r[0] << ' ' << complex_str({std::stod(r[1]), std::stod(r[2])}) << '\n';
  return 0;
}

int run_fiber_count(const cli_state& st) {
  require(st.n >= 1 && st.n <= 3, errc::too_large, "fiber counting capped at n = 3");
  Fq F = parse_field(std::to_string(st.q));
  irreducible_table tab(F);
  require(st.group == "gl" || st.group == "sl", errc::parse_error,
          "group must be gl or sl");
  fiber_report rep;
  rep.n = st.n;
  rep.q = F.q();
  rep.group = st.group == "sl" ? group_kind::sl : group_kind::gl;
  rep.method = parse_method(st.method);
  rep.label = resolve_class(tab, st.n, st.cls);
  rep.count = fiber_count(rep.group, rep.method, representative(rep.label), st.threads);
  rep.exponent = rep.group == group_kind::gl ? st.n * st.n + 1 : st.n * st.n - 1;
  rep.c_q = static_cast<double>(to_u64(rep.count)) /
            std::pow(static_cast<double>(rep.q), rep.exponent);
  if (st.format == out_format::json) {
    std::cout << fiber_report_json(rep).dump() << '\n';
  } else if (st.format == out_format::csv) {
    print_csv({"n", "q", "group", "method", "class", "count", "exponent", "c_q"},
              {{std::to_string(rep.n), std::to_string(rep.q), to_name(rep.group),
                to_name(rep.method), rep.label.to_string(), bigint_str(rep.count),
                std::to_string(rep.exponent), fixed12(rep.c_q)}});
  } else {
    std::cout << "count " << bigint_str(rep.count) << '\n'
              << "class " << rep.label.to_string() << '\n'
              << "exponent " << rep.exponent << '\n'
              << "c_q " << fixed12(rep.c_q) << '\n';
  }
  return 0;
}

int run_fiber_scan(const cli_state& st) {
  require(st.n == 2 || st.n == 3, errc::range_error, "scans cover n = 2 and n = 3");
  std::vector<std::uint64_t> qs;
  for (int q : parse_int_list(st.qlist)) qs.push_back(static_cast<std::uint64_t>(q));
  require(!qs.empty(), errc::parse_error, "--q-list is empty");
  scan_family fam = parse_family(st.scan_fam);
  scan_result sr =
      exponent_scan(st.n, fam, qs, parse_method(st.method), st.threads, st.fit_min_q);
  if (st.format == out_format::json) {
    njson j;
    j["n"] = st.n;
    j["family"] = to_name(fam);
    j["fit_min_q"] = st.fit_min_q;
    j["slope"] = fixed12(sr.slope);
    njson arr = njson::array();
    for (const fiber_report& rep : sr.reports) arr.push_back(fiber_report_json(rep));
    j["reports"] = std::move(arr);
    std::cout << j.dump() << '\n';
  } else if (st.format == out_format::csv) {
    std::vector<std::vector<std::string>> rows;
    for (const fiber_report& rep : sr.reports)
      rows.push_back({to_name(fam), std::to_string(rep.n), std::to_string(rep.q),
                      to_name(rep.method), bigint_str(rep.count), std::to_string(rep.exponent),
                      fixed12(rep.c_q)});
    print_csv({"family", "n", "q", "method", "count", "exponent", "c_q"}, rows);
  } else {
    for (const fiber_report& rep : sr.reports)
      std::cout << "q=" << rep.q << " count=" << bigint_str(rep.count)
                << " c_q=" << fixed12(rep.c_q) << '\n';
    std::cout << "slope " << fixed12(sr.slope) << '\n';
  }
  return 0;
}

int run_fiber_central(const cli_state& st) {
  require(st.n >= 2 && st.n <= 4, errc::range_error, "central fibers cover n = 2 to 4");
  Fq F = parse_field(std::to_string(st.q));
  central_fiber_report rep = central_fiber_sl(F, st.n, st.threads);
  if (st.format == out_format::json || st.format == out_format::csv) {
    std::cout << central_fiber_json(F, st.n, rep).dump() << '\n';
    return 0;
  }
  bigint pgl = group_order_gl(st.n, F.q()) / (bigint(F.q()) - 1);
  std::cout << "count " << bigint_str(rep.count) << '\n'
            << "zeta " << rep.zeta << '\n'
            << "projective order " << bigint_str(pgl) << (rep.count == pgl ? " (match)" : " (differs)")
            << '\n';
  if (rep.witness) {
    std::cout << "witness a " << rep.witness->first.to_string() << '\n'
              << "witness b " << rep.witness->second.to_string() << '\n';
  } else {
    std::cout << "witness none\n";
  }
  return 0;
}

int run_reproduce(const cli_state& st) {
  accept::options opt;
  opt.fixtures = st.fixtures;
  opt.record = st.record;
  opt.slow = st.slow;
  opt.threads = st.threads;
  accept::report rep = accept::run_all(opt);

  std::filesystem::create_directories(st.out_dir);
  for (const accept::table& t : rep.tables) {
    std::ofstream out(std::filesystem::path(st.out_dir) / (t.name + ".csv"));
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      out << (i ? "," : "") << csv_field(t.columns[i]);
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << '\n';
    }
  }
  for (const accept::criterion_result& r : rep.results)
    std::cout << r.id << ' ' << (r.pass ? "PASS" : "FAIL") << ' ' << r.name << ": " << r.detail
              << '\n';
  std::cout << "tables under " << st.out_dir << '\n';
  return rep.all_pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of matrix groups over small finite fields"};
  app.require_subcommand(1);
  cli_state st;

  std::map<std::string, out_format> format_names{{"text", out_format::text},
                                                 {"json", out_format::json},
                                                 {"csv", out_format::csv}};
  app.add_option("--format", st.format, "output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
      ->default_str("text");
  app.add_option("--threads", st.threads, "worker threads")->check(CLI::Range(1, 64));

  CLI::App* partitions = app.add_subcommand("partitions", "list the partitions of m");
  partitions->add_option("--m", st.m, "the number being partitioned")->required();

  CLI::App* types = app.add_subcommand("types", "list the class types of degree n");
  types->add_option("--n", st.n, "total degree")->required();

  CLI::App* greenq = app.add_subcommand("greenq", "one Green polynomial");
  greenq->add_option("--rho", st.rho, "class partition, e.g. 2,1 or 1^2 2")->required();
  greenq->add_option("--lambda", st.lambda, "column partition")->required();

  CLI::App* cancel = app.add_subcommand("cancel", "check the cancellation identities at n");
  cancel->add_option("--n", st.n, "total degree")->required();
  cancel->add_option("--family", st.family, "identity, transvection, or both")
      ->capture_default_str();

  CLI::App* classes = app.add_subcommand("classes", "list conjugacy class labels of GL_n(F_q)");
  classes->add_option("--n", st.n, "matrix size")->required();
  classes->add_option("--q", st.q, "field size")->required();

  CLI::App* chars = app.add_subcommand("chars", "list character labels of GL_n(F_q)");
  chars->add_option("--n", st.n, "matrix size")->required();
  chars->add_option("--q", st.q, "field size")->required();

  CLI::App* gl2 = app.add_subcommand("gl2", "GL_2 character table operations");
  gl2->require_subcommand(1);
  CLI::App* gl2_tab = gl2->add_subcommand("table", "full character table");
  gl2_tab->add_option("--q", st.q, "field size")->required();
  CLI::App* gl2_frob = gl2->add_subcommand("frobenius", "commutator fiber count per class");
  gl2_frob->add_option("--q", st.q, "field size")->required();

  CLI::App* flags = app.add_subcommand("flags", "flag stability");
  flags->require_subcommand(1);
  CLI::App* prob = flags->add_subcommand("prob", "stability probability of one element");
  prob->add_option("--n", st.n, "matrix size (optional, checked against --dims)");
  prob->add_option("--q", st.q, "field size")->required();
  prob->add_option("--dims", st.dims, "flag shape, e.g. 2,1,1")->required();
  prob->add_option("--S", st.subset, "indices allowed non-scalar quotients, e.g. 1,3");
  prob->add_option("--g", st.gtext, "matrix, rows joined by ';', e.g. 1,1;0,1")->required();

  CLI::App* induce = app.add_subcommand("induce", "induce two degree-1 characters up to GL_2");
  induce->add_option("--q", st.q, "field size")->required();
  induce->add_option("--a", st.a, "first exponent mod q-1")->required();
  induce->add_option("--b", st.b, "second exponent mod q-1")->required();

  CLI::App* fiber = app.add_subcommand("fiber", "commutator fiber counting");
  fiber->require_subcommand(1);
  CLI::App* fcount = fiber->add_subcommand("count", "count one fiber");
  fcount->add_option("--n", st.n, "matrix size")->required();
  fcount->add_option("--q", st.q, "field size")->required();
  fcount->add_option("--group", st.group, "gl or sl")->capture_default_str();
  fcount->add_option("--class", st.cls, "class keyword or label text")->capture_default_str();
  fcount->add_option("--method", st.method, "brute, transporter, or character")
      ->capture_default_str();
  CLI::App* fscan = fiber->add_subcommand("scan", "count one family across fields");
  fscan->add_option("--n", st.n, "matrix size")->required();
  fscan->add_option("--q-list", st.qlist, "comma-separated field sizes")->required();
  fscan->add_option("--family", st.scan_fam, "transvection, split, or elliptic")
      ->capture_default_str();
  fscan->add_option("--method", st.method,
                    "counting method (character for n = 2, transporter otherwise)");
  fscan->add_option("--fit-min-q", st.fit_min_q, "smallest q used by the slope fit")
      ->capture_default_str();
  CLI::App* fcentral = fiber->add_subcommand("central", "central fiber of the SL_n map");
  fcentral->add_option("--n", st.n, "matrix size")->required();
  fcentral->add_option("--q", st.q, "field size")->required();

  CLI::App* reproduce = app.add_subcommand("reproduce", "run every check and write its tables");
  reproduce->add_option("--out", st.out_dir, "output directory")->capture_default_str();
  reproduce->add_option("--fixtures", st.fixtures, "growth-constant fixture file")
      ->capture_default_str();
  reproduce->add_flag("--record", st.record, "measure growth constants and rewrite fixtures");
  reproduce->add_flag("--slow", st.slow, "include the long transporter cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (*fscan && fscan->count("--method") == 0)
    st.method = st.n == 2 ? "character" : "transporter";

  try {
    if (*partitions) return run_partitions(st);
    if (*types) return run_types(st);
    if (*greenq) return run_greenq(st);
    if (*cancel) return run_cancel(st);
    if (*classes) return run_classes(st);
    if (*chars) return run_chars(st);
    if (*gl2_tab) return run_gl2_table(st);
    if (*gl2_frob) return run_gl2_frobenius(st);
    if (*prob) return run_flags_prob(st);
    if (*induce) return run_induce(st);
    if (*fcount) return run_fiber_count(st);
    if (*fscan) return run_fiber_scan(st);
    if (*fcentral) return run_fiber_central(st);
    if (*reproduce) return run_reproduce(st);
  } catch (const glnq::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == glnq::errc::too_large ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
