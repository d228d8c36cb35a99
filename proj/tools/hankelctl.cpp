// hankelctl — exact Hankel determinants of the fixed point of 1->101, 0->1.
//
// Subcommands: eval (point query), verify (window sweep: partition coverage +
// closed-vs-oracle equality), render (PPM pixel map), dump (sequence / digit
// vector / family members / partition CSV), bench (closed vs oracle timing).
//
// Exit codes: 0 ok, 2 value mismatch, 3 coverage anomaly outside the n=1
// allowlist, 4 arithmetic overflow, 5 bad arguments or configuration.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hankel/closed_form.hpp"
#include "hankel/families.hpp"
#include "hankel/frep.hpp"
#include "hankel/fseq.hpp"
#include "hankel/oracle.hpp"
#include "hankel/partition.hpp"
#include "hankel/render.hpp"
#include "hankel/scan.hpp"
#include "hankel/word.hpp"

namespace {

using hankel::i64;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 2;
constexpr int exit_anomaly = 3;
constexpr int exit_overflow = 4;
constexpr int exit_bad_args = 5;

std::string cell_record(i64 m, i64 n) {
  const auto cls = hankel::lattice::classify(m, n);
  std::ostringstream out;
  out << "region=" << to_string(cls.region.kind) << " k=" << cls.region.k
      << " i=" << cls.region.index
      << " class=" << hankel::lattice::flags_to_string(cls.flags);
  return std::move(out).str();
}

int cmd_eval(i64 m, i64 n, const std::string& method,
             hankel::oracle::method det) {
  std::ostringstream out;
  out << "m=" << m << " n=" << n;
  int rc = exit_ok;
  if (method == "closed") {
    out << " closed=" << hankel::closed::eval(m, n);
  } else if (method == "oracle") {
    out << " oracle=" << hankel::oracle::eval(m, n, det);
  } else {
    const i64 c = hankel::closed::eval(m, n);
    const i64 o = hankel::oracle::eval(m, n, det);
    out << " closed=" << c << " oracle=" << o
        << " match=" << (c == o ? "yes" : "no");
    if (c != o) rc = exit_mismatch;
  }
  std::cout << out.str() << " " << cell_record(m, n) << "\n";
  return rc;
}

int cmd_verify(i64 m_max, i64 n_max, hankel::oracle::method det, int jobs,
               bool parallel) {
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#else
  (void)jobs;
#endif
  const hankel::lattice::window win{m_max, 1, n_max};
  std::cout << "window m=0.." << m_max << " n=1.." << n_max
            << " cells=" << win.cells() << "\n";

  const auto counts = hankel::scan::census_of(win);
  std::cout << "census U=" << counts.u << " V=" << counts.v
            << " T=" << counts.t << " degenerate=" << counts.degenerate
            << " origin=" << counts.origin << " total=" << counts.total()
            << "\n";

  const auto coverage = hankel::lattice::verify_partition(win);
  const bool allowlisted = coverage.anomalies_allowlisted();
  std::cout << "coverage covered_once=" << coverage.covered_once
            << " anomalies=" << coverage.anomalies.size()
            << " allowlisted=" << (allowlisted ? "yes" : "no") << "\n";
  for (const auto& a : coverage.anomalies)
    if (a.count != 0 || a.n != 1)
      std::cout << "anomaly m=" << a.m << " n=" << a.n << " count=" << a.count
                << "\n";

  const auto closed = hankel::scan::closed_grid(win, parallel);
  const auto oracle = hankel::scan::oracle_grid(win, det, parallel);
  const auto cmp = hankel::scan::compare(closed, oracle);
  std::cout << "values compared=" << cmp.cells << " equal=" << cmp.equal
            << " mismatches=" << cmp.mismatches.size() << "\n";
  for (std::size_t i = 0; i < cmp.mismatches.size() && i < 20; ++i) {
    const auto& mm = cmp.mismatches[i];
    std::cout << "mismatch m=" << mm.m << " n=" << mm.n
              << " closed=" << mm.lhs << " oracle=" << mm.rhs << "\n";
  }

  if (!cmp.mismatches.empty()) {
    std::cout << "result FAIL\n";
    return exit_mismatch;
  }
  if (!allowlisted) {
    std::cout << "result FAIL\n";
    return exit_anomaly;
  }
  std::cout << "result OK\n";
  return exit_ok;
}

int cmd_render(i64 m_max, i64 n_max, const std::string& path, bool transpose,
               const std::string& source, hankel::oracle::method det,
               bool parallel) {
  const hankel::lattice::window win{m_max, 1, n_max};
  const auto grid = source == "oracle"
                        ? hankel::scan::oracle_grid(win, det, parallel)
                        : hankel::scan::closed_grid(win, parallel);
  const auto img = hankel::render::assemble(grid, transpose);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("render: cannot open " + path);
  hankel::render::write_ppm(out, img);
  out.close();
  if (!out) throw std::runtime_error("render: write failed for " + path);
  std::cout << "render wrote=" << path << " width=" << img.width
            << " height=" << img.height << " palette=v"
            << hankel::render::palette_version << "\n";
  return exit_ok;
}

int cmd_dump_seq(i64 len) {
  const auto bits = hankel::seq::s_prefix(len);
  std::string line(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i)
    line[i] = static_cast<char>('0' + bits[i]);
  std::cout << line << "\n";
  return exit_ok;
}

int cmd_dump_frep(i64 n) {
  const auto rep = hankel::seq::f_rep::encode(n);
  std::cout << "indices [";
  bool first = true;
  for (std::size_t i = 0; i < rep.digits().size(); ++i)
    if (rep.digits()[i]) {
      if (!first) std::cout << ",";
      std::cout << i;
      first = false;
    }
  std::cout << "]\n";
  return exit_ok;
}

int cmd_dump_family(hankel::lattice::family_kind kind, i64 k, i64 bound) {
  const auto members = hankel::lattice::family_upto(kind, k, bound);
  for (std::size_t i = 0; i < members.size(); ++i)
    std::cout << (i ? "," : "") << members[i];
  std::cout << "\n";
  return exit_ok;
}

int cmd_dump_partition(i64 m_max, i64 n_max) {
  std::ostringstream out;
  out << "# palette v" << hankel::render::palette_version << "\n";
  out << "m,n,value,region,k,i,class\n";
  for (i64 n = 1; n <= n_max; ++n)
    for (i64 m = 0; m <= m_max; ++m) {
      const auto cls = hankel::lattice::classify(m, n);
      out << m << "," << n << "," << hankel::closed::eval(cls, m, n) << ","
          << to_string(cls.region.kind) << "," << cls.region.k << ","
          << cls.region.index << ","
          << hankel::lattice::flags_to_string(cls.flags) << "\n";
    }
  std::cout << out.str();
  return exit_ok;
}

volatile i64 bench_sink;  // keeps the timed calls observable

int cmd_bench(const std::vector<i64>& orders, i64 m, int reps) {
  using clock = std::chrono::steady_clock;
  std::cout << "bench m=" << m << " reps=" << reps << "\n";
  for (const i64 n : orders) {
    const i64 closed_value = hankel::closed::eval(m, n);  // warm caches

    std::vector<double> closed_ns(reps);
    for (int rep = 0; rep < reps; ++rep) {
      // The closed form runs in microseconds; batch it for clock resolution.
      int iters = 1;
      for (;;) {
        const auto start = clock::now();
        i64 sink = 0;
        for (int it = 0; it < iters; ++it) sink += hankel::closed::eval(m, n);
        const auto stop = clock::now();
        bench_sink = sink;
        const double elapsed =
            std::chrono::duration<double, std::nano>(stop - start).count();
        if (elapsed >= 2e6 || iters >= (1 << 22)) {
          closed_ns[rep] = elapsed / iters;
          break;
        }
        iters *= 4;
      }
    }

    std::vector<double> oracle_ns(reps);
    i64 oracle_value = 0;
    for (int rep = 0; rep < reps; ++rep) {
      const auto start = clock::now();
      oracle_value = hankel::oracle::eval(m, n, hankel::oracle::method::crt);
      const auto stop = clock::now();
      oracle_ns[rep] =
          std::chrono::duration<double, std::nano>(stop - start).count();
    }

    auto median = [](std::vector<double> xs) {
      std::sort(xs.begin(), xs.end());
      return xs[xs.size() / 2];
    };
    const double c = median(closed_ns), o = median(oracle_ns);
    std::cout << "n=" << n << " closed_ns=" << static_cast<i64>(c)
              << " oracle_ns=" << static_cast<i64>(o)
              << " speedup=" << static_cast<i64>(o / c)
              << " match=" << (closed_value == oracle_value ? "yes" : "no")
              << "\n";
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hankel determinants of the fixed point of 1->101, 0->1"};
  app.require_subcommand(1);

  const std::map<std::string, hankel::oracle::method> det_map{
      {"crt", hankel::oracle::method::crt},
      {"bareiss", hankel::oracle::method::bareiss}};
  const std::map<std::string, hankel::lattice::family_kind> kind_map{
      {"E", hankel::lattice::family_kind::E},
      {"Eprime", hankel::lattice::family_kind::Eprime},
      {"Edoubleprime", hankel::lattice::family_kind::Edoubleprime},
      {"F", hankel::lattice::family_kind::F},
      {"Fprime", hankel::lattice::family_kind::Fprime},
      {"Fdoubleprime", hankel::lattice::family_kind::Fdoubleprime}};

  int rc = exit_ok;

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate H_{m,n} at one cell");
  i64 eval_m = 0, eval_n = 1;
  std::string eval_method = "closed";
  hankel::oracle::method eval_det = hankel::oracle::method::crt;
  eval->add_option("--m", eval_m, "row offset m >= 0")->required();
  eval->add_option("--n", eval_n, "order n >= 1")->required();
  eval->add_option("--method", eval_method, "closed | oracle | both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));
  eval->add_option("--det", eval_det, "oracle determinant path")
      ->transform(CLI::CheckedTransformer(det_map));
  eval->callback([&] { rc = cmd_eval(eval_m, eval_n, eval_method, eval_det); });

  // verify
  auto* verify =
      app.add_subcommand("verify", "partition + closed-vs-oracle window check");
  i64 verify_mmax = 0, verify_nmax = 1;
  hankel::oracle::method verify_det = hankel::oracle::method::crt;
  int verify_jobs = 0;
  bool verify_serial = false;
  verify->add_option("--mmax", verify_mmax, "window spans 0 <= m <= mmax")
      ->required();
  verify->add_option("--nmax", verify_nmax, "window spans 1 <= n <= nmax")
      ->required();
  verify->add_option("--det", verify_det, "oracle determinant path")
      ->transform(CLI::CheckedTransformer(det_map));
  verify->add_option("--jobs", verify_jobs, "worker threads (0 = default)");
  verify->add_flag("--serial", verify_serial, "disable parallel kernels");
  verify->callback([&] {
    rc = cmd_verify(verify_mmax, verify_nmax, verify_det, verify_jobs,
                    !verify_serial);
  });

  // render
  auto* render = app.add_subcommand("render", "write a PPM map of H values");
  i64 render_mmax = 0, render_nmax = 1;
  std::string render_out, render_source = "closed";
  hankel::oracle::method render_det = hankel::oracle::method::crt;
  bool render_transpose = false, render_serial = false;
  render->add_option("--mmax", render_mmax, "window spans 0 <= m <= mmax")
      ->required();
  render->add_option("--nmax", render_nmax, "window spans 1 <= n <= nmax")
      ->required();
  render->add_option("--out", render_out, "output PPM path")->required();
  render->add_flag("--transpose", render_transpose,
                   "n rightward, m upward instead");
  render->add_option("--source", render_source, "closed | oracle")
      ->check(CLI::IsMember({"closed", "oracle"}));
  render->add_option("--det", render_det, "oracle determinant path")
      ->transform(CLI::CheckedTransformer(det_map));
  render->add_flag("--serial", render_serial, "disable parallel kernels");
  render->callback([&] {
    rc = cmd_render(render_mmax, render_nmax, render_out, render_transpose,
                    render_source, render_det, !render_serial);
  });

  // dump
  auto* dump = app.add_subcommand("dump", "text dumps of the building blocks");
  dump->require_subcommand(1);
  auto* dump_seq = dump->add_subcommand("seq", "first L symbols of the word");
  i64 seq_len = 0;
  dump_seq->add_option("--len", seq_len, "prefix length")->required();
  dump_seq->callback([&] { rc = cmd_dump_seq(seq_len); });

  auto* dump_frep = dump->add_subcommand("frep", "digit indices of n");
  i64 frep_n = 0;
  dump_frep->add_option("--n", frep_n, "value to encode")->required();
  dump_frep->callback([&] { rc = cmd_dump_frep(frep_n); });

  auto* dump_family = dump->add_subcommand("family", "family members <= bound");
  hankel::lattice::family_kind family_kind_arg =
      hankel::lattice::family_kind::Eprime;
  i64 family_k = 0, family_bound = 0;
  dump_family
      ->add_option("--kind", family_kind_arg,
                   "E | Eprime | Edoubleprime | F | Fprime | Fdoubleprime")
      ->required()
      ->transform(CLI::CheckedTransformer(kind_map));
  dump_family->add_option("--k", family_k, "generation k >= 0")->required();
  dump_family->add_option("--bound", family_bound, "inclusive value bound")
      ->required();
  dump_family->callback(
      [&] { rc = cmd_dump_family(family_kind_arg, family_k, family_bound); });

  auto* dump_partition =
      dump->add_subcommand("partition", "CSV of cells over a window");
  i64 part_mmax = 0, part_nmax = 1;
  dump_partition->add_option("--mmax", part_mmax, "window spans 0 <= m <= mmax")
      ->required();
  dump_partition->add_option("--nmax", part_nmax, "window spans 1 <= n <= nmax")
      ->required();
  dump_partition->callback(
      [&] { rc = cmd_dump_partition(part_mmax, part_nmax); });

  // bench
  auto* bench = app.add_subcommand("bench", "closed form vs oracle timings");
  std::vector<i64> bench_orders{1, 10, 25, 50, 100};
  i64 bench_m = 0;
  int bench_reps = 5;
  bench->add_option("--n", bench_orders, "orders to time");
  bench->add_option("--m", bench_m, "fixed row offset");
  bench->add_option("--reps", bench_reps, "repetitions per order")
      ->check(CLI::PositiveNumber);
  bench->callback([&] { rc = cmd_bench(bench_orders, bench_m, bench_reps); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_bad_args;
  } catch (const hankel::overflow_error& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return exit_overflow;
  } catch (const hankel::oracle::prime_pool_error& e) {
    std::cerr << "configuration: " << e.what() << "\n";
    return exit_bad_args;
  } catch (const std::domain_error& e) {
    std::cerr << "bad arguments: " << e.what() << "\n";
    return exit_bad_args;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad arguments: " << e.what() << "\n";
    return exit_bad_args;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
