#include "scrollsys/scan.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <sstream>
#include <thread>

#include "scrollsys/io.hpp"

namespace scrollsys {

std::vector<SystemSpec> enumerate_box(const ScanConfig& cfg) {
  struct Entry {
    Int cost;
    Int n, a, b, m, r;
  };
  std::vector<Entry> entries;
  for (Int n = cfg.n.lo; n <= cfg.n.hi; ++n)
    for (Int a = cfg.a.lo; a <= cfg.a.hi; ++a)
      for (Int b = cfg.b.lo; b <= cfg.b.hi; ++b)
        for (Int m = cfg.m.lo; m <= cfg.m.hi; ++m)
          for (Int r = cfg.r.lo; r <= cfg.r.hi; ++r) {
            Int h0 = h0_nef(DivisorClass{n, a, b});
            Int rows = checked_mul(r, checked_mul(m, checked_add(m, 1)) / 2);
            entries.push_back({checked_mul(rows, h0), n, a, b, m, r});
          }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.cost != y.cost) return x.cost < y.cost;
    return std::tie(x.n, x.a, x.b, x.m, x.r) < std::tie(y.n, y.a, y.b, y.m, y.r);
  });
  std::vector<SystemSpec> out;
  out.reserve(entries.size());
  for (const Entry& e : entries) out.push_back(make_homogeneous(e.n, e.a, e.b, e.m, e.r));
  return out;
}

ScanRecord evaluate_system(const SystemSpec& s, const ScanConfig& cfg) {
  ScanRecord rec;
  rec.spec = s;
  rec.v = virtual_dim(s);
  rec.e = expected_dim(s);

  SpecialityVerdict cls = is_minus_one_special(s);
  rec.classifier_special = cls.minus_one_special;
  if (cls.table_row) rec.table1_row = cls.table_row->row;

  SpecialOptions opts;
  opts.prime1 = cfg.prime1;
  opts.prime2 = cfg.prime2;
  opts.trials = cfg.trials;
  opts.seed = cfg.seed;
  OracleReport rep = oracle_consensus(s, opts);
  rec.l_est = rep.l_est;
  rec.verdict = rep.verdict;
  rec.agree = rep.verdict != Verdict::Inconclusive &&
              (rep.verdict == Verdict::Special) == rec.classifier_special;
  return rec;
}

ScanSummary run_scan(const ScanConfig& cfg,
                     const std::function<void(std::size_t, const ScanRecord&)>& sink) {
  std::vector<SystemSpec> box = enumerate_box(cfg);
  std::size_t start = std::min(cfg.resume, box.size());
  std::size_t count = box.size() - start;

  std::vector<std::optional<ScanRecord>> results(count);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};

  unsigned workers = cfg.workers > 0 ? static_cast<unsigned>(cfg.workers)
                                     : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(count, 1));

  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        ScanRecord rec = evaluate_system(box[start + i], cfg);
        {
          std::lock_guard<std::mutex> lock(mu);
          results[i] = std::move(rec);
        }
        cv.notify_all();
      }
    });
  }

  // Single writer: emit strictly in enumeration order as results land.
  ScanSummary summary;
  summary.total = count;
  {
    std::unique_lock<std::mutex> lock(mu);
    for (std::size_t i = 0; i < count; ++i) {
      cv.wait(lock, [&] { return results[i].has_value(); });
      const ScanRecord& rec = *results[i];
      if (rec.verdict == Verdict::Inconclusive) ++summary.inconclusive;
      else if (!rec.agree) ++summary.disagreements;
      if (rec.verdict == Verdict::Special) ++summary.special;
      if (sink) sink(start + i, rec);
      results[i].reset();  // keep the high-water memory flat
    }
  }
  for (std::thread& t : pool) t.join();
  return summary;
}

std::string csv_header() {
  // Frozen columns; bump the version tag if they ever change.
  return "# scrollsys-scan-csv v1\nspec,v,e,l_est,verdict,table1_row,agree\n";
}

std::string to_csv(const ScanRecord& rec) {
  std::ostringstream out;
  out << to_string(rec.spec) << ',' << rec.v << ',' << rec.e << ',' << rec.l_est << ','
      << to_string(rec.verdict) << ',';
  if (rec.table1_row) out << *rec.table1_row;
  out << ',' << (rec.agree ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace scrollsys
