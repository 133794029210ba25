#include "osx/asym.hpp"

#include <algorithm>

namespace osx {

AsymSpace toy_space(std::shared_ptr<std::vector<Rat>> values) {
  AsymSpace s;
  s.raw = [values](int a, int b) {
    Rat x = (*values)[a], y = (*values)[b];
    return ExtRat::of(std::max(Rat(y - x), Rat(2 * (x - y))));
  };
  return s;
}

SequenceWindow toy_window(const std::vector<Rat>& values) {
  auto store = std::make_shared<std::vector<Rat>>(values);
  SequenceWindow w{toy_space(store), {}};
  for (size_t i = 0; i < values.size(); ++i) w.points.push_back((int)i);
  return w;
}

static void check_schedule(const std::vector<Rat>& eps_list) {
  if (eps_list.empty()) throw ScheduleNotDecreasing();
  for (size_t i = 0; i < eps_list.size(); ++i) {
    if (eps_list[i] <= 0) throw ScheduleNotDecreasing();
    if (i > 0 && eps_list[i] >= eps_list[i - 1]) throw ScheduleNotDecreasing();
  }
}

Certificate check_forwards_cauchy(const SequenceWindow& s,
                                  const std::vector<Rat>& eps_list) {
  check_schedule(eps_list);
  Certificate cert;
  cert.holds = true;
  for (const Rat& eps : eps_list) {
    int worst_i = 0, worst_j = 0;
    for (int i = 1; i <= s.size(); ++i)
      for (int j = i + 1; j <= s.size(); ++j)
        if (s.d(i, j).ge(eps) && i > worst_i) worst_i = i, worst_j = j;
    if (worst_i > 0 && worst_i >= s.size() - 1) {
      cert.holds = false;
      cert.witness = Violation{eps, worst_i, worst_j};
      return cert;
    }
    cert.records.push_back({eps, worst_i, {}});
  }
  cert.detail = "holds on this window for the given schedule";
  return cert;
}

namespace {

// Least K with d(n,k) < eps for all in-window k > K; size() means none.
int least_tail_bound(const SequenceWindow& s, int n, const Rat& eps) {
  int K = 0;
  for (int k = 1; k <= s.size(); ++k)
    if (s.d(n, k).ge(eps)) K = k;
  return K;
}

std::optional<EpsRecord> admissible_record(const SequenceWindow& s,
                                           const Rat& eps) {
  EpsRecord rec{eps, 0, {}};
  std::vector<int> K(s.size() + 1, 0);
  for (int n = 1; n <= s.size(); ++n) {
    K[n] = least_tail_bound(s, n, eps);
    if (K[n] >= s.size()) rec.N = n;  // no valid in-window bound for this n
  }
  if (rec.N > 0 && rec.N >= s.size() - 1) return std::nullopt;
  for (int n = rec.N + 1; n <= s.size(); ++n) rec.K[n] = K[n];
  return rec;
}

}  // namespace

Certificate check_admissible(const SequenceWindow& s,
                             const std::vector<Rat>& eps_list) {
  check_schedule(eps_list);
  Certificate cert;
  cert.holds = true;
  for (const Rat& eps : eps_list) {
    auto rec = admissible_record(s, eps);
    if (!rec) {
      int n = 0;
      for (int m = 1; m <= s.size(); ++m)
        if (least_tail_bound(s, m, eps) >= s.size()) n = m;
      cert.holds = false;
      cert.witness = Violation{eps, n, s.size()};
      return cert;
    }
    cert.records.push_back(*rec);
  }
  cert.detail = "holds on this window for the given schedule";
  return cert;
}

std::vector<int> extract_cauchy_subsequence(const SequenceWindow& s) {
  std::vector<int> out;
  Rat eps = 1;
  auto rec = admissible_record(s, eps);
  if (!rec) throw WindowExhausted();
  int n = std::max(rec->N, 1);
  if (n > s.size()) throw WindowExhausted();
  out.push_back(n);
  while (true) {
    Rat next_eps = eps / 2;
    auto next_rec = admissible_record(s, next_eps);
    if (!next_rec) break;
    auto it = rec->K.find(n);
    int k_bound = (it != rec->K.end()) ? it->second : 0;
    int next_n = std::max({next_rec->N, k_bound, n + 1});
    if (next_n > s.size()) break;
    out.push_back(next_n);
    n = next_n;
    eps = next_eps;
    rec = next_rec;
  }
  if (out.size() < 2) throw WindowExhausted();
  return out;
}

SequenceWindow interlace(const SequenceWindow& a, const SequenceWindow& b) {
  if (a.space.cache != b.space.cache)
    throw DomainError("interlace requires windows over one space");
  SequenceWindow z{a.space, {}};
  int n = std::min(a.size(), b.size());
  for (int k = 0; k < n; ++k) {
    z.points.push_back(a.points[k]);
    z.points.push_back(b.points[k]);
  }
  return z;
}

CLimitResult c_limit(const SequenceWindow& a, const SequenceWindow& b,
                     const std::vector<Rat>& eps_list, const Rat& bound) {
  check_schedule(eps_list);
  if (a.space.cache != b.space.cache)
    throw DomainError("c_limit requires windows over one space");
  CLimitResult r;
  r.scale = eps_list.back();
  if (a.size() == 0 || b.size() == 0) {
    r.diverges = true;
    r.detail = "empty window";
    return r;
  }
  auto inner = [&](int n) { return a.space.d(a.points[n - 1], b.points[b.size() - 1]); };
  for (int n = std::max(1, a.size() - 2); n <= a.size(); ++n) {
    ExtRat c = inner(n);
    if (c.infinite || c.value > bound) {
      r.diverges = true;
      r.detail = "inner limit exceeds the bound";
      return r;
    }
  }
  ExtRat last = inner(a.size());
  // the inner values must have settled in k and the outer trend in n
  for (int k = std::max(1, b.size() - 2); k <= b.size(); ++k) {
    ExtRat c = a.space.d(a.points[a.size() - 1], b.points[k - 1]);
    if (c.infinite || abs(c.value - last.value) > r.scale) {
      r.diverges = true;
      r.detail = "inner values not settled at schedule resolution";
      return r;
    }
  }
  for (int n = std::max(1, a.size() - 2); n <= a.size(); ++n) {
    ExtRat c = inner(n);
    if (abs(c.value - last.value) > r.scale) {
      r.diverges = true;
      r.detail = "outer values not settled at schedule resolution";
      return r;
    }
  }
  r.estimate = last.value;
  r.detail = "stable at schedule resolution on this window";
  return r;
}

Certificate equivalent(const SequenceWindow& a, const SequenceWindow& b,
                       const std::vector<Rat>& eps_list) {
  check_schedule(eps_list);
  Rat scale = eps_list.back();
  Rat bound(1000000);
  CLimitResult ab = c_limit(a, b, eps_list, bound);
  CLimitResult ba = c_limit(b, a, eps_list, bound);
  Certificate cert;
  cert.holds = !ab.diverges && !ba.diverges && ab.estimate <= scale &&
               ba.estimate <= scale;
  Certificate cross = check_admissible(interlace(a, b), eps_list);
  cert.detail = std::string("two-sided c-limit ") +
                (cert.holds ? "vanishes" : "does not vanish") +
                " at schedule resolution; interlaced window admissibility " +
                (cross.holds ? "HOLDS" : "FAILS");
  if (!cert.holds && !ab.diverges && !ba.diverges) {
    Rat worst = std::max(ab.estimate, ba.estimate);
    cert.witness = Violation{worst, a.size(), b.size()};
  }
  return cert;
}

}  // namespace osx
